#include "wlab/immersion.hpp"
#include "wlab/round_sphere.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace wlab;

TEST_CASE("transition is an involution and charts describe one sphere") {
  const Vec2 z(0.8, -0.5);
  CHECK((chart_transition(chart_transition(z)) - z).norm() < 1e-15);
  const Vec3 pn = chart_sphere_point(chart_north, z);
  const Vec3 ps = chart_sphere_point(chart_south, chart_transition(z));
  CHECK((pn - ps).norm() < 1e-15);
}

TEST_CASE("round sphere factory: chart consistency at interpolation accuracy") {
  ChartGrid grid(64);
  const auto im = DiscreteImmersion::round_sphere(grid, Vec3(0.1, -0.2, 0.05), 0.9);
  CHECK(im.chart_consistency_defect() < 1e-6);
}

TEST_CASE("interpolation reproduces smooth fields to high order") {
  ChartGrid grid(96);
  const auto im = DiscreteImmersion::round_sphere(grid, Vec3::Zero(), 1.0);
  const Vec2 z(0.53121, -0.7717);
  CHECK((im.interpolate(chart_north, z) - omega_at(z)).norm() < 1e-8);
  // delegation through the transition
  const Vec2 far(1.9, 1.4);  // |z| > 1.25: south chart used
  CHECK((im.sample(chart_north, far) - omega_at(far)).norm() < 1e-7);
}

TEST_CASE("snapshot round trip is bit exact") {
  ChartGrid grid(16);
  const auto im = DiscreteImmersion::graph_sphere(
      grid, [](const Vec3& p) { return 1.0 + 0.05 * p[2] * p[2]; }, Vec3(0.3, 0, -0.1));
  std::ostringstream out;
  im.save(out);
  std::istringstream in(out.str());
  const auto im2 = DiscreteImmersion::load(in);
  REQUIRE(im2.n() == im.n());
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < grid.size(); ++i) {
      CHECK(im.chart(c)[i][0] == im2.chart(c)[i][0]);
      CHECK(im.chart(c)[i][1] == im2.chart(c)[i][1]);
      CHECK(im.chart(c)[i][2] == im2.chart(c)[i][2]);
    }
  // and the text itself is reproducible
  std::ostringstream out2;
  im2.save(out2);
  CHECK(out.str() == out2.str());
}

TEST_CASE("reblend keeps a consistent immersion consistent") {
  ChartGrid grid(64);
  auto im = DiscreteImmersion::round_sphere(grid, Vec3::Zero(), 1.0);
  const double before = im.chart_consistency_defect();
  im.reblend();
  CHECK(im.chart_consistency_defect() <= before + 1e-12);
}
