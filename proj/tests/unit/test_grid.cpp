#include "wlab/grid.hpp"

#include <doctest.h>

#include <cmath>

using namespace wlab;

TEST_CASE("fd_weights reproduces classic centered stencils") {
  const auto w1 = fd_weights(1, {-2, -1, 0, 1, 2});
  CHECK(w1[0] == doctest::Approx(1.0 / 12));
  CHECK(w1[1] == doctest::Approx(-8.0 / 12));
  CHECK(w1[2] == doctest::Approx(0.0));
  CHECK(w1[3] == doctest::Approx(8.0 / 12));
  CHECK(w1[4] == doctest::Approx(-1.0 / 12));
  const auto w2 = fd_weights(2, {-2, -1, 0, 1, 2});
  CHECK(w2[0] == doctest::Approx(-1.0 / 12));
  CHECK(w2[1] == doctest::Approx(16.0 / 12));
  CHECK(w2[2] == doctest::Approx(-30.0 / 12));
}

TEST_CASE("differ is 4th order on smooth fields, including near edges") {
  auto err_at = [](int n) {
    ChartGrid g(n);
    Differ d(g);
    ScalarField f(g.size());
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy) {
        const Vec2 z = g.point(ix, iy);
        f[g.idx(ix, iy)] = std::sin(1.3 * z[0]) * std::cos(0.7 * z[1]);
      }
    ScalarField fx = d.dx(f), fyy = d.dyy(f);
    double worst = 0.0;
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy) {
        const Vec2 z = g.point(ix, iy);
        const double tx = 1.3 * std::cos(1.3 * z[0]) * std::cos(0.7 * z[1]);
        const double tyy = -0.49 * std::sin(1.3 * z[0]) * std::cos(0.7 * z[1]);
        worst = std::max({worst, std::abs(fx[g.idx(ix, iy)] - tx),
                          std::abs(fyy[g.idx(ix, iy)] - tyy)});
      }
    return worst;
  };
  const double e1 = err_at(48), e2 = err_at(96);
  const double slope = std::log2(e1 / e2);
  CHECK(slope > 3.5);
}

TEST_CASE("stencils are exact on quartics") {
  ChartGrid g(32);
  Differ d(g);
  ScalarField f(g.size());
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy) {
      const Vec2 z = g.point(ix, iy);
      f[g.idx(ix, iy)] = std::pow(z[0], 4) - 2.0 * z[0] * z[0] * z[1] + z[1] * z[1];
    }
  ScalarField fx = d.dx(f);
  double worst = 0.0;
  for (int ix = 0; ix < g.n; ++ix)
    for (int iy = 0; iy < g.n; ++iy) {
      const Vec2 z = g.point(ix, iy);
      worst = std::max(worst,
                       std::abs(fx[g.idx(ix, iy)] - (4.0 * std::pow(z[0], 3) - 4.0 * z[0] * z[1])));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("chart weights form a partition of unity across the transition") {
  for (double r : {0.2, 0.75, 0.9, 1.0, 1.2, 1.5, 1.9}) {
    CHECK(chart_weight(r) + south_weight(1.0 / r) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(chart_weight(r) >= 0.0);
    CHECK(chart_weight(r) <= 1.0);
  }
  CHECK(chart_weight(0.74) == 1.0);
  CHECK(chart_weight(1.51) == 0.0);
  CHECK(south_weight(0.0) == 1.0);
}
