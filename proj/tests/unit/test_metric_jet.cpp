#include "wlab/metric_jet.hpp"
#include "wlab/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wlab;

namespace {

CurvatureBackground random_background(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  Mat3 ric;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) ric(a, b) = ric(b, a) = u(rng);
  Ten3 dric = zero_ten3();
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      for (int c = 0; c < 3; ++c) dric[a][b][c] = dric[b][a][c] = u(rng);
  return CurvatureBackground::from_ricci(ric, dric);
}

}  // namespace

TEST_CASE("flat background evaluates to euclidean data everywhere") {
  MetricJet jet(CurvatureBackground::flat(), 0.3);
  const Vec3 y(0.7, -1.1, 0.4);
  CHECK((jet.metric_at(y) - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(jet.volume_density_at(y) == 1.0);
  const Ten3 gam = jet.christoffel_at(y);
  for (int g = 0; g < 3; ++g)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(gam[g][a][b] == 0.0);
}

TEST_CASE("any background at y=0 gives identity metric and zero christoffels") {
  MetricJet jet(random_background(11), 0.2);
  CHECK((jet.metric_at(Vec3::Zero()) - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
  const Ten3 gam = jet.christoffel_at(Vec3::Zero());
  for (int g = 0; g < 3; ++g)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(gam[g][a][b] == 0.0);
}

TEST_CASE("constant curvature hand values at eps = 0.1, y = e1") {
  const auto bg = CurvatureBackground::space_form(1.0);
  MetricJet jet(bg, 0.1);
  const Vec3 y = Vec3::UnitX();
  // g22 = 1 + (eps^2/3) R_1221 = 1 - 0.01/3
  CHECK(jet.metric_at(y)(1, 1) == doctest::Approx(1.0 - 0.01 / 3.0).epsilon(1e-14));
  CHECK(jet.inverse_metric_at(y)(1, 1) ==
        doctest::Approx(1.0 + 0.01 / 3.0).epsilon(1e-14));
  // density: 1 - (eps^2/6) ric_11 = 1 - 0.01/3
  CHECK(jet.volume_density_at(y) == doctest::Approx(1.0 - 0.01 / 3.0).epsilon(1e-14));
}

TEST_CASE("metric times truncated inverse is identity up to O(eps^4)") {
  const auto bg = random_background(5);
  const double eps = 0.05;
  MetricJet jet(bg, eps);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int t = 0; t < 10; ++t) {
    const Vec3 y(u(rng), u(rng), u(rng));
    const Mat3 prod = jet.metric_at(y) * jet.inverse_metric_at(y);
    CHECK((prod - Mat3::Identity()).cwiseAbs().maxCoeff() <
          10.0 * eps * eps * eps * eps);
  }
}

TEST_CASE("sqrt(det metric) agrees with volume density to O(eps^4)") {
  const auto bg = random_background(23);
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (double eps : {0.1, 0.05}) {
    MetricJet jet(bg, eps);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Vec3 y(u(rng), u(rng), u(rng));
      worst = std::max(worst, std::abs(std::sqrt(jet.metric_at(y).determinant()) -
                                       jet.volume_density_at(y)));
    }
    CHECK(worst < 20.0 * std::pow(eps, 4));
  }
}

TEST_CASE("christoffels match finite differences of the metric to O(eps^4)") {
  const auto bg = random_background(41);
  const Vec3 y(0.4, -0.8, 0.3);
  const double fd = 1e-3;
  for (double eps : {0.2, 0.1, 0.05}) {
    MetricJet jet(bg, eps);
    // exact christoffels of the polynomial metric via 6th-order FD in y
    std::array<Mat3, 3> dg;  // dg[s](m,n) = d_s g_mn
    for (int s = 0; s < 3; ++s) {
      Mat3 acc = Mat3::Zero();
      const double w[6] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 3.0 / 4, -3.0 / 20, 1.0 / 60};
      const double off[6] = {-3, -2, -1, 1, 2, 3};
      for (int k = 0; k < 6; ++k) {
        Vec3 yp = y;
        yp[s] += off[k] * fd;
        acc += w[k] * jet.metric_at(yp);
      }
      dg[s] = acc / fd;
    }
    const Mat3 ginv = jet.metric_at(y).inverse();
    Ten3 gam_fd = zero_ten3();
    for (int g = 0; g < 3; ++g)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          double t = 0.0;
          for (int s = 0; s < 3; ++s)
            t += 0.5 * ginv(g, s) * (dg[a](s, b) + dg[b](s, a) - dg[s](a, b));
          gam_fd[g][a][b] = t;
        }
    const Ten3 gam = jet.christoffel_at(y);
    double worst = 0.0;
    for (int g = 0; g < 3; ++g)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          worst = std::max(worst, std::abs(gam[g][a][b] - gam_fd[g][a][b]));
    // truncated expansion differs from the exact polynomial-metric value at eps^4
    CHECK(worst < 5.0 * std::pow(eps, 4) + 1e-10);
  }
}

TEST_CASE("christoffel lower-index symmetry is exact") {
  MetricJet jet(random_background(59), 0.15);
  const Ten3 gam = jet.christoffel_at(Vec3(0.3, 0.9, -1.1));
  for (int g = 0; g < 3; ++g)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(gam[g][a][b] == gam[g][b][a]);
}

TEST_CASE("metric is exactly polynomial in eps: Richardson recovers coefficients") {
  const auto bg = random_background(61);
  const Vec3 y(0.5, 0.2, -0.7);
  const double e = 0.04;
  MetricJet j1(bg, e), j2(bg, 2.0 * e);
  const Mat3 d1 = j1.metric_at(y) - Mat3::Identity();
  const Mat3 d2 = j2.metric_at(y) - Mat3::Identity();
  // d(e) = A e^2 + B e^3 exactly: solve the 2x2 system per entry
  const Mat3 A = (8.0 * d1 - d2) / (4.0 * e * e);
  const Mat3 B = (d2 - 4.0 * d1) / (4.0 * e * e * e);
  MetricJet j3(bg, 3.0 * e);
  const Mat3 pred = Mat3::Identity() + 9.0 * e * e * A + 27.0 * e * e * e * B;
  CHECK((j3.metric_at(y) - pred).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("admissibility bound: positive definite up to the bound, flat is unbounded") {
  CHECK(std::isinf(MetricJet::admissible_eps_bound(CurvatureBackground::flat())));
  const auto bg = CurvatureBackground::space_form(1.0);
  const double bound = MetricJet::admissible_eps_bound(bg);
  CHECK(bound > 0.1);  // small spheres in a unit space form are fine
  MetricJet jet(bg, bound * 1.2);
  CHECK(!jet.is_admissible());
}

TEST_CASE("degenerate metric raises with the offending point") {
  const auto bg = CurvatureBackground::space_form(1.0);
  const double bound = MetricJet::admissible_eps_bound(bg);
  MetricJet jet(bg, bound * 3.0);
  bool threw = false;
  try {
    for (double t = 0.0; t <= 2.0; t += 0.05) (void)jet.metric_at(Vec3(t, t, t) / std::sqrt(3.0));
  } catch (const MetricDegeneracyError& e) {
    threw = true;
    CHECK(e.point.norm() <= 2.0 + 1e-12);
  }
  CHECK(threw);
}
