#include "wlab/metric_jet.hpp"

#include "wlab/errors.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <limits>
#include <sstream>

namespace wlab {

MetricJet::MetricJet(const CurvatureBackground& bg, double eps, JetOrder order)
    : bg_(bg), eps_(eps), order_(order) {
  if (eps < 0.0) throw ValidationError("eps must be nonnegative");
}

Mat3 MetricJet::metric_at(const Vec3& y) const {
  Mat3 g = Mat3::Identity();
  if (is_flat()) return g;
  const double e2 = eps_ * eps_;
  const double e3 = e2 * eps_;
  for (int m = 0; m < 3; ++m)
    for (int n = m; n < 3; ++n) {
      double q = 0.0, c = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          q += bg_.riemann[a][m][n][b] * y[a] * y[b];
          if (order_ == JetOrder::cubic)
            for (int cc = 0; cc < 3; ++cc)
              c += bg_.driemann[a][m][n][b][cc] * y[a] * y[b] * y[cc];
        }
      double v = (m == n ? 1.0 : 0.0) + e2 / 3.0 * q + e3 / 6.0 * c;
      g(m, n) = v;
      g(n, m) = v;
    }
  Eigen::LLT<Mat3> llt(g);
  if (llt.info() != Eigen::Success) {
    std::ostringstream os;
    os << "model metric not positive definite at y = (" << y.transpose() << ")";
    throw MetricDegeneracyError(os.str(), y);
  }
  return g;
}

Mat3 MetricJet::inverse_metric_at(const Vec3& y) const {
  Mat3 g = Mat3::Identity();
  if (is_flat()) return g;
  const double e2 = eps_ * eps_;
  const double e3 = e2 * eps_;
  for (int m = 0; m < 3; ++m)
    for (int n = m; n < 3; ++n) {
      double q = 0.0, c = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          q += bg_.riemann[a][m][n][b] * y[a] * y[b];
          if (order_ == JetOrder::cubic)
            for (int cc = 0; cc < 3; ++cc)
              c += bg_.driemann[a][m][n][b][cc] * y[a] * y[b] * y[cc];
        }
      double v = (m == n ? 1.0 : 0.0) - e2 / 3.0 * q - e3 / 6.0 * c;
      g(m, n) = v;
      g(n, m) = v;
    }
  return g;
}

double MetricJet::volume_density_at(const Vec3& y) const {
  if (is_flat()) return 1.0;
  const double e2 = eps_ * eps_;
  const double e3 = e2 * eps_;
  double q = y.dot(bg_.ric * y);
  double c = 0.0;
  if (order_ == JetOrder::cubic)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int cc = 0; cc < 3; ++cc)
          c += bg_.dric[a][b][cc] * y[a] * y[b] * y[cc];
  return 1.0 - e2 / 6.0 * q - e3 / 12.0 * c;
}

Ten3 MetricJet::christoffel_at(const Vec3& y) const {
  Ten3 gam = zero_ten3();
  if (is_flat()) return gam;
  const double e2 = eps_ * eps_;
  const double e3 = e2 * eps_;
  const auto& R = bg_.riemann;
  const auto& dR = bg_.driemann;
  for (int g = 0; g < 3; ++g)
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) {
        double v = 0.0;
        for (int m = 0; m < 3; ++m) {
          // A_abgm = (1/3)(R_bmag + R_ambg)
          v += e2 / 3.0 * (R[b][m][a][g] + R[a][m][b][g]) * y[m];
          if (order_ == JetOrder::cubic)
            for (int n = 0; n < 3; ++n)
              v += e3 / 12.0 *
                   (2.0 * dR[b][m][a][g][n] + 2.0 * dR[a][m][b][g][n] +
                    dR[b][m][n][g][a] + dR[a][m][n][g][b] - dR[a][m][n][b][g]) *
                   y[m] * y[n];
        }
        gam[g][a][b] = v;
        gam[g][b][a] = v;
      }
  return gam;
}

Mat3 MetricJet::ricci_at(const Vec3& y) const {
  if (is_flat()) return Mat3::Zero();
  const double e2 = eps_ * eps_;
  Mat3 r = e2 * bg_.ric;
  if (order_ == JetOrder::cubic) {
    const double e3 = e2 * eps_;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double t = 0.0;
        for (int c = 0; c < 3; ++c) t += bg_.dric[a][b][c] * y[c];
        r(a, b) += e3 * t;
      }
  }
  return r;
}

Vec3 MetricJet::riemann_apply(const Vec3& u, const Vec3& v, const Vec3& w,
                              const Vec3& y) const {
  Vec3 out = Vec3::Zero();
  if (is_flat()) return out;
  const double e2 = eps_ * eps_;
  const double e3 = e2 * eps_;
  // <Riem(u,v)w, z> = R_abce u^a v^b z^c w^e
  for (int c = 0; c < 3; ++c) {
    double t = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int e = 0; e < 3; ++e) {
          double r = e2 * bg_.riemann[a][b][c][e];
          if (order_ == JetOrder::cubic)
            for (int f = 0; f < 3; ++f)
              r += e3 * bg_.driemann[a][b][c][e][f] * y[f];
          t += r * u[a] * v[b] * w[e];
        }
    out[c] = t;
  }
  return out;
}

namespace {

bool lattice_pd(const CurvatureBackground& bg, double eps, JetOrder order) {
  MetricJet jet(bg, eps, order);
  const int m = 17;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Vec3 y(-2.0 + 4.0 * i / (m - 1), -2.0 + 4.0 * j / (m - 1),
               -2.0 + 4.0 * k / (m - 1));
        if (y.norm() > 2.0) continue;
        try {
          (void)jet.metric_at(y);
        } catch (const MetricDegeneracyError&) {
          return false;
        }
      }
  return true;
}

}  // namespace

double MetricJet::admissible_eps_bound(const CurvatureBackground& bg,
                                       JetOrder order) {
  if (bg.is_flat()) return std::numeric_limits<double>::infinity();
  double lo = 0.0, hi = 1e-3;
  while (lattice_pd(bg, hi, order) && hi < 1e6) {
    lo = hi;
    hi *= 2.0;
  }
  if (hi >= 1e6) return std::numeric_limits<double>::infinity();
  for (int it = 0; it < 60 && (hi - lo) > 1e-12 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (lattice_pd(bg, mid, order) ? lo : hi) = mid;
  }
  return lo;
}

bool MetricJet::is_admissible() const {
  if (is_flat()) return true;
  return eps_ <= admissible_eps_bound(bg_, order_);
}

}  // namespace wlab
