#pragma once

#include "wlab/background.hpp"
#include "wlab/tensors.hpp"

namespace wlab {

// Truncation order of the normal-coordinate expansion.
enum class JetOrder { quadratic, cubic };  // eps^2 only / eps^2 + eps^3

// Pointwise evaluation of the rescaled normal-coordinate model metric
//   g_mn(y) = d_mn + (eps^2/3) R_amnb y^a y^b + (eps^3/6) R_amnb,c y^a y^b y^c.
// The truncated polynomial IS the model metric; there is no hidden remainder.
class MetricJet {
 public:
  MetricJet() = default;
  MetricJet(const CurvatureBackground& bg, double eps,
            JetOrder order = JetOrder::cubic);

  const CurvatureBackground& background() const { return bg_; }
  double eps() const { return eps_; }
  JetOrder order() const { return order_; }
  bool is_flat() const { return eps_ == 0.0 || bg_.is_flat(); }

  Mat3 metric_at(const Vec3& y) const;          // throws MetricDegeneracyError
  Mat3 inverse_metric_at(const Vec3& y) const;  // sign-flipped expansion
  double volume_density_at(const Vec3& y) const;
  // Gamma^g_ab, returned as [g][a][b]; A y eps^2 + B y y eps^3, truncated.
  Ten3 christoffel_at(const Vec3& y) const;

  // Ricci of the model metric: eps^2 Ric + eps^3 dRic . y (truncated).
  Mat3 ricci_at(const Vec3& y) const;
  // (Riem_{g_eps}(u,v)w)^d with the first index raised by the flat metric;
  // curvature scales as eps^2 R + eps^3 dR . y.
  Vec3 riemann_apply(const Vec3& u, const Vec3& v, const Vec3& w,
                     const Vec3& y) const;

  // Largest eps for which metric_at stays positive definite on a 17^3 probe
  // lattice of the ball |y| <= 2. Infinity for flat backgrounds.
  static double admissible_eps_bound(const CurvatureBackground& bg,
                                     JetOrder order = JetOrder::cubic);
  bool is_admissible() const;

 private:
  CurvatureBackground bg_;
  double eps_ = 0.0;
  JetOrder order_ = JetOrder::cubic;
};

}  // namespace wlab
