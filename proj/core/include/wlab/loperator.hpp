#pragma once

#include "wlab/asymptotics.hpp"
#include "wlab/background.hpp"
#include "wlab/grid.hpp"

#include <functional>

namespace wlab {

// Linearized constrained-Willmore operator at the round sphere,
//   L(rho) = -Lap ( (<Lap rho, w> + 2 <grad w, grad rho>) / |grad w|^2 ),
// on the north chart. The inner expression uses closed-form w; the outer
// Laplacian is a 4th-order FD pass. rho enters either as sampled grid values
// (both Laplacians FD, two nested passes) or through an analytic jet
// (exact inner expression, one FD pass).
ScalarField l_omega_apply(const ChartGrid& grid, const VectorField& rho);
ScalarField l_omega_apply_analytic(
    const ChartGrid& grid, const std::function<MapJet2(const Vec2&)>& rho_jet);

// inner expression (<Lap rho, w> + 2<grad w, grad rho>)/|grad w|^2 for a jet
double l_omega_inner(const MapJet2& rho, const Vec2& z);

// Closed-form right side of the reduced corrector equation,
//   (-Ric_ab w^a w^b + lambda_ratio/2 + Scal/6) |grad w|^2.
// The constant Scal/6 is the oracle-fitted value consistent with the
// implemented corrector (see corrector_at).
double corrector_rhs(const CurvatureBackground& bg, double lambda_ratio,
                     const Vec2& z);

// sup of |field| over grid nodes with r_lo <= |z| <= r_hi
double sup_on_annulus(const ChartGrid& grid, const ScalarField& f, double r_lo,
                      double r_hi);

// Desk-scale probe of the rigidity of the linearized problem: least-squares
// minimization of |L rho|^2 + |linearized conformality|^2 with the two point
// normalizations, over unit-norm two-chart fields. The only flat directions
// are the constant fields, so the minimizer must have vanishing gradient.
struct KernelProbeResult {
  double rayleigh = 0.0;        // J(rho)/|rho|^2 at the minimizer
  double grad_norm = 0.0;       // quadrature norm of grad rho / |rho|
  double grad_sup = 0.0;        // sup |grad rho| / |rho|
  double next_rayleigh = 0.0;   // smallest J on the complement of constants
  int iterations = 0;
};
KernelProbeResult kernel_rigidity_probe(int n, int power_iters = 30);

}  // namespace wlab
