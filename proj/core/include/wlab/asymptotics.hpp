#pragma once

#include "wlab/background.hpp"
#include "wlab/geometry.hpp"
#include "wlab/immersion.hpp"
#include "wlab/metric_jet.hpp"
#include "wlab/round_sphere.hpp"

namespace wlab {

// Value and chart derivatives through second order of a surface map.
struct MapJet2 {
  Vec3 p, px, py, pxx, pxy, pyy;
};

// Corrector of the round sphere: the eps^2 deformation solving the expanded
// area-constrained equation,
//   rho = (1/6) Ric . w + (lambda_ratio - Scal/3) f(r) w.
// The curvature coefficient 1/6 and the radial shift -Scal/3 are pinned by
// finite-difference/symbolic cross-validation (conformality to O(eps^3),
// the reduced linearized equation, and annihilation of the eps^2 residual
// are simultaneously consistent only with this set).
Vec3 corrector_at(const CurvatureBackground& bg, double lambda_ratio, const Vec2& z);
MapJet2 corrector_jet(const CurvatureBackground& bg, double lambda_ratio, const Vec2& z);

// The ansatz surface Omega = w + eps^2 rho, with analytic chart jets on both
// charts (the south chart goes through the transition map).
struct CorrectorAnsatz {
  CurvatureBackground bg;
  double eps = 0.0;
  double lambda_ratio = 0.0;

  Vec3 at(ChartId c, const Vec2& z) const;
  MapJet2 jet(ChartId c, const Vec2& z) const;
  DiscreteImmersion immersion(const ChartGrid& grid) const;
};

// eps^2 coefficient of the mean curvature of the model sphere under the
// truncated metric, as a field of the surface jet (closed form; no FD).
// At the round sphere it reduces to -(1/6) Ric_ab w^a w^b.
double mean_curvature_eps2_coeff(const CurvatureBackground& bg, const MapJet2& m);
double s_coefficient(const CurvatureBackground& bg, const Vec2& z);  // at omega
// eps^3 coefficient at the round sphere: -(1/8) Ric_ab,c w^a w^b w^c.
double t_coefficient(const CurvatureBackground& bg, const Vec2& z);

// Truncated model of the chart-multiplied constrained-Willmore residual on a
// surface with analytic jets: outer flat Laplacian of the modeled mean
// curvature by one 4th-order FD pass, all coefficient fields closed form, the
// |A0|^2 term evaluated exactly through the discrete geometry. On the ansatz
// with matching lambda the field is O(eps^3) away from the two chart poles
// (the radial corrector profile has a logarithmic point defect there).
struct ExpansionResidual {
  std::array<ScalarField, 2> charts;
  double sup_annulus = 0.0;  // sup over 0.3 <= r <= 1.6 on both charts
};
ExpansionResidual expansion_residual(const CorrectorAnsatz& ansatz, double lambda,
                                     const ChartGrid& grid);

// Conformality defect of the ansatz from analytic first derivatives (no FD):
// pair (g(P_x,P_x) - g(P_y,P_y), g(P_x,P_y)) under the truncated metric.
struct AnsatzConformality {
  std::array<ScalarField, 2> diag, cross;
  double sup = 0.0;  // over blend-supported points
};
AnsatzConformality ansatz_conformality(const CorrectorAnsatz& ansatz,
                                       const ChartGrid& grid);

// Linearized conformality defect of a perturbation jet at the round sphere:
// (<w_x, r_x> - <w_y, r_y>, <w_x, r_y> + <w_y, r_x>).
Vec2 linearized_conformality(const MapJet2& rho, const Vec2& z);

// Frame decomposition rho_x = a w_x + b w_y + c w, rho_y = -b w_x + a w_y + d w.
struct KernelCoefficients {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double a_consistency = 0.0;  // |a from rho_x - a from rho_y|
  double b_consistency = 0.0;
};
KernelCoefficients kernel_decompose(const MapJet2& rho, const Vec2& z);

// Grid version: fields a, b, c, d from FD derivatives of a sampled rho, plus
// the residuals of a_y + b_x = d and b_y - a_x = -c.
struct KernelFields {
  ScalarField a, b, c, d;
  ScalarField de1, de2;     // a_y + b_x - d, b_y - a_x + c
  double consistency = 0.0; // sup of the two a/b extraction mismatches
};
KernelFields kernel_decompose_grid(const ChartGrid& grid, const VectorField& rho,
                                   double mask_radius = 1.8);

}  // namespace wlab
