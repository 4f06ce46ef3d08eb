#pragma once

#include "wlab/geometry.hpp"
#include "wlab/immersion.hpp"
#include "wlab/metric_jet.hpp"

namespace wlab {

// Strong-form residual of the area-constrained Willmore equation,
//   Lap_gbar H + H |A0|^2 + H Ric_eps(n,n) - lambda H,
// evaluated per chart point. Ric_eps is the model Ricci eps^2 Ric + eps^3 dRic.y.
struct ResidualField {
  std::array<ScalarField, 2> charts;
};

ResidualField residual_direct(const DiscreteImmersion& im, const MetricJet& jet,
                              double lambda,
                              LaplaceMode mode = LaplaceMode::full);
ResidualField residual_direct(const DiscreteImmersion& im, const MetricJet& jet,
                              const GeometryField& geom, double lambda,
                              LaplaceMode mode = LaplaceMode::full);

// Same residual assembled from the divergence form: the conservative bracket
//   D*[ grad H n - (H/2) D n + (H/2) *(n ^ Dperp n) ]
// is projected on the normal, divided by the area density, and completed with
// the curvature and multiplier terms. Requires an approximately conformal
// parametrization (defect <= 1e-3 * mean |grad Phi|^2), else throws
// ConformalityError.
ResidualField residual_divergence(const DiscreteImmersion& im, const MetricJet& jet,
                                  double lambda);

// Tangential part of the divergence-form identity: D* bracket / dvol plus the
// curvature coupling *(n ^ Riem(e1,e2)H) should be purely normal; returns the
// sup of the tangential mismatch (a consistency diagnostic of the Hodge and
// curvature machinery).
double divergence_tangential_defect(const DiscreteImmersion& im, const MetricJet& jet);

// L2 norm of a residual field over the blended surface measure.
double residual_norm(const ChartGrid& grid, const GeometryField& geom,
                     const ResidualField& r);
double residual_sup(const ChartGrid& grid, const GeometryField& geom,
                    const ResidualField& r);

struct LambdaEstimate {
  double dilation = 0.0;    // delta_x W / delta_x Area with the position field
  double projection = 0.0;  // <residual(0), H> / <H, H>
  double delta_x_area = 0.0;
  double delta_x_willmore = 0.0;
};
LambdaEstimate lambda_estimate(const DiscreteImmersion& im, const MetricJet& jet);

enum class HawkingConvention { paper, sqrt_area };

// (Area/16 pi^{3/2})(4pi - W), or with sqrt(Area) in the prefactor.
double hawking_mass(const DiscreteImmersion& im, const MetricJet& jet,
                    HawkingConvention convention = HawkingConvention::paper);
double hawking_mass_from(double area_value, double willmore_value,
                         HawkingConvention convention);

}  // namespace wlab
