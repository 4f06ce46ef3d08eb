#pragma once

#include "wlab/grid.hpp"
#include "wlab/immersion.hpp"
#include "wlab/metric_jet.hpp"

#include <functional>

namespace wlab {

// Per-point geometric data of one chart under a background metric jet.
// Derivatives are 4th-order centered finite differences.
struct ChartGeometry {
  std::vector<Mat2> gbar;   // first fundamental form
  VectorField nu;           // inward unit normal (g_eps-orthonormal)
  std::vector<Mat2> a;      // second fundamental form, unit-sphere H = +1
  ScalarField h;            // mean curvature (1/2 trace of A wrt gbar)
  ScalarField a0sq;         // |A - H gbar|^2 >= 0
  ScalarField dvol;         // sqrt(det gbar)
  ScalarField grad_sq_g;    // |grad Phi|^2 in the ambient metric
  ScalarField weight;       // chart partition-of-unity weight
  VectorField phi_x, phi_y, phi_xx, phi_xy, phi_yy;
  double orientation_sign = 1.0;
};

struct GeometryField {
  std::array<ChartGeometry, 2> charts;
};

GeometryField geometry(const DiscreteImmersion& im, const MetricJet& jet);

// Quadrature of a per-point function against the blended area measure.
double integrate(const ChartGrid& grid, const GeometryField& geom,
                 const std::function<double(int chart, int idx)>& fn);

double willmore_energy(const DiscreteImmersion& im, const MetricJet& jet);
double willmore_energy(const ChartGrid& grid, const GeometryField& geom);
double area(const DiscreteImmersion& im, const MetricJet& jet);
double area(const ChartGrid& grid, const GeometryField& geom);
Vec3 center_of_mass(const DiscreteImmersion& im, const MetricJet& jet);
Vec3 center_of_mass(const ChartGrid& grid, const GeometryField& geom,
                    const DiscreteImmersion& im);
double diameter(const DiscreteImmersion& im);

struct SimonBounds {
  double willmore = 0.0;
  double area = 0.0;
  double diameter = 0.0;
  double max_radius = 0.0;        // sup |Phi|
  double sqrt_area_over_w = 0.0;  // sqrt(Area/W)
  bool lower_bound_holds = false; // sqrt(Area/W) <= diameter
  bool degenerate = false;        // geometry failed; values partial
  std::string note;
};
SimonBounds simon_bounds_check(const DiscreteImmersion& im, const MetricJet& jet);

enum class LaplaceMode { full, conformal };

// Laplace-Beltrami of a chart scalar field under the induced metric.
ScalarField laplace_beltrami(const Differ& diff, const ChartGeometry& cg,
                             const ScalarField& f,
                             LaplaceMode mode = LaplaceMode::full);

// Conformality defect fields (g(Phi_x,Phi_x) - g(Phi_y,Phi_y), g(Phi_x,Phi_y)).
struct ConformalityDefect {
  std::array<ScalarField, 2> diag;   // per chart
  std::array<ScalarField, 2> cross;  // per chart
  double sup = 0.0;                  // max |.| over blend-supported points
  double mean_grad_sq = 0.0;         // mean of |grad Phi|^2_g for thresholds
};
ConformalityDefect conformality_defect(const DiscreteImmersion& im,
                                       const MetricJet& jet);

}  // namespace wlab
