#include "wlab/willmore.hpp"

#include "wlab/errors.hpp"

#include <cmath>

namespace wlab {

namespace {

ScalarField component(const VectorField& v, int k) {
  ScalarField f(v.size());
  for (size_t i = 0; i < v.size(); ++i) f[i] = v[i][k];
  return f;
}

// pullback covariant derivative along the chart directions:
// (D_i V)^g = d_i V^g + Gamma^g_ab d_i Phi^a V^b
std::array<VectorField, 2> pullback_d(const Differ& diff, const MetricJet& jet,
                                      const VectorField& phi,
                                      const VectorField& phi_x,
                                      const VectorField& phi_y,
                                      const VectorField& v) {
  const size_t n = v.size();
  std::array<VectorField, 2> out{VectorField(n), VectorField(n)};
  ScalarField comp[3] = {component(v, 0), component(v, 1), component(v, 2)};
  ScalarField dx[3], dy[3];
  for (int k = 0; k < 3; ++k) {
    diff.dx(comp[k], dx[k]);
    diff.dy(comp[k], dy[k]);
  }
  for (size_t i = 0; i < n; ++i) {
    const Ten3 gam = jet.christoffel_at(phi[i]);
    Vec3 gx = Vec3::Zero(), gy = Vec3::Zero();
    for (int g = 0; g < 3; ++g)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          gx[g] += gam[g][a][b] * phi_x[i][a] * v[i][b];
          gy[g] += gam[g][a][b] * phi_y[i][a] * v[i][b];
        }
    out[0][i] = Vec3(dx[0][i], dx[1][i], dx[2][i]) + gx;
    out[1][i] = Vec3(dy[0][i], dy[1][i], dy[2][i]) + gy;
  }
  return out;
}

Vec3 cross_metric(const Mat3& g, double sqrt_det_g, const Vec3& u, const Vec3& v) {
  // star of (u wedge v): sqrt|g| with the index raised by g^{-1}
  return sqrt_det_g * g.llt().solve(u.cross(v));
}

}  // namespace

ResidualField residual_direct(const DiscreteImmersion& im, const MetricJet& jet,
                              const GeometryField& geom, double lambda,
                              LaplaceMode mode) {
  const ChartGrid& grid = im.grid();
  Differ diff(grid);
  ResidualField out;
  for (int c = 0; c < 2; ++c) {
    const ChartGeometry& cg = geom.charts[c];
    ScalarField lap_h = laplace_beltrami(diff, cg, cg.h, mode);
    ScalarField& r = out.charts[c];
    r.resize(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
      const Mat3 ric = jet.ricci_at(im.chart(c)[i]);
      const double ric_nn = cg.nu[i].dot(ric * cg.nu[i]);
      r[i] = lap_h[i] + cg.h[i] * (cg.a0sq[i] + ric_nn - lambda);
    }
  }
  return out;
}

ResidualField residual_direct(const DiscreteImmersion& im, const MetricJet& jet,
                              double lambda, LaplaceMode mode) {
  const GeometryField geom = geometry(im, jet);
  return residual_direct(im, jet, geom, lambda, mode);
}

namespace {

struct DivergenceParts {
  ResidualField normal;          // full divergence-form residual
  double tangential_sup = 0.0;   // sup tangential mismatch vs curvature term
};

DivergenceParts divergence_residual_impl(const DiscreteImmersion& im,
                                         const MetricJet& jet, double lambda) {
  const auto defect = conformality_defect(im, jet);
  const double threshold = 1e-3 * defect.mean_grad_sq;
  if (defect.sup > threshold)
    throw ConformalityError(
        "divergence-form residual requires an approximately conformal "
        "parametrization",
        defect.sup, threshold);

  const ChartGrid& grid = im.grid();
  Differ diff(grid);
  const GeometryField geom = geometry(im, jet);
  DivergenceParts out;

  for (int c = 0; c < 2; ++c) {
    const ChartGeometry& cg = geom.charts[c];
    const VectorField& phi = im.chart(c);

    ScalarField hx, hy;
    diff.dx(cg.h, hx);
    diff.dy(cg.h, hy);
    const auto dn = pullback_d(diff, jet, phi, cg.phi_x, cg.phi_y, cg.nu);

    VectorField b1(grid.size()), b2(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
      const Mat3 g = jet.metric_at(phi[i]);
      const double sq = std::sqrt(g.determinant());
      const double H = cg.h[i];
      // Dperp n = (-D_y n, D_x n)
      const Vec3 star1 = cross_metric(g, sq, cg.nu[i], -dn[1][i]);
      const Vec3 star2 = cross_metric(g, sq, cg.nu[i], dn[0][i]);
      b1[i] = hx[i] * cg.nu[i] - 0.5 * H * dn[0][i] + 0.5 * H * star1;
      b2[i] = hy[i] * cg.nu[i] - 0.5 * H * dn[1][i] + 0.5 * H * star2;
    }
    const auto db1 = pullback_d(diff, jet, phi, cg.phi_x, cg.phi_y, b1);
    const auto db2 = pullback_d(diff, jet, phi, cg.phi_x, cg.phi_y, b2);

    ScalarField& r = out.normal.charts[c];
    r.resize(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
      const Mat3 g = jet.metric_at(phi[i]);
      const double sq = std::sqrt(g.determinant());
      const Vec3 dstar = db1[0][i] + db2[1][i];
      const double H = cg.h[i];
      const Mat3 ric = jet.ricci_at(phi[i]);
      const double ric_nn = cg.nu[i].dot(ric * cg.nu[i]);
      r[i] = dstar.dot(g * cg.nu[i]) / cg.dvol[i] + H * ric_nn - lambda * H;

      // tangential part: D* bracket / dvol should equal the tangential
      // curvature coupling *(n ^ Riem(e1,e2) Hvec)
      if (cg.weight[i] > 0.0 && !jet.is_flat()) {
        const Vec3 e1 = cg.phi_x[i] / std::sqrt(cg.gbar[i](0, 0));
        Vec3 e2 = cg.phi_y[i] -
                  cg.phi_x[i] * (cg.gbar[i](0, 1) / cg.gbar[i](0, 0));
        e2 /= std::sqrt(e2.dot(g * e2));
        const Vec3 rm = jet.riemann_apply(e1, e2, H * cg.nu[i], phi[i]);
        const Vec3 rperp = cross_metric(g, sq, cg.nu[i], g.llt().solve(rm));
        const Vec3 tang = dstar / cg.dvol[i] + rperp -
                          (dstar.dot(g * cg.nu[i]) / cg.dvol[i]) * cg.nu[i];
        const double t1 = std::abs(tang.dot(g * e1));
        const double t2 = std::abs(tang.dot(g * e2));
        out.tangential_sup = std::max({out.tangential_sup, t1, t2});
      }
    }
  }
  return out;
}

}  // namespace

ResidualField residual_divergence(const DiscreteImmersion& im, const MetricJet& jet,
                                  double lambda) {
  return divergence_residual_impl(im, jet, lambda).normal;
}

double divergence_tangential_defect(const DiscreteImmersion& im,
                                    const MetricJet& jet) {
  return divergence_residual_impl(im, jet, 0.0).tangential_sup;
}

double residual_norm(const ChartGrid& grid, const GeometryField& geom,
                     const ResidualField& r) {
  const double v = integrate(grid, geom, [&](int c, int i) {
    return r.charts[c][i] * r.charts[c][i];
  });
  return std::sqrt(v);
}

double residual_sup(const ChartGrid& grid, const GeometryField& geom,
                    const ResidualField& r) {
  double sup = 0.0;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < grid.size(); ++i)
      if (geom.charts[c].weight[i] > 0.0)
        sup = std::max(sup, std::abs(r.charts[c][i]));
  return sup;
}

LambdaEstimate lambda_estimate(const DiscreteImmersion& im, const MetricJet& jet) {
  const ChartGrid& grid = im.grid();
  const GeometryField geom = geometry(im, jet);
  const ResidualField r0 = residual_direct(im, jet, geom, 0.0);

  LambdaEstimate est;
  const double hh = integrate(grid, geom, [&](int c, int i) {
    return geom.charts[c].h[i] * geom.charts[c].h[i];
  });
  if (hh <= 0.0)
    throw ValidationError("degenerate projection: <H,H> vanishes");
  est.projection = integrate(grid, geom, [&](int c, int i) {
                     return r0.charts[c][i] * geom.charts[c].h[i];
                   }) / hh;

  // delta_x Area by the tangential divergence formula
  est.delta_x_area = integrate(grid, geom, [&](int c, int i) {
    const ChartGeometry& cg = geom.charts[c];
    const Vec3& p = im.chart(c)[i];
    const Mat3 g = jet.metric_at(p);
    const Ten3 gam = jet.christoffel_at(p);
    auto cov = [&](const Vec3& t) {
      Vec3 out = t;
      for (int gi = 0; gi < 3; ++gi)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) out[gi] += gam[gi][a][b] * t[a] * p[b];
      return out;
    };
    const Vec3 cx = cov(cg.phi_x[i]);
    const Vec3 cy = cov(cg.phi_y[i]);
    const Mat2& gb = cg.gbar[i];
    const double det = gb(0, 0) * gb(1, 1) - gb(0, 1) * gb(0, 1);
    const double gxx = gb(1, 1) / det, gxy = -gb(0, 1) / det, gyy = gb(0, 0) / det;
    return gxx * cx.dot(g * cg.phi_x[i]) + gyy * cy.dot(g * cg.phi_y[i]) +
           gxy * (cx.dot(g * cg.phi_y[i]) + cy.dot(g * cg.phi_x[i]));
  });

  // first variation of W along the position field: normal pairing with the
  // lambda = 0 residual (tangential motion is reparametrization)
  est.delta_x_willmore = integrate(grid, geom, [&](int c, int i) {
    const Vec3& p = im.chart(c)[i];
    const Mat3 g = jet.metric_at(p);
    return p.dot(g * geom.charts[c].nu[i]) * r0.charts[c][i];
  });
  est.dilation = est.delta_x_willmore / est.delta_x_area;
  return est;
}

double hawking_mass_from(double area_value, double willmore_value,
                         HawkingConvention convention) {
  const double pref = convention == HawkingConvention::paper
                          ? area_value
                          : std::sqrt(area_value);
  return pref / (16.0 * std::pow(M_PI, 1.5)) * (4.0 * M_PI - willmore_value);
}

double hawking_mass(const DiscreteImmersion& im, const MetricJet& jet,
                    HawkingConvention convention) {
  const GeometryField geom = geometry(im, jet);
  return hawking_mass_from(area(im.grid(), geom),
                           willmore_energy(im.grid(), geom), convention);
}

}  // namespace wlab
