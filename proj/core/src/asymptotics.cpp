#include "wlab/asymptotics.hpp"

#include "wlab/errors.hpp"

#include <cmath>

namespace wlab {

namespace {

MapJet2 jet_from_omega(const OmegaJet& oj) {
  MapJet2 m;
  m.p = oj.value();
  m.px = oj.deriv(1, 0);
  m.py = oj.deriv(0, 1);
  m.pxx = oj.deriv(2, 0);
  m.pxy = oj.deriv(1, 1);
  m.pyy = oj.deriv(0, 2);
  return m;
}

MapJet2 scale(const MapJet2& m, double s) {
  return {s * m.p, s * m.px, s * m.py, s * m.pxx, s * m.pxy, s * m.pyy};
}

MapJet2 add(const MapJet2& a, const MapJet2& b) {
  return {a.p + b.p,     a.px + b.px,   a.py + b.py,
          a.pxx + b.pxx, a.pxy + b.pxy, a.pyy + b.pyy};
}

// chain rule through the transition map T(z) = z/|z|^2
MapJet2 compose_transition(const CorrectorAnsatz& ans, const Vec2& z);

}  // namespace

Vec3 corrector_at(const CurvatureBackground& bg, double lambda_ratio, const Vec2& z) {
  const Vec3 w = omega_at(z);
  const double b = lambda_ratio - bg.scal / 3.0;
  return bg.ric * w / 6.0 + b * f_profile(z.norm()) * w;
}

MapJet2 corrector_jet(const CurvatureBackground& bg, double lambda_ratio,
                      const Vec2& z) {
  const OmegaJet oj = omega_jet(z);
  const MapJet2 w = jet_from_omega(oj);
  MapJet2 out;
  const Mat3 M = bg.ric / 6.0;
  out.p = M * w.p;
  out.px = M * w.px;
  out.py = M * w.py;
  out.pxx = M * w.pxx;
  out.pxy = M * w.pxy;
  out.pyy = M * w.pyy;
  const double b = lambda_ratio - bg.scal / 3.0;
  if (b != 0.0) {
    const auto f = f_profile_jet2(z);  // f, fx, fy, fxx, fxy, fyy
    out.p += b * f[0] * w.p;
    out.px += b * (f[1] * w.p + f[0] * w.px);
    out.py += b * (f[2] * w.p + f[0] * w.py);
    out.pxx += b * (f[3] * w.p + 2.0 * f[1] * w.px + f[0] * w.pxx);
    out.pxy += b * (f[4] * w.p + f[1] * w.py + f[2] * w.px + f[0] * w.pxy);
    out.pyy += b * (f[5] * w.p + 2.0 * f[2] * w.py + f[0] * w.pyy);
  }
  return out;
}

namespace {

MapJet2 north_jet(const CorrectorAnsatz& ans, const Vec2& z) {
  MapJet2 w = jet_from_omega(omega_jet(z));
  if (ans.eps == 0.0) return w;
  return add(w, scale(corrector_jet(ans.bg, ans.lambda_ratio, z),
                      ans.eps * ans.eps));
}

MapJet2 compose_transition(const CorrectorAnsatz& ans, const Vec2& z) {
  // south-chart map: Omega_N composed with T, T(z) = z/|z|^2 (exact jets)
  Jet4 X = Jet4::var_x(z[0]), Y = Jet4::var_y(z[1]);
  Jet4 invU = (X * X + Y * Y).recip();
  Jet4 T1 = X * invU, T2 = Y * invU;
  const Vec2 t(T1.value(), T2.value());
  const MapJet2 G = north_jet(ans, t);

  const double t1x = T1.deriv(1, 0), t1y = T1.deriv(0, 1);
  const double t2x = T2.deriv(1, 0), t2y = T2.deriv(0, 1);
  const double t1xx = T1.deriv(2, 0), t1xy = T1.deriv(1, 1), t1yy = T1.deriv(0, 2);
  const double t2xx = T2.deriv(2, 0), t2xy = T2.deriv(1, 1), t2yy = T2.deriv(0, 2);

  MapJet2 F;
  F.p = G.p;
  F.px = G.px * t1x + G.py * t2x;
  F.py = G.px * t1y + G.py * t2y;
  F.pxx = G.pxx * t1x * t1x + 2.0 * G.pxy * t1x * t2x + G.pyy * t2x * t2x +
          G.px * t1xx + G.py * t2xx;
  F.pxy = G.pxx * t1x * t1y + G.pxy * (t1x * t2y + t1y * t2x) +
          G.pyy * t2x * t2y + G.px * t1xy + G.py * t2xy;
  F.pyy = G.pxx * t1y * t1y + 2.0 * G.pxy * t1y * t2y + G.pyy * t2y * t2y +
          G.px * t1yy + G.py * t2yy;
  return F;
}

}  // namespace

Vec3 CorrectorAnsatz::at(ChartId c, const Vec2& z) const {
  if (c == chart_north) return omega_at(z) + eps * eps * corrector_at(bg, lambda_ratio, z);
  const Vec2 t = chart_transition(z);
  return omega_at(t) + eps * eps * corrector_at(bg, lambda_ratio, t);
}

MapJet2 CorrectorAnsatz::jet(ChartId c, const Vec2& z) const {
  if (c == chart_north) return north_jet(*this, z);
  return compose_transition(*this, z);
}

DiscreteImmersion CorrectorAnsatz::immersion(const ChartGrid& grid) const {
  return DiscreteImmersion::from_chart_maps(
      grid, [&](ChartId c, const Vec2& z) { return at(c, z); });
}

namespace {

double riem_q(const Ten4& R, const Vec3& p, const Vec3& u, const Vec3& v) {
  double t = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n)
        for (int b = 0; b < 3; ++b) t += R[a][m][n][b] * p[a] * p[b] * u[m] * v[n];
  return t;
}

}  // namespace

double mean_curvature_eps2_coeff(const CurvatureBackground& bg, const MapJet2& m) {
  const double grad_sq = m.px.squaredNorm() + m.py.squaredNorm();
  Vec3 nu = m.px.cross(m.py);
  nu.normalize();
  if (nu.dot(m.p) > 0.0) nu = -nu;  // inward for star-shaped surfaces
  const Vec3 lap = m.pxx + m.pyy;
  const double h0 = lap.dot(nu) / grad_sq;

  const double X = riem_q(bg.riemann, m.p, m.px, m.px) +
                   riem_q(bg.riemann, m.p, m.py, m.py);
  const double s_disp = -X / (3.0 * grad_sq) - m.p.dot(bg.ric * m.p) / 6.0;
  const double area_ratio = -X / (3.0 * grad_sq);

  // ambient-connection contribution <Gamma(dPhi,dPhi) . p-coefficient, nu>
  double gam_nu = 0.0;
  for (int g = 0; g < 3; ++g) {
    double t = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int mu = 0; mu < 3; ++mu)
          t += (bg.riemann[b][mu][a][g] + bg.riemann[a][mu][b][g]) / 3.0 *
               m.p[mu] * (m.px[a] * m.px[b] + m.py[a] * m.py[b]);
    gam_nu += t * nu[g];
  }
  const double p_term = gam_nu / grad_sq;
  return h0 * (s_disp + area_ratio) + p_term;
}

double s_coefficient(const CurvatureBackground& bg, const Vec2& z) {
  return mean_curvature_eps2_coeff(bg, jet_from_omega(omega_jet(z)));
}

double t_coefficient(const CurvatureBackground& bg, const Vec2& z) {
  const Vec3 w = omega_at(z);
  double t = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) t += bg.dric[a][b][c] * w[a] * w[b] * w[c];
  return -t / 8.0;
}

ExpansionResidual expansion_residual(const CorrectorAnsatz& ansatz, double lambda,
                                     const ChartGrid& grid) {
  const MetricJet jet(ansatz.bg, ansatz.eps);
  const DiscreteImmersion im = ansatz.immersion(grid);
  const GeometryField geom = geometry(im, jet);
  Differ diff4(grid, 4);
  const double e2 = ansatz.eps * ansatz.eps;

  ExpansionResidual out;
  for (int c = 0; c < 2; ++c) {
    ScalarField h_model(grid.size());
    ScalarField rest(grid.size());
    for (int ix = 0; ix < grid.n; ++ix)
      for (int iy = 0; iy < grid.n; ++iy) {
        const int i = grid.idx(ix, iy);
        const Vec2 z = grid.point(ix, iy);
        const MapJet2 m = ansatz.jet(static_cast<ChartId>(c), z);
        const double grad_sq = m.px.squaredNorm() + m.py.squaredNorm();
        Vec3 nu = m.px.cross(m.py);
        nu.normalize();
        if (nu.dot(m.p) > 0.0) nu = -nu;
        const double lap_nu = (m.pxx + m.pyy).dot(nu);
        const double h0 = lap_nu / grad_sq;
        // the eps^2 coefficient field is built from the same jet, so the
        // product-rule transport terms of the expansion are generated by the
        // outer Laplacian below
        h_model[i] = h0 + e2 * mean_curvature_eps2_coeff(ansatz.bg, m);
        const double ric_nn = nu.dot(ansatz.bg.ric * nu);
        const double a0_term = 0.5 * geom.charts[c].grad_sq_g[i] *
                               geom.charts[c].h[i] * geom.charts[c].a0sq[i];
        rest[i] = a0_term + 0.5 * e2 * lap_nu * ric_nn - 0.5 * lambda * lap_nu;
      }
    ScalarField lap = diff4.laplacian(h_model);
    out.charts[c].resize(grid.size());
    for (int i = 0; i < grid.size(); ++i) out.charts[c][i] = lap[i] + rest[i];
  }
  double sup = 0.0;
  for (int c = 0; c < 2; ++c)
    for (int ix = 0; ix < grid.n; ++ix)
      for (int iy = 0; iy < grid.n; ++iy) {
        const double r = grid.point(ix, iy).norm();
        if (r < 0.3 || r > 1.6) continue;
        sup = std::max(sup, std::abs(out.charts[c][grid.idx(ix, iy)]));
      }
  out.sup_annulus = sup;
  return out;
}

AnsatzConformality ansatz_conformality(const CorrectorAnsatz& ansatz,
                                       const ChartGrid& grid) {
  const MetricJet jet(ansatz.bg, ansatz.eps);
  AnsatzConformality out;
  double sup = 0.0;
  for (int c = 0; c < 2; ++c) {
    out.diag[c].resize(grid.size());
    out.cross[c].resize(grid.size());
    for (int ix = 0; ix < grid.n; ++ix)
      for (int iy = 0; iy < grid.n; ++iy) {
        const int i = grid.idx(ix, iy);
        const Vec2 z = grid.point(ix, iy);
        const MapJet2 m = ansatz.jet(static_cast<ChartId>(c), z);
        const Mat3 g = jet.metric_at(m.p);
        out.diag[c][i] = m.px.dot(g * m.px) - m.py.dot(g * m.py);
        out.cross[c][i] = m.px.dot(g * m.py);
        if (z.norm() <= 1.5)
          sup = std::max({sup, std::abs(out.diag[c][i]), std::abs(out.cross[c][i])});
      }
  }
  out.sup = sup;
  return out;
}

Vec2 linearized_conformality(const MapJet2& rho, const Vec2& z) {
  const OmegaJet oj = omega_jet(z);
  const Vec3 wx = oj.deriv(1, 0), wy = oj.deriv(0, 1);
  return {wx.dot(rho.px) - wy.dot(rho.py), wx.dot(rho.py) + wy.dot(rho.px)};
}

KernelCoefficients kernel_decompose(const MapJet2& rho, const Vec2& z) {
  const OmegaJet oj = omega_jet(z);
  const Vec3 w = oj.value(), wx = oj.deriv(1, 0), wy = oj.deriv(0, 1);
  const double e2u = wx.squaredNorm();
  KernelCoefficients k;
  const double a1 = rho.px.dot(wx) / e2u;
  const double b1 = rho.px.dot(wy) / e2u;
  const double a2 = rho.py.dot(wy) / e2u;
  const double b2 = -rho.py.dot(wx) / e2u;
  k.a = a1;
  k.b = b1;
  k.c = rho.px.dot(w);
  k.d = rho.py.dot(w);
  k.a_consistency = std::abs(a1 - a2);
  k.b_consistency = std::abs(b1 - b2);
  return k;
}

KernelFields kernel_decompose_grid(const ChartGrid& grid, const VectorField& rho,
                                   double mask_radius) {
  Differ diff(grid, 4);
  KernelFields out;
  const int sz = grid.size();
  out.a.assign(sz, 0.0);
  out.b.assign(sz, 0.0);
  out.c.assign(sz, 0.0);
  out.d.assign(sz, 0.0);
  ScalarField comp[3];
  for (int k = 0; k < 3; ++k) {
    comp[k].resize(sz);
    for (int i = 0; i < sz; ++i) comp[k][i] = rho[i][k];
  }
  ScalarField dx[3], dy[3];
  for (int k = 0; k < 3; ++k) {
    diff.dx(comp[k], dx[k]);
    diff.dy(comp[k], dy[k]);
  }
  double consistency = 0.0;
  for (int ix = 0; ix < grid.n; ++ix)
    for (int iy = 0; iy < grid.n; ++iy) {
      const int i = grid.idx(ix, iy);
      const Vec2 z = grid.point(ix, iy);
      const OmegaJet oj = omega_jet(z);
      const Vec3 w = oj.value(), wx = oj.deriv(1, 0), wy = oj.deriv(0, 1);
      const double e2u = wx.squaredNorm();
      const Vec3 rx(dx[0][i], dx[1][i], dx[2][i]);
      const Vec3 ry(dy[0][i], dy[1][i], dy[2][i]);
      out.a[i] = rx.dot(wx) / e2u;
      out.b[i] = rx.dot(wy) / e2u;
      out.c[i] = rx.dot(w);
      out.d[i] = ry.dot(w);
      if (z.norm() <= mask_radius) {
        consistency = std::max({consistency,
                                std::abs(out.a[i] - ry.dot(wy) / e2u),
                                std::abs(out.b[i] + ry.dot(wx) / e2u)});
      }
    }
  out.consistency = consistency;
  ScalarField ay = diff.dy(out.a), bx = diff.dx(out.b);
  ScalarField by = diff.dy(out.b), ax = diff.dx(out.a);
  out.de1.resize(sz);
  out.de2.resize(sz);
  for (int i = 0; i < sz; ++i) {
    out.de1[i] = ay[i] + bx[i] - out.d[i];
    out.de2[i] = by[i] - ax[i] + out.c[i];
  }
  return out;
}

}  // namespace wlab
