#include "wlab/geometry.hpp"

#include "wlab/errors.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace wlab {

namespace {

void component_fields(const VectorField& v, ScalarField out[3]) {
  const size_t n = v.size();
  for (int c = 0; c < 3; ++c) out[c].resize(n);
  for (size_t i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) out[c][i] = v[i][c];
}

VectorField assemble(const ScalarField f[3]) {
  VectorField v(f[0].size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = Vec3(f[0][i], f[1][i], f[2][i]);
  return v;
}

VectorField diff_vec(const Differ& d, const VectorField& v,
                     void (Differ::*op)(const ScalarField&, ScalarField&) const) {
  ScalarField comp[3], out[3];
  component_fields(v, comp);
  for (int c = 0; c < 3; ++c) (d.*op)(comp[c], out[c]);
  return assemble(out);
}

double chart_point_weight(int c, const Vec2& z) {
  const double r = z.norm();
  return c == chart_north ? chart_weight(r) : south_weight(r);
}

}  // namespace

GeometryField geometry(const DiscreteImmersion& im, const MetricJet& jet) {
  const ChartGrid& grid = im.grid();
  Differ diff(grid);
  GeometryField geom;

  // approximate centroid for the inward-orientation test
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& p : im.chart(0)) centroid += p;
  centroid /= static_cast<double>(im.chart(0).size());

  for (int c = 0; c < 2; ++c) {
    ChartGeometry& cg = geom.charts[c];
    const VectorField& phi = im.chart(c);
    cg.phi_x = diff_vec(diff, phi, &Differ::dx);
    cg.phi_y = diff_vec(diff, phi, &Differ::dy);
    cg.phi_xx = diff_vec(diff, phi, &Differ::dxx);
    cg.phi_yy = diff_vec(diff, phi, &Differ::dyy);
    cg.phi_xy = diff_vec(diff, cg.phi_x, &Differ::dy);

    const int sz = grid.size();
    cg.gbar.resize(sz);
    cg.nu.resize(sz);
    cg.a.resize(sz);
    cg.h.resize(sz);
    cg.a0sq.resize(sz);
    cg.dvol.resize(sz);
    cg.grad_sq_g.resize(sz);
    cg.weight.resize(sz);

    // fix the inward orientation once per chart, at the chart origin cell
    {
      const int mid = grid.n / 2;
      const int i0 = grid.idx(mid, mid);
      const Vec3 cr = cg.phi_x[i0].cross(cg.phi_y[i0]);
      const double test = cr.dot(centroid - phi[i0]);
      const double scale = cr.norm() * (centroid - phi[i0]).norm();
      if (std::abs(test) < 1e-10 * (scale + 1e-300))
        throw NormalOrientationError(
            "cannot orient normal: center of mass lies on the tangent plane");
      cg.orientation_sign = test > 0.0 ? 1.0 : -1.0;
    }

    for (int ix = 0; ix < grid.n; ++ix)
      for (int iy = 0; iy < grid.n; ++iy) {
        const int i = grid.idx(ix, iy);
        const Vec2 z = grid.point(ix, iy);
        cg.weight[i] = chart_point_weight(c, z);

        const Vec3& p = phi[i];
        const Mat3 g = jet.metric_at(p);
        const Ten3 gam = jet.christoffel_at(p);
        const Vec3& px = cg.phi_x[i];
        const Vec3& py = cg.phi_y[i];

        Mat2 gb;
        gb(0, 0) = px.dot(g * px);
        gb(0, 1) = gb(1, 0) = px.dot(g * py);
        gb(1, 1) = py.dot(g * py);
        const double det = gb(0, 0) * gb(1, 1) - gb(0, 1) * gb(0, 1);
        if (!(det > 0.0) || !(gb(0, 0) > 0.0))
          throw ImmersionDegeneracyError("degenerate first fundamental form", c,
                                         ix, iy);
        cg.gbar[i] = gb;
        cg.dvol[i] = std::sqrt(det);
        cg.grad_sq_g[i] = gb(0, 0) + gb(1, 1);

        const Vec3 cr = px.cross(py);
        const Vec3 n_raw = cg.orientation_sign * g.llt().solve(cr);
        const double nn = n_raw.dot(g * n_raw);
        const Vec3 nu = n_raw / std::sqrt(nn);
        cg.nu[i] = nu;
        const Vec3 gnu = g * nu;

        auto gamma_vec = [&](const Vec3& u, const Vec3& v) {
          Vec3 out;
          for (int gidx = 0; gidx < 3; ++gidx) {
            double t = 0.0;
            for (int aa = 0; aa < 3; ++aa)
              for (int bb = 0; bb < 3; ++bb) t += gam[gidx][aa][bb] * u[aa] * v[bb];
            out[gidx] = t;
          }
          return out;
        };

        Mat2 A;
        A(0, 0) = (cg.phi_xx[i] + gamma_vec(px, px)).dot(gnu);
        A(0, 1) = A(1, 0) = (cg.phi_xy[i] + gamma_vec(px, py)).dot(gnu);
        A(1, 1) = (cg.phi_yy[i] + gamma_vec(py, py)).dot(gnu);
        cg.a[i] = A;

        Mat2 gbi;
        gbi << gb(1, 1), -gb(0, 1), -gb(0, 1), gb(0, 0);
        gbi /= det;
        const double H = 0.5 * (gbi * A).trace();
        cg.h[i] = H;
        const Mat2 A0 = A - H * gb;
        const Mat2 mixed = gbi * A0;          // A0 with one index raised
        cg.a0sq[i] = (mixed * mixed).trace(); // gbar^{ik} gbar^{jl} A0_ij A0_kl
      }
  }
  return geom;
}

double integrate(const ChartGrid& grid, const GeometryField& geom,
                 const std::function<double(int, int)>& fn) {
  const double cell = grid.h * grid.h;
  double total = 0.0;
  for (int c = 0; c < 2; ++c) {
    const ChartGeometry& cg = geom.charts[c];
    double acc = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
      const double w = cg.weight[i];
      if (w == 0.0) continue;
      acc += w * cg.dvol[i] * fn(c, i);
    }
    total += acc * cell;
  }
  return total;
}

double willmore_energy(const ChartGrid& grid, const GeometryField& geom) {
  return integrate(grid, geom, [&](int c, int i) {
    const double h = geom.charts[c].h[i];
    return h * h;
  });
}

double willmore_energy(const DiscreteImmersion& im, const MetricJet& jet) {
  const GeometryField geom = geometry(im, jet);
  return willmore_energy(im.grid(), geom);
}

double area(const ChartGrid& grid, const GeometryField& geom) {
  return integrate(grid, geom, [](int, int) { return 1.0; });
}

double area(const DiscreteImmersion& im, const MetricJet& jet) {
  const GeometryField geom = geometry(im, jet);
  return area(im.grid(), geom);
}

Vec3 center_of_mass(const ChartGrid& grid, const GeometryField& geom,
                    const DiscreteImmersion& im) {
  const double A = area(grid, geom);
  Vec3 com;
  for (int k = 0; k < 3; ++k)
    com[k] = integrate(grid, geom,
                       [&](int c, int i) { return im.chart(c)[i][k]; }) / A;
  return com;
}

Vec3 center_of_mass(const DiscreteImmersion& im, const MetricJet& jet) {
  const GeometryField geom = geometry(im, jet);
  return center_of_mass(im.grid(), geom, im);
}

double diameter(const DiscreteImmersion& im) {
  const ChartGrid& grid = im.grid();
  // coarse pass on a decimated cloud, then local refinement around the argmax
  std::vector<Vec3> cloud;
  std::vector<std::pair<int, int>> tag;  // chart, idx
  const int stride = std::max(1, grid.n / 48);
  for (int c = 0; c < 2; ++c)
    for (int ix = 0; ix < grid.n; ix += stride)
      for (int iy = 0; iy < grid.n; iy += stride) {
        const Vec2 z = grid.point(ix, iy);
        if (chart_point_weight(c, z) <= 0.0) continue;
        cloud.push_back(im.chart(c)[grid.idx(ix, iy)]);
        tag.emplace_back(c, grid.idx(ix, iy));
      }
  double best = 0.0;
  std::pair<size_t, size_t> arg{0, 0};
  for (size_t i = 0; i < cloud.size(); ++i)
    for (size_t j = i + 1; j < cloud.size(); ++j) {
      const double d = (cloud[i] - cloud[j]).squaredNorm();
      if (d > best) {
        best = d;
        arg = {i, j};
      }
    }
  auto neighborhood = [&](size_t k) {
    std::vector<Vec3> out;
    const int c = tag[k].first;
    const int ix = tag[k].second / grid.n, iy = tag[k].second % grid.n;
    for (int a = std::max(0, ix - stride); a <= std::min(grid.n - 1, ix + stride); ++a)
      for (int b = std::max(0, iy - stride); b <= std::min(grid.n - 1, iy + stride); ++b) {
        if (chart_point_weight(c, grid.point(a, b)) <= 0.0) continue;
        out.push_back(im.chart(c)[grid.idx(a, b)]);
      }
    return out;
  };
  const auto na = neighborhood(arg.first);
  const auto nb = neighborhood(arg.second);
  for (const Vec3& p : na)
    for (const Vec3& q : nb) best = std::max(best, (p - q).squaredNorm());
  return std::sqrt(best);
}

SimonBounds simon_bounds_check(const DiscreteImmersion& im, const MetricJet& jet) {
  SimonBounds out;
  try {
    const GeometryField geom = geometry(im, jet);
    out.willmore = willmore_energy(im.grid(), geom);
    out.area = area(im.grid(), geom);
  } catch (const Error& e) {
    out.degenerate = true;
    out.note = e.what();
  }
  out.diameter = diameter(im);
  for (int c = 0; c < 2; ++c)
    for (const Vec3& p : im.chart(c))
      out.max_radius = std::max(out.max_radius, p.norm());
  if (!out.degenerate && out.willmore > 0.0) {
    out.sqrt_area_over_w = std::sqrt(out.area / out.willmore);
    out.lower_bound_holds = out.sqrt_area_over_w <= out.diameter * (1.0 + 1e-8);
  }
  return out;
}

ScalarField laplace_beltrami(const Differ& diff, const ChartGeometry& cg,
                             const ScalarField& f, LaplaceMode mode) {
  if (mode == LaplaceMode::conformal) {
    ScalarField out = diff.laplacian(f);
    for (size_t i = 0; i < out.size(); ++i) out[i] *= 2.0 / cg.grad_sq_g[i];
    return out;
  }
  ScalarField fx = diff.dx(f), fy = diff.dy(f);
  const size_t n = f.size();
  ScalarField F1(n), F2(n);
  for (size_t i = 0; i < n; ++i) {
    const Mat2& gb = cg.gbar[i];
    const double det = gb(0, 0) * gb(1, 1) - gb(0, 1) * gb(0, 1);
    const double sq = std::sqrt(det);
    const double gxx = gb(1, 1) / det, gxy = -gb(0, 1) / det, gyy = gb(0, 0) / det;
    F1[i] = sq * (gxx * fx[i] + gxy * fy[i]);
    F2[i] = sq * (gxy * fx[i] + gyy * fy[i]);
  }
  ScalarField out = diff.dx(F1), t = diff.dy(F2);
  for (size_t i = 0; i < n; ++i) out[i] = (out[i] + t[i]) / cg.dvol[i];
  return out;
}

ConformalityDefect conformality_defect(const DiscreteImmersion& im,
                                       const MetricJet& jet) {
  const ChartGrid& grid = im.grid();
  Differ diff(grid);
  ConformalityDefect out;
  double sup = 0.0, mean = 0.0;
  int count = 0;
  for (int c = 0; c < 2; ++c) {
    const VectorField& phi = im.chart(c);
    VectorField px = diff_vec(diff, phi, &Differ::dx);
    VectorField py = diff_vec(diff, phi, &Differ::dy);
    out.diag[c].resize(grid.size());
    out.cross[c].resize(grid.size());
    for (int ix = 0; ix < grid.n; ++ix)
      for (int iy = 0; iy < grid.n; ++iy) {
        const int i = grid.idx(ix, iy);
        const Mat3 g = jet.metric_at(phi[i]);
        const double dxx = px[i].dot(g * px[i]);
        const double dyy = py[i].dot(g * py[i]);
        const double dxy = px[i].dot(g * py[i]);
        out.diag[c][i] = dxx - dyy;
        out.cross[c][i] = dxy;
        const Vec2 z = grid.point(ix, iy);
        if (chart_point_weight(c, z) > 0.0) {
          sup = std::max({sup, std::abs(out.diag[c][i]), std::abs(out.cross[c][i])});
          mean += dxx + dyy;
          ++count;
        }
      }
  }
  out.sup = sup;
  out.mean_grad_sq = count ? mean / count : 0.0;
  return out;
}

}  // namespace wlab
