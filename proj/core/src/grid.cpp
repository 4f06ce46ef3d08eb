#include "wlab/grid.hpp"

#include "wlab/errors.hpp"

#include <cmath>

namespace wlab {

std::vector<double> fd_weights(int m, const std::vector<double>& offsets) {
  // Fornberg (1988), weights of the m-th derivative at x = 0.
  const int nd = static_cast<int>(offsets.size());
  std::vector<std::vector<double>> C(nd, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = offsets[0];
  C[0][0] = 1.0;
  for (int i = 1; i < nd; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = offsets[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = offsets[i] - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          C[i][k] = c1 * (k * C[i - 1][k - 1] - c5 * C[i - 1][k]) / c2;
        C[i][0] = -c1 * c5 * C[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        C[j][k] = (c4 * C[j][k] - k * C[j][k - 1]) / c3;
      C[j][0] = c4 * C[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(nd);
  for (int i = 0; i < nd; ++i) w[i] = C[i][m];
  return w;
}

std::vector<Differ::Row> Differ::make_rows(const ChartGrid& g, int m, int order) {
  const int n = g.n;
  const int half = order / 2;            // centered radius
  const int cpts = order + 1;            // centered stencil size
  const int pts = order + m;             // one-sided size for the same order
  std::vector<Row> rows(n);
  for (int i = 0; i < n; ++i) {
    int start;
    int np;
    if (i >= half && i <= n - 1 - half) {
      start = i - half;
      np = cpts;
    } else {
      np = pts;
      start = std::min(std::max(i - half, 0), n - np);
    }
    std::vector<double> off(np);
    for (int k = 0; k < np; ++k) off[k] = (start + k - i) * g.h;
    rows[i].start = start;
    rows[i].w = fd_weights(m, off);
  }
  return rows;
}

Differ::Differ(const ChartGrid& grid, int order) : grid_(grid), order_(order) {
  if (order != 4 && order != 6)
    throw ValidationError("stencil order must be 4 or 6");
  if (grid.n < 2 * order) throw ValidationError("grid too small for the stencil order");
  d1_ = make_rows(grid, 1, order);
  d2_ = make_rows(grid, 2, order);
}

void Differ::apply_x(const std::vector<Row>& rows, const ScalarField& f,
                     ScalarField& out) const {
  const int n = grid_.n;
  out.assign(grid_.size(), 0.0);
  for (int ix = 0; ix < n; ++ix) {
    const Row& r = rows[ix];
    for (int iy = 0; iy < n; ++iy) {
      double acc = 0.0;
      for (size_t k = 0; k < r.w.size(); ++k)
        acc += r.w[k] * f[grid_.idx(r.start + static_cast<int>(k), iy)];
      out[grid_.idx(ix, iy)] = acc;
    }
  }
}

void Differ::apply_y(const std::vector<Row>& rows, const ScalarField& f,
                     ScalarField& out) const {
  const int n = grid_.n;
  out.assign(grid_.size(), 0.0);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy) {
      const Row& r = rows[iy];
      double acc = 0.0;
      const double* base = f.data() + grid_.idx(ix, r.start);
      for (size_t k = 0; k < r.w.size(); ++k) acc += r.w[k] * base[k];
      out[grid_.idx(ix, iy)] = acc;
    }
}

void Differ::dx(const ScalarField& f, ScalarField& out) const { apply_x(d1_, f, out); }
void Differ::dy(const ScalarField& f, ScalarField& out) const { apply_y(d1_, f, out); }
void Differ::dxx(const ScalarField& f, ScalarField& out) const { apply_x(d2_, f, out); }
void Differ::dyy(const ScalarField& f, ScalarField& out) const { apply_y(d2_, f, out); }

ScalarField Differ::dx(const ScalarField& f) const { ScalarField o; dx(f, o); return o; }
ScalarField Differ::dy(const ScalarField& f) const { ScalarField o; dy(f, o); return o; }
ScalarField Differ::dxx(const ScalarField& f) const { ScalarField o; dxx(f, o); return o; }
ScalarField Differ::dyy(const ScalarField& f) const { ScalarField o; dyy(f, o); return o; }

ScalarField Differ::laplacian(const ScalarField& f) const {
  ScalarField a = dxx(f), b = dyy(f);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

namespace {

double bump01(double t) {
  // C^inf monotone step on [0,1]
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

}  // namespace

double chart_weight(double r) {
  constexpr double r0 = 0.75, r1 = 1.5;
  return 1.0 - bump01((r - r0) / (r1 - r0));
}

double south_weight(double r_south) {
  if (r_south < 1e-14) return 1.0;
  return 1.0 - chart_weight(1.0 / r_south);
}

}  // namespace wlab
