#pragma once

#include "wlab/tensors.hpp"

#include <vector>

namespace wlab {

// Uniform n x n grid over [-L, L]^2 covering the stereographic disk |z| <= L.
// Node (ix, iy) sits at (coord(ix), coord(iy)); fields are stored row-major
// with index ix * n + iy.
struct ChartGrid {
  int n = 0;
  double half_width = 2.0;
  double h = 0.0;

  ChartGrid() = default;
  ChartGrid(int n_, double half_width_ = 2.0)
      : n(n_), half_width(half_width_), h(2.0 * half_width_ / (n_ - 1)) {}

  double coord(int i) const { return -half_width + h * i; }
  int idx(int ix, int iy) const { return ix * n + iy; }
  Vec2 point(int ix, int iy) const { return {coord(ix), coord(iy)}; }
  int size() const { return n * n; }

  bool operator==(const ChartGrid& o) const {
    return n == o.n && half_width == o.half_width;
  }
};

using ScalarField = std::vector<double>;
using VectorField = std::vector<Vec3>;

// Finite-difference weights for the m-th derivative on arbitrary node offsets
// (Fornberg's algorithm), exact for polynomials up to degree offsets.size()-1.
std::vector<double> fd_weights(int m, const std::vector<double>& offsets);

// High-order differentiation on a ChartGrid: centered stencils in the
// interior, skewed near the edges so every node has a value. order is the
// formal accuracy (4 or 6).
class Differ {
 public:
  explicit Differ(const ChartGrid& grid, int order = 6);

  void dx(const ScalarField& f, ScalarField& out) const;
  void dy(const ScalarField& f, ScalarField& out) const;
  void dxx(const ScalarField& f, ScalarField& out) const;
  void dyy(const ScalarField& f, ScalarField& out) const;
  ScalarField dx(const ScalarField& f) const;
  ScalarField dy(const ScalarField& f) const;
  ScalarField dxx(const ScalarField& f) const;
  ScalarField dyy(const ScalarField& f) const;
  // flat 2D Laplacian
  ScalarField laplacian(const ScalarField& f) const;

  const ChartGrid& grid() const { return grid_; }

 private:
  struct Row {
    int start;                    // first node of the stencil
    std::vector<double> w;
  };
  ChartGrid grid_;
  int order_ = 6;
  std::vector<Row> d1_, d2_;      // per node position along one axis

  static std::vector<Row> make_rows(const ChartGrid& g, int m, int order);

  void apply_x(const std::vector<Row>& rows, const ScalarField& f,
               ScalarField& out) const;
  void apply_y(const std::vector<Row>& rows, const ScalarField& f,
               ScalarField& out) const;
};

// Smooth chart weight: 1 for r <= 3/4, 0 for r >= 3/2, C^inf monotone bump
// in between. The south-chart weight of the same surface point is
// 1 - chart_weight(1/r_south), so the two weights form an exact partition of
// unity on the overlap.
double chart_weight(double r);
double south_weight(double r_south);

}  // namespace wlab
