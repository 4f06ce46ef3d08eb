#pragma once

#include "wlab/grid.hpp"
#include "wlab/tensors.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <string>

namespace wlab {

// Chart 0 ("north") is the inverse stereographic projection from the north
// pole (chart origin = south pole); chart 1 ("south") the mirrored chart
// (origin = north pole). The transition map between chart coordinates is the
// inversion z -> z/|z|^2, and the reference round sphere satisfies
//   Phi_south(w) = diag(1,1,-1) Phi_north(w).
enum ChartId { chart_north = 0, chart_south = 1 };

Vec2 chart_transition(const Vec2& z);
// reference unit-sphere point seen from a chart
Vec3 chart_sphere_point(ChartId c, const Vec2& z);

// A map S^2 -> R^3 sampled on the two chart grids with partition-of-unity
// blending on the overlap annulus.
class DiscreteImmersion {
 public:
  DiscreteImmersion() = default;
  DiscreteImmersion(const ChartGrid& grid, VectorField north, VectorField south);

  // Samples a smooth map given per chart: fn(chart, z) -> R^3. The function
  // must describe the same surface point at corresponding coordinates.
  static DiscreteImmersion from_chart_maps(
      const ChartGrid& grid, const std::function<Vec3(ChartId, const Vec2&)>& fn);
  static DiscreteImmersion round_sphere(const ChartGrid& grid, const Vec3& center,
                                        double radius);
  // radial graph r(p) over the unit sphere: surface point = center + r(p) p
  static DiscreteImmersion graph_sphere(const ChartGrid& grid,
                                        const std::function<double(const Vec3&)>& radial,
                                        const Vec3& center = Vec3::Zero());

  const ChartGrid& grid() const { return grid_; }
  const VectorField& chart(int c) const { return charts_[c]; }
  VectorField& chart(int c) { return charts_[c]; }
  int n() const { return grid_.n; }

  bool in_chart(const Vec2& z) const;
  // Quintic Lagrange interpolation of the chart field at z (chart local).
  Vec3 interpolate(int c, const Vec2& z) const;
  // Value of the surface map at chart coordinate z of chart c, delegating to
  // the other chart through the transition when z is outside this one.
  Vec3 sample(int c, const Vec2& z) const;

  // Max over a probe ring of |Phi_north(z) - M Phi_south(z/|z|^2)|.
  double chart_consistency_defect() const;
  // Weighted overlap re-blend; keeps the two charts describing one surface.
  void reblend();

  // Columnar snapshot: header (n, half_width, blend window), then one row per
  // grid point: chart ix iy x y P1 P2 P3, printed with enough digits that the
  // round trip is bit exact.
  void save(std::ostream& out) const;
  void save(const std::string& path) const;
  static DiscreteImmersion load(std::istream& in);
  static DiscreteImmersion load(const std::string& path);

 private:
  ChartGrid grid_;
  std::array<VectorField, 2> charts_;
};

}  // namespace wlab
