#include "wlab/immersion.hpp"

#include "wlab/errors.hpp"
#include "wlab/round_sphere.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wlab {

Vec2 chart_transition(const Vec2& z) {
  const double r2 = z.squaredNorm();
  return z / r2;
}

Vec3 chart_sphere_point(ChartId c, const Vec2& z) {
  Vec3 p = omega_at(z);
  if (c == chart_south) p[2] = -p[2];
  return p;
}

DiscreteImmersion::DiscreteImmersion(const ChartGrid& grid, VectorField north,
                                     VectorField south)
    : grid_(grid), charts_{std::move(north), std::move(south)} {
  if (charts_[0].size() != static_cast<size_t>(grid.size()) ||
      charts_[1].size() != static_cast<size_t>(grid.size()))
    throw ValidationError("chart field size does not match grid");
}

DiscreteImmersion DiscreteImmersion::from_chart_maps(
    const ChartGrid& grid, const std::function<Vec3(ChartId, const Vec2&)>& fn) {
  VectorField n(grid.size()), s(grid.size());
  for (int ix = 0; ix < grid.n; ++ix)
    for (int iy = 0; iy < grid.n; ++iy) {
      const Vec2 z = grid.point(ix, iy);
      n[grid.idx(ix, iy)] = fn(chart_north, z);
      s[grid.idx(ix, iy)] = fn(chart_south, z);
    }
  return DiscreteImmersion(grid, std::move(n), std::move(s));
}

DiscreteImmersion DiscreteImmersion::round_sphere(const ChartGrid& grid,
                                                  const Vec3& center, double radius) {
  return from_chart_maps(grid, [&](ChartId c, const Vec2& z) {
    return center + radius * chart_sphere_point(c, z);
  });
}

DiscreteImmersion DiscreteImmersion::graph_sphere(
    const ChartGrid& grid, const std::function<double(const Vec3&)>& radial,
    const Vec3& center) {
  return from_chart_maps(grid, [&](ChartId c, const Vec2& z) {
    const Vec3 p = chart_sphere_point(c, z);
    return center + radial(p) * p;
  });
}

bool DiscreteImmersion::in_chart(const Vec2& z) const {
  const double lim = grid_.half_width;
  return std::abs(z[0]) <= lim && std::abs(z[1]) <= lim;
}

Vec3 DiscreteImmersion::interpolate(int c, const Vec2& z) const {
  // 6x6 Lagrange stencil (quintic), error O(h^6)
  const int n = grid_.n;
  const double h = grid_.h;
  const double gx = (z[0] + grid_.half_width) / h;
  const double gy = (z[1] + grid_.half_width) / h;
  int ix0 = static_cast<int>(std::floor(gx)) - 2;
  int iy0 = static_cast<int>(std::floor(gy)) - 2;
  ix0 = std::clamp(ix0, 0, n - 6);
  iy0 = std::clamp(iy0, 0, n - 6);
  double wx[6], wy[6];
  for (int k = 0; k < 6; ++k) {
    wx[k] = 1.0;
    wy[k] = 1.0;
    for (int m = 0; m < 6; ++m) {
      if (m == k) continue;
      wx[k] *= (gx - (ix0 + m)) / static_cast<double>(k - m);
      wy[k] *= (gy - (iy0 + m)) / static_cast<double>(k - m);
    }
  }
  Vec3 acc = Vec3::Zero();
  for (int a = 0; a < 6; ++a) {
    Vec3 row = Vec3::Zero();
    const Vec3* base = charts_[c].data() + grid_.idx(ix0 + a, iy0);
    for (int b = 0; b < 6; ++b) row += wy[b] * base[b];
    acc += wx[a] * row;
  }
  return acc;
}

Vec3 DiscreteImmersion::sample(int c, const Vec2& z) const {
  if (in_chart(z) && z.norm() <= 1.25) return interpolate(c, z);
  return interpolate(1 - c, chart_transition(z));
}

double DiscreteImmersion::chart_consistency_defect() const {
  double worst = 0.0;
  const int m = 64;
  for (int k = 0; k < m; ++k) {
    const double th = 2.0 * M_PI * k / m;
    for (double r : {0.8, 1.0, 1.25}) {
      const Vec2 z(r * std::cos(th), r * std::sin(th));
      const Vec3 a = interpolate(chart_north, z);
      const Vec3 b = interpolate(chart_south, chart_transition(z));
      worst = std::max(worst, (a - b).norm());
    }
  }
  return worst;
}

void DiscreteImmersion::reblend() {
  const int n = grid_.n;
  std::array<VectorField, 2> fresh = charts_;
  for (int c = 0; c < 2; ++c) {
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy) {
        const Vec2 z = grid_.point(ix, iy);
        const double r = z.norm();
        if (r <= 0.8 || r >= 1.3) continue;  // keep pure-chart regions
        const double wn = chart_weight(r);
        const double w_own = (c == chart_north) ? wn : 1.0 - chart_weight(1.0 / r);
        const Vec3 own = charts_[c][grid_.idx(ix, iy)];
        const Vec3 other = interpolate(1 - c, chart_transition(z));
        fresh[c][grid_.idx(ix, iy)] = w_own * own + (1.0 - w_own) * other;
      }
  }
  charts_ = fresh;
}

void DiscreteImmersion::save(std::ostream& out) const {
  char buf[256];
  out << "# immersion snapshot\n";
  std::snprintf(buf, sizeof buf, "n %d half_width %.17g blend %.17g %.17g\n",
                grid_.n, grid_.half_width, 0.75, 1.5);
  out << buf;
  for (int c = 0; c < 2; ++c)
    for (int ix = 0; ix < grid_.n; ++ix)
      for (int iy = 0; iy < grid_.n; ++iy) {
        const Vec2 z = grid_.point(ix, iy);
        const Vec3& p = charts_[c][grid_.idx(ix, iy)];
        std::snprintf(buf, sizeof buf,
                      "%d %d %d %.17g %.17g %.17g %.17g %.17g\n", c, ix, iy,
                      z[0], z[1], p[0], p[1], p[2]);
        out << buf;
      }
}

void DiscreteImmersion::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  save(out);
}

DiscreteImmersion DiscreteImmersion::load(std::istream& in) {
  std::string line;
  int n = 0;
  double half_width = 0.0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream hs(line);
    std::string k1, k2, k3;
    double b0, b1;
    if (!(hs >> k1 >> n >> k2 >> half_width >> k3 >> b0 >> b1) || k1 != "n")
      throw ValidationError("bad snapshot header: " + line);
    break;
  }
  if (n < 8) throw ValidationError("bad snapshot grid size");
  ChartGrid grid(n, half_width);
  std::array<VectorField, 2> charts{VectorField(grid.size(), Vec3::Zero()),
                                    VectorField(grid.size(), Vec3::Zero())};
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int c, ix, iy;
    double x, y, p0, p1, p2;
    if (!(ls >> c >> ix >> iy >> x >> y >> p0 >> p1 >> p2))
      throw ValidationError("bad snapshot row: " + line);
    charts[c][grid.idx(ix, iy)] = Vec3(p0, p1, p2);
  }
  return DiscreteImmersion(grid, std::move(charts[0]), std::move(charts[1]));
}

DiscreteImmersion DiscreteImmersion::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  return load(in);
}

}  // namespace wlab
