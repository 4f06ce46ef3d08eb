#include "wlab/round_sphere.hpp"

#include <cmath>

namespace wlab {

namespace {
double fact(int k) {
  static const double f[5] = {1, 1, 2, 6, 24};
  return f[k];
}
}  // namespace

Jet4 Jet4::constant(double v) {
  Jet4 j;
  j.c[0][0] = v;
  return j;
}

Jet4 Jet4::var_x(double x0) {
  Jet4 j;
  j.c[0][0] = x0;
  j.c[1][0] = 1.0;
  return j;
}

Jet4 Jet4::var_y(double y0) {
  Jet4 j;
  j.c[0][0] = y0;
  j.c[0][1] = 1.0;
  return j;
}

double Jet4::deriv(int i, int j) const { return c[i][j] * fact(i) * fact(j); }

Jet4 Jet4::operator+(const Jet4& o) const {
  Jet4 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5 - i; ++j) r.c[i][j] = c[i][j] + o.c[i][j];
  return r;
}

Jet4 Jet4::operator-(const Jet4& o) const {
  Jet4 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5 - i; ++j) r.c[i][j] = c[i][j] - o.c[i][j];
  return r;
}

Jet4 Jet4::operator*(const Jet4& o) const {
  Jet4 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j + i < 5; ++j) {
      if (c[i][j] == 0.0) continue;
      for (int k = 0; i + j + k < 5; ++k)
        for (int l = 0; i + j + k + l < 5; ++l)
          r.c[i + k][j + l] += c[i][j] * o.c[k][l];
    }
  return r;
}

Jet4 Jet4::operator*(double s) const {
  Jet4 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5 - i; ++j) r.c[i][j] = c[i][j] * s;
  return r;
}

Jet4 Jet4::recip() const {
  // 1/F = (1/a) sum_k (-(F-a)/a)^k, a = F(0), truncated at degree 4
  const double a = c[0][0];
  Jet4 u = *this;
  u.c[0][0] = 0.0;
  u = u * (-1.0 / a);
  Jet4 r = Jet4::constant(1.0);
  Jet4 p = Jet4::constant(1.0);
  for (int k = 1; k <= 4; ++k) {
    p = p * u;
    r = r + p;
  }
  return r * (1.0 / a);
}

OmegaJet omega_jet(const Vec2& z) {
  Jet4 X = Jet4::var_x(z[0]);
  Jet4 Y = Jet4::var_y(z[1]);
  Jet4 R2 = X * X + Y * Y;
  Jet4 invS = (R2 + Jet4::constant(1.0)).recip();
  OmegaJet o;
  o.w[0] = X * 2.0 * invS;
  o.w[1] = Y * 2.0 * invS;
  o.w[2] = (R2 - Jet4::constant(1.0)) * invS;
  return o;
}

Vec3 OmegaJet::value() const { return {w[0].value(), w[1].value(), w[2].value()}; }

Vec3 OmegaJet::deriv(int i, int j) const {
  return {w[0].deriv(i, j), w[1].deriv(i, j), w[2].deriv(i, j)};
}

Vec3 omega_at(const Vec2& z) {
  const double r2 = z.squaredNorm();
  const double s = 1.0 + r2;
  return {2.0 * z[0] / s, 2.0 * z[1] / s, (r2 - 1.0) / s};
}

double omega_grad_sq(const Vec2& z) {
  const double s = 1.0 + z.squaredNorm();
  return 8.0 / (s * s);
}

std::array<double, 3> psi_basis(const Vec2& z) {
  const double r2 = z.squaredNorm();
  const double s = 1.0 + r2;
  return {(1.0 - r2) / s, z[0] / s, z[1] / s};
}

namespace {
constexpr double kSeriesCut = 1e-8;  // in u = r^2
}

double f_profile(double r) {
  const double u = r * r;
  if (u < kSeriesCut) {
    if (u == 0.0) return -1.0;
    const double lu = std::log(u);
    return -1.0 + u * lu - u * u * lu - 0.5 * u * u;
  }
  const double lu = std::log(u / (1.0 + u));
  return (u * lu - 1.0 - std::log(1.0 + u)) / (1.0 + u);
}

double f_profile_du(double u) {
  if (u < kSeriesCut) {
    const double lu = std::log(u);
    return lu + 1.0 - 2.0 * u * lu - 2.0 * u;
  }
  const double D = 1.0 + u;
  const double Np = std::log(u / D);
  const double f = (u * Np - 1.0 - std::log(D)) / D;
  return (Np - f) / D;
}

double f_profile_duu(double u) {
  if (u < kSeriesCut) return 1.0 / u - 2.0 * std::log(u) - 4.0;
  const double D = 1.0 + u;
  const double Npp = 1.0 / (u * D);
  return (Npp - 2.0 * f_profile_du(u)) / D;
}

std::array<double, 6> f_profile_jet2(const Vec2& z) {
  const double x = z[0], y = z[1];
  const double u = x * x + y * y;
  const double f = f_profile(std::sqrt(u));
  const double fu = f_profile_du(u);
  const double fuu = f_profile_duu(u);
  // chain rule for g(x,y) = f(u), u = x^2 + y^2
  return {f,
          fu * 2.0 * x,
          fu * 2.0 * y,
          fuu * 4.0 * x * x + 2.0 * fu,
          fuu * 4.0 * x * y,
          fuu * 4.0 * y * y + 2.0 * fu};
}

}  // namespace wlab
