#pragma once

#include "wlab/tensors.hpp"

#include <array>

namespace wlab {

// Bivariate Taylor polynomial of total degree <= 4 about a base point.
// Coefficients are scaled Taylor coefficients c[i][j] = (d_x^i d_y^j F)/(i! j!),
// so products are truncated convolutions and all derivative extraction is
// exact to roundoff.
struct Jet4 {
  double c[5][5] = {};

  static Jet4 constant(double v);
  static Jet4 var_x(double x0);
  static Jet4 var_y(double y0);

  double value() const { return c[0][0]; }
  // d_x^i d_y^j F
  double deriv(int i, int j) const;

  Jet4 operator+(const Jet4& o) const;
  Jet4 operator-(const Jet4& o) const;
  Jet4 operator*(const Jet4& o) const;
  Jet4 operator*(double s) const;
  Jet4 operator-() const { return *this * -1.0; }
  // 1/F, requires F(0) != 0
  Jet4 recip() const;
};

// The conformal parametrization of the unit round sphere on the north
// stereographic chart: w(z) = (2x, 2y, r^2 - 1)/(1 + r^2), w(0) = south pole.
// All derivatives are closed-form through order 4.
struct OmegaJet {
  std::array<Jet4, 3> w;

  Vec3 value() const;
  Vec3 deriv(int i, int j) const;  // componentwise d_x^i d_y^j w
  Vec3 dx() const { return deriv(1, 0); }
  Vec3 dy() const { return deriv(0, 1); }
  Vec3 lap() const { return deriv(2, 0) + deriv(0, 2); }
};

OmegaJet omega_jet(const Vec2& z);
Vec3 omega_at(const Vec2& z);
// |grad w|^2 = 8/(1+r^2)^2
double omega_grad_sq(const Vec2& z);

// First nonvanishing eigenfunctions of the sphere Laplacian in the chart:
// psi0 = (1-r^2)/(1+r^2), psi1 = x/(1+r^2), psi2 = y/(1+r^2);
// each satisfies Lap psi = -psi |grad w|^2.
std::array<double, 3> psi_basis(const Vec2& z);

// Radial profile of the area-constraint part of the corrector:
//   f(r) = (r^2 ln(r^2/(1+r^2)) - 1 - ln(1+r^2)) / (1+r^2).
// f(0) = -1, f -> 0^- as r -> inf. Its chart Laplacian carries a logarithmic
// point defect at r = 0: the combination
//   (<Lap(f w), w> + 2<grad w, grad(f w)>)/|grad w|^2 = ln r - ln(1+r^2)
// exactly, which is harmonic away from the origin.
double f_profile(double r);
// derivatives with respect to u = r^2 (diverge logarithmically as u -> 0)
double f_profile_du(double u);
double f_profile_duu(double u);
// chart jet of f(r(x,y)) through second order: {f, f_x, f_y, f_xx, f_xy, f_yy}
std::array<double, 6> f_profile_jet2(const Vec2& z);

}  // namespace wlab
