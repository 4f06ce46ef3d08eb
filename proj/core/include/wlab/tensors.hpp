#pragma once

#include <Eigen/Dense>

#include <array>

namespace wlab {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

// Dense component storage for rank-3/4/5 tensors over R^3.
using Ten3 = std::array<std::array<std::array<double, 3>, 3>, 3>;
using Ten4 = std::array<Ten3, 3>;
using Ten5 = std::array<Ten4, 3>;

inline Ten3 zero_ten3() {
  Ten3 t{};
  return t;
}
inline Ten4 zero_ten4() {
  Ten4 t{};
  return t;
}
inline Ten5 zero_ten5() {
  Ten5 t{};
  return t;
}

}  // namespace wlab
