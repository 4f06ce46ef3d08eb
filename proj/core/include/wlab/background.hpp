#pragma once

#include "wlab/tensors.hpp"

#include <iosfwd>
#include <string>

namespace wlab {

// Curvature data of the ambient 3-manifold at the concentration point.
// Primary inputs are the Ricci tensor and its covariant derivative there;
// the Riemann tensor and its derivative are always reconstructed from the
// 3-dimensional decomposition
//   R_abce = d_ac Ric_be - d_ae Ric_bc + d_be Ric_ac - d_bc Ric_ae
//            + (Scal/2)(d_ae d_bc - d_ac d_be),
// so that Ric_ab = sum_m R_ambm and the space form with ric = 2k I has
// R_abce = k (d_ac d_be - d_ae d_bc).
struct CurvatureBackground {
  Mat3 ric = Mat3::Zero();   // Ricci at the base point, 1/length^2
  Ten3 dric = zero_ten3();   // dric[a][b][c] = Ric_ab,c ; symmetric in (a,b)
  Ten4 riemann = zero_ten4();
  Ten5 driemann = zero_ten5();
  double scal = 0.0;
  Vec3 dscal = Vec3::Zero();

  static CurvatureBackground flat();
  static CurvatureBackground space_form(double k);
  // Scal(p)=0, Ric(p)=0, prescribed grad Scal = s; dric is chosen
  // compatible with the contracted Bianchi identity div Ric = (1/2) d Scal.
  static CurvatureBackground gradient(const Vec3& s);
  // Validates symmetry of the inputs and derives the Riemann data.
  static CurvatureBackground from_ricci(const Mat3& ric, const Ten3& dric);

  bool is_flat() const;
};

// 3D reconstruction of the Riemann tensor from Ricci. Throws ValidationError
// if ric is not symmetric or scal does not equal its trace.
Ten4 riemann_from_ricci(const Mat3& ric, double scal);

// Termwise derivative of the decomposition (metric derivatives vanish at the
// base point in normal coordinates).
Ten5 driemann_from_dricci(const Ten3& dric, const Vec3& dscal);

// Full-symmetry validation of a directly supplied Riemann tensor:
// antisymmetry in (1,2) and (3,4), pair exchange, first Bianchi.
// Returns the largest violation found.
double riemann_symmetry_defect(const Ten4& riemann);

// Key-value text format:
//   preset = flat | space_form | gradient
//   k = <number>                (space_form)
//   s = <s1> <s2> <s3>          (gradient)
//   ric = <6 numbers>           (row-major upper triangle)
//   dric = <18 numbers>         (upper triangle x derivative index)
//   scal_check = <number>       (optional; validated against trace)
CurvatureBackground parse_background(std::istream& in);
CurvatureBackground load_background(const std::string& path);

}  // namespace wlab
