#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rspcorr {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4c = Eigen::Matrix4cd;
using Mat2c = Eigen::Matrix2cd;
using cplx = std::complex<double>;

// Smallest-eigenvalue threshold used by every physicality test.
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kUnitTol = 1e-9;
// Below this outcome probability a measurement branch is treated as absent.
inline constexpr double kBranchTol = 1e-14;

/// Raised when an operation is called outside its mathematical domain
/// (unphysical state, off-circle target, parameter out of range).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

inline Vec3 unit_x() { return Vec3::UnitX(); }
inline Vec3 unit_y() { return Vec3::UnitY(); }
inline Vec3 unit_z() { return Vec3::UnitZ(); }

inline bool is_unit(const Vec3& v, double tol = kUnitTol) {
  return std::abs(v.norm() - 1.0) <= tol;
}

inline void require_unit(const Vec3& v, const char* what, double tol = kUnitTol) {
  if (!v.allFinite() || !is_unit(v, tol))
    throw domain_error(std::string(what) + " must be a unit vector");
}

// Bloch-sphere point from the polar/azimuthal pair used for circle normals:
// (sin(theta) sin(phi), sin(theta) cos(phi), cos(theta)).
inline Vec3 bloch_from_angles(double theta, double phi) {
  return {std::sin(theta) * std::sin(phi), std::sin(theta) * std::cos(phi), std::cos(theta)};
}

// Any unit vector orthogonal to n (n assumed unit).
inline Vec3 any_orthogonal(const Vec3& n) {
  const Vec3 seed = std::abs(n.x()) < 0.9 ? unit_x() : unit_y();
  return (seed - seed.dot(n) * n).normalized();
}

}  // namespace rspcorr
