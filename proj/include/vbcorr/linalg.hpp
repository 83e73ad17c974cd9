#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace vbcorr {

using Complex = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using CVec3 = Eigen::Vector3cd;
using CVec4 = Eigen::Vector4cd;
using CMat3 = Eigen::Matrix3cd;
using CMat4 = Eigen::Matrix4cd;
using CMat43 = Eigen::Matrix<Complex, 4, 3>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Rejected input: out-of-domain momenta, malformed angles, bad flags.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical consistency check failed at runtime (e.g. a non-real expectation).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Minkowski metric diag(1,-1,-1,-1).
inline Mat4 metric() { return Vec4(1.0, -1.0, -1.0, -1.0).asDiagonal(); }

inline Vec3 spatial(const Vec4& v) { return v.tail<3>(); }

inline Vec4 make_four(double t, const Vec3& s) {
  Vec4 v;
  v << t, s;
  return v;
}

/// Complex bilinear (no conjugation) Minkowski contraction a_mu b^mu.
template <typename A, typename B>
auto minkowski_dot(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

/// Largest absolute entry; 0 for empty.
template <typename M>
double max_abs(const Eigen::MatrixBase<M>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Index of helicity (or spin projection) lambda in the (+1, 0, -1) ordering.
constexpr int helicity_index(int lambda) {
  if (lambda < -1 || lambda > 1) throw std::out_of_range("helicity must be -1, 0 or +1");
  return 1 - lambda;
}

constexpr int helicity_value(int index) { return 1 - index; }

}  // namespace vbcorr
