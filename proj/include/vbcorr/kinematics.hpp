#pragma once

// Minkowski four-momenta, standard boosts, helicity-frame rotations and
// Wigner rotations. Metric signature (+,-,-,-), natural units.

#include <cmath>
#include <optional>
#include <string>

#include "vbcorr/linalg.hpp"

namespace vbcorr {

/// On-shell four-momentum of a massive particle. The energy is always
/// derived from the mass and the three-momentum, so the mass shell holds
/// by construction.
class FourMomentum {
 public:
  static FourMomentum on_shell(double mass, const Vec3& momentum) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
      throw InvalidInput("mass must be positive and finite, got " + std::to_string(mass));
    }
    if (!momentum.allFinite()) throw InvalidInput("three-momentum must be finite");
    return FourMomentum(mass, momentum);
  }

  /// Particle at rest, m(1,0,0,0).
  static FourMomentum at_rest(double mass) { return on_shell(mass, Vec3::Zero()); }

  double mass() const { return mass_; }
  double energy() const { return energy_; }
  const Vec3& momentum() const { return momentum_; }
  double momentum_norm() const { return momentum_.norm(); }
  Vec4 vector() const { return make_four(energy_, momentum_); }

  /// Unit direction of motion; throws for a particle at rest.
  Vec3 direction() const {
    const double n = momentum_.norm();
    if (n == 0.0) throw InvalidInput("direction undefined for a particle at rest");
    return momentum_ / n;
  }

  /// Squared reduced momentum (|p|/m)^2.
  double x() const { return momentum_.squaredNorm() / (mass_ * mass_); }

 private:
  FourMomentum(double mass, const Vec3& momentum)
      : mass_(mass), energy_(std::sqrt(mass * mass + momentum.squaredNorm())), momentum_(momentum) {}

  double mass_;
  double energy_;
  Vec3 momentum_;
};

inline double minkowski_product(const Vec4& a, const Vec4& b) {
  return a(0) * b(0) - a.tail<3>().dot(b.tail<3>());
}

inline double minkowski_product(const FourMomentum& a, const FourMomentum& b) {
  return minkowski_product(a.vector(), b.vector());
}

/// Orthochronous Lorentz transformation.
class LorentzMatrix {
 public:
  LorentzMatrix() : m_(Mat4::Identity()) {}

  /// Validates Lambda^T eta Lambda = eta and Lambda^0_0 >= 1.
  static LorentzMatrix checked(const Mat4& m, double tol = 1e-10) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double residual = max_abs(Mat4(m.transpose() * metric() * m - metric()));
    if (!(residual <= tol * scale * scale)) {
      throw InvalidInput("matrix is not a Lorentz transformation (residual " +
                         std::to_string(residual) + ")");
    }
    if (!(m(0, 0) >= 1.0 - tol)) throw InvalidInput("Lorentz matrix is not orthochronous");
    return LorentzMatrix(m);
  }

  const Mat4& matrix() const { return m_; }

  /// Inverse via eta Lambda^T eta.
  LorentzMatrix inverse() const { return LorentzMatrix(Mat4(metric() * m_.transpose() * metric())); }

  LorentzMatrix operator*(const LorentzMatrix& rhs) const { return LorentzMatrix(Mat4(m_ * rhs.m_)); }

  Vec4 operator*(const Vec4& v) const { return m_ * v; }

  FourMomentum operator*(const FourMomentum& p) const {
    return FourMomentum::on_shell(p.mass(), spatial(m_ * p.vector()));
  }

 private:
  explicit LorentzMatrix(const Mat4& m) : m_(m) {}
  Mat4 m_;
};

/// Proper rotation in three dimensions.
class Rotation3 {
 public:
  Rotation3() : r_(Mat3::Identity()) {}

  static Rotation3 checked(const Mat3& r, double tol = 1e-10) {
    const double ortho = max_abs(Mat3(r.transpose() * r - Mat3::Identity()));
    if (!(ortho <= tol) || !(std::abs(r.determinant() - 1.0) <= tol)) {
      throw InvalidInput("matrix is not a proper rotation");
    }
    return Rotation3(r);
  }

  /// Right-handed rotation by `angle` about `axis` (Rodrigues).
  static Rotation3 about_axis(const Vec3& axis, double angle) {
    return Rotation3(Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix());
  }

  const Mat3& matrix() const { return r_; }
  Rotation3 transpose() const { return Rotation3(Mat3(r_.transpose())); }
  Rotation3 operator*(const Rotation3& rhs) const { return Rotation3(Mat3(r_ * rhs.r_)); }
  Vec3 operator*(const Vec3& v) const { return r_ * v; }

  /// Embeds as the Lorentz matrix diag(1, R).
  LorentzMatrix as_lorentz() const {
    Mat4 m = Mat4::Identity();
    m.bottomRightCorner<3, 3>() = r_;
    return LorentzMatrix::checked(m);
  }

 private:
  explicit Rotation3(const Mat3& r) : r_(r) {}
  Mat3 r_;
};

/// Pure boost L_p with L_p (m,0,0,0) = p.
inline LorentzMatrix standard_boost(const FourMomentum& p) {
  const double m = p.mass();
  const Vec3& q = p.momentum();
  Mat4 l;
  l(0, 0) = p.energy() / m;
  l.block<1, 3>(0, 1) = q.transpose() / m;
  l.block<3, 1>(1, 0) = q / m;
  l.block<3, 3>(1, 1) = Mat3::Identity() + q * q.transpose() / (m * (m + p.energy()));
  return LorentzMatrix::checked(l);
}

/// Boost with the given rapidity along a unit direction.
inline LorentzMatrix boost_along(const Vec3& direction, double rapidity) {
  const Vec3 n = direction.normalized();
  return standard_boost(FourMomentum::on_shell(1.0, std::sinh(rapidity) * n));
}

/// How the free unit vector a_p (orthogonal to the direction of motion) is
/// fixed when building helicity frames.
enum class GaugeMode {
  /// a_k = a_p along k x p; shared fallback perpendicular for collinear pairs.
  pair_common,
  /// a_p = (cos t cos f, cos t sin f, -sin t) from the polar angles of n_p.
  spherical,
  /// A user vector projected onto the plane orthogonal to n_p.
  explicit_vector,
};

struct GaugeChoice {
  GaugeMode mode = GaugeMode::pair_common;
  Vec3 vector = Vec3::Zero();

  static GaugeChoice pair_common() { return {GaugeMode::pair_common, Vec3::Zero()}; }
  static GaugeChoice spherical() { return {GaugeMode::spherical, Vec3::Zero()}; }
  static GaugeChoice explicit_vector(const Vec3& v) { return {GaugeMode::explicit_vector, v}; }
};

inline std::string to_string(GaugeMode mode) {
  switch (mode) {
    case GaugeMode::pair_common: return "pair-common";
    case GaugeMode::spherical: return "spherical";
    case GaugeMode::explicit_vector: return "explicit";
  }
  return "?";
}

namespace detail {

inline Vec3 orthogonalize(const Vec3& v, const Vec3& n) {
  const Vec3 w = v - v.dot(n) * n;
  const double len = w.norm();
  if (!(len > 1e-12)) throw InvalidInput("gauge vector is parallel to the direction of motion");
  return w / len;
}

/// Unit vector orthogonal to n, built from the coordinate axis least aligned
/// with n. Gives e_x for n = +-e_z.
inline Vec3 fallback_perpendicular(const Vec3& n) {
  int axis = 0;
  n.cwiseAbs().minCoeff(&axis);
  return orthogonalize(Vec3::Unit(axis), n);
}

inline Vec3 spherical_gauge(const Vec3& n) {
  const double rho = std::hypot(n.x(), n.y());
  const double theta = std::atan2(rho, n.z());
  const double phi = rho == 0.0 ? 0.0 : std::atan2(n.y(), n.x());
  const Vec3 a(std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), -std::sin(theta));
  return orthogonalize(a, n);
}

}  // namespace detail

/// Gauge vector a_p for a single momentum direction n. `partner` is the
/// other particle's three-momentum, used only by pair_common.
inline Vec3 gauge_vector(const GaugeChoice& gauge, const Vec3& n,
                         const std::optional<Vec3>& partner = std::nullopt) {
  switch (gauge.mode) {
    case GaugeMode::spherical: return detail::spherical_gauge(n);
    case GaugeMode::explicit_vector: return detail::orthogonalize(gauge.vector, n);
    case GaugeMode::pair_common: {
      if (partner) {
        const Vec3 c = n.cross(*partner);
        const double len = c.norm();
        if (len > 1e-12 * std::max(1.0, partner->norm())) return c / len;
      }
      return detail::fallback_perpendicular(n);
    }
  }
  throw InvalidInput("unknown gauge mode");
}

/// Gauge vectors for the two particles of a pair.
struct PairGauge {
  Vec3 a_k;
  Vec3 a_p;
};

inline PairGauge resolve_pair_gauge(const GaugeChoice& gauge, const FourMomentum& k,
                                    const FourMomentum& p) {
  const Vec3 nk = k.direction();
  const Vec3 np = p.direction();
  if (gauge.mode == GaugeMode::pair_common) {
    const Vec3 c = nk.cross(np);
    const double len = c.norm();
    const Vec3 a = len > 1e-12 ? Vec3(c / len) : detail::fallback_perpendicular(nk);
    return {a, a};
  }
  return {gauge_vector(gauge, nk), gauge_vector(gauge, np)};
}

/// R_p = (a | n x a | n): rotates e_z onto the direction of p.
inline Rotation3 direction_rotation(const FourMomentum& p, const Vec3& a) {
  const Vec3 n = p.direction();
  if (std::abs(a.norm() - 1.0) > 1e-10 || std::abs(a.dot(n)) > 1e-10) {
    throw InvalidInput("gauge vector must be a unit vector orthogonal to the momentum");
  }
  Mat3 r;
  r.col(0) = a;
  r.col(1) = n.cross(a);
  r.col(2) = n;
  return Rotation3::checked(r);
}

inline Rotation3 direction_rotation(const FourMomentum& p, const GaugeChoice& gauge) {
  return direction_rotation(p, gauge_vector(gauge, p.direction()));
}

namespace detail {

using Mat4L = Eigen::Matrix<long double, 4, 4>;
using Mat3L = Eigen::Matrix<long double, 3, 3>;

inline Mat4L standard_boost_extended(const FourMomentum& p) {
  const long double m = p.mass();
  const long double e = p.energy();
  const Eigen::Matrix<long double, 3, 1> q = p.momentum().cast<long double>();
  Mat4L l;
  l(0, 0) = e / m;
  l.block<1, 3>(0, 1) = q.transpose() / m;
  l.block<3, 1>(1, 0) = q / m;
  l.block<3, 3>(1, 1) = Mat3L::Identity() + q * q.transpose() / (m * (m + e));
  return l;
}

}  // namespace detail

/// Wigner rotation R(Lambda, p), defined by Lambda L_p = L_{Lambda p} diag(1, R).
/// The spatial columns of this relation are solved for R by least squares
/// in extended precision and projected onto SO(3). Forming
/// L_{Lambda p}^{-1} Lambda L_p directly amplifies the rounding of Lambda by
/// the boost of Lambda p.
inline Rotation3 wigner_rotation(const LorentzMatrix& lambda, const FourMomentum& p) {
  const FourMomentum lp = lambda * p;
  const detail::Mat4L boost_lp = detail::standard_boost_extended(lp);
  const detail::Mat4L image = lambda.matrix().cast<long double>() * detail::standard_boost_extended(p);
  const Eigen::Matrix<long double, 4, 3> a = boost_lp.rightCols<3>();
  const Eigen::Matrix<long double, 4, 3> b = image.rightCols<3>();
  detail::Mat3L r = a.colPivHouseholderQr().solve(b);
  const long double misfit = (a * r - b).cwiseAbs().maxCoeff() / boost_lp(0, 0);
  if (misfit > 1e-8L) throw NumericalError("Wigner rotation does not fix the rest-frame momentum");
  // Polar-decomposition Newton steps remove the remaining drift from orthogonality.
  for (int i = 0; i < 3; ++i) r = 0.5L * (r + detail::Mat3L(r.inverse().transpose()));
  return Rotation3::checked(r.cast<double>(), 1e-9);
}

/// Centre-of-mass partner k^pi = (k0, -k).
inline FourMomentum cm_partner(const FourMomentum& k) {
  return FourMomentum::on_shell(k.mass(), -k.momentum());
}

/// Declares momenta coincident when every component differs by less than
/// 1e-12 max(1, |p|).
inline bool coincident(const FourMomentum& k, const FourMomentum& p) {
  const double scale = 1e-12 * std::max(1.0, p.momentum_norm());
  return (k.momentum() - p.momentum()).cwiseAbs().maxCoeff() < scale;
}

struct MomentumPair {
  FourMomentum k;
  FourMomentum p;
};

/// Centre-of-mass pair with x = (|k|/m)^2, k along `direction`.
inline MomentumPair cm_configuration(double x, double mass = 1.0, const Vec3& direction = Vec3::UnitZ()) {
  if (!(x >= 0.0)) throw InvalidInput("x must be non-negative");
  const FourMomentum k = FourMomentum::on_shell(mass, mass * std::sqrt(x) * direction.normalized());
  return {k, cm_partner(k)};
}

/// Equal-energy pair: |k| = |p| = m sqrt(x), angle alpha between them.
/// k runs along e_z and p lies in the x-z plane.
inline MomentumPair equal_energy_configuration(double x, double alpha, double mass = 1.0) {
  if (!(x >= 0.0)) throw InvalidInput("x must be non-negative");
  const double q = mass * std::sqrt(x);
  return {FourMomentum::on_shell(mass, q * Vec3::UnitZ()),
          FourMomentum::on_shell(mass, q * Vec3(std::sin(alpha), 0.0, std::cos(alpha)))};
}

}  // namespace vbcorr
