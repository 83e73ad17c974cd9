#pragma once

// Seeded generators for momenta, rotations and Lorentz transformations,
// shared by the verification suites and the tests.

#include <cstdint>
#include <random>

#include "vbcorr/kinematics.hpp"

namespace vbcorr {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Isotropic unit vector.
inline Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(n(rng), n(rng), n(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

/// On-shell momentum with mass in [m_lo, m_hi] and |p|/m uniform in
/// [min_ratio, max_ratio], isotropic direction.
inline FourMomentum random_momentum(Rng& rng, double m_lo = 0.1, double m_hi = 10.0,
                                    double max_ratio = 50.0, double min_ratio = 0.0) {
  const double m = uniform(rng, m_lo, m_hi);
  const double q = uniform(rng, min_ratio, max_ratio) * m;
  return FourMomentum::on_shell(m, q * random_direction(rng));
}

/// Momentum with a fixed mass.
inline FourMomentum random_momentum_with_mass(Rng& rng, double m, double max_ratio,
                                              double min_ratio = 0.05) {
  const double q = uniform(rng, min_ratio, max_ratio) * m;
  return FourMomentum::on_shell(m, q * random_direction(rng));
}

/// Uniformly distributed rotation (from a random unit quaternion).
inline Rotation3 random_rotation(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
  q.normalize();
  return Rotation3::checked(q.toRotationMatrix());
}

/// Boost of rapidity in [0, max_rapidity] along a random axis, composed with
/// a random rotation.
inline LorentzMatrix random_lorentz(Rng& rng, double max_rapidity = 4.0) {
  const LorentzMatrix boost = boost_along(random_direction(rng), uniform(rng, 0.0, max_rapidity));
  return boost * random_rotation(rng).as_lorentz();
}

/// Random unit vector orthogonal to n.
inline Vec3 random_perpendicular(Rng& rng, const Vec3& n) {
  Vec3 v;
  do {
    v = random_direction(rng);
    v -= v.dot(n) * n;
  } while (v.norm() < 1e-3);
  return v.normalized();
}

inline Complex random_complex(Rng& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

}  // namespace vbcorr
