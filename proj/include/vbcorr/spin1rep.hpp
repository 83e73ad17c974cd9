#pragma once

// Spin-1 representation: the intertwiner V, D(R) = V R V^dagger and the
// covariant amplitudes e(p) (spin basis) and E(p) (helicity basis).

#include <algorithm>
#include <cmath>

#include "vbcorr/kinematics.hpp"

namespace vbcorr {

/// V = (1/sqrt2) [[-1, i, 0], [0, 0, sqrt2], [1, i, 0]].
inline CMat3 intertwiner() {
  const double s = 1.0 / std::sqrt(2.0);
  CMat3 v;
  v << Complex(-s, 0), Complex(0, s), 0.0,
       0.0, 0.0, 1.0,
       Complex(s, 0), Complex(0, s), 0.0;
  return v;
}

/// V V^T = [[0,0,-1],[0,1,0],[-1,0,0]] with exact entries.
inline CMat3 intertwiner_vvt() {
  CMat3 m = CMat3::Zero();
  m(0, 2) = -1.0;
  m(1, 1) = 1.0;
  m(2, 0) = -1.0;
  return m;
}

/// Spin-1 matrix D(R) = V R V^dagger, indices ordered (+1, 0, -1).
inline CMat3 rotation_rep(const Rotation3& r) {
  const CMat3 v = intertwiner();
  return v * r.matrix().cast<Complex>() * v.adjoint();
}

/// Spatial-block helper shared by e(p) and E(p): the 4x3 block
/// [p^T/m ; 1 + p p^T/(m(m+p0))].
inline Eigen::Matrix<double, 4, 3> boost_columns(const FourMomentum& p) {
  return standard_boost(p).matrix().rightCols<3>();
}

enum class AmplitudeBasis { spin, helicity };

/// 4x3 complex amplitude matrix; rows are the Lorentz index mu, columns the
/// spin projection sigma or the helicity lambda in the order (+1, 0, -1).
struct AmplitudeMatrix {
  FourMomentum momentum;
  CMat43 entries;
  AmplitudeBasis basis;
  Vec3 gauge_vector = Vec3::Zero();  // helicity basis only

  CVec4 column(int lambda) const { return entries.col(helicity_index(lambda)); }
};

/// e(p) = [p^T/m ; 1 + p p^T/(m(m+p0))] V^T.
inline AmplitudeMatrix amplitude_spin(const FourMomentum& p) {
  const CMat43 e = boost_columns(p).cast<Complex>() * intertwiner().transpose();
  return {p, e, AmplitudeBasis::spin};
}

/// E(p) in the helicity basis with gauge vector a (unit, orthogonal to p),
/// written directly from its explicit column form.
inline AmplitudeMatrix amplitude_helicity(const FourMomentum& p, const Vec3& a) {
  direction_rotation(p, a);  // throws unless a is a unit vector orthogonal to p
  const Vec3 n = p.direction();
  const Vec3 b = n.cross(a);
  const double q = p.momentum_norm();
  const double m = p.mass();
  const double s = 1.0 / std::sqrt(2.0);
  CMat43 e = CMat43::Zero();
  e.block<3, 1>(1, 0) = (-a.cast<Complex>() + kI * b.cast<Complex>()) * s;
  e(0, 1) = q / m;
  e.block<3, 1>(1, 1) = (p.energy() / m * n).cast<Complex>();
  e.block<3, 1>(1, 2) = (a.cast<Complex>() + kI * b.cast<Complex>()) * s;
  return {p, e, AmplitudeBasis::helicity, a};
}

inline AmplitudeMatrix amplitude_helicity(const FourMomentum& p, const GaugeChoice& gauge) {
  return amplitude_helicity(p, gauge_vector(gauge, p.direction()));
}

/// Residuals of the four amplitude identities plus the conjugation relation
/// e V V^T = e^*. Each entry is a max-abs deviation.
struct AmplitudeResiduals {
  double transversality = 0;   // p_mu e^mu = 0
  double orthonormality = 0;   // e^*_mu e^mu' = -delta
  double bilinear = 0;         // e_mu e^mu' = -(V V^T)
  double completeness = 0;     // sum_s e^*mu e^nu = -eta + p p / m^2
  double conjugation = 0;      // e V V^T = e^*

  double max() const {
    return std::max({transversality, orthonormality, bilinear, completeness, conjugation});
  }
};

inline AmplitudeResiduals amplitude_residuals(const AmplitudeMatrix& amp) {
  const CMat4 eta = metric().cast<Complex>();
  const Vec4 pv = amp.momentum.vector();
  const double m2 = amp.momentum.mass() * amp.momentum.mass();
  const CMat43& e = amp.entries;
  AmplitudeResiduals r;
  r.transversality = max_abs(Eigen::Matrix<Complex, 1, 3>((eta * pv.cast<Complex>()).transpose() * e));
  r.orthonormality = max_abs(CMat3(e.adjoint() * eta * e + CMat3::Identity()));
  r.bilinear = max_abs(CMat3(e.transpose() * eta * e + intertwiner_vvt()));
  const CMat4 target = (-metric() + pv * pv.transpose() / m2).cast<Complex>();
  r.completeness = max_abs(CMat4(e.conjugate() * e.transpose() - target));
  r.conjugation = max_abs(CMat43(e * intertwiner_vvt() - e.conjugate()));
  return r;
}

/// Max residual of the Weinberg condition
/// e(Lambda p) = Lambda e(p) D(R(Lambda, p))^T.
inline double check_weinberg(const LorentzMatrix& lambda, const FourMomentum& p) {
  const FourMomentum lp = lambda * p;
  const CMat3 d = rotation_rep(wigner_rotation(lambda, p));
  const CMat43 lhs = amplitude_spin(lp).entries;
  const CMat43 rhs = lambda.matrix().cast<Complex>() * amplitude_spin(p).entries * d.transpose();
  return max_abs(CMat43(lhs - rhs));
}

}  // namespace vbcorr
