#pragma once

// One-sided observables: 3x3 Hermitian matrices acting on the helicity
// index of one particle of a TwoBosonState.
//
// For k != p the symmetrized two-slot projectors
//   Pi_k = (|eps(k)><eps(k)| x 1 + 1 x |eps(k)><eps(k)|) / (2 k0 delta(0))
// only ever see the k-slot of |(k,l);(p,l')>, so in the coefficient model
// they reduce to f f^dagger on the row index (k side) or column index
// (p side), with f the helicity components of the polarization state.

#include <string>

#include "vbcorr/states.hpp"

namespace vbcorr {

enum class Side { k, p };

struct OneSidedObservable {
  Side side;
  CMat3 matrix;
  std::string label;
};

/// diag(+1, 0, -1) in the (+1, 0, -1) ordering.
inline OneSidedObservable helicity_observable(Side side) {
  return {side, Vec3(1.0, 0.0, -1.0).cast<Complex>().asDiagonal(), "helicity"};
}

inline OneSidedObservable identity_observable(Side side) {
  return {side, CMat3::Identity(), "identity"};
}

/// f f^dagger for explicit helicity components f.
inline CMat3 projector_from_coeffs(const CVec3& f) { return f * f.adjoint(); }

/// Pi^theta for the particle with momentum `p`, polarization vector built
/// with gauge vector `a`. The matrix is expressed in the helicity basis of
/// the same gauge.
inline CMat3 polarization_projector(double theta, const FourMomentum& p, const Vec3& a) {
  const PolarizationVector eps = make_polarization(p, Linear{theta}, a);
  return projector_from_coeffs(helicity_coeffs(eps, amplitude_helicity(p, a)));
}

/// Pi^theta with the polarization vector built in gauge `a_eps` and the
/// matrix expressed in the helicity basis of gauge `a_basis`.
inline CMat3 polarization_projector(double theta, const FourMomentum& p, const Vec3& a_eps,
                                    const Vec3& a_basis) {
  const PolarizationVector eps = make_polarization(p, Linear{theta}, a_eps);
  return projector_from_coeffs(helicity_coeffs(eps, amplitude_helicity(p, a_basis)));
}

/// S^theta = Pi^theta - Pi^{theta + pi/2}.
inline OneSidedObservable polarization_observable(Side side, double theta, const FourMomentum& p,
                                                  const Vec3& a) {
  const CMat3 s =
      polarization_projector(theta, p, a) - polarization_projector(theta + kPi / 2.0, p, a);
  return {side, s, "polarization(" + std::to_string(theta) + ")"};
}

/// Observable for the state's own gauge on the chosen side.
inline OneSidedObservable polarization_observable(Side side, double theta,
                                                  const TwoBosonState& state) {
  return side == Side::k
             ? polarization_observable(side, theta, state.k(), state.gauge().a_k)
             : polarization_observable(side, theta, state.p(), state.gauge().a_p);
}

/// Applies a one-sided observable to a coefficient array and returns the
/// coefficients of the resulting (unnormalized, possibly zero) vector.
/// k-side acts on rows, p-side on columns.
inline CMat3 apply(const OneSidedObservable& obs, const CMat3& c) {
  return obs.side == Side::k ? CMat3(obs.matrix * c) : CMat3(c * obs.matrix.transpose());
}

inline double hermiticity_residual(const CMat3& m) { return max_abs(CMat3(m - m.adjoint())); }

}  // namespace vbcorr
