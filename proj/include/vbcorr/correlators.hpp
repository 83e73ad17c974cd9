#pragma once

// Helicity, spin and linear-polarization correlation functions of the
// scalar two-boson states. Every closed form has an independent route
// through oracle_expectation(), which evaluates <chi| B A |chi>/<chi|chi>
// directly on the coefficient array.

#include <cmath>
#include <optional>
#include <string>

#include "vbcorr/observables.hpp"

namespace vbcorr {

enum class StateKind { psi, phi, xi, chi };

/// Which scalar state: psi, phi, xi or chi = alpha (k.p) psi + beta phi.
struct StateSpec {
  StateKind kind = StateKind::xi;
  Complex alpha = 1.0;  // chi only
  Complex beta = 0.0;   // chi only

  static StateSpec psi() { return {StateKind::psi}; }
  static StateSpec phi() { return {StateKind::phi}; }
  static StateSpec xi() { return {StateKind::xi}; }
  static StateSpec chi(Complex alpha, Complex beta) { return {StateKind::chi, alpha, beta}; }
};

inline std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::psi: return "psi";
    case StateKind::phi: return "phi";
    case StateKind::xi: return "xi";
    case StateKind::chi: return "chi";
  }
  return "?";
}

inline TwoBosonState build_state(const StateSpec& spec, const FourMomentum& k, const FourMomentum& p,
                                 const PairGauge& g) {
  switch (spec.kind) {
    case StateKind::psi: return state_psi(k, p, g);
    case StateKind::phi: return state_phi(k, p, g);
    case StateKind::xi: return state_xi(k, p, g);
    case StateKind::chi: return state_chi(k, p, spec.alpha, spec.beta, g);
  }
  throw InvalidInput("unknown state kind");
}

inline TwoBosonState build_state(const StateSpec& spec, const FourMomentum& k, const FourMomentum& p,
                                 const GaugeChoice& g = GaugeChoice::pair_common()) {
  return build_state(spec, k, p, resolve_pair_gauge(g, k, p));
}

enum class Method { closed, oracle };

inline std::string to_string(Method m) { return m == Method::closed ? "closed" : "oracle"; }

struct CorrelationResult {
  double value;
  Method method;
  std::optional<double> residual;  // closed minus oracle, when both were evaluated
};

// ---------------------------------------------------------------------------
// Oracle

/// <c| A_k B_p |c> / <c|c> for observables on opposite sides. The imaginary
/// part must vanish to 1e-13; anything larger signals a non-Hermitian input.
inline double oracle_expectation(const CMat3& c, const OneSidedObservable& a,
                                 const OneSidedObservable& b) {
  if (a.side != Side::k || b.side != Side::p) {
    throw InvalidInput("oracle expects a k-side and a p-side observable");
  }
  const double norm = c.squaredNorm();
  if (!(norm > 0.0)) throw InvalidInput("zero-norm state");
  const Complex num = (c.adjoint() * a.matrix * c * b.matrix.transpose()).trace();
  const Complex value = num / norm;
  if (std::abs(value.imag()) > 1e-13) {
    throw NumericalError("expectation value has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

inline double oracle_expectation(const TwoBosonState& state, const OneSidedObservable& a,
                                 const OneSidedObservable& b) {
  return oracle_expectation(state.coeffs(), a, b);
}

inline double helicity_correlation_oracle(const TwoBosonState& state) {
  return oracle_expectation(state, helicity_observable(Side::k), helicity_observable(Side::p));
}

inline double polarization_correlation_oracle(const TwoBosonState& state, double theta,
                                              double theta_tilde) {
  return oracle_expectation(state, polarization_observable(Side::k, theta, state),
                            polarization_observable(Side::p, theta_tilde, state));
}

// ---------------------------------------------------------------------------
// Closed forms

namespace detail {

struct PairScalars {
  double m;
  double kp;        // Minkowski k.p
  double dot;       // k_vec . p_vec
  double cross2;    // |k_vec x p_vec|^2
  double kn, pn;    // |k_vec|, |p_vec|
};

inline PairScalars pair_scalars(const FourMomentum& k, const FourMomentum& p) {
  require_pair(k, p);
  return {k.mass(), minkowski_product(k, p), k.momentum().dot(p.momentum()),
          k.momentum().cross(p.momentum()).squaredNorm(), k.momentum_norm(), p.momentum_norm()};
}

inline double chi_norm_reduced(const StateSpec& s, const PairScalars& q) {
  switch (s.kind) {
    case StateKind::psi: return psi_norm2_reduced(q.kp, q.m);
    case StateKind::phi: return phi_norm2_reduced(q.kp, q.m);
    case StateKind::xi: return xi_norm2_reduced(q.kp, q.m);
    case StateKind::chi: return chi_norm2_reduced(q.kp, q.m, s.alpha, s.beta);
  }
  return 0.0;
}

/// (alpha, beta) such that the state equals alpha (k.p) psi + beta phi.
inline std::pair<Complex, Complex> chi_weights(const StateSpec& s) {
  switch (s.kind) {
    case StateKind::psi: return {0.0, 0.0};  // handled separately: psi is not (k.p)-scaled
    case StateKind::phi: return {0.0, 1.0};
    case StateKind::xi: return {-1.0, 1.0};
    case StateKind::chi: return {s.alpha, s.beta};
  }
  return {0.0, 0.0};
}

}  // namespace detail

/// Helicity matrix elements divided by 4 k0 p0:
///   <psi|L_p L_k|psi> = -2 k_vec.p_vec/(|k||p|),  <phi|L_p L_k|phi> = 0,
///   <phi|L_p L_k|psi> = -|k x p|^2/(|k||p|).
struct HelicityElements {
  double psi_psi;
  double phi_phi;
  double phi_psi;
};

inline HelicityElements helicity_matrix_elements(const FourMomentum& k, const FourMomentum& p) {
  const auto q = detail::pair_scalars(k, p);
  return {-2.0 * q.dot / (q.kn * q.pn), 0.0, -q.cross2 / (q.kn * q.pn)};
}

inline double helicity_correlation_closed(const StateSpec& spec, const FourMomentum& k,
                                          const FourMomentum& p) {
  const auto q = detail::pair_scalars(k, p);
  const double m4 = q.m * q.m * q.m * q.m;
  const double cos_kp = q.dot / (q.kn * q.pn);
  switch (spec.kind) {
    case StateKind::psi: return -2.0 / (2.0 + q.kp * q.kp / m4) * cos_kp;
    case StateKind::phi: return 0.0;
    case StateKind::xi:
      return -2.0 * q.kp / (2.0 * q.kp * q.kp + m4) * (q.kp * q.dot - q.cross2) / (q.kn * q.pn);
    case StateKind::chi: {
      const HelicityElements el = helicity_matrix_elements(k, p);
      const Complex a = spec.alpha;
      const Complex b = spec.beta;
      const double num = std::norm(a) * q.kp * q.kp * el.psi_psi + std::norm(b) * el.phi_phi +
                         2.0 * std::real(std::conj(a) * b) * q.kp * el.phi_psi;
      return num / detail::chi_norm_reduced(spec, q);
    }
  }
  throw InvalidInput("unknown state kind");
}

/// Spin correlation in psi for spin projections along unit vectors a (k
/// side) and b (p side), using the five-term closed form.
inline double spin_correlation_psi(const FourMomentum& k, const FourMomentum& p, const Vec3& a,
                                   const Vec3& b) {
  if (std::abs(a.norm() - 1.0) > 1e-12 || std::abs(b.norm() - 1.0) > 1e-12) {
    throw InvalidInput("spin directions must be unit vectors");
  }
  const auto q = detail::pair_scalars(k, p);
  const Vec3& kv = k.momentum();
  const Vec3& pv = p.momentum();
  const double m = q.m;
  const double k0 = k.energy();
  const double p0 = p.energy();
  const double bracket = -a.dot(b) * q.kp - a.dot(pv) * b.dot(kv) -
                         a.dot(kv) * b.dot(pv) * q.dot / ((m + k0) * (m + p0)) +
                         k0 * a.dot(pv) * b.dot(pv) / (m + p0) + p0 * a.dot(kv) * b.dot(kv) / (m + k0);
  return 2.0 / (m * m * (2.0 + q.kp * q.kp / (m * m * m * m))) * bracket;
}

/// Projector matrix elements <.|Pi_p^tt Pi_k^t|.> divided by 4 k0 p0, built
/// from the linear polarization vectors of each particle in its own gauge.
struct ProjectorElements {
  double psi_psi;
  double phi_phi;
  Complex phi_psi;
  /// Amplitudes X with <s|Pi Pi|s'> = conj(X_s) X_s'.
  Complex x_psi;
  Complex x_phi;
};

inline ProjectorElements projector_matrix_elements(const FourMomentum& k, const FourMomentum& p,
                                                   double theta, double theta_tilde,
                                                   const PairGauge& g) {
  detail::require_pair(k, p);
  const CVec3 ek = make_polarization(k, Linear{theta}, g.a_k).components.tail<3>();
  const CVec3 ep = make_polarization(p, Linear{theta_tilde}, g.a_p).components.tail<3>();
  const Complex e1 = ek.cwiseProduct(ep).sum();
  const Complex u = p.momentum().cast<Complex>().cwiseProduct(ek).sum();
  const Complex w = k.momentum().cast<Complex>().cwiseProduct(ep).sum();
  const Complex x_psi = -std::conj(e1);
  const Complex x_phi = std::conj(u * w);
  return {std::norm(x_psi), std::norm(x_phi), std::conj(x_phi) * x_psi, x_psi, x_phi};
}

/// Polarization correlation assembled from the four projector terms
/// Pi Pi + Pi_perp Pi_perp - Pi_perp Pi - Pi Pi_perp. Valid in any gauge and
/// for every state kind.
inline double polarization_correlation_assembled(const StateSpec& spec, const FourMomentum& k,
                                                 const FourMomentum& p, double theta,
                                                 double theta_tilde, const PairGauge& g) {
  const auto q = detail::pair_scalars(k, p);
  Complex wa, wb;
  if (spec.kind == StateKind::psi) {
    wa = 1.0;
    wb = 0.0;
  } else {
    const auto [alpha, beta] = detail::chi_weights(spec);
    wa = alpha * q.kp;
    wb = beta;
  }
  auto term = [&](double t, double tt) {
    const ProjectorElements el = projector_matrix_elements(k, p, t, tt, g);
    return std::norm(wa * el.x_psi + wb * el.x_phi);
  };
  const double h = kPi / 2.0;
  const double num = term(theta, theta_tilde) + term(theta + h, theta_tilde + h) -
                     term(theta, theta_tilde + h) - term(theta + h, theta_tilde);
  return num / detail::chi_norm_reduced(spec, q);
}

/// Closed-form polarization correlations for psi, phi and xi at general
/// momenta. These hold in the pair-common gauge (a_k = a_p along k x p).
inline double polarization_correlation_closed(const StateSpec& spec, const FourMomentum& k,
                                              const FourMomentum& p, double theta,
                                              double theta_tilde) {
  const auto q = detail::pair_scalars(k, p);
  const double m2 = q.m * q.m;
  const double m4 = m2 * m2;
  const double kp = q.kp;
  const double c2 = std::cos(2.0 * theta) * std::cos(2.0 * theta_tilde);
  const double s2 = std::sin(2.0 * theta) * std::sin(2.0 * theta_tilde);
  const double k2 = q.kn * q.kn;
  const double p2 = q.pn * q.pn;
  const double kpn = q.kn * q.pn;
  switch (spec.kind) {
    case StateKind::psi: {
      const double cos_kp = q.dot / kpn;
      return ((1.0 + cos_kp * cos_kp) * c2 + 2.0 * cos_kp * s2) / (2.0 + kp * kp / m4);
    }
    case StateKind::phi: {
      const double r = kp * kp / m4 - 1.0;
      return q.cross2 * q.cross2 * c2 / (m4 * k2 * p2 * r * r);
    }
    case StateKind::xi: {
      const double k0p0 = k.energy() * p.energy();
      const double s = m2 + k2 + p2;
      const double first = 2.0 * kp * kp * (c2 - k0p0 / kpn * s2);
      const double second =
          m2 * s * ((kp * kp - 2.0 * k0p0 * kp + m2 * s) / (k2 * p2) * c2 + 2.0 * kp / kpn * s2);
      return (first + second) / (2.0 * kp * kp + m4);
    }
    case StateKind::chi:
      throw InvalidInput("no closed-form polarization correlation for a general chi state");
  }
  throw InvalidInput("unknown state kind");
}

// Centre-of-mass reductions, x = (|k|/m)^2.

inline double psi_cm_coefficient(double x) {
  const double u = (2.0 * x + 1.0) * (2.0 * x + 1.0);
  return 2.0 / (2.0 + u);
}

inline double xi_cm_coefficient(double x) {
  const double u = (2.0 * x + 1.0) * (2.0 * x + 1.0);
  return 2.0 * u / (2.0 * u + 1.0);
}

/// C(theta, theta~) = coefficient(x) cos 2(theta + theta~) in the CM frame.
inline double polarization_correlation_cm(const StateSpec& spec, double x, double theta,
                                          double theta_tilde) {
  if (!(x >= 0.0)) throw InvalidInput("x must be non-negative");
  const double c = std::cos(2.0 * (theta + theta_tilde));
  switch (spec.kind) {
    case StateKind::psi: return psi_cm_coefficient(x) * c;
    case StateKind::phi: return 0.0;
    case StateKind::xi: return xi_cm_coefficient(x) * c;
    case StateKind::chi:
      throw InvalidInput("no closed-form CM polarization correlation for a general chi state");
  }
  throw InvalidInput("unknown state kind");
}

/// xi polarization correlation for |k| = |p|, angle alpha between the
/// momenta, x = (|k|/m)^2.
inline double equal_energy_correlation(double x, double alpha, double theta, double theta_tilde) {
  if (!(x >= 0.0)) throw InvalidInput("x must be non-negative");
  if (!(alpha > 0.0 && alpha <= kPi)) {
    throw InvalidInput("alpha must lie in (0, pi]; alpha = 0 means coincident momenta");
  }
  const double ca = std::cos(alpha);
  const double c2 = std::cos(2.0 * theta) * std::cos(2.0 * theta_tilde);
  const double s2 = std::sin(2.0 * theta) * std::sin(2.0 * theta_tilde);
  const double d = x + 1.0 - x * ca;
  const double cc = 2.0 * x * (x + 1.0) * (ca - 1.0) * (ca - 1.0) + ca * ca + 1.0;
  const double ss = 2.0 * d * (-x + x * ca + ca);
  return (cc * c2 + ss * s2) / (2.0 * d * d + 1.0);
}

}  // namespace vbcorr
