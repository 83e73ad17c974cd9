#pragma once

// One-particle polarization vectors and two-boson scalar states in the
// symmetrized helicity basis |(k,l);(p,l')>.
//
// Normalization convention: every two-particle bracket carries a factor
// 4 k0 p0 [delta^3(0)]^2. The regulator [delta^3(0)]^2 is set to 1 and the
// 4 k0 p0 factor is kept explicit, so squared_norm() = 4 k0 p0 sum |c|^2.

#include <cmath>
#include <string>
#include <variant>

#include "vbcorr/spin1rep.hpp"

namespace vbcorr {

// ---------------------------------------------------------------------------
// Polarization vectors

struct Longitudinal {};
/// alpha |p,+1> + beta |p,-1> with |alpha|^2 + |beta|^2 = 1.
struct Transversal {
  Complex alpha;
  Complex beta;
};
struct CircularPlus {};
struct CircularMinus {};
/// (e^{i theta}|p,+1> + e^{-i theta}|p,-1>)/sqrt2.
struct Linear {
  double theta;
};

using PolarizationKind = std::variant<Longitudinal, Transversal, CircularPlus, CircularMinus, Linear>;

/// Contravariant polarization four-vector epsilon^mu(p) for a given gauge
/// vector a_p. epsilon_mu p^mu = 0 for every kind.
struct PolarizationVector {
  FourMomentum momentum;
  CVec4 components;  // epsilon^mu
  PolarizationKind kind;
  Vec3 gauge_vector;
};

inline PolarizationVector make_polarization(const FourMomentum& p, const PolarizationKind& kind,
                                            const Vec3& a) {
  direction_rotation(p, a);  // validates p != 0 and a
  const Vec3 n = p.direction();
  const CVec3 ac = a.cast<Complex>();
  const CVec3 bc = n.cross(a).cast<Complex>();
  const double s = 1.0 / std::sqrt(2.0);

  auto transverse = [&](Complex alpha, Complex beta) {
    CVec4 e;
    e << 0.0, ((alpha - beta) * ac + kI * (alpha + beta) * bc) * s;
    return e;
  };

  CVec4 eps = std::visit(
      [&](const auto& k) -> CVec4 {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Longitudinal>) {
          const double m = p.mass();
          CVec4 e;
          e << -p.momentum_norm() / m, (-p.energy() / m * n).cast<Complex>();
          return e;
        } else if constexpr (std::is_same_v<K, Transversal>) {
          const double norm = std::norm(k.alpha) + std::norm(k.beta);
          if (std::abs(norm - 1.0) > 1e-12) {
            throw InvalidInput("transversal polarization needs |alpha|^2 + |beta|^2 = 1");
          }
          return transverse(k.alpha, k.beta);
        } else if constexpr (std::is_same_v<K, CircularPlus>) {
          return transverse(1.0, 0.0);
        } else if constexpr (std::is_same_v<K, CircularMinus>) {
          return transverse(0.0, 1.0);
        } else {
          CVec4 e;
          e << 0.0, kI * (std::sin(k.theta) * ac + std::cos(k.theta) * bc);
          return e;
        }
      },
      kind);
  return {p, eps, kind, a};
}

inline PolarizationVector make_polarization(const FourMomentum& p, const PolarizationKind& kind,
                                            const GaugeChoice& gauge) {
  return make_polarization(p, kind, gauge_vector(gauge, p.direction()));
}

/// Helicity components f_l = epsilon_mu E^mu_l(p), ordered (+1, 0, -1).
/// `amplitude` must share the polarization vector's momentum; when the two
/// gauge vectors differ the result is expressed in the amplitude's basis.
inline CVec3 helicity_coeffs(const PolarizationVector& eps, const AmplitudeMatrix& amplitude) {
  CVec3 f;
  for (int l = 0; l < 3; ++l) f(l) = minkowski_dot(eps.components, amplitude.entries.col(l));
  return f;
}

inline CVec3 helicity_coeffs_of_polarization(const PolarizationVector& eps) {
  return helicity_coeffs(eps, amplitude_helicity(eps.momentum, eps.gauge_vector));
}

/// Closed-form helicity components of the linear polarization state.
inline CVec3 linear_polarization_coeffs(double theta) {
  const double s = 1.0 / std::sqrt(2.0);
  return CVec3(std::polar(s, theta), 0.0, std::polar(s, -theta));
}

// ---------------------------------------------------------------------------
// Two-boson states

/// Superposition sum_{l,l'} c[l][l'] |(k,l);(p,l')> for fixed k != p. Row
/// index is the helicity of the k particle, column index that of p.
class TwoBosonState {
 public:
  TwoBosonState(const FourMomentum& k, const FourMomentum& p, const CMat3& coeffs,
                const PairGauge& gauge)
      : k_(k), p_(p), coeffs_(coeffs), gauge_(gauge) {
    if (!coeffs.allFinite()) throw NumericalError("state coefficients are not finite");
    if (coeffs.squaredNorm() == 0.0) throw InvalidInput("zero state");
  }

  const FourMomentum& k() const { return k_; }
  const FourMomentum& p() const { return p_; }
  const CMat3& coeffs() const { return coeffs_; }
  const PairGauge& gauge() const { return gauge_; }

  Complex coeff(int lambda_k, int lambda_p) const {
    return coeffs_(helicity_index(lambda_k), helicity_index(lambda_p));
  }

  /// Bracket factor 4 k0 p0 with the regulator set to 1.
  double bracket_factor() const { return 4.0 * k_.energy() * p_.energy(); }

  double squared_norm() const { return bracket_factor() * coeffs_.squaredNorm(); }

  /// <this|other>; both states must share momenta and gauge.
  Complex overlap(const TwoBosonState& other) const {
    return bracket_factor() * (coeffs_.adjoint() * other.coeffs_).trace();
  }

  TwoBosonState with_coeffs(const CMat3& c) const { return {k_, p_, c, gauge_}; }

 private:
  FourMomentum k_;
  FourMomentum p_;
  CMat3 coeffs_;
  PairGauge gauge_;
};

namespace detail {

inline void require_pair(const FourMomentum& k, const FourMomentum& p) {
  if (std::abs(k.mass() - p.mass()) > 1e-12 * std::max(k.mass(), p.mass())) {
    throw InvalidInput("both bosons must have the same mass");
  }
  if (k.momentum_norm() == 0.0 || p.momentum_norm() == 0.0) {
    throw InvalidInput("helicity states need nonzero three-momenta");
  }
  if (coincident(k, p)) throw InvalidInput("coincident momenta unsupported (k must differ from p)");
}

struct PairAmplitudes {
  AmplitudeMatrix ek;
  AmplitudeMatrix ep;
};

inline PairAmplitudes pair_amplitudes(const FourMomentum& k, const FourMomentum& p,
                                      const PairGauge& g) {
  require_pair(k, p);
  return {amplitude_helicity(k, g.a_k), amplitude_helicity(p, g.a_p)};
}

}  // namespace detail

/// psi: c[l][l'] = eta_{mu nu} E^mu_l(k) E^nu_l'(p).
inline TwoBosonState state_psi(const FourMomentum& k, const FourMomentum& p, const PairGauge& g) {
  const auto [ek, ep] = detail::pair_amplitudes(k, p, g);
  const CMat3 c = ek.entries.transpose() * metric().cast<Complex>() * ep.entries;
  return {k, p, c, g};
}

/// phi: c[l][l'] = [p_mu E^mu_l(k)] [k_nu E^nu_l'(p)].
inline TwoBosonState state_phi(const FourMomentum& k, const FourMomentum& p, const PairGauge& g) {
  const auto [ek, ep] = detail::pair_amplitudes(k, p, g);
  const CVec4 pl = (metric() * p.vector()).cast<Complex>();
  const CVec4 kl = (metric() * k.vector()).cast<Complex>();
  const CVec3 u = ek.entries.transpose() * pl;
  const CVec3 w = ep.entries.transpose() * kl;
  return {k, p, CMat3(u * w.transpose()), g};
}

/// chi = alpha (k.p) psi + beta phi.
inline TwoBosonState state_chi(const FourMomentum& k, const FourMomentum& p, Complex alpha,
                               Complex beta, const PairGauge& g) {
  if (alpha == 0.0 && beta == 0.0) throw InvalidInput("chi needs (alpha, beta) != (0, 0)");
  const double kp = minkowski_product(k, p);
  const CMat3 c = alpha * kp * state_psi(k, p, g).coeffs() + beta * state_phi(k, p, g).coeffs();
  return {k, p, c, g};
}

/// xi = -(k.p) psi + phi, assembled from its helicity decomposition so the
/// helicity-0 entries carry explicit powers of m and stay finite as m -> 0.
inline TwoBosonState state_xi(const FourMomentum& k, const FourMomentum& p, const PairGauge& g) {
  const auto [ek, ep] = detail::pair_amplitudes(k, p, g);
  const double m = k.mass();
  const double kp = minkowski_product(k, p);
  const Vec3& kv = k.momentum();
  const Vec3& pv = p.momentum();
  const double kn = k.momentum_norm();
  const double pn = p.momentum_norm();

  auto spatial_col = [](const AmplitudeMatrix& e, int lambda) -> CVec3 {
    return e.entries.block<3, 1>(1, helicity_index(lambda));
  };
  // Bilinear (unconjugated) dot product.
  auto dot = [](const CVec3& u, const CVec3& v) { return u.cwiseProduct(v).sum(); };
  const CVec3 kc = kv.cast<Complex>();
  const CVec3 pc = pv.cast<Complex>();

  CMat3 c = CMat3::Zero();
  for (int l : {1, -1}) {
    const CVec3 ekl = spatial_col(ek, l);
    const Complex p_dot_ek = dot(pc, ekl);
    for (int lp : {1, -1}) {
      const CVec3 epl = spatial_col(ep, lp);
      c(helicity_index(l), helicity_index(lp)) = kp * dot(ekl, epl) + p_dot_ek * dot(kc, epl);
    }
    c(helicity_index(l), helicity_index(0)) = m * k.energy() / pn * p_dot_ek;
    c(helicity_index(0), helicity_index(l)) =
        m * p.energy() / kn * dot(kc, spatial_col(ep, l));
  }
  c(helicity_index(0), helicity_index(0)) = m * m * kv.dot(pv) / (kn * pn);
  return {k, p, c, g};
}

inline TwoBosonState state_psi(const FourMomentum& k, const FourMomentum& p, const GaugeChoice& g) {
  return state_psi(k, p, resolve_pair_gauge(g, k, p));
}
inline TwoBosonState state_phi(const FourMomentum& k, const FourMomentum& p, const GaugeChoice& g) {
  return state_phi(k, p, resolve_pair_gauge(g, k, p));
}
inline TwoBosonState state_xi(const FourMomentum& k, const FourMomentum& p, const GaugeChoice& g) {
  return state_xi(k, p, resolve_pair_gauge(g, k, p));
}
inline TwoBosonState state_chi(const FourMomentum& k, const FourMomentum& p, Complex alpha,
                               Complex beta, const GaugeChoice& g) {
  return state_chi(k, p, alpha, beta, resolve_pair_gauge(g, k, p));
}

// Closed-form norms and overlaps divided by the bracket factor 4 k0 p0.

inline double psi_norm2_reduced(double kp, double m) {
  const double r = kp * kp / (m * m * m * m);
  return r + 2.0;
}

inline double phi_norm2_reduced(double kp, double m) {
  const double m4 = m * m * m * m;
  const double r = kp * kp / m4 - 1.0;
  return m4 * r * r;
}

inline double phi_psi_overlap_reduced(double kp, double m) {
  return kp * (kp * kp / (m * m * m * m) - 1.0);
}

inline double chi_norm2_reduced(double kp, double m, Complex alpha, Complex beta) {
  const double r = kp * kp / (m * m * m * m);
  return std::norm(alpha) * kp * kp * (r + 2.0) + std::norm(beta) * phi_norm2_reduced(kp, m) +
         2.0 * std::real(std::conj(alpha) * beta) * kp * kp * (r - 1.0);
}

inline double xi_norm2_reduced(double kp, double m) { return 2.0 * kp * kp + m * m * m * m; }

}  // namespace vbcorr
