#pragma once

// Seeded invariant suites behind `vbcorr verify`. Each suite draws its own
// generator from (seed, suite index), so reports are reproducible and do not
// depend on which suites ran before.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "vbcorr/bell.hpp"
#include "vbcorr/random.hpp"
#include "vbcorr/sweep.hpp"

namespace vbcorr {

struct SuiteResult {
  std::string name;
  bool pass;
  double max_residual;
  double tolerance;
  int cases;
};

namespace verify_detail {

struct Tracker {
  double max = 0.0;
  int cases = 0;
  bool failed = false;  // for non-numeric checks (exceptions, ordering)

  void add(double r) {
    ++cases;
    if (!(r <= max) || std::isnan(r)) max = std::isnan(r) ? INFINITY : std::max(max, r);
  }
  void require(bool ok) {
    ++cases;
    failed = failed || !ok;
  }
};

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline CMat3 phase_rows(double delta) {
  return Eigen::Vector3cd(std::polar(1.0, delta), 1.0, std::polar(1.0, -delta)).asDiagonal();
}

using Suite = std::function<void(Rng&, int, Tracker&)>;

struct SuiteDef {
  std::string name;
  double tolerance;
  Suite body;
};

/// Random pair of distinct, non-degenerate momenta with a shared mass.
inline MomentumPair random_pair(Rng& rng, double max_ratio = 20.0) {
  const double m = uniform(rng, 0.1, 10.0);
  return {random_momentum_with_mass(rng, m, max_ratio), random_momentum_with_mass(rng, m, max_ratio)};
}

inline std::vector<SuiteDef> suites() {
  std::vector<SuiteDef> s;

  // --- kinematics
  s.push_back({"kinematics.boost_lorentz_membership", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const Mat4 l = standard_boost(random_momentum(rng)).matrix();
      const double scale = l(0, 0) * l(0, 0);
      t.add(max_abs(Mat4(l.transpose() * metric() * l - metric())) / scale);
    }
  }});
  s.push_back({"kinematics.boost_maps_rest_momentum", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const FourMomentum p = random_momentum(rng);
      const Vec4 image = standard_boost(p) * FourMomentum::at_rest(p.mass()).vector();
      t.add(max_abs(Vec4(image - p.vector())) / p.energy());
    }
    t.add(max_abs(Mat4(standard_boost(FourMomentum::at_rest(2.0)).matrix() - Mat4::Identity())));
  }});
  s.push_back({"kinematics.wigner_rotation_in_so3", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const LorentzMatrix lam = random_lorentz(rng, 4.0);
      const FourMomentum p = random_momentum(rng, 0.1, 10.0, 10.0);
      const Mat3 r = wigner_rotation(lam, p).matrix();
      t.add(max_abs(Mat3(r.transpose() * r - Mat3::Identity())));
      t.add(std::abs(r.determinant() - 1.0));
      const Rotation3 pure = random_rotation(rng);
      t.add(max_abs(Mat3(wigner_rotation(pure.as_lorentz(), p).matrix() - pure.matrix())));
    }
  }});
  s.push_back({"kinematics.direction_rotation_orthonormal", 1e-12, [](Rng& rng, int n, Tracker& t) {
    const GaugeChoice gauges[] = {GaugeChoice::spherical(), GaugeChoice::pair_common(),
                                  GaugeChoice::explicit_vector(Vec3(0.3, -0.2, 0.9))};
    for (int i = 0; i < n; ++i) {
      Vec3 dir = random_direction(rng);
      if (i % 4 == 1) dir = Vec3(uniform(rng, -1e-9, 1e-9), uniform(rng, -1e-9, 1e-9), 1.0).normalized();
      if (i % 4 == 3) dir = Vec3(uniform(rng, -1e-9, 1e-9), uniform(rng, -1e-9, 1e-9), -1.0).normalized();
      const FourMomentum p = FourMomentum::on_shell(1.0, uniform(rng, 0.1, 10.0) * dir);
      for (const auto& g : gauges) {
        const Mat3 r = direction_rotation(p, g).matrix();
        t.add(max_abs(Mat3(r.transpose() * r - Mat3::Identity())));
        t.add(max_abs(Vec3(r.col(2) - p.direction())));
      }
    }
  }});
  s.push_back({"kinematics.cm_partner", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const FourMomentum k = random_momentum(rng, 0.1, 10.0, 20.0);
      const FourMomentum kk = cm_partner(cm_partner(k));
      t.add(max_abs(Vec4(kk.vector() - k.vector())));
      const double m2 = k.mass() * k.mass();
      t.add(rel(minkowski_product(k, cm_partner(k)), m2 * (2.0 * k.x() + 1.0)));
    }
  }});

  // --- spin1rep
  s.push_back({"spin1rep.intertwiner", 1e-14, [](Rng&, int, Tracker& t) {
    const CMat3 v = intertwiner();
    t.add(max_abs(CMat3(v * v.adjoint() - CMat3::Identity())));
    t.add(max_abs(CMat3(v * v.transpose() - intertwiner_vvt())));
  }});
  s.push_back({"spin1rep.amplitude_identities", 1e-10, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const FourMomentum p = random_momentum(rng, 0.1, 10.0, 50.0, 1e-3);
      t.add(amplitude_residuals(amplitude_spin(p)).max());
      t.add(amplitude_residuals(amplitude_helicity(p, random_perpendicular(rng, p.direction()))).max());
    }
  }});
  s.push_back({"spin1rep.helicity_from_spin_amplitudes", 1e-10, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const FourMomentum p = random_momentum(rng, 0.1, 10.0, 50.0, 1e-3);
      const Vec3 a = random_perpendicular(rng, p.direction());
      const CMat3 d = rotation_rep(direction_rotation(p, a).transpose());
      const CMat43 rebuilt = amplitude_spin(p).entries * d.transpose();
      t.add(max_abs(CMat43(rebuilt - amplitude_helicity(p, a).entries)) / std::max(1.0, p.energy() / p.mass()));
    }
  }});
  s.push_back({"spin1rep.rotation_rep_homomorphism", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const Rotation3 r1 = random_rotation(rng);
      const Rotation3 r2 = random_rotation(rng);
      const CMat3 d1 = rotation_rep(r1);
      t.add(max_abs(CMat3(rotation_rep(r1 * r2) - d1 * rotation_rep(r2))));
      t.add(max_abs(CMat3(d1 * rotation_rep(r1.transpose()) - CMat3::Identity())));
      t.add(max_abs(CMat3(d1 * d1.adjoint() - CMat3::Identity())));
    }
  }});
  s.push_back({"spin1rep.weinberg_condition", 1e-9, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      t.add(check_weinberg(random_lorentz(rng, 4.0), random_momentum(rng)));
    }
  }});
  s.push_back({"spin1rep.gauge_phase_law", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const FourMomentum p = random_momentum(rng, 0.1, 10.0, 20.0, 1e-3);
      const Vec3 nn = p.direction();
      const Vec3 a = random_perpendicular(rng, nn);
      const double delta = uniform(rng, -kPi, kPi);
      const Vec3 a2 = Rotation3::about_axis(nn, delta) * a;
      const CMat43 e1 = amplitude_helicity(p, a).entries;
      const CMat43 e2 = amplitude_helicity(p, a2).entries;
      t.add(max_abs(CMat43(e2 - e1 * phase_rows(delta))));
    }
  }});

  // --- states
  s.push_back({"states.norm_formulas", 1e-10, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      const PairGauge g = resolve_pair_gauge(GaugeChoice::spherical(), k, p);
      const double m = k.mass();
      const double kp = minkowski_product(k, p);
      const double f = 4.0 * k.energy() * p.energy();
      const TwoBosonState psi = state_psi(k, p, g);
      const TwoBosonState phi = state_phi(k, p, g);
      t.add(rel(psi.squared_norm() / f, psi_norm2_reduced(kp, m)));
      t.add(rel(phi.squared_norm() / f, phi_norm2_reduced(kp, m)));
      t.add(std::abs(phi.overlap(psi) / f - phi_psi_overlap_reduced(kp, m)) /
            std::max(1.0, std::abs(phi_psi_overlap_reduced(kp, m))));
      t.add(rel(state_xi(k, p, g).squared_norm() / f, xi_norm2_reduced(kp, m)));
      const Complex al = random_complex(rng), be = random_complex(rng);
      t.add(rel(state_chi(k, p, al, be, g).squared_norm() / f, chi_norm2_reduced(kp, m, al, be)));
    }
  }});
  s.push_back({"states.xi_decomposition_matches_combination", 1e-9, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng, 10.0);
      const PairGauge g = resolve_pair_gauge(GaugeChoice::pair_common(), k, p);
      const double kp = minkowski_product(k, p);
      const CMat3 combo = -kp * state_psi(k, p, g).coeffs() + state_phi(k, p, g).coeffs();
      const CMat3 direct = state_xi(k, p, g).coeffs();
      t.add(max_abs(CMat3(direct - combo)) / std::max(1.0, max_abs(combo)));
    }
  }});
  s.push_back({"states.gauge_phase_covariance", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      const PairGauge g = resolve_pair_gauge(GaugeChoice::spherical(), k, p);
      const double delta = uniform(rng, -kPi, kPi);
      const PairGauge g2{Rotation3::about_axis(k.direction(), delta) * g.a_k, g.a_p};
      for (const StateSpec spec : {StateSpec::psi(), StateSpec::phi(), StateSpec::xi()}) {
        const CMat3 c1 = build_state(spec, k, p, g).coeffs();
        const CMat3 c2 = build_state(spec, k, p, g2).coeffs();
        t.add(max_abs(CMat3(c2 - phase_rows(delta) * c1)) / std::max(1.0, max_abs(c1)));
      }
    }
  }});
  s.push_back({"states.polarization_transversality", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const FourMomentum p = random_momentum(rng, 0.1, 10.0, 20.0, 1e-2);
      const Vec3 a = random_perpendicular(rng, p.direction());
      const double th = uniform(rng, 0.0, kPi);
      const CVec4 pv = p.vector().cast<Complex>();
      const auto lin = make_polarization(p, Linear{th}, a);
      const auto lon = make_polarization(p, Longitudinal{}, a);
      t.add(std::abs(minkowski_dot(lin.components, pv)) / p.energy());
      t.add(std::abs(minkowski_dot(lon.components, pv)) / (p.energy() * p.energy() / p.mass()));
      const auto perp = make_polarization(p, Linear{th + kPi / 2.0}, a);
      t.add(std::abs(lin.components.tail<3>().dot(perp.components.tail<3>())));
    }
  }});
  s.push_back({"states.polarization_helicity_components", 1e-10, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const FourMomentum p = random_momentum(rng, 0.1, 10.0, 20.0, 1e-2);
      const Vec3 a = random_perpendicular(rng, p.direction());
      const double th = uniform(rng, 0.0, kPi);
      const auto lin = make_polarization(p, Linear{th}, a);
      const auto lon = make_polarization(p, Longitudinal{}, a);
      t.add(max_abs(CVec3(helicity_coeffs_of_polarization(lin) - linear_polarization_coeffs(th))));
      t.add(max_abs(CVec3(helicity_coeffs_of_polarization(lon) - CVec3(0.0, 1.0, 0.0))));
      t.add(max_abs(CVec3(helicity_coeffs_of_polarization(make_polarization(p, CircularPlus{}, a)) - CVec3(1.0, 0.0, 0.0))));
    }
  }});

  // --- observables
  s.push_back({"observables.hermitian_spectra", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const FourMomentum p = random_momentum(rng, 0.1, 10.0, 20.0, 1e-2);
      const Vec3 a = random_perpendicular(rng, p.direction());
      const double th = uniform(rng, -kPi, kPi);
      const CMat3 pi = polarization_projector(th, p, a);
      const CMat3 sm = polarization_observable(Side::k, th, p, a).matrix;
      t.add(hermiticity_residual(sm));
      t.add(max_abs(CMat3(pi * pi - pi)));
      t.add(std::abs(pi.trace() - 1.0));
      t.add(std::abs(sm.trace()));
      const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<CMat3>(sm).eigenvalues();
      t.add(max_abs(Eigen::Vector3d(ev - Eigen::Vector3d(-1.0, 0.0, 1.0))));
      t.add(max_abs(CMat3(sm - polarization_observable(Side::k, th + kPi, p, a).matrix)));
      t.add(max_abs(CMat3(sm + polarization_observable(Side::k, th + kPi / 2.0, p, a).matrix)));
    }
    t.add(hermiticity_residual(helicity_observable(Side::k).matrix));
  }});
  s.push_back({"observables.sides_commute", 1e-13, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      const PairGauge g = resolve_pair_gauge(GaugeChoice::pair_common(), k, p);
      CMat3 c;
      for (int r = 0; r < 3; ++r)
        for (int q = 0; q < 3; ++q) c(r, q) = random_complex(rng);
      const auto a = polarization_observable(Side::k, uniform(rng, 0, kPi), k, g.a_k);
      const auto b = polarization_observable(Side::p, uniform(rng, 0, kPi), p, g.a_p);
      t.add(max_abs(CMat3(vbcorr::apply(a, vbcorr::apply(b, c)) - vbcorr::apply(b, vbcorr::apply(a, c)))));
    }
  }});
  s.push_back({"observables.gauge_shift_law", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const FourMomentum p = random_momentum(rng, 0.1, 10.0, 20.0, 1e-2);
      const Vec3 a = random_perpendicular(rng, p.direction());
      const double delta = uniform(rng, -kPi, kPi);
      const double th = uniform(rng, 0.0, kPi);
      const Vec3 a2 = Rotation3::about_axis(p.direction(), delta) * a;
      t.add(max_abs(CMat3(polarization_projector(th, p, a2, a) - polarization_projector(th - delta, p, a))));
    }
  }});

  // --- correlators
  s.push_back({"correlators.helicity_closed_vs_oracle", 1e-10, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      const StateSpec specs[] = {StateSpec::psi(), StateSpec::phi(), StateSpec::xi(),
                                 StateSpec::chi(random_complex(rng), random_complex(rng))};
      for (const auto& spec : specs) {
        const double oracle = helicity_correlation_oracle(build_state(spec, k, p));
        t.add(std::abs(helicity_correlation_closed(spec, k, p) - oracle));
      }
    }
  }});
  s.push_back({"correlators.polarization_closed_vs_oracle", 1e-10, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      const double th = uniform(rng, 0.0, kPi), tt = uniform(rng, 0.0, kPi);
      for (const StateSpec spec : {StateSpec::psi(), StateSpec::phi(), StateSpec::xi()}) {
        const double oracle = polarization_correlation_oracle(build_state(spec, k, p), th, tt);
        t.add(std::abs(polarization_correlation_closed(spec, k, p, th, tt) - oracle));
      }
      const StateSpec chi = StateSpec::chi(random_complex(rng), random_complex(rng));
      const PairGauge g = resolve_pair_gauge(GaugeChoice::spherical(), k, p);
      t.add(std::abs(polarization_correlation_assembled(chi, k, p, th, tt, g) -
                     polarization_correlation_oracle(build_state(chi, k, p, g), th, tt)));
    }
  }});
  s.push_back({"correlators.spin_matches_helicity", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      t.add(std::abs(spin_correlation_psi(k, p, k.direction(), p.direction()) -
                     helicity_correlation_closed(StateSpec::psi(), k, p)));
    }
  }});
  s.push_back({"correlators.helicity_gauge_independent", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      const PairGauge g1{random_perpendicular(rng, k.direction()), random_perpendicular(rng, p.direction())};
      const PairGauge g2{random_perpendicular(rng, k.direction()), random_perpendicular(rng, p.direction())};
      const StateSpec chi = StateSpec::chi(random_complex(rng), random_complex(rng));
      for (const StateSpec spec : {StateSpec::psi(), StateSpec::xi(), chi}) {
        t.add(std::abs(helicity_correlation_oracle(build_state(spec, k, p, g1)) -
                       helicity_correlation_oracle(build_state(spec, k, p, g2))));
      }
    }
  }});
  s.push_back({"correlators.polarization_gauge_shift", 1e-11, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      const PairGauge g = resolve_pair_gauge(GaugeChoice::spherical(), k, p);
      const double dk = uniform(rng, -kPi, kPi), dp = uniform(rng, -kPi, kPi);
      const PairGauge g2{Rotation3::about_axis(k.direction(), dk) * g.a_k,
                         Rotation3::about_axis(p.direction(), dp) * g.a_p};
      const double th = uniform(rng, 0.0, kPi), tt = uniform(rng, 0.0, kPi);
      for (const StateSpec spec : {StateSpec::psi(), StateSpec::xi()}) {
        const double rotated = polarization_correlation_oracle(build_state(spec, k, p, g2), th, tt);
        const double shifted = polarization_correlation_oracle(build_state(spec, k, p, g), th - dk, tt - dp);
        t.add(std::abs(rotated - shifted));
      }
    }
  }});
  s.push_back({"correlators.values_bounded", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      const double th = uniform(rng, 0.0, kPi), tt = uniform(rng, 0.0, kPi);
      const StateSpec chi = StateSpec::chi(random_complex(rng), random_complex(rng));
      for (const StateSpec spec : {StateSpec::psi(), StateSpec::phi(), StateSpec::xi(), chi}) {
        const TwoBosonState st = build_state(spec, k, p);
        t.add(std::max(0.0, std::abs(polarization_correlation_oracle(st, th, tt)) - 1.0));
        t.add(std::max(0.0, std::abs(helicity_correlation_oracle(st)) - 1.0));
      }
    }
  }});
  s.push_back({"correlators.cm_coefficient_monotone", 0.0, [](Rng&, int, Tracker& t) {
    double prev_xi = -1.0, prev_psi = 2.0;
    for (int i = 0; i <= 100; ++i) {
      const double x = 0.1 * i;
      t.require(xi_cm_coefficient(x) > prev_xi && psi_cm_coefficient(x) < prev_psi);
      prev_xi = xi_cm_coefficient(x);
      prev_psi = psi_cm_coefficient(x);
    }
  }});
  s.push_back({"correlators.pi_periodicity", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const auto [k, p] = random_pair(rng);
      const double th = uniform(rng, 0.0, kPi), tt = uniform(rng, 0.0, kPi);
      for (const StateSpec spec : {StateSpec::psi(), StateSpec::phi(), StateSpec::xi()}) {
        const double base = polarization_correlation_closed(spec, k, p, th, tt);
        t.add(std::abs(polarization_correlation_closed(spec, k, p, th + kPi, tt) - base));
        t.add(std::abs(polarization_correlation_closed(spec, k, p, th, tt + kPi) - base));
      }
    }
  }});
  s.push_back({"correlators.cm_reductions", 1e-11, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      const double x = uniform(rng, 0.01, 50.0);
      const MomentumPair pair = cm_configuration(x, uniform(rng, 0.1, 10.0), random_direction(rng));
      const double th = uniform(rng, 0.0, kPi), tt = uniform(rng, 0.0, kPi);
      for (const StateSpec spec : {StateSpec::psi(), StateSpec::phi(), StateSpec::xi()}) {
        t.add(std::abs(polarization_correlation_closed(spec, pair.k, pair.p, th, tt) -
                       polarization_correlation_cm(spec, x, th, tt)));
      }
    }
  }});

  // --- bell
  s.push_back({"bell.left_side_monotone_in_x", 0.0, [](Rng&, int, Tracker& t) {
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      ChshSetting st;
      st.momenta = CmConfiguration{0.1 * i};
      const double v = chsh_left_side(st);
      t.require(v >= prev);
      prev = v;
    }
  }});
  s.push_back({"bell.tsirelson_cap", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      ChshSetting st;
      const double x = uniform(rng, 0.0, 100.0);
      st.momenta = CmConfiguration{x};
      st.angles = {uniform(rng, 0, kPi), uniform(rng, 0, kPi), uniform(rng, 0, kPi), uniform(rng, 0, kPi)};
      t.add(std::max(0.0, chsh_left_side(st) - 2.0 * std::sqrt(2.0) * xi_cm_coefficient(x)));
    }
  }});
  s.push_back({"bell.threshold_bisection_vs_closed_form", 1e-9, [](Rng&, int, Tracker& t) {
    t.add(std::abs(chsh_threshold() - chsh_threshold_closed_form()));
  }});
  s.push_back({"bell.psi_family_formula", 1e-12, [](Rng& rng, int n, Tracker& t) {
    for (int i = 0; i < n; ++i) {
      ChshSetting st;
      const double x = uniform(rng, 0.0, 100.0);
      st.state = StateSpec::psi();
      st.momenta = CmConfiguration{x};
      t.add(std::abs(chsh_left_side(st) - 2.0 * std::sqrt(2.0) * psi_cm_coefficient(x)));
    }
  }});
  s.push_back({"bell.nonrelativistic_value", 1e-12, [](Rng&, int, Tracker& t) {
    ChshSetting st;
    st.momenta = CmConfiguration{0.0};
    t.add(std::abs(chsh_left_side(st) - 4.0 * std::sqrt(2.0) / 3.0));
  }});
  return s;
}

}  // namespace verify_detail

/// Runs every suite with `trials` random cases each (deterministic suites
/// run once). Exceptions inside a suite count as failure.
inline std::vector<SuiteResult> run_verification(std::uint64_t seed, int trials) {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  std::vector<SuiteResult> out;
  const auto defs = verify_detail::suites();
  for (std::size_t i = 0; i < defs.size(); ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Rng rng(seq);
    verify_detail::Tracker t;
    bool threw = false;
    try {
      defs[i].body(rng, trials, t);
    } catch (const std::exception&) {
      threw = true;
    }
    const bool pass = !threw && !t.failed && t.max <= defs[i].tolerance;
    out.push_back({defs[i].name, pass, threw ? INFINITY : t.max, defs[i].tolerance, t.cases});
  }
  return out;
}

inline std::string format_report(const std::vector<SuiteResult>& results) {
  std::string s;
  int failures = 0;
  for (const auto& r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  %-48s cases=%-6d max_residual=%.3e tol=%.0e\n",
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.max_residual, r.tolerance);
    s += line;
    failures += r.pass ? 0 : 1;
  }
  s += std::to_string(results.size() - static_cast<std::size_t>(failures)) + "/" +
       std::to_string(results.size()) + " suites passed\n";
  return s;
}

}  // namespace vbcorr
