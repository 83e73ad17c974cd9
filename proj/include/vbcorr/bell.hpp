#pragma once

// CHSH analysis of the linear-polarization correlators.

#include <array>
#include <cmath>
#include <functional>
#include <variant>
#include <vector>

#include "vbcorr/correlators.hpp"
#include "vbcorr/numerics.hpp"

namespace vbcorr {

/// Alice measures at theta_a or theta_c, Bob at theta_b or theta_d.
struct ChshAngles {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  /// (0, pi/8, 6pi/8, 3pi/8): the four-cosine combination reaches 2 sqrt2.
  static ChshAngles canonical() { return {0.0, kPi / 8.0, 6.0 * kPi / 8.0, 3.0 * kPi / 8.0}; }
};

/// Centre-of-mass pair parameterized by x = (|k|/m)^2.
struct CmConfiguration {
  double x = 0.0;
  double mass = 1.0;
};

struct GeneralConfiguration {
  FourMomentum k;
  FourMomentum p;
};

using MomentumConfiguration = std::variant<CmConfiguration, GeneralConfiguration>;

struct ChshSetting {
  ChshAngles angles = ChshAngles::canonical();
  StateSpec state = StateSpec::xi();
  MomentumConfiguration momenta = CmConfiguration{};
  GaugeChoice gauge = GaugeChoice::pair_common();
};

struct ChshReport {
  double left_side;
  bool violated;
  double margin;
};

inline ChshReport make_report(double left_side) { return {left_side, left_side > 2.0, left_side - 2.0}; }

/// |C(a,b) - C(a,d)| + |C(c,b) + C(c,d)|.
template <typename Corr>
double chsh_combination(Corr&& corr, const ChshAngles& t) {
  return std::abs(corr(t.a, t.b) - corr(t.a, t.d)) + std::abs(corr(t.c, t.b) + corr(t.c, t.d));
}

/// The angular factor of the CM left side; bounded by 2 sqrt2.
inline double four_cosine_combination(const ChshAngles& t) {
  return chsh_combination([](double u, double v) { return std::cos(2.0 * (u + v)); }, t);
}

/// Correlation function C(theta, theta~) for a setting: CM closed forms for
/// psi/phi/xi, general closed forms in the pair-common gauge, and the
/// coefficient-model oracle otherwise.
inline std::function<double(double, double)> correlator_for(const ChshSetting& s) {
  if (const auto* cm = std::get_if<CmConfiguration>(&s.momenta)) {
    if (!(cm->x >= 0.0)) throw InvalidInput("x must be non-negative");
    if (s.state.kind != StateKind::chi) {
      return [spec = s.state, x = cm->x](double t, double tt) {
        return polarization_correlation_cm(spec, x, t, tt);
      };
    }
    if (cm->x == 0.0) throw InvalidInput("chi CHSH evaluation needs x > 0");
    const MomentumPair pair = cm_configuration(cm->x, cm->mass);
    const TwoBosonState state = build_state(s.state, pair.k, pair.p, s.gauge);
    return [state](double t, double tt) { return polarization_correlation_oracle(state, t, tt); };
  }
  const auto& g = std::get<GeneralConfiguration>(s.momenta);
  if (s.state.kind != StateKind::chi && s.gauge.mode == GaugeMode::pair_common) {
    detail::require_pair(g.k, g.p);
    return [spec = s.state, k = g.k, p = g.p](double t, double tt) {
      return polarization_correlation_closed(spec, k, p, t, tt);
    };
  }
  const TwoBosonState state = build_state(s.state, g.k, g.p, s.gauge);
  return [state](double t, double tt) { return polarization_correlation_oracle(state, t, tt); };
}

inline double chsh_left_side(const ChshSetting& s) {
  return chsh_combination(correlator_for(s), s.angles);
}

inline ChshReport evaluate_chsh(const ChshSetting& s) { return make_report(chsh_left_side(s)); }

inline double chsh_threshold_closed_form() {
  return -0.5 + 1.0 / (2.0 * std::sqrt(2.0 * std::sqrt(2.0) - 2.0));
}

/// x at which the CM xi left side at the canonical angles crosses 2,
/// located by bisection on [0, 1].
inline double chsh_threshold(double tol = 1e-12) {
  auto excess = [](double x) {
    ChshSetting s;
    s.momenta = CmConfiguration{x};
    return chsh_left_side(s) - 2.0;
  };
  return bisect(excess, 0.0, 1.0, tol, 60).root;
}

struct ChshOptimum {
  ChshAngles angles;
  double left_side;
};

namespace detail {

inline double wrap_pi(double t) {
  double r = std::fmod(t, kPi);
  if (r < 0.0) r += kPi;
  return r;
}

}  // namespace detail

/// Maximizes the left side over the four angles. Correlators are pi-periodic
/// in each angle, so a grid of `grid` points on [0, pi) is searched exactly
/// (for fixed Bob angles the best Alice angles decouple), then each angle is
/// refined by golden-section search within one grid step. Refinement only
/// accepts improvements, so the result never drops below the grid optimum.
inline ChshOptimum optimize_chsh(const std::function<double(double, double)>& corr, int grid = 64) {
  if (grid < 8) throw InvalidInput("angle grid needs at least 8 points");
  const double step = kPi / grid;
  std::vector<double> table(static_cast<std::size_t>(grid * grid));
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) table[static_cast<std::size_t>(i * grid + j)] = corr(i * step, j * step);
  auto at = [&](int i, int j) { return table[static_cast<std::size_t>(i * grid + j)]; };

  ChshOptimum best{{}, -1.0};
  for (int b = 0; b < grid; ++b) {
    for (int d = 0; d < grid; ++d) {
      int ia = 0, ic = 0;
      double va = -1.0, vc = -1.0;
      for (int i = 0; i < grid; ++i) {
        const double diff = std::abs(at(i, b) - at(i, d));
        const double sum = std::abs(at(i, b) + at(i, d));
        if (diff > va) { va = diff; ia = i; }
        if (sum > vc) { vc = sum; ic = i; }
      }
      if (va + vc > best.left_side) {
        best = {{ia * step, b * step, ic * step, d * step}, va + vc};
      }
    }
  }

  auto objective = [&](const ChshAngles& t) { return chsh_combination(corr, t); };
  std::array<double ChshAngles::*, 4> coords{&ChshAngles::a, &ChshAngles::b, &ChshAngles::c,
                                             &ChshAngles::d};
  for (int sweep = 0; sweep < 20; ++sweep) {
    const double before = best.left_side;
    for (auto member : coords) {
      ChshAngles trial = best.angles;
      const double centre = trial.*member;
      const MaxResult r = golden_section_max(
          [&](double v) {
            trial.*member = v;
            return objective(trial);
          },
          centre - step, centre + step, 1e-13);
      if (r.value > best.left_side) {
        best.angles.*member = r.arg;
        best.left_side = r.value;
      }
    }
    if (best.left_side - before < 1e-15) break;
  }
  for (auto member : coords) best.angles.*member = detail::wrap_pi(best.angles.*member);
  return best;
}

inline ChshOptimum optimize_angles(const ChshSetting& s, int grid = 64) {
  return optimize_chsh(correlator_for(s), grid);
}

inline ChshOptimum optimize_angles(double x, const StateSpec& state, int grid = 64) {
  ChshSetting s;
  s.state = state;
  s.momenta = CmConfiguration{x};
  return optimize_angles(s, grid);
}

}  // namespace vbcorr
