#pragma once

// Parameter sweeps over (x, alpha) for the polarization correlator and over
// x for the CHSH left side, emitted as flat record tables.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "vbcorr/bell.hpp"
#include "vbcorr/io.hpp"

namespace vbcorr {

struct GridRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  std::vector<double> values() const { return linspace(min, max, steps); }
};

enum class MethodSelection { closed, oracle, both };

inline std::string to_string(MethodSelection m) {
  switch (m) {
    case MethodSelection::closed: return "closed";
    case MethodSelection::oracle: return "oracle";
    case MethodSelection::both: return "both";
  }
  return "?";
}

struct SweepConfig {
  StateSpec state = StateSpec::xi();
  GridRange x{0.0, 10.0, 101};
  GridRange alpha{kPi / 2.0, kPi / 2.0, 1};
  double theta = 0.0;
  double theta_tilde = 0.0;
  MethodSelection method = MethodSelection::closed;
  OutputFormat format = OutputFormat::csv;
};

struct SweepRecord {
  double x;
  double alpha;
  double theta;
  double theta_tilde;
  double value;
  std::string method;
  std::optional<double> residual;
};

inline void validate(const SweepConfig& c) {
  if (c.x.steps < 2 && c.x.min != c.x.max) throw InvalidInput("x grid needs at least two steps");
  if (c.alpha.steps < 2 && c.alpha.min != c.alpha.max) throw InvalidInput("alpha grid needs at least two steps");
  if (!(c.x.min >= 0.0)) throw InvalidInput("x must be non-negative");
  if (!(c.alpha.min > 0.0) || !(c.alpha.max <= kPi)) throw InvalidInput("alpha must lie in (0, pi]");
  if (!std::isfinite(c.theta) || !std::isfinite(c.theta_tilde)) throw InvalidInput("angles must be finite");
}

/// Correlation at one (x, alpha) grid point of the equal-energy configuration.
/// xi uses the dedicated (x, alpha) closed form; other states go through the
/// general-momenta routes and need x > 0.
inline SweepRecord sweep_point(const SweepConfig& c, double x, double alpha) {
  SweepRecord r{x, alpha, c.theta, c.theta_tilde, 0.0, to_string(c.method), std::nullopt};
  const bool can_build = x > 0.0;
  auto oracle = [&] {
    const MomentumPair pair = equal_energy_configuration(x, alpha);
    return polarization_correlation_oracle(build_state(c.state, pair.k, pair.p), c.theta, c.theta_tilde);
  };
  auto closed = [&] {
    if (c.state.kind == StateKind::xi) return equal_energy_correlation(x, alpha, c.theta, c.theta_tilde);
    if (!can_build) throw InvalidInput("state " + to_string(c.state.kind) + " needs x > 0");
    const MomentumPair pair = equal_energy_configuration(x, alpha);
    return polarization_correlation_closed(c.state, pair.k, pair.p, c.theta, c.theta_tilde);
  };
  const bool closed_available = c.state.kind != StateKind::chi;
  switch (c.method) {
    case MethodSelection::closed:
      if (!closed_available) throw InvalidInput("chi has no closed-form polarization correlation; use --method oracle");
      r.value = closed();
      break;
    case MethodSelection::oracle:
      if (!can_build) throw InvalidInput("the oracle needs x > 0 (helicity states are undefined at rest)");
      r.value = oracle();
      break;
    case MethodSelection::both:
      if (!closed_available) throw InvalidInput("chi has no closed-form polarization correlation; use --method oracle");
      r.value = closed();
      if (can_build) {
        r.residual = r.value - oracle();
      } else {
        r.method = "closed";
      }
      break;
  }
  return r;
}

inline std::vector<SweepRecord> run_sweep(const SweepConfig& c) {
  validate(c);
  std::vector<SweepRecord> out;
  const auto xs = c.x.values();
  const auto alphas = c.alpha.values();
  out.reserve(xs.size() * alphas.size());
  for (double x : xs)
    for (double a : alphas) out.push_back(sweep_point(c, x, a));
  return out;
}

inline Table sweep_table(const std::vector<SweepRecord>& records) {
  Table t{{"x", "alpha", "theta", "theta_tilde", "value", "method", "residual"}, {}};
  for (const auto& r : records) {
    t.rows.push_back({r.x, r.alpha, r.theta, r.theta_tilde, r.value, r.method,
                      r.residual ? Cell(*r.residual) : Cell(std::monostate{})});
  }
  return t;
}

/// Surface over x in [0, 10] and alpha in (0, pi] at theta = 5pi/6,
/// theta~ = 8.69pi/6. The alpha grid is pi (i+1)/101, i = 0..100.
inline SweepConfig preset_fig1() {
  SweepConfig c;
  c.x = {0.0, 10.0, 101};
  c.alpha = {kPi / 101.0, kPi, 101};
  c.theta = 5.0 * kPi / 6.0;
  c.theta_tilde = 8.69 * kPi / 6.0;
  return c;
}

/// alpha = pi/2 slice of preset_fig1 on 1001 points.
inline SweepConfig preset_fig2() {
  SweepConfig c = preset_fig1();
  c.x = {0.0, 10.0, 1001};
  c.alpha = {kPi / 2.0, kPi / 2.0, 1};
  return c;
}

// ---------------------------------------------------------------------------
// CHSH sweeps

enum class AngleMode { canonical, fixed, optimize };

struct ChshSweepConfig {
  StateSpec state = StateSpec::xi();
  GridRange x{0.0, 0.6, 601};
  AngleMode mode = AngleMode::canonical;
  ChshAngles angles = ChshAngles::canonical();
  OutputFormat format = OutputFormat::csv;
};

inline ChshSweepConfig preset_fig3() { return {}; }

struct ChshSweepResult {
  Table table;
  double threshold_bisection;
  double threshold_closed_form;
  std::optional<double> first_violation_x;
};

inline ChshSweepResult run_chsh_sweep(const ChshSweepConfig& c) {
  if (c.x.steps < 2 && c.x.min != c.x.max) throw InvalidInput("x grid needs at least two steps");
  if (!(c.x.min >= 0.0)) throw InvalidInput("x must be non-negative");
  ChshSweepResult res{{{"x", "theta_a", "theta_b", "theta_c", "theta_d", "left_side", "violated", "margin"}, {}},
                      chsh_threshold(), chsh_threshold_closed_form(), std::nullopt};
  for (double x : c.x.values()) {
    ChshSetting s;
    s.state = c.state;
    s.momenta = CmConfiguration{x};
    double left = 0.0;
    if (c.mode == AngleMode::optimize) {
      const ChshOptimum opt = optimize_angles(s);
      s.angles = opt.angles;
      left = opt.left_side;
    } else {
      s.angles = c.mode == AngleMode::canonical ? ChshAngles::canonical() : c.angles;
      left = chsh_left_side(s);
    }
    const ChshReport rep = make_report(left);
    if (rep.violated && !res.first_violation_x) res.first_violation_x = x;
    res.table.rows.push_back({x, s.angles.a, s.angles.b, s.angles.c, s.angles.d, rep.left_side, rep.violated, rep.margin});
  }
  return res;
}

inline std::string chsh_summary(const ChshSweepResult& r) {
  std::string s = "threshold x0: bisection=" + format_double(r.threshold_bisection) +
                  " closed_form=" + format_double(r.threshold_closed_form) +
                  " difference=" + format_double(r.threshold_bisection - r.threshold_closed_form) + "\n";
  s += "first violating grid point: " + (r.first_violation_x ? "x=" + format_double(*r.first_violation_x) : std::string("none")) + "\n";
  return s;
}

}  // namespace vbcorr
