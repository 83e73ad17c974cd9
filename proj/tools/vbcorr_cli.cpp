// vbcorr: command-line front end for the vector-boson correlation library.
//
//   vbcorr verify    [--seed N] [--trials N] [--out PATH]
//   vbcorr correlate --state xi --x 1 --measurement polarization --theta 5pi/6 ...
//   vbcorr sweep     --preset fig2 --out fig2.csv
//   vbcorr chsh      --preset fig3 --angles optimize --format json
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 I/O error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vbcorr/vbcorr.hpp"

namespace {

using namespace vbcorr;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
  std::string state = "xi";
  std::string alpha_coef = "1";
  std::string beta_coef = "0";
  std::string format = "csv";
  std::string out;
  std::string gauge = "pair-common";
  std::string gauge_vector;
  std::string method = "closed";
};

StateSpec parse_state(const CommonOptions& o) {
  if (o.state == "psi") return StateSpec::psi();
  if (o.state == "phi") return StateSpec::phi();
  if (o.state == "xi") return StateSpec::xi();
  if (o.state == "chi") return StateSpec::chi(parse_complex(o.alpha_coef), parse_complex(o.beta_coef));
  throw InvalidInput("unknown state '" + o.state + "'");
}

OutputFormat parse_format(const std::string& f) {
  if (f == "csv") return OutputFormat::csv;
  if (f == "json") return OutputFormat::json;
  throw InvalidInput("unknown format '" + f + "'");
}

MethodSelection parse_method(const std::string& m) {
  if (m == "closed") return MethodSelection::closed;
  if (m == "oracle") return MethodSelection::oracle;
  if (m == "both") return MethodSelection::both;
  throw InvalidInput("unknown method '" + m + "'");
}

GaugeChoice parse_gauge(const CommonOptions& o) {
  if (o.gauge == "pair-common") return GaugeChoice::pair_common();
  if (o.gauge == "spherical") return GaugeChoice::spherical();
  if (o.gauge == "explicit") {
    if (o.gauge_vector.empty()) throw InvalidInput("--gauge explicit needs --gauge-vector x,y,z");
    return GaugeChoice::explicit_vector(parse_vec3(o.gauge_vector));
  }
  throw InvalidInput("unknown gauge '" + o.gauge + "'");
}

/// "v" for a single value or "min:max:steps".
GridRange parse_grid(const std::string& text, bool angle) {
  auto value = [&](const std::string& s) {
    if (angle) return parse_angle(s);
    const auto v = detail::parse_double(s);
    if (!v || !std::isfinite(*v)) throw InvalidInput("cannot parse number '" + s + "'");
    return *v;
  };
  const auto first = text.find(':');
  if (first == std::string::npos) {
    const double v = value(text);
    return {v, v, 1};
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos) throw InvalidInput("grid must be 'value' or 'min:max:steps', got '" + text + "'");
  const std::string steps_text = text.substr(second + 1);
  const auto steps = detail::parse_double(steps_text);
  if (!steps || *steps != std::floor(*steps) || *steps < 1 || *steps > 1e7) {
    throw InvalidInput("grid steps must be a positive integer, got '" + steps_text + "'");
  }
  GridRange g{value(text.substr(0, first)), value(text.substr(first + 1, second - first - 1)),
              static_cast<int>(*steps)};
  if (g.steps < 2 && g.min != g.max) throw InvalidInput("grid needs at least two steps");
  if (!(g.min <= g.max)) throw InvalidInput("grid range must be ordered (min <= max)");
  return g;
}

void emit(const std::string& content, const std::string& out) {
  if (out.empty()) {
    std::cout << content;
    std::cout.flush();
  } else {
    write_file(out, content);
  }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 1000;
};

int cmd_verify(const VerifyOptions& v, const CommonOptions& o) {
  const auto results = run_verification(v.seed, v.trials);
  const std::string report = format_report(results);
  emit(report, o.out);
  if (!o.out.empty()) std::cout << report;
  for (const auto& r : results) {
    if (!r.pass) return kExitVerifyFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// correlate

struct CorrelateOptions {
  std::optional<double> x;
  std::string alpha;
  double mass = 1.0;
  std::string k;
  std::string p;
  std::string measurement = "polarization";
  std::string theta = "0";
  std::string theta_tilde = "0";
  std::string spin_a;
  std::string spin_b;
};

MomentumPair correlate_momenta(const CorrelateOptions& c) {
  if (!c.k.empty() || !c.p.empty()) {
    if (c.k.empty() || c.p.empty()) throw InvalidInput("--k and --p must be given together");
    if (c.x) throw InvalidInput("give either --k/--p or --x, not both");
    return {FourMomentum::on_shell(c.mass, parse_vec3(c.k)), FourMomentum::on_shell(c.mass, parse_vec3(c.p))};
  }
  if (!c.x) throw InvalidInput("momenta missing: give --x [--alpha] or --k and --p");
  if (!(*c.x > 0.0)) throw InvalidInput("--x must be positive for a single-point evaluation");
  if (!c.alpha.empty()) return equal_energy_configuration(*c.x, parse_angle(c.alpha), c.mass);
  return cm_configuration(*c.x, c.mass);
}

int cmd_correlate(const CorrelateOptions& c, const CommonOptions& o) {
  const StateSpec spec = parse_state(o);
  const MethodSelection method = parse_method(o.method);
  const GaugeChoice gauge = parse_gauge(o);
  const OutputFormat format = parse_format(o.format);
  const MomentumPair m = correlate_momenta(c);
  detail::require_pair(m.k, m.p);
  const PairGauge g = resolve_pair_gauge(gauge, m.k, m.p);

  std::optional<double> closed;
  std::optional<double> oracle;
  const bool want_closed = method != MethodSelection::oracle;
  const bool want_oracle = method != MethodSelection::closed;
  double theta = 0.0, theta_tilde = 0.0;

  if (c.measurement == "helicity") {
    if (want_closed) closed = helicity_correlation_closed(spec, m.k, m.p);
    if (want_oracle) oracle = helicity_correlation_oracle(build_state(spec, m.k, m.p, g));
  } else if (c.measurement == "polarization") {
    theta = parse_angle(c.theta);
    theta_tilde = parse_angle(c.theta_tilde);
    if (want_closed) {
      if (spec.kind == StateKind::chi) {
        throw InvalidInput("chi has no closed-form polarization correlation; use --method oracle");
      }
      closed = gauge.mode == GaugeMode::pair_common
                   ? polarization_correlation_closed(spec, m.k, m.p, theta, theta_tilde)
                   : polarization_correlation_assembled(spec, m.k, m.p, theta, theta_tilde, g);
    }
    if (want_oracle) oracle = polarization_correlation_oracle(build_state(spec, m.k, m.p, g), theta, theta_tilde);
  } else if (c.measurement == "spin") {
    if (spec.kind != StateKind::psi) throw InvalidInput("spin correlations are available for psi only");
    if (want_oracle) throw InvalidInput("spin correlations have no oracle route; use --method closed");
    const Vec3 a = c.spin_a.empty() ? m.k.direction() : parse_vec3(c.spin_a);
    const Vec3 b = c.spin_b.empty() ? m.p.direction() : parse_vec3(c.spin_b);
    closed = spin_correlation_psi(m.k, m.p, a, b);
  } else {
    throw InvalidInput("unknown measurement '" + c.measurement + "'");
  }

  auto cell = [](const std::optional<double>& v) { return v ? Cell(*v) : Cell(std::monostate{}); };
  std::optional<double> residual;
  if (closed && oracle) residual = *closed - *oracle;
  Table t{{"state", "measurement", "theta", "theta_tilde", "closed", "oracle", "residual"}, {}};
  t.rows.push_back({to_string(spec.kind), c.measurement, theta, theta_tilde, cell(closed), cell(oracle), cell(residual)});
  emit(render(t, format), o.out);
  if (residual && std::abs(*residual) > 1e-10) {
    std::cerr << "vbcorr: closed form and oracle disagree by " << format_double(*residual) << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  std::string preset;
  std::string x;
  std::string alpha;
  std::string theta;
  std::string theta_tilde;
};

int cmd_sweep(const SweepOptions& s, const CommonOptions& o, bool state_given) {
  SweepConfig cfg;
  if (s.preset == "fig1") {
    cfg = preset_fig1();
  } else if (s.preset == "fig2") {
    cfg = preset_fig2();
  } else if (!s.preset.empty()) {
    throw InvalidInput("sweep presets are fig1 and fig2, got '" + s.preset + "'");
  }
  if (state_given) cfg.state = parse_state(o);
  if (!s.x.empty()) cfg.x = parse_grid(s.x, false);
  if (!s.alpha.empty()) cfg.alpha = parse_grid(s.alpha, true);
  if (!s.theta.empty()) cfg.theta = parse_angle(s.theta);
  if (!s.theta_tilde.empty()) cfg.theta_tilde = parse_angle(s.theta_tilde);
  cfg.method = parse_method(o.method);
  cfg.format = parse_format(o.format);
  if (o.gauge != "pair-common") throw InvalidInput("sweeps use the pair-common gauge");
  const auto records = run_sweep(cfg);
  emit(render(sweep_table(records), cfg.format), o.out);
  for (const auto& r : records) {
    if (r.residual && std::abs(*r.residual) > 1e-10) {
      std::cerr << "vbcorr: closed form and oracle disagree by " << format_double(*r.residual)
                << " at x=" << format_double(r.x) << " alpha=" << format_double(r.alpha) << "\n";
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// chsh

struct ChshOptions {
  std::string preset;
  std::string x;
  std::string angles = "canonical";
};

ChshAngles parse_angles(const std::string& text) {
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(',', start);
    v.push_back(parse_angle(text.substr(start, end == std::string::npos ? std::string::npos : end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (v.size() != 4) throw InvalidInput("--angles needs canonical, optimize or four comma-separated angles");
  return {v[0], v[1], v[2], v[3]};
}

int cmd_chsh(const ChshOptions& c, const CommonOptions& o, bool state_given) {
  ChshSweepConfig cfg;
  if (c.preset == "fig3") {
    cfg = preset_fig3();
  } else if (!c.preset.empty()) {
    throw InvalidInput("the chsh preset is fig3, got '" + c.preset + "'");
  }
  if (state_given) cfg.state = parse_state(o);
  if (!c.x.empty()) cfg.x = parse_grid(c.x, false);
  if (c.angles == "canonical") {
    cfg.mode = AngleMode::canonical;
  } else if (c.angles == "optimize") {
    cfg.mode = AngleMode::optimize;
  } else {
    cfg.mode = AngleMode::fixed;
    cfg.angles = parse_angles(c.angles);
  }
  cfg.format = parse_format(o.format);
  if (o.gauge != "pair-common") throw InvalidInput("CHSH scans use the pair-common gauge");
  const ChshSweepResult res = run_chsh_sweep(cfg);
  emit(render(res.table, cfg.format), o.out);
  (o.out.empty() ? std::cerr : std::cout) << chsh_summary(res);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic vector-boson EPR correlations and CHSH analysis"};
  app.require_subcommand(1);
  CommonOptions common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--state", common.state, "psi | phi | xi | chi")
        ->check(CLI::IsMember({"psi", "phi", "xi", "chi"}));
    sub->add_option("--alpha-coef", common.alpha_coef, "complex alpha of chi, e.g. 1+2i");
    sub->add_option("--beta-coef", common.beta_coef, "complex beta of chi");
    sub->add_option("--format", common.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out, "output file (default: stdout)");
    sub->add_option("--gauge", common.gauge, "pair-common | spherical | explicit")
        ->check(CLI::IsMember({"pair-common", "spherical", "explicit"}));
    sub->add_option("--gauge-vector", common.gauge_vector, "x,y,z for --gauge explicit");
    sub->add_option("--method", common.method, "closed | oracle | both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
  };

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run every invariant suite");
  verify_cmd->add_option("--seed", verify.seed, "random seed");
  verify_cmd->add_option("--trials", verify.trials, "random cases per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", common.out, "also write the report to a file");

  CorrelateOptions corr;
  auto* corr_cmd = app.add_subcommand("correlate", "evaluate one correlation");
  add_common(corr_cmd);
  corr_cmd->add_option("--x", corr.x, "(|k|/m)^2; CM pair, or equal-energy pair with --alpha");
  corr_cmd->add_option("--alpha", corr.alpha, "angle between k and p for equal energies");
  corr_cmd->add_option("--mass", corr.mass, "boson mass");
  corr_cmd->add_option("--k", corr.k, "three-momentum kx,ky,kz");
  corr_cmd->add_option("--p", corr.p, "three-momentum px,py,pz");
  corr_cmd->add_option("--measurement", corr.measurement, "helicity | polarization | spin")
      ->check(CLI::IsMember({"helicity", "polarization", "spin"}));
  corr_cmd->add_option("--theta", corr.theta, "polarization angle on the k side");
  corr_cmd->add_option("--theta-tilde", corr.theta_tilde, "polarization angle on the p side");
  corr_cmd->add_option("--spin-a", corr.spin_a, "unit spin direction on the k side (default k/|k|)");
  corr_cmd->add_option("--spin-b", corr.spin_b, "unit spin direction on the p side (default p/|p|)");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "polarization correlation over an (x, alpha) grid");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--preset", sweep.preset, "fig1 | fig2")->check(CLI::IsMember({"fig1", "fig2"}));
  sweep_cmd->add_option("--x", sweep.x, "value or min:max:steps");
  sweep_cmd->add_option("--alpha", sweep.alpha, "value or min:max:steps (angles)");
  sweep_cmd->add_option("--theta", sweep.theta, "polarization angle on the k side");
  sweep_cmd->add_option("--theta-tilde", sweep.theta_tilde, "polarization angle on the p side");

  ChshOptions chsh;
  auto* chsh_cmd = app.add_subcommand("chsh", "CHSH left side over x in the CM frame");
  add_common(chsh_cmd);
  chsh_cmd->add_option("--preset", chsh.preset, "fig3")->check(CLI::IsMember({"fig3"}));
  chsh_cmd->add_option("--x", chsh.x, "value or min:max:steps");
  chsh_cmd->add_option("--angles", chsh.angles, "canonical | optimize | a,b,c,d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, common);
    if (*corr_cmd) return cmd_correlate(corr, common);
    if (*sweep_cmd) return cmd_sweep(sweep, common, sweep_cmd->count("--state") > 0);
    if (*chsh_cmd) return cmd_chsh(chsh, common, chsh_cmd->count("--state") > 0);
  } catch (const InvalidInput& e) {
    std::cerr << "vbcorr: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoError& e) {
    std::cerr << "vbcorr: " << e.what() << "\n";
    return kExitIo;
  } catch (const NumericalError& e) {
    std::cerr << "vbcorr: numerical failure: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitInvalid;
}
