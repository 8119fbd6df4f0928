// Copyright 2026 The Gaussamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gaussamp: propagate two-mode Gaussian states under parametric
// amplification with non-symmetric damping and thermal noise, decide
// separability of the evolved and stationary states, and export the
// separability borders as CSV grids.
//
// Subcommands: evolve, check, sweep, verify.
// Exit codes: 0 ok, 1 verify failure, 2 validation error, 3 singular
// stationary system, 4 regime violation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussamp/csv.hpp"
#include "gaussamp/oracle.hpp"
#include "gaussamp/propagator.hpp"
#include "gaussamp/separability.hpp"
#include "gaussamp/sweep.hpp"

namespace {

using gaussamp::ChannelParams;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSingular = 3;
constexpr int kExitRegime = 4;

// Everything is assembled in memory and written in one shot, so error paths
// never leave a partial header on the output stream.
void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

unsigned env_threads() {
  const char* raw = std::getenv("GAUSSAMP_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  const long v = std::strtol(raw, nullptr, 10);
  return v > 0 ? static_cast<unsigned>(v) : 0;
}

// Channel parameters come either normalized (Gamma0 = 1) or as raw rates;
// the two groups cannot be mixed.
struct ParamFlags {
  double eta0p = 0, eta1p = 0, eta3p = 0, gamma3p = 0;
  double eta0 = 0, eta1 = 0, eta3 = 0, gamma1 = 0, gamma2 = 0;
  double nbar0 = 0;
  CLI::Option* raw_opts[5] = {};
  CLI::Option* norm_opts[4] = {};

  void add_to(CLI::App* cmd) {
    norm_opts[0] = cmd->add_option("--eta0p", eta0p,
                                   "Symmetric amplifier rate, 2*eta0/Gamma0");
    norm_opts[1] = cmd->add_option("--eta1p", eta1p,
                                   "Inter-mode amplifier rate, 2*eta1/Gamma0");
    norm_opts[2] = cmd->add_option("--eta3p", eta3p,
                                   "Antisymmetric amplifier rate, 2*eta3/Gamma0");
    norm_opts[3] = cmd->add_option(
        "--gamma3p", gamma3p, "Relative damping asymmetry, Gamma3/Gamma0");
    raw_opts[0] = cmd->add_option("--eta0", eta0, "Amplifier rate eta0 (1/time)");
    raw_opts[1] = cmd->add_option("--eta1", eta1, "Amplifier rate eta1 (1/time)");
    raw_opts[2] = cmd->add_option("--eta3", eta3, "Amplifier rate eta3 (1/time)");
    raw_opts[3] = cmd->add_option("--gamma1", gamma1, "Damping rate of mode 1");
    raw_opts[4] = cmd->add_option("--gamma2", gamma2, "Damping rate of mode 2");
    cmd->add_option("--nbar0", nbar0, "Thermal occupancy of the bath");
  }

  bool raw_used() const {
    for (const CLI::Option* o : raw_opts) {
      if (o && o->count() > 0) return true;
    }
    return false;
  }
  bool norm_used() const {
    for (const CLI::Option* o : norm_opts) {
      if (o && o->count() > 0) return true;
    }
    return false;
  }

  ChannelParams params() const {
    if (raw_used() && norm_used()) {
      throw gaussamp::ValidationError(
          gaussamp::ValidationError::Kind::NonFinite,
          "cannot mix raw-rate flags (--eta0 --eta1 --eta3 --gamma1 --gamma2) "
          "with normalized flags (--eta0p --eta1p --eta3p --gamma3p)");
    }
    if (raw_used()) {
      return ChannelParams::from_rates(eta0, eta1, eta3, gamma1, gamma2,
                                       nbar0);
    }
    return ChannelParams::from_normalized(eta0p, eta1p, eta3p, gamma3p, nbar0);
  }
};

std::string regime_string(const gaussamp::RegimeClass& r) {
  return std::string(gaussamp::tristate_name(r.intermode)) + ":" +
         gaussamp::tristate_name(r.symmetric);
}

json regime_json(const gaussamp::RegimeClass& r) {
  return json{{"intermode", gaussamp::tristate_name(r.intermode)},
              {"symmetric", gaussamp::tristate_name(r.symmetric)}};
}

// ---------------------------------------------------------------------------
// evolve

struct EvolveArgs {
  ParamFlags flags;
  double tprime_max = 5.0;
  double t_max = -1.0;
  int samples = 50;
  std::string initial = "vacuum";
  std::string output;
  CLI::Option* tprime_opt = nullptr;
  CLI::Option* tmax_opt = nullptr;
};

int run_evolve(const EvolveArgs& args) {
  const ChannelParams params = args.flags.params();

  double tmax_prime = args.tprime_max;
  if (args.tmax_opt->count() > 0) {
    if (args.tprime_opt->count() > 0) {
      throw gaussamp::ValidationError(
          gaussamp::ValidationError::Kind::NonFinite,
          "--t-max and --tprime-max cannot both be given");
    }
    if (args.t_max < 0) {
      throw gaussamp::ValidationError(
          gaussamp::ValidationError::Kind::NonFinite, "--t-max must be >= 0");
    }
    tmax_prime = params.tprime_from_t(args.t_max);
  }
  if (!(tmax_prime >= 0.0)) {
    throw gaussamp::ValidationError(gaussamp::ValidationError::Kind::NonFinite,
                                    "--tprime-max must be >= 0");
  }
  if (args.samples < 1) {
    throw gaussamp::ValidationError(gaussamp::ValidationError::Kind::NonFinite,
                                    "--samples must be >= 1");
  }

  gaussamp::GaussianState state;
  if (args.initial == "vacuum") {
    state = gaussamp::GaussianState::vacuum();
  } else if (args.initial == "stationary") {
    state.cm = gaussamp::stationary_cm(params);
  } else {
    throw gaussamp::ValidationError(
        gaussamp::ValidationError::Kind::NonFinite,
        "--initial must be 'vacuum' or 'stationary'");
  }

  std::vector<double> times;
  if (tmax_prime == 0.0 || args.samples == 1) {
    times.push_back(tmax_prime);
  } else {
    for (int i = 0; i < args.samples; ++i) {
      times.push_back(tmax_prime * i / (args.samples - 1));
    }
  }

  using gaussamp::format_double;
  std::string out = gaussamp::csv_row(
      {"tprime", "x11", "x12_re", "x12_im", "x22", "y11_re", "y11_im",
       "y12_re", "y12_im", "y22_re", "y22_im", "nu1", "nu2"});
  for (double tp : times) {
    const gaussamp::GaussianState evolved =
        gaussamp::evolve(state, params, params.t_from_tprime(tp));
    const auto& cm = evolved.cm;
    const auto [nu1, nu2] =
        gaussamp::symplectic_eigenvalues(gaussamp::complex_to_real_cm(cm));
    out += gaussamp::csv_row({
        format_double(tp),
        format_double(cm.X(0, 0).real()),
        format_double(cm.X(0, 1).real()),
        format_double(cm.X(0, 1).imag()),
        format_double(cm.X(1, 1).real()),
        format_double(cm.Y(0, 0).real()),
        format_double(cm.Y(0, 0).imag()),
        format_double(cm.Y(0, 1).real()),
        format_double(cm.Y(0, 1).imag()),
        format_double(cm.Y(1, 1).real()),
        format_double(cm.Y(1, 1).imag()),
        format_double(nu1),
        format_double(nu2),
    });
  }
  write_output(out, args.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  ParamFlags flags;
  std::string method;
  double tprime = 0.0;
  double alpha_a = 0.5, alpha_b = 0.5, beta_c = 0.0;
  std::string output;
};

int run_check(const CheckArgs& args) {
  json doc;
  doc["method"] = args.method;

  if (args.method == "xp") {
    const gaussamp::Verdict v = gaussamp::ppt_xp_symmetric(
        {args.alpha_a, args.alpha_b, args.beta_c});
    doc["decision"] = gaussamp::decision_name(v.decision);
    doc["margin"] = v.margin;
    doc["regime"] = nullptr;
    write_output(doc.dump(2) + "\n", args.output);
    return kExitOk;
  }

  const ChannelParams params = args.flags.params();
  doc["regime"] = regime_json(gaussamp::classify_regime(params));

  if (args.method == "general") {
    const gaussamp::Verdict v =
        gaussamp::ppt_general(gaussamp::stationary_cm(params));
    doc["decision"] = gaussamp::decision_name(v.decision);
    doc["margin"] = v.margin;
  } else if (args.method == "weak") {
    const gaussamp::Verdict v = gaussamp::weak_intermode_criterion(
        params.gamma3p(), params.eta1p(), params.nbar0);
    doc["decision"] = gaussamp::decision_name(v.decision);
    doc["margin"] = v.margin;
  } else if (args.method == "strong-finite") {
    const gaussamp::StrongFiniteTime r =
        gaussamp::strong_finite_time_criterion(params, args.tprime);
    doc["decision"] = gaussamp::decision_name(r.verdict.decision);
    doc["margin"] = r.verdict.margin;
    doc["polynomial_margin"] = r.polynomial_margin;
    doc["state_margin"] = r.state_margin;
    doc["state_reliable"] = r.state_reliable;
    doc["sign_conflict"] = r.sign_conflict;
  } else if (args.method == "strong-asymptotic") {
    const gaussamp::Verdict v = gaussamp::strong_asymptotic_criterion(
        params.gamma3p(), params.eta1p(), params.nbar0);
    doc["decision"] = gaussamp::decision_name(v.decision);
    doc["margin"] = v.margin;
  } else if (args.method == "quartic") {
    const gaussamp::Verdict v = gaussamp::symmetric_quartic_criterion(params);
    const gaussamp::QuarticCoeffs c = gaussamp::symmetric_quartic_coeffs(
        params.eta0p(), params.gamma3p(), params.nbar0);
    doc["decision"] = gaussamp::decision_name(v.decision);
    doc["margin"] = v.margin;
    doc["coefficients"] = json{{"s0", c.s0}, {"s1", c.s1}, {"s2", c.s2}};
  } else {
    throw gaussamp::ValidationError(
        gaussamp::ValidationError::Kind::NonFinite,
        "--method must be one of general, xp, weak, strong-finite, "
        "strong-asymptotic, quartic");
  }

  write_output(doc.dump(2) + "\n", args.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  gaussamp::SweepSpec spec;
  std::string config;
  std::string output;
};

void apply_config(gaussamp::SweepSpec& spec, const std::string& path,
                  std::string& output) {
  std::ifstream in(path);
  if (!in) {
    throw gaussamp::ValidationError(gaussamp::ValidationError::Kind::NonFinite,
                                    "cannot open config file: " + path);
  }
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw gaussamp::ValidationError(gaussamp::ValidationError::Kind::NonFinite,
                                    std::string("malformed config: ") +
                                        e.what());
  }
  auto num = [&](const char* key, double& slot) {
    if (cfg.contains(key)) {
      if (!cfg[key].is_number()) {
        throw gaussamp::ValidationError(
            gaussamp::ValidationError::Kind::NonFinite,
            std::string("config key is not a number: ") + key);
      }
      slot = cfg[key].get<double>();
    }
  };
  num("gamma3p-min", spec.gamma3p.min);
  num("gamma3p-max", spec.gamma3p.max);
  num("gamma3p-step", spec.gamma3p.step);
  num("eta1p-min", spec.eta1p.min);
  num("eta1p-max", spec.eta1p.max);
  num("eta1p-step", spec.eta1p.step);
  num("eta0p", spec.eta0p);
  num("nbar-max", spec.nbar_max);
  if (cfg.contains("output")) {
    output = cfg["output"].get<std::string>();
  }
}

int run_sweep(SweepArgs& args, const std::vector<CLI::Option*>& cli_opts) {
  if (!args.config.empty()) {
    // flags override config: re-apply CLI values on top
    gaussamp::SweepSpec from_cli = args.spec;
    apply_config(args.spec, args.config, args.output);
    for (const CLI::Option* o : cli_opts) {
      if (o->count() == 0) continue;
      const std::string name = o->get_name();
      if (name == "--gamma3p-min") args.spec.gamma3p.min = from_cli.gamma3p.min;
      else if (name == "--gamma3p-max") args.spec.gamma3p.max = from_cli.gamma3p.max;
      else if (name == "--gamma3p-step") args.spec.gamma3p.step = from_cli.gamma3p.step;
      else if (name == "--eta1p-min") args.spec.eta1p.min = from_cli.eta1p.min;
      else if (name == "--eta1p-max") args.spec.eta1p.max = from_cli.eta1p.max;
      else if (name == "--eta1p-step") args.spec.eta1p.step = from_cli.eta1p.step;
      else if (name == "--eta0p") args.spec.eta0p = from_cli.eta0p;
      else if (name == "--nbar-max") args.spec.nbar_max = from_cli.nbar_max;
    }
  }

  const std::vector<gaussamp::BorderPoint> rows =
      gaussamp::sweep_grid(args.spec, env_threads());

  using gaussamp::format_double;
  std::string out = gaussamp::csv_row(
      {"gamma3p", "eta1p", "eta0p", "regime", "critical_nbar0", "status"});
  for (const gaussamp::BorderPoint& bp : rows) {
    out += gaussamp::csv_row({
        format_double(bp.gamma3p),
        format_double(bp.eta1p),
        format_double(bp.eta0p),
        regime_string(bp.regime),
        bp.status == gaussamp::SweepStatus::ok
            ? format_double(bp.critical_value)
            : "",
        gaussamp::sweep_status_name(bp.status),
    });
  }
  write_output(out, args.output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::uint64_t seed = 42;
  long trials = 200;
  bool inject_fault = false;
  std::string output;
};

json disagreement_json(const gaussamp::Disagreement& d) {
  return json{{"gamma3p", d.gamma3p}, {"eta1p", d.eta1p},
              {"eta0p", d.eta0p},     {"nbar0", d.nbar0},
              {"tprime", d.tprime},   {"margin_a", d.margin_a},
              {"margin_b", d.margin_b}};
}

int run_verify(const VerifyArgs& args) {
  json doc;
  doc["seed"] = args.seed;
  doc["trials"] = args.trials;
  doc["suites"] = json::array();
  bool all_pass = true;

  if (args.trials > 0) {
    {
      gaussamp::ParamSampler sampler(args.seed);
      double max_err = 0.0;
      for (long i = 0; i < args.trials; ++i) {
        const ChannelParams p = sampler.draw_params();
        const double t = p.t_from_tprime(sampler.draw_tprime());
        gaussamp::Propagator closed = gaussamp::compute_mn(p, t);
        if (args.inject_fault) {
          closed.M(0, 0) += 1e-6;
        }
        const gaussamp::Propagator ode =
            gaussamp::integrate_mn_ode(p, t, 3000);
        max_err = std::max({max_err,
                            (closed.M - ode.M).cwiseAbs().maxCoeff(),
                            (closed.N - ode.N).cwiseAbs().maxCoeff()});
      }
      const bool pass = max_err <= 1e-8;
      all_pass = all_pass && pass;
      doc["suites"].push_back(json{{"name", "mn-ode"},
                                   {"checks", args.trials},
                                   {"max_error", max_err},
                                   {"tolerance", 1e-8},
                                   {"pass", pass}});
    }

    {
      gaussamp::ParamSampler sampler(args.seed + 1);
      double max_res = 0.0;
      long checked = 0, skipped = 0;
      for (long i = 0; i < args.trials; ++i) {
        const ChannelParams p = sampler.draw_params();
        gaussamp::ResiduePair pair;
        try {
          pair = gaussamp::residue_general(p);
        } catch (const gaussamp::SingularSystem&) {
          ++skipped;
          continue;
        }
        if (pair.alpha.cwiseAbs().maxCoeff() > 1e3) {
          ++skipped;  // too close to a resonance for an absolute tolerance
          continue;
        }
        const auto [r1, r2] = gaussamp::residual_alpha_beta(p, pair);
        max_res = std::max({max_res, r1, r2});
        ++checked;
      }
      const bool pass = max_res <= 1e-10;
      all_pass = all_pass && pass;
      doc["suites"].push_back(json{{"name", "residue-residual"},
                                   {"checks", checked},
                                   {"skipped", skipped},
                                   {"max_residual", max_res},
                                   {"tolerance", 1e-10},
                                   {"pass", pass}});
    }

    {
      const gaussamp::EquivalenceReport report =
          gaussamp::criterion_equivalence_report(
              gaussamp::EquivalenceGrid::defaults());
      json suite;
      suite["name"] = "criterion-equivalence";
      suite["pairs"] = json::array();
      for (const auto& pair : report.pairs) {
        json pj;
        pj["name"] = pair.name;
        pj["agree"] = pair.agree;
        pj["disagree"] = pair.disagree;
        pj["within_band"] = pair.within_band;
        if (pair.adjusted_disagree >= 0) {
          pj["adjusted_disagree"] = pair.adjusted_disagree;
          pj["note"] =
              "polynomial margin plus 8*gamma3p^2*nbar0^2*eta1p^2*"
              "(1-gamma3p^2)*(K1*K2-1)^2 equals 4*k^2*(k^2-1) times the "
              "state-route margin; the state route decides on conflicts";
        }
        if (!pair.disagreements.empty()) {
          pj["logged"] = json::array();
          for (const auto& d : pair.disagreements) {
            pj["logged"].push_back(disagreement_json(d));
          }
        }
        pj["pass"] = pair.pass;
        suite["pairs"].push_back(pj);
      }
      suite["pass"] = report.all_pass();
      all_pass = all_pass && report.all_pass();
      doc["suites"].push_back(suite);
    }

    {
      double min_nu = 1e300;
      long checks = 0;
      for (double g3p : {0.0, 0.2, 0.4, 0.6, 0.8}) {
        for (double e1p : {0.2, 0.5, 0.9, 1.3, 1.7}) {
          for (double nb : {0.0, 0.25, 0.75}) {
            for (double tp : {0.1, 0.5, 1.5, 3.0}) {
              const ChannelParams p =
                  ChannelParams::from_normalized(0, e1p, 0, g3p, nb);
              const gaussamp::GaussianState out = gaussamp::evolve(
                  gaussamp::GaussianState::vacuum(), p, p.t_from_tprime(tp));
              const auto [n1, n2] = gaussamp::symplectic_eigenvalues(
                  gaussamp::complex_to_real_cm(out.cm));
              min_nu = std::min(min_nu, n2);
              ++checks;
            }
          }
        }
      }
      const bool pass = min_nu >= 0.5 - 1e-9;
      all_pass = all_pass && pass;
      doc["suites"].push_back(json{{"name", "physicality"},
                                   {"checks", checks},
                                   {"min_nu", min_nu},
                                   {"threshold", 0.5 - 1e-9},
                                   {"pass", pass}});
    }
  }

  doc["all_pass"] = all_pass;
  write_output(doc.dump(2) + "\n", args.output);
  if (!all_pass) {
    for (const auto& suite : doc["suites"]) {
      if (!suite["pass"].get<bool>()) {
        std::cerr << "verify: suite " << suite["name"].get<std::string>()
                  << " failed\n";
      }
    }
  }
  return all_pass ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-mode Gaussian states under parametric amplification, "
      "non-symmetric damping and thermal noise: exact propagation, "
      "separability criteria, and border sweeps."};
  app.require_subcommand(1);

  EvolveArgs evolve_args;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "Propagate a state and emit CSV samples of the CM");
  evolve_args.flags.add_to(evolve);
  evolve_args.tprime_opt = evolve->add_option(
      "--tprime-max", evolve_args.tprime_max,
      "Largest dimensionless time Gamma0*t/2 (default 5)");
  evolve_args.tmax_opt = evolve->add_option(
      "--t-max", evolve_args.t_max, "Largest raw time (alternative to --tprime-max)");
  evolve->add_option("--samples", evolve_args.samples,
                     "Number of sample rows (default 50)");
  evolve->add_option("--initial", evolve_args.initial,
                     "Initial state: vacuum (default) or stationary");
  evolve->add_option("--output", evolve_args.output,
                     "Output file (default: stdout)");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Evaluate one separability criterion, emit a JSON verdict");
  check_args.flags.add_to(check);
  check
      ->add_option("--method", check_args.method,
                   "general | xp | weak | strong-finite | strong-asymptotic "
                   "| quartic")
      ->required();
  check->add_option("--tprime", check_args.tprime,
                    "Dimensionless time for strong-finite");
  check->add_option("--alpha-a", check_args.alpha_a, "x-p symmetric alpha_a");
  check->add_option("--alpha-b", check_args.alpha_b, "x-p symmetric alpha_b");
  check->add_option("--beta-c", check_args.beta_c, "x-p symmetric beta_c");
  check->add_option("--output", check_args.output,
                    "Output file (default: stdout)");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Bisect separability borders over a (gamma3p, eta1p) grid");
  std::vector<CLI::Option*> sweep_opts;
  sweep_opts.push_back(sweep->add_option("--gamma3p-min",
                                         sweep_args.spec.gamma3p.min,
                                         "Grid start (default 0)"));
  sweep_opts.push_back(sweep->add_option("--gamma3p-max",
                                         sweep_args.spec.gamma3p.max,
                                         "Grid end (default 0.9)"));
  sweep_opts.push_back(sweep->add_option("--gamma3p-step",
                                         sweep_args.spec.gamma3p.step,
                                         "Grid step (default 0.05)"));
  sweep_opts.push_back(sweep->add_option("--eta1p-min",
                                         sweep_args.spec.eta1p.min,
                                         "Grid start (default 0.05)"));
  sweep_opts.push_back(sweep->add_option("--eta1p-max",
                                         sweep_args.spec.eta1p.max,
                                         "Grid end (default 2.0)"));
  sweep_opts.push_back(sweep->add_option("--eta1p-step",
                                         sweep_args.spec.eta1p.step,
                                         "Grid step (default 0.05)"));
  sweep_opts.push_back(sweep->add_option(
      "--eta0p", sweep_args.spec.eta0p,
      "Symmetric amplifier rate; nonzero selects the quartic criterion"));
  sweep_opts.push_back(sweep->add_option("--nbar-max",
                                         sweep_args.spec.nbar_max,
                                         "Bisection upper bound (default 5)"));
  sweep->add_option("--config", sweep_args.config,
                    "JSON config file; flags override config keys");
  sweep->add_option("--output", sweep_args.output,
                    "Output file (default: stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the numerical verification suites, emit a JSON report");
  verify->add_option("--seed", verify_args.seed,
                     "Seed for the random-parameter draws (default 42)");
  verify->add_option("--trials", verify_args.trials,
                     "Random draws per suite; 0 skips everything (default 200)");
  verify->add_option("--output", verify_args.output,
                     "Output file (default: stdout)");
  verify->add_flag("--inject-fault", verify_args.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (evolve->parsed()) return run_evolve(evolve_args);
    if (check->parsed()) return run_check(check_args);
    if (sweep->parsed()) return run_sweep(sweep_args, sweep_opts);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const gaussamp::ValidationError& e) {
    std::cerr << "error (" << gaussamp::ValidationError::name(e.kind())
              << "): " << e.what() << "\n";
    return kExitValidation;
  } catch (const gaussamp::SingularSystem& e) {
    std::cerr << "error (SingularSystem): " << e.what() << "\n";
    return kExitSingular;
  } catch (const gaussamp::RegimeViolation& e) {
    std::cerr << "error (RegimeViolation): " << e.what() << "\n";
    return kExitRegime;
  } catch (const gaussamp::NoSignChange& e) {
    std::cerr << "error (NoSignChange): " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
