// Copyright 2026 The qsd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qsd command line: tradeoff curves, instrument inspection, scheme reports,
// oracle verification and Monte Carlo runs, with machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "qsd/qsd.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

namespace {

using qsd::format_significant;
using qsd::RecordTable;

double parse_bounded_angle(const std::string& text, const char* name, double lo, double hi) {
  const double v = qsd::parse_angle(text);
  if (!(v >= lo && v <= hi + 1e-15)) {
    std::ostringstream msg;
    msg << name << " must lie in [" << format_significant(lo) << ", " << format_significant(hi)
        << "], got " << text;
    throw std::domain_error(msg.str());
  }
  return v;
}

qsd::FeedbackMode parse_feedback(const std::string& s) {
  if (s == "paper") return qsd::FeedbackMode::paper;
  if (s == "optimized") return qsd::FeedbackMode::optimized;
  if (s == "none") return qsd::FeedbackMode::none;
  throw std::domain_error("--feedback must be one of paper|optimized|none");
}

std::string feedback_name(qsd::FeedbackMode mode) {
  switch (mode) {
    case qsd::FeedbackMode::paper: return "paper";
    case qsd::FeedbackMode::optimized: return "optimized";
    default: return "none";
  }
}

/// Stream sink: stdout by default, a file when --output was given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::domain_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string fmt_complex(const qsd::Complex& z) {
  if (std::abs(z.imag()) < 1e-15) return format_significant(z.real());
  std::string s = format_significant(z.real());
  s += z.imag() < 0 ? " - " : " + ";
  s += format_significant(std::abs(z.imag()));
  s += "i";
  return s;
}

void print_mat2(std::ostream& os, const char* name, const qsd::Mat2& m) {
  os << name << " =\n";
  for (int r = 0; r < 2; ++r) {
    os << "  [ " << fmt_complex(m(r, 0)) << ", " << fmt_complex(m(r, 1)) << " ]\n";
  }
}

double z_score(double hat, double ref, double se) {
  const double diff = hat - ref;
  if (se > 0.0) return diff / se;
  return std::abs(diff) <= 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
}

int cmd_curve(const std::string& alpha_str, int points, const std::string& format,
              const std::string& output) {
  if (points < 2) throw std::domain_error("--points must be >= 2, got " + std::to_string(points));
  const qsd::StatePair pair(parse_bounded_angle(alpha_str, "--alpha", 0.0, std::numbers::pi / 4));
  const auto curve = qsd::tradeoff_curve(pair, points);
  RecordTable table({"t", "gamma", "beta_t", "P", "D"});
  for (const auto& p : curve) table.add_row({p.t, p.gamma, p.beta_t, p.P, p.D});
  Sink sink(output);
  table.write(sink.stream(), qsd::parse_format(format));
  return 0;
}

int cmd_instrument(const std::string& alpha_str, double t, const std::string& output) {
  const qsd::StatePair pair(parse_bounded_angle(alpha_str, "--alpha", 0.0, std::numbers::pi / 4));
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("--t must lie in [0, 1], got " + format_significant(t));
  }
  const qsd::Instrument instr = qsd::optimal_instrument(pair, t);
  const qsd::Povm povm = qsd::povm_of(instr);
  const double p_closed = qsd::probability_of_t(pair, t);
  const double d_closed = qsd::disturbance_of_t(pair, t);
  const double p_fp = qsd::success_probability(instr, pair);
  const double d_fp = qsd::disturbance(instr, pair);

  Sink sink(output);
  std::ostream& os = sink.stream();
  os << "alpha  = " << format_significant(pair.alpha()) << "\n";
  os << "t      = " << format_significant(t) << "\n";
  os << "gamma  = " << format_significant(qsd::gamma_of_t(t)) << "\n";
  os << "beta_t = " << format_significant(qsd::tilt_of_t(pair, t)) << "\n";
  print_mat2(os, "E1", instr.outcome(1).kraus[0]);
  print_mat2(os, "E2", instr.outcome(2).kraus[0]);
  print_mat2(os, "Pi1", povm.elements[0]);
  print_mat2(os, "Pi2", povm.elements[1]);
  os << "P (first principles) = " << format_significant(p_fp) << "\n";
  os << "P (closed form)      = " << format_significant(p_closed) << "\n";
  os << "P residual           = " << format_significant(std::abs(p_fp - p_closed)) << "\n";
  os << "D (first principles) = " << format_significant(d_fp) << "\n";
  os << "D (closed form)      = " << format_significant(d_closed) << "\n";
  os << "D residual           = " << format_significant(std::abs(d_fp - d_closed)) << "\n";
  return 0;
}

int cmd_scheme(const std::string& scheme, const std::string& alpha_str, double t, const std::string& phi_str,
               const std::string& feedback, long budget, std::uint64_t seed,
               const std::string& format, const std::string& output) {
  const qsd::StatePair pair(parse_bounded_angle(alpha_str, "--alpha", 0.0, std::numbers::pi / 4));
  Sink sink(output);

  if (scheme == "kerr") {
    const double phi = parse_bounded_angle(phi_str, "--phi", 0.0, std::numbers::pi);
    const qsd::KerrScheme ks{phi, parse_feedback(feedback)};
    qsd::SchemeOptions opts;
    opts.feedback_budget = budget;
    opts.feedback_seed = seed;
    const qsd::SchemeReport report = qsd::kerr_report(ks, pair, opts);
    RecordTable table({"scheme", "alpha", "phi", "t_effective", "feedback", "achieved_P",
                       "achieved_D", "postselect_rate", "D_optimal_at_P", "gap"});
    table.add_row({std::string("kerr"), pair.alpha(), phi,
                   std::pow(std::sin(phi / 2.0), 2), feedback_name(ks.feedback_mode),
                   report.achieved_P, report.achieved_D, report.postselect_rate,
                   report.D_optimal_at_P, report.gap});
    table.write(sink.stream(), qsd::parse_format(format));
    return 0;
  }
  if (scheme == "parity") {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::domain_error("--t must lie in [0, 1], got " + format_significant(t));
    }
    const qsd::ParityScheme ps{t};
    const qsd::ParityRealization real = qsd::parity_effective_instrument(ps, pair);
    const qsd::SchemeReport report = qsd::parity_report(ps, pair);
    const double residual = qsd::channel_distance(qsd::average_channel(real.on_success),
                                                  qsd::average_channel(qsd::optimal_instrument(pair, t)));
    RecordTable table({"scheme", "alpha", "t", "theta", "achieved_P", "achieved_D",
                       "postselect_rate", "D_optimal_at_P", "gap", "choi_residual"});
    table.add_row({std::string("parity"), pair.alpha(), t, qsd::parity_probe_angle(t),
                   report.achieved_P, report.achieved_D, report.postselect_rate,
                   report.D_optimal_at_P, report.gap, residual});
    table.write(sink.stream(), qsd::parse_format(format));
    return 0;
  }
  throw std::domain_error("--scheme must be kerr or parity");
}

int cmd_verify(const std::string& alpha_str, int points, long budget, std::uint64_t seed,
               const std::string& output) {
  if (points < 3) throw std::domain_error("--points must be >= 3, got " + std::to_string(points));
  if (budget < 1) throw std::domain_error("--budget must be >= 1");
  const qsd::StatePair pair(parse_bounded_angle(alpha_str, "--alpha", 0.0, std::numbers::pi / 4));
  const auto rows = qsd::oracle::verify_curve(pair, points, budget, seed);

  RecordTable table({"t", "target_P", "D_analytic", "D_oracle", "gap", "converged", "evaluations"});
  bool all_ok = true;
  for (const auto& row : rows) {
    table.add_row({row.t, row.target_P, row.D_analytic, row.D_oracle, row.gap, row.converged,
                   static_cast<long long>(row.evaluations)});
    const bool gap_ok = row.gap >= -1e-6 && row.gap <= 1e-3;
    if (!row.converged) {
      std::cerr << "verify: budget exhausted at t = " << format_significant(row.t)
                << " (constraint residual above 1e-6)\n";
      all_ok = false;
    } else if (!gap_ok) {
      std::cerr << "verify: gap " << format_significant(row.gap) << " at t = "
                << format_significant(row.t) << " outside [-1e-6, 1e-3]\n";
      all_ok = false;
    }
  }
  Sink sink(output);
  table.write(sink.stream(), qsd::OutputFormat::csv);
  return all_ok ? 0 : 1;
}

int cmd_montecarlo(const std::string& scheme, const std::string& alpha_str, double t,
                   const std::string& phi_str, long long shots, std::uint64_t seed,
                   const std::string& feedback, const std::string& format,
                   const std::string& output) {
  if (shots < 1) throw std::domain_error("--shots must be >= 1");
  qsd::mc::SimConfig cfg;
  cfg.alpha = parse_bounded_angle(alpha_str, "--alpha", 0.0, std::numbers::pi / 4);
  cfg.shots = shots;
  cfg.seed = seed;
  cfg.feedback = parse_feedback(feedback);
  if (scheme == "optimal") {
    cfg.scheme = qsd::mc::SchemeKind::optimal;
  } else if (scheme == "kerr") {
    cfg.scheme = qsd::mc::SchemeKind::kerr;
  } else if (scheme == "parity") {
    cfg.scheme = qsd::mc::SchemeKind::parity;
  } else {
    throw std::domain_error("--scheme must be optimal, kerr or parity");
  }
  if (cfg.scheme == qsd::mc::SchemeKind::kerr) {
    cfg.t_or_phi = parse_bounded_angle(phi_str, "--phi", 0.0, std::numbers::pi);
  } else {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::domain_error("--t must lie in [0, 1], got " + format_significant(t));
    }
    cfg.t_or_phi = t;
  }

  const qsd::mc::SimEstimate est = qsd::mc::run(cfg);
  const double p_ref = qsd::mc::reference_probability(cfg);
  const double d_ref = qsd::mc::reference_disturbance(cfg);

  RecordTable table({"scheme", "alpha", "param", "shots", "seed", "shots_used", "discarded",
                     "P_hat", "P_se", "D_hat", "D_se", "P_ref", "D_ref", "z_P", "z_D"});
  table.add_row({scheme, cfg.alpha, cfg.t_or_phi, static_cast<long long>(shots),
                 static_cast<long long>(seed), est.shots_used, est.discarded, est.P_hat,
                 est.P_se, est.D_hat, est.D_se, p_ref, d_ref, z_score(est.P_hat, p_ref, est.P_se),
                 z_score(est.D_hat, d_ref, est.D_se)});
  Sink sink(output);
  table.write(sink.stream(), qsd::parse_format(format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimum-disturbing two-state discrimination: optimal instruments, tradeoff curves,\n"
      "optical scheme simulators, numerical verification and Monte Carlo estimation.\n"
      "Angles accept radians or pi fractions (pi/8, 3pi/16). Randomized commands use\n"
      "--seed (default 0); fixed seeds give bit-identical outputs."};
  app.require_subcommand(1);

  std::string alpha = "pi/8";
  std::string phi = "0";
  std::string scheme = "kerr";
  std::string feedback = "paper";
  std::string format = "csv";
  std::string output;
  double t = 0.0;
  int points = 101;
  long long shots = 100000;
  long budget = qsd::oracle::kDefaultBudget;
  std::uint64_t seed = 0;

  CLI::App* curve = app.add_subcommand("curve", "Tradeoff curve on a uniform t grid");
  curve->add_option("--alpha", alpha, "ensemble half-angle, in [0, pi/4]")->required();
  curve->add_option("--points", points, "grid size (>= 2)")->capture_default_str();
  curve->add_option("--format", format, "csv|json")->capture_default_str();
  curve->add_option("--output", output, "output path (default: stdout)");

  CLI::App* instr = app.add_subcommand("instrument", "Kraus/POVM of the optimal instrument at t");
  instr->add_option("--alpha", alpha, "ensemble half-angle, in [0, pi/4]")->required();
  instr->add_option("--t", t, "control parameter in [0, 1]")->required();
  instr->add_option("--output", output, "output path (default: stdout)");

  CLI::App* sch = app.add_subcommand("scheme", "Score an experimental scheme against the curve");
  sch->add_option("--scheme", scheme, "kerr|parity")->required();
  sch->add_option("--alpha", alpha, "ensemble half-angle, in [0, pi/4]")->required();
  sch->add_option("--t", t, "parity control parameter in [0, 1]");
  sch->add_option("--phi", phi, "kerr controlled phase in [0, pi]");
  sch->add_option("--feedback", feedback, "paper|optimized|none (kerr)")->capture_default_str();
  sch->add_option("--budget", budget, "feedback-search budget (kerr optimized)")
      ->default_val(qsd::oracle::kDefaultFeedbackBudget);
  sch->add_option("--seed", seed, "feedback-search seed")->capture_default_str();
  sch->add_option("--format", format, "csv|json")->capture_default_str();
  sch->add_option("--output", output, "output path (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Re-derive the curve by constrained search");
  verify->add_option("--alpha", alpha, "ensemble half-angle, in [0, pi/4]")->required();
  verify->add_option("--points", points, "t-grid size (>= 3)")->default_val(5);
  verify->add_option("--budget", budget, "evaluation budget per grid point")
      ->capture_default_str();
  verify->add_option("--seed", seed, "search seed")->capture_default_str();
  verify->add_option("--output", output, "output path (default: stdout)");

  CLI::App* mc = app.add_subcommand("montecarlo", "Shot-by-shot estimation of (P, D)");
  mc->add_option("--scheme", scheme, "optimal|kerr|parity")->default_val("optimal");
  mc->add_option("--alpha", alpha, "ensemble half-angle, in [0, pi/4]")->required();
  mc->add_option("--t", t, "control parameter (optimal/parity)");
  mc->add_option("--phi", phi, "kerr controlled phase in [0, pi]");
  mc->add_option("--shots", shots, "number of shots (>= 1)")->capture_default_str();
  mc->add_option("--seed", seed, "RNG seed")->capture_default_str();
  mc->add_option("--feedback", feedback, "kerr feedback mode")->capture_default_str();
  mc->add_option("--format", format, "csv|json")->capture_default_str();
  mc->add_option("--output", output, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
    if (curve->parsed()) return cmd_curve(alpha, points, format, output);
    if (instr->parsed()) return cmd_instrument(alpha, t, output);
    if (sch->parsed())
      return cmd_scheme(scheme, alpha, t, phi, feedback, budget, seed, format, output);
    if (verify->parsed()) return cmd_verify(alpha, points, budget, seed, output);
    if (mc->parsed())
      return cmd_montecarlo(scheme, alpha, t, phi, shots, seed, feedback, format, output);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
