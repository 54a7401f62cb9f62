#include "loewner_lab_cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "loewner_lab/errors.hpp"
#include "loewner_lab/format.hpp"
#include "loewner_lab/search.hpp"
#include "loewner_lab/theorems.hpp"
#include "loewner_lab_cli/matrix_file.hpp"
#include "loewner_lab_cli/runs.hpp"
#include "loewner_lab_cli/selfcheck.hpp"

namespace loewner_lab::cli {

namespace {

ParamValue param_arg(const std::string& text, const char* flag) {
  const auto value = ParamValue::parse(text);
  if (!value) throw InputError(std::string(flag) + ": not a number: '" + text + "'");
  return *value;
}

VariantArg variant_arg(const std::optional<int>& n, const std::optional<std::string>& p) {
  VariantArg v;
  v.n = n;
  if (p) v.p = param_arg(*p, "--p");
  return v;
}

Strategy strategy_arg(const std::string& text) {
  const auto s = parse_strategy(text);
  if (!s) throw InputError("--strategy: expected commuting, scaled or rejection, got '" + text + "'");
  return *s;
}

SpreadArg spread_arg(const std::string& text) {
  const auto s = parse_spread(text);
  if (!s) throw InputError("--spread: expected a number >= 1 or 'auto', got '" + text + "'");
  return *s;
}

ToleranceModel tolerance_arg(double rel, double abs) {
  ToleranceModel tol{rel, abs};
  tol.validate();
  return tol;
}

std::string holds_text(const OrderVerdict& v) {
  return std::string(v.holds ? "holds" : "fails") + " (margin " + format_double(v.margin) + ")";
}

nlohmann::json verdict_json(const OrderVerdict& v) {
  return {{"holds", v.holds}, {"margin", v.margin}};
}

/// Writes through a temporary buffer so a failed open leaves nothing behind.
void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("write failed for '" + path + "'");
}

struct VerifyArgs {
  std::string file_a;
  std::string file_b;
  std::string s;
  std::string t;
  std::optional<int> n;
  std::optional<std::string> p;
  double tol_rel = ToleranceModel{}.rel;
  double tol_abs = ToleranceModel{}.abs;
  bool trace = false;
  bool legacy = false;
  std::string out;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const ToleranceModel tol = tolerance_arg(args.tol_rel, args.tol_abs);
  const ChainParams params = make_params(param_arg(args.s, "--s"), param_arg(args.t, "--t"),
                                         variant_arg(args.n, args.p));
  std::vector<std::string> warnings;
  const SymMatrix a = to_sym_matrix(read_matrix_file(args.file_a), &warnings);
  const SymMatrix b = to_sym_matrix(read_matrix_file(args.file_b), &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("A is " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                            ", B is " + std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
  }

  const RegionPolicy policy = args.legacy ? RegionPolicy::Legacy : RegionPolicy::Primary;
  const OrderReport report = verify_theorem(a, b, params, tol, policy);
  const double condition = evaluation_condition(a, b, params);
  if (!(condition <= kMaxChainCondition)) {
    err << "warning: chain evaluation condition " << format_double(condition) << " exceeds "
        << format_double(kMaxChainCondition) << "; margins may be dominated by rounding\n";
  }
  out << "params: " << params.describe() << (args.legacy ? " (legacy regions)" : "") << '\n'
      << "region: " << to_string(report.region.region) << '\n'
      << "operator condition: " << (report.region.operator_order_condition ? "yes" : "no") << '\n'
      << "hypothesis: " << holds_text(report.hypothesis) << '\n'
      << "chaotic order (log B >= log A): " << holds_text(report.chaotic) << '\n'
      << "operator order (B >= A): " << holds_text(report.operator_order) << '\n';
  if (report.hypothesis.holds && report.hypothesis.margin < 0.0) {
    out << "note: hypothesis holds only within the tolerance slack\n";
  }
  if (!report.hypothesis.holds) {
    out << "implication: vacuous (hypothesis fails)\n";
  } else if (report.region.region == Region::None) {
    out << "implication: vacuous (parameters outside the proven regions)\n";
  } else {
    out << "implication: " << (report.implication_ok ? "ok" : "FAILED") << '\n';
  }
  if (!report.implication_ok) out << "triage: " << to_string(report.triage) << '\n';

  nlohmann::json trace_json = nlohmann::json::array();
  if (args.trace) {
    const RegionClass primary = classify_region(params);
    if (!report.hypothesis.holds) {
      out << "trace: skipped (hypothesis fails)\n";
    } else if (primary.region == Region::None) {
      out << "trace: skipped (region None)\n";
    } else {
      const ProofTrace trace = params.is_grand() ? proof_trace_grand(a, b, params, tol)
                                                 : proof_trace(a, b, params, tol);
      out << "trace:\n";
      for (const auto& step : trace.steps) {
        out << "  " << (step.verdict.holds ? "[ok]   " : "[FAIL] ") << step.label << "  margin "
            << format_double(step.verdict.margin) << '\n';
        trace_json.push_back({{"label", step.label},
                              {"holds", step.verdict.holds},
                              {"margin", step.verdict.margin}});
      }
    }
  }

  if (!args.out.empty()) {
    nlohmann::json j = {
        {"version", std::string(version())},
        {"params",
         {{"s", params.s().to_string()},
          {"t", params.t().to_string()},
          {params.variant_name(), params.variant_value()}}},
        {"tolerance", {{"rel", tol.rel}, {"abs", tol.abs}}},
        {"policy", args.legacy ? "legacy" : "primary"},
        {"region", to_string(report.region.region)},
        {"operator_condition", report.region.operator_order_condition},
        {"hypothesis", verdict_json(report.hypothesis)},
        {"chaotic", verdict_json(report.chaotic)},
        {"operator", verdict_json(report.operator_order)},
        {"implication_ok", report.implication_ok},
        {"evaluation_condition", std::isfinite(condition) ? nlohmann::json(condition) : nlohmann::json(nullptr)},
        {"triage", to_string(report.triage)},
        {"warnings", warnings},
    };
    if (args.trace) j["trace"] = trace_json;
    write_file(args.out, j.dump(2) + "\n");
  }
  return report.implication_ok ? kExitOk : kExitCounterexample;
}

struct ScanArgs {
  std::string s_range;
  std::string t_range;
  std::size_t grid = 5;
  std::optional<int> n;
  std::optional<std::string> p;
  std::size_t dim = 3;
  std::size_t pairs = 20;
  std::uint64_t seed = 0;
  std::string strategy = "scaled";
  std::string spread = "10";
  std::uint64_t budget = 1000;
  double tol_rel = ToleranceModel{}.rel;
  double tol_abs = ToleranceModel{}.abs;
  std::string out;
};

int cmd_scan(const ScanArgs& args, std::ostream& out) {
  ScanOptions options;
  const auto s_range = parse_range(args.s_range);
  const auto t_range = parse_range(args.t_range);
  if (!s_range) throw InputError("--s-range: expected lo:hi with lo <= hi, got '" + args.s_range + "'");
  if (!t_range) throw InputError("--t-range: expected lo:hi with lo <= hi, got '" + args.t_range + "'");
  options.s_range = *s_range;
  options.t_range = *t_range;
  options.grid = args.grid;
  options.variant = variant_arg(args.n, args.p);
  options.dim = args.dim;
  options.pairs = args.pairs;
  options.seed = args.seed;
  options.strategy = strategy_arg(args.strategy);
  options.spread = spread_arg(args.spread);
  options.budget = args.budget;
  options.tol = tolerance_arg(args.tol_rel, args.tol_abs);

  const ScanResult result = run_scan(options);
  std::ostringstream csv;
  write_scan_csv(csv, options, result);
  if (args.out.empty()) {
    out << csv.str();
  } else {
    write_file(args.out, csv.str());
    out << "scan: " << result.rows.size() << " rows, " << result.skipped << " skipped -> " << args.out
        << '\n';
  }
  for (const auto& row : result.rows) {
    if (row.proven_failure()) {
      out << "proven conclusion failed at " << row.params.describe() << '\n';
    }
  }
  return result.proven_failure() ? kExitCounterexample : kExitOk;
}

struct HuntArgs {
  std::string s;
  std::string t;
  std::optional<int> n;
  std::optional<std::string> p;
  std::string target = "operator";
  std::uint64_t budget = 1000;
  std::uint64_t seed = 0;
  std::string strategy = "scaled";
  std::size_t dim = 3;
  std::string spread = "10";
  double tol_rel = ToleranceModel{}.rel;
  double tol_abs = ToleranceModel{}.abs;
  std::string out;
  std::string save_pair;
};

int cmd_hunt(const HuntArgs& args, std::ostream& out) {
  HuntOptions options;
  options.s = param_arg(args.s, "--s");
  options.t = param_arg(args.t, "--t");
  options.variant = variant_arg(args.n, args.p);
  const auto target = parse_hunt_target(args.target);
  if (!target) throw InputError("--target: expected chaotic or operator, got '" + args.target + "'");
  options.target = *target;
  options.budget = args.budget;
  options.seed = args.seed;
  options.strategy = strategy_arg(args.strategy);
  options.dim = args.dim;
  options.spread = spread_arg(args.spread);
  options.tol = tolerance_arg(args.tol_rel, args.tol_abs);

  const HuntRun run = run_hunt(options);
  std::ostringstream csv;
  write_hunt_csv(csv, options, run);
  if (args.out.empty()) {
    out << csv.str();
  } else {
    write_file(args.out, csv.str());
  }
  const auto& r = run.result;
  out << "hunt: " << (r.found ? "candidate found" : "nothing found") << " after " << r.attempts
      << " attempts (" << r.hypothesis_hits << " hypothesis hits";
  if (r.numerical_failures) out << ", " << r.numerical_failures << " ill-conditioned draws skipped";
  out << ")\n";
  if (r.found) {
    out << "margin: " << format_double(r.violation_margin) << " (exploratory, not a claim)\n";
    if (!args.save_pair.empty()) {
      save_matrix_file(args.save_pair + "_A.txt", r.pair->a, "hunt A " + run.params.describe());
      save_matrix_file(args.save_pair + "_B.txt", r.pair->b, "hunt B " + run.params.describe());
      out << "pair: " << args.save_pair << "_A.txt " << args.save_pair << "_B.txt\n";
    }
  }
  return kExitOk;
}

struct SelfcheckArgs {
  bool quick = false;
  bool full = false;
  std::uint64_t seed = 0;
  double tol_rel = ToleranceModel{}.rel;
  double tol_abs = ToleranceModel{}.abs;
};

int cmd_selfcheck(const SelfcheckArgs& args, std::ostream& out) {
  SelfcheckOptions options;
  options.full = args.full;
  options.seed = args.seed;
  options.tol = tolerance_arg(args.tol_rel, args.tol_abs);
  const auto suites = run_selfcheck(options);
  bool ok = true;
  for (const auto& suite : suites) {
    out << "suite " << suite.name << ": " << (suite.passed() ? "PASS" : "FAIL") << " (" << suite.cases
        << " cases";
    if (!suite.passed()) out << ", " << suite.failures << " failed; first: " << suite.first_failure;
    out << ")\n";
    ok = ok && suite.passed();
  }
  out << "selfcheck: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitSelfcheckFailure;
}

template <typename Args>
void add_variant_flags(CLI::App* cmd, Args& args) {
  auto* n = cmd->add_option("--n", args.n, "GrandN chain length (integer >= 2)");
  auto* p = cmd->add_option("--p", args.p, "PVersion denominator (positive, may be p/q)");
  n->excludes(p);
}

template <typename Args>
void add_tolerance_flags(CLI::App* cmd, Args& args) {
  cmd->add_option("--tol,--tol-rel", args.tol_rel, "relative Loewner tolerance")->capture_default_str();
  cmd->add_option("--tol-abs", args.tol_abs, "positive-definiteness floor")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for chain-product operator inequalities", "loewner-lab"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check one matrix pair against the implication");
  v->add_option("A", verify.file_a, "matrix file for A")->required();
  v->add_option("B", verify.file_b, "matrix file for B")->required();
  v->add_option("--s", verify.s, "s > 0 (integer, p/q or decimal)")->required();
  v->add_option("--t", verify.t, "t > s")->required();
  add_variant_flags(v, verify);
  add_tolerance_flags(v, verify);
  v->add_flag("--trace", verify.trace, "evaluate every intermediate inequality of the proof");
  v->add_flag("--legacy", verify.legacy, "use the original two-parameter regions (n=2 or p=2)");
  v->add_option("--out", verify.out, "write a JSON report");

  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "sweep an (s, t) grid with sampled pairs");
  s->add_option("--s-range", scan.s_range, "lo:hi")->required();
  s->add_option("--t-range", scan.t_range, "lo:hi")->required();
  s->add_option("--grid", scan.grid, "points per axis")->capture_default_str();
  add_variant_flags(s, scan);
  s->add_option("--dim", scan.dim, "matrix dimension")->capture_default_str();
  s->add_option("--pairs", scan.pairs, "pairs per grid point")->capture_default_str();
  s->add_option("--seed", scan.seed, "base seed")->capture_default_str();
  s->add_option("--strategy", scan.strategy, "commuting | scaled | rejection")->capture_default_str();
  s->add_option("--spread", scan.spread, "eigenvalue spread or 'auto'")->capture_default_str();
  s->add_option("--budget", scan.budget, "sampler draw budget per pair")->capture_default_str();
  add_tolerance_flags(s, scan);
  s->add_option("--out", scan.out, "CSV path (default stdout)");

  HuntArgs hunt;
  auto* h = app.add_subcommand("hunt", "randomized search outside the proven cases");
  h->add_option("--s", hunt.s, "s > 0")->required();
  h->add_option("--t", hunt.t, "t > s")->required();
  add_variant_flags(h, hunt);
  h->add_option("--target", hunt.target, "chaotic | operator")->capture_default_str();
  h->add_option("--budget", hunt.budget, "attempts")->capture_default_str();
  h->add_option("--seed", hunt.seed, "seed")->capture_default_str();
  h->add_option("--strategy", hunt.strategy, "commuting | scaled | rejection")->capture_default_str();
  h->add_option("--dim", hunt.dim, "matrix dimension")->capture_default_str();
  h->add_option("--spread", hunt.spread, "eigenvalue spread or 'auto'")->capture_default_str();
  add_tolerance_flags(h, hunt);
  h->add_option("--out", hunt.out, "CSV path (default stdout)");
  h->add_option("--save-pair", hunt.save_pair, "write a found pair to PREFIX_A.txt and PREFIX_B.txt");

  SelfcheckArgs check;
  auto* c = app.add_subcommand("selfcheck", "run the built-in property suites");
  auto* quick = c->add_flag("--quick", check.quick, "small suites (default)");
  auto* full = c->add_flag("--full", check.full, "ten times the quick case counts");
  quick->excludes(full);
  c->add_option("--seed", check.seed, "seed")->capture_default_str();
  add_tolerance_flags(c, check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (s->parsed()) return cmd_scan(scan, out);
    if (h->parsed()) return cmd_hunt(hunt, out);
    return cmd_selfcheck(check, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvalidTarget& e) {
    err << "error: " << e.what() << '\n';
  } catch (const LabError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace loewner_lab::cli
