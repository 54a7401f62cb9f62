#include "loewner_lab_cli/runs.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "loewner_lab/errors.hpp"
#include "loewner_lab/format.hpp"
#include "loewner_lab/parallel.hpp"
#include "loewner_lab/rng.hpp"
#include "loewner_lab_cli/matrix_file.hpp"

namespace loewner_lab::cli {

std::string_view version() noexcept { return LOEWNER_LAB_VERSION; }

ChainParams make_params(const ParamValue& s, const ParamValue& t, const VariantArg& variant) {
  if (variant.n.has_value() == variant.p.has_value()) {
    throw InputError("exactly one of --n or --p is required");
  }
  return variant.n ? ChainParams::grand(s, t, *variant.n) : ChainParams::p_version(s, t, *variant.p);
}

std::optional<GridRange> parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto lo = ParamValue::parse(text.substr(0, colon));
  const auto hi = ParamValue::parse(text.substr(colon + 1));
  if (!lo || !hi || compare(*lo, *hi) > 0) return std::nullopt;
  return GridRange{*lo, *hi};
}

std::vector<ParamValue> grid_points(const GridRange& range, std::size_t count) {
  std::vector<ParamValue> points;
  if (count == 0) return points;
  points.push_back(range.lo);
  if (count == 1) return points;
  const ParamValue step = (range.hi - range.lo) / ParamValue(static_cast<int>(count - 1));
  for (std::size_t i = 1; i + 1 < count; ++i) {
    points.push_back(range.lo + ParamValue(static_cast<int>(i)) * step);
  }
  points.push_back(range.hi);
  return points;
}

double SpreadArg::resolve(const ChainParams& params) const {
  return fixed ? *fixed : suggested_spread(params);
}

std::string SpreadArg::describe() const { return fixed ? format_double(*fixed) : "auto"; }

std::optional<SpreadArg> parse_spread(std::string_view text) {
  if (text == "auto") return SpreadArg{std::nullopt};
  const auto value = parse_double(text);
  if (!value || !std::isfinite(*value) || *value < 1.0) return std::nullopt;
  return SpreadArg{*value};
}

bool ScanRow::proven_failure() const noexcept {
  if (region.region == Region::None) return false;
  if (chaotic_ok < hypothesis_hits) return true;
  return region.operator_order_condition && operator_ok < hypothesis_hits;
}

bool ScanResult::proven_failure() const noexcept {
  for (const auto& row : rows) {
    if (row.proven_failure()) return true;
  }
  return false;
}

namespace {

struct PairOutcome {
  bool sampled = false;
  bool hypothesis = false;
  bool chaotic = false;
  bool operator_order = false;
  double chaotic_margin = 0.0;
};

PairOutcome evaluate_pair(const ScanOptions& options, const ChainParams& params,
                          double spread, std::uint64_t seed) {
  PairOutcome out;
  SampleSpec spec{options.dim, params, options.strategy, seed, options.budget, spread};
  try {
    const MatrixPair pair = sample_pair(spec, options.tol);
    const OrderReport report = verify_theorem(pair.a, pair.b, params, options.tol);
    out.sampled = true;
    out.hypothesis = report.hypothesis.holds;
    out.chaotic = report.chaotic.holds;
    out.operator_order = report.operator_order.holds;
    out.chaotic_margin = report.chaotic.margin;
  } catch (const BudgetExhausted&) {
  } catch (const NumericalFailure&) {
  } catch (const NotPositiveDefinite&) {
  }
  return out;
}

void write_comment(std::ostream& out, std::string_view command, const std::string& settings,
                   const ToleranceModel& tol) {
  out << "# loewner-lab " << version() << ' ' << command << ' ' << settings
      << " tol_rel=" << format_double(tol.rel) << " tol_abs=" << format_double(tol.abs) << '\n';
}

std::string variant_settings(const VariantArg& variant) {
  return variant.n ? "n=" + std::to_string(*variant.n) : "p=" + variant.p->to_string();
}

}  // namespace

ScanResult run_scan(const ScanOptions& options) {
  options.tol.validate();
  if (options.grid == 0) throw InputError("--grid must be at least 1");
  if (options.pairs == 0) throw InputError("--pairs must be at least 1");
  if (compare(options.s_range.lo, ParamValue(0)) <= 0) throw InputError("--s-range must be positive");
  if (options.dim == 0 || options.dim > kMaxSampleDim) {
    throw InputError("--dim must be in [1, " + std::to_string(kMaxSampleDim) + "]");
  }
  if (options.budget == 0) throw InputError("--budget must be at least 1");
  const auto s_points = grid_points(options.s_range, options.grid);
  const auto t_points = grid_points(options.t_range, options.grid);
  ScanResult result;
  for (std::size_t i = 0; i < s_points.size(); ++i) {
    for (std::size_t j = 0; j < t_points.size(); ++j) {
      const ParamValue& s = s_points[i];
      const ParamValue& t = t_points[j];
      if (compare(t, s) <= 0) {
        ++result.skipped;
        continue;
      }
      const ChainParams params = make_params(s, t, options.variant);
      const double spread = options.spread.resolve(params);
      const std::uint64_t point_seed = derive_seed(options.seed, i * options.grid + j);
      std::vector<PairOutcome> outcomes(options.pairs);
      parallel_for(options.pairs, [&](std::size_t k) {
        outcomes[k] = evaluate_pair(options, params, spread, derive_seed(point_seed, k));
      });
      ScanRow row{params, classify_region(params)};
      row.min_margin = std::numeric_limits<double>::quiet_NaN();
      for (const auto& o : outcomes) {
        if (!o.sampled) {
          ++row.sample_errors;
          continue;
        }
        ++row.pairs_tested;
        if (!o.hypothesis) continue;
        ++row.hypothesis_hits;
        row.chaotic_ok += o.chaotic;
        row.operator_ok += o.operator_order;
        if (std::isnan(row.min_margin) || o.chaotic_margin < row.min_margin) {
          row.min_margin = o.chaotic_margin;
        }
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

void write_scan_csv(std::ostream& out, const ScanOptions& options, const ScanResult& result) {
  write_comment(out, "scan",
                "seed=" + std::to_string(options.seed) + " " + variant_settings(options.variant) +
                    " dim=" + std::to_string(options.dim) + " pairs=" + std::to_string(options.pairs) +
                    " grid=" + std::to_string(options.grid) +
                    " strategy=" + std::string(to_string(options.strategy)) +
                    " spread=" + options.spread.describe() + " budget=" + std::to_string(options.budget),
                options.tol);
  const char* variant = options.variant.n ? "n" : "p";
  out << "s,t," << variant
      << ",region,operator_condition,pairs_tested,hypothesis_hits,chaotic_ok,operator_ok,"
         "min_margin,sample_errors\n";
  for (const auto& row : result.rows) {
    out << row.params.s().to_string() << ',' << row.params.t().to_string() << ','
        << row.params.variant_value() << ',' << to_string(row.region.region) << ','
        << (row.region.operator_order_condition ? 1 : 0) << ',' << row.pairs_tested << ','
        << row.hypothesis_hits << ',' << row.chaotic_ok << ',' << row.operator_ok << ','
        << format_double(row.min_margin) << ',' << row.sample_errors << '\n';
  }
  out << "# skipped=" << result.skipped << '\n';
}

HuntRun run_hunt(const HuntOptions& options) {
  const ChainParams params = make_params(options.s, options.t, options.variant);
  SampleSpec spec{options.dim, params, options.strategy, options.seed, options.budget,
                  options.spread.resolve(params)};
  return HuntRun{params, classify_region(params),
                 hunt_counterexample(spec, options.target, options.tol)};
}

void write_hunt_csv(std::ostream& out, const HuntOptions& options, const HuntRun& run) {
  write_comment(out, "hunt",
                "seed=" + std::to_string(options.seed) + " dim=" + std::to_string(options.dim) +
                    " budget=" + std::to_string(options.budget) +
                    " strategy=" + std::string(to_string(options.strategy)) +
                    " spread=" + options.spread.describe(),
                options.tol);
  out << "s,t," << run.params.variant_name()
      << ",target,region,found,attempts,hypothesis_hits,numerical_failures,violation_margin\n";
  const auto& r = run.result;
  out << run.params.s().to_string() << ',' << run.params.t().to_string() << ','
      << run.params.variant_value() << ',' << to_string(options.target) << ','
      << to_string(run.region.region) << ',' << (r.found ? 1 : 0) << ',' << r.attempts << ','
      << r.hypothesis_hits << ',' << r.numerical_failures << ','
      << format_double(r.violation_margin) << '\n';
}

}  // namespace loewner_lab::cli
