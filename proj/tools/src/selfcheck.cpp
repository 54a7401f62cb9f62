#include "loewner_lab_cli/selfcheck.hpp"

#include <cmath>
#include <functional>

#include "loewner_lab/errors.hpp"
#include "loewner_lab/ffn.hpp"
#include "loewner_lab/format.hpp"
#include "loewner_lab/loewner.hpp"
#include "loewner_lab/matcore.hpp"
#include "loewner_lab/rng.hpp"
#include "loewner_lab/search.hpp"
#include "loewner_lab/theorems.hpp"

namespace loewner_lab::cli {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& detail) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = detail();
  }

  /// Exceptions count as failures of the case that raised them.
  void run(const std::function<void()>& body, const std::string& what) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return what + ": " + e.what(); });
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::size_t dim_for(RandomStream& rng) { return static_cast<std::size_t>(rng.uniform_int(2, 6)); }

SuiteResult matcore_suite(const SelfcheckOptions& o, std::uint64_t count) {
  Suite suite("matcore");
  for (std::uint64_t k = 0; k < count; ++k) {
    RandomStream rng(o.seed, k);
    suite.run([&] {
      const SymMatrix a = random_pd(dim_for(rng), rng);
      const auto eig = eigh(a);
      const double x = rng.uniform(-2.0, 2.0);
      const double y = rng.uniform(-2.0, 2.0);
      const double recon = relative_difference(eig.reconstruct(eig.eigenvalues), a);
      suite.expect(recon <= 1e-10, [&] { return "eigh reconstruction " + format_double(recon); });
      const SymMatrix product(mat_pow(eig, x).matrix() * mat_pow(eig, y).matrix());
      const double add = relative_difference(product, mat_pow(eig, x + y));
      suite.expect(add <= 1e-8, [&] { return "A^x A^y vs A^(x+y): " + format_double(add); });
      const double roundtrip = relative_difference(mat_exp(mat_log(eig)), a);
      suite.expect(roundtrip <= 1e-8, [&] { return "exp(log A) vs A: " + format_double(roundtrip); });
      const double scale = relative_difference(mat_log(mat_pow(eig, x)), x * mat_log(eig));
      suite.expect(scale <= 1e-8, [&] { return "log(A^x) vs x log A: " + format_double(scale); });
    }, "matcore case " + std::to_string(k));
  }
  return suite.take();
}

SuiteResult loewner_suite(const SelfcheckOptions& o, std::uint64_t count) {
  Suite suite("loewner");
  for (std::uint64_t k = 0; k < count; ++k) {
    RandomStream rng(o.seed, 1'000'000 + k);
    suite.run([&] {
      const std::size_t n = dim_for(rng);
      const SymMatrix a = random_pd(n, rng);
      // Identities that agree only up to rounding; they hold exactly in the
      // order only because of the tolerance slack.
      const auto same = equality_verdict(mat_exp(mat_log(a)), a, o.tol);
      suite.expect(same.holds, [&] { return "exp(log A) = A margin " + format_double(same.margin); });
      const SymMatrix root = mat_pow(a, 0.5);
      const auto square = equality_verdict(SymMatrix(root.matrix() * root.matrix()), a, o.tol);
      suite.expect(square.holds,
                   [&] { return "A^(1/2) A^(1/2) = A margin " + format_double(square.margin); });
      const SymMatrix bigger = a + random_psd(n, rng);
      suite.expect(loewner_geq(bigger, a, o.tol).holds, [] { return "A + P >= A failed"; });
      const SymMatrix shifted = a + 0.1 * SymMatrix::identity(n);
      suite.expect(!loewner_geq(a, shifted, o.tol).holds, [] { return "A >= A + 0.1 I held"; });
    }, "loewner case " + std::to_string(k));
  }
  return suite.take();
}

SuiteResult ffn_suite(const SelfcheckOptions& o, std::uint64_t count) {
  Suite suite("ffn");
  for (std::uint64_t k = 0; k < count; ++k) {
    RandomStream rng(o.seed, 2'000'000 + k);
    suite.run([&] {
      const std::size_t n = dim_for(rng);
      const SymMatrix a = random_pd(n, rng, 3.0);
      const SymMatrix b = random_pd(n, rng, 3.0);
      const double s = rng.uniform(0.2, 1.5);
      const double t = s + rng.uniform(0.1, 2.0);
      const double grand2 = check_hypothesis(a, b, ChainParams::grand(s, t, 2), o.tol).margin;
      const double p2 = check_hypothesis(a, b, ChainParams::p_version(s, t, 2), o.tol).margin;
      suite.expect(std::abs(grand2 - p2) <= 1e-10,
                   [&] { return "n=2 vs p=2 margins " + format_double(grand2) + " " + format_double(p2); });
      suite.expect(literal_n3_lhs(a, b, s, t, o.tol) == grand_lhs(a, b, ChainParams::grand(s, t, 3), o.tol),
                   [] { return "n=3 literal form differs from the generic chain"; });
      suite.expect(literal_p3_lhs(a, b, s, t, o.tol) == p_lhs(a, b, ChainParams::p_version(s, t, 3), o.tol),
                   [] { return "p=3 literal form differs from the generic chain"; });
      const double ffk = relative_difference(fujii_furuta_kamei_lhs(a, b, t + 1, o.tol),
                                             grand_lhs(a, b, ChainParams::grand(1, t + 1, 2), o.tol));
      suite.expect(ffk <= 1e-10, [&] { return "s=1 two-factor form differs by " + format_double(ffk); });
    }, "ffn case " + std::to_string(k));
  }
  return suite.take();
}

SuiteResult furuta_suite(const SelfcheckOptions& o, std::uint64_t count) {
  Suite suite("furuta");
  for (std::uint64_t k = 0; k < count; ++k) {
    RandomStream rng(o.seed, 3'000'000 + k);
    suite.run([&] {
      const std::size_t n = dim_for(rng);
      const SymMatrix b = random_pd(n, rng, 3.0);
      const SymMatrix a = b + random_psd(n, rng, rng.uniform(0.01, 2.0));
      const double r = rng.uniform(0.0, 2.0);
      const double p = rng.uniform(0.0, 3.0);
      const double q = std::max(1.0, (p + r) / (1.0 + r)) * rng.uniform(1.0, 1.5);
      const auto trace = furuta_check(a, b, p, r, q, o.tol);
      suite.expect(trace.all_hold, [&] {
        return "p=" + format_double(p) + " r=" + format_double(r) + " q=" + format_double(q);
      });
    }, "furuta case " + std::to_string(k));
  }
  return suite.take();
}

std::vector<ChainParams> theorem_grid() {
  return {
      ChainParams::grand(1, 2, 2),         ChainParams::grand(Rational(1, 10), Rational(1, 5), 2),
      ChainParams::grand(1, 4, 2),         ChainParams::grand(Rational(1, 2), Rational(5, 2), 2),
      ChainParams::grand(1, 2, 3),         ChainParams::grand(Rational(1, 5), Rational(1, 2), 3),
      ChainParams::grand(Rational(1, 2), 4, 3),
      ChainParams::grand(1, 2, 4),         ChainParams::grand(Rational(1, 10), Rational(3, 10), 4),
      ChainParams::grand(Rational(1, 2), Rational(9, 2), 4),
      ChainParams::grand(2, 3, 5),         ChainParams::grand(Rational(1, 10), Rational(2, 5), 5),
      ChainParams::grand(Rational(1, 2), 6, 5),
      ChainParams::p_version(Rational(1, 2), 1, 1), ChainParams::p_version(Rational(1, 4), Rational(3, 2), 1),
      ChainParams::p_version(1, 2, 2),     ChainParams::p_version(Rational(1, 2), Rational(5, 2), 2),
      ChainParams::p_version(1, 2, 3),     ChainParams::p_version(Rational(1, 2), Rational(7, 2), 3),
      ChainParams::p_version(2, 3, 5),     ChainParams::p_version(1, 6, 5),
  };
}

SuiteResult theorems_suite(const SelfcheckOptions& o, std::uint64_t per_point) {
  Suite suite("theorems");
  const auto grid = theorem_grid();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const ChainParams& params = grid[g];
    const RegionClass rc = classify_region(params);
    for (std::uint64_t k = 0; k < per_point; ++k) {
      suite.run([&] {
        SampleSpec spec{2 + k % 5, params, k % 2 ? Strategy::Commuting : Strategy::ScaledRandom,
                        derive_seed(o.seed, 4'000'000 + g * per_point + k), 1000,
                        suggested_spread(params)};
        const MatrixPair pair = sample_pair(spec, o.tol);
        const OrderReport report = verify_theorem(pair.a, pair.b, params, o.tol);
        suite.expect(report.hypothesis.holds, [&] { return params.describe() + ": hypothesis failed"; });
        suite.expect(report.implication_ok, [&] {
          return params.describe() + ": chaotic margin " + format_double(report.chaotic.margin) +
                 ", operator margin " + format_double(report.operator_order.margin);
        });
        if (rc.region != Region::None && report.hypothesis.holds) {
          const auto trace = proof_trace(pair.a, pair.b, params, o.tol);
          suite.expect(trace.all_hold, [&] { return params.describe() + ": proof trace step failed"; });
        }
      }, params.describe() + " pair " + std::to_string(k));
    }
  }
  return suite.take();
}

SuiteResult sampling_suite(const SelfcheckOptions& o, std::uint64_t count) {
  Suite suite("sampling");
  const auto grid = theorem_grid();
  for (std::uint64_t k = 0; k < count; ++k) {
    const ChainParams& params = grid[k % grid.size()];
    suite.run([&] {
      SampleSpec spec{2 + k % 5, params, Strategy::ScaledRandom, derive_seed(o.seed, 5'000'000 + k),
                      1000, suggested_spread(params)};
      const MatrixPair pair = sample_scaled_pair(spec);
      const double margin = check_hypothesis(pair.a, pair.b, params, o.tol).margin;
      suite.expect(margin >= 0.0,
                   [&] { return params.describe() + ": scaled draw margin " + format_double(margin); });
    }, params.describe() + " draw " + std::to_string(k));
  }
  return suite.take();
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options) {
  options.tol.validate();
  const std::uint64_t scale = options.full ? 10 : 1;
  return {
      matcore_suite(options, 100 * scale),  loewner_suite(options, 50 * scale),
      ffn_suite(options, 50 * scale),       furuta_suite(options, 100 * scale),
      sampling_suite(options, 100 * scale), theorems_suite(options, 10 * scale),
  };
}

}  // namespace loewner_lab::cli
