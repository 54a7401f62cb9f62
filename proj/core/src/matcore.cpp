#include "loewner_lab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "loewner_lab/errors.hpp"

namespace loewner_lab {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

bool is_nonnegative_integer(double r) { return r >= 0.0 && std::floor(r) == r; }

}  // namespace

SymMatrix EigenDecomposition::reconstruct(const std::vector<double>& spectrum) const {
  const std::size_t n = eigenvalues.size();
  if (spectrum.size() != n) throw DimensionMismatch("reconstruct: spectrum length mismatch");
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += eigenvectors(i, k) * spectrum[k] * eigenvectors(j, k);
      out(i, j) = acc;
      out(j, i) = acc;
    }
  }
  return SymMatrix(out);
}

EigenDecomposition eigh(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n);
  const double target = 1e-14 * m.frobenius_norm();

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiSweepBudget; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    if (sweep == kJacobiSweepBudget) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    throw NonConvergence("eigh: Jacobi sweeps did not converge within " +
                         std::to_string(kJacobiSweepBudget) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition out{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

void require_positive_definite(const EigenDecomposition& eig, const ToleranceModel& tol,
                               const char* what) {
  const double lmin = eig.eigenvalues.front();
  if (!(lmin > tol.abs)) {
    throw NotPositiveDefinite(std::string(what) + ": smallest eigenvalue " +
                              std::to_string(lmin) + " is not above " + std::to_string(tol.abs));
  }
}

SymMatrix mat_pow(const EigenDecomposition& eig, double r, const ToleranceModel& tol) {
  if (!std::isfinite(r)) throw BadExponent("mat_pow: exponent must be finite");
  if (r == 0.0) return SymMatrix::identity(eig.eigenvalues.size());
  if (!is_nonnegative_integer(r)) require_positive_definite(eig, tol, "mat_pow");
  return eig.apply([r](double lambda) { return std::pow(lambda, r); });
}

SymMatrix mat_pow(const SymMatrix& a, double r, const ToleranceModel& tol) {
  if (r == 1.0) return a;
  return mat_pow(eigh(a), r, tol);
}

SymMatrix mat_log(const EigenDecomposition& eig, const ToleranceModel& tol) {
  require_positive_definite(eig, tol, "mat_log");
  return eig.apply([](double lambda) { return std::log(lambda); });
}

SymMatrix mat_log(const SymMatrix& a, const ToleranceModel& tol) { return mat_log(eigh(a), tol); }

SymMatrix mat_exp(const SymMatrix& a) {
  return eigh(a).apply([](double lambda) { return std::exp(lambda); });
}

double min_eigenvalue(const SymMatrix& m) { return eigh(m).eigenvalues.front(); }

double max_eigenvalue(const SymMatrix& m) { return eigh(m).eigenvalues.back(); }

PowerCache::PowerCache(const SymMatrix& m, const ToleranceModel& tol) : eig_(eigh(m)), tol_(tol) {}

const SymMatrix& PowerCache::pow(double r) {
  auto it = powers_.find(r);
  if (it == powers_.end()) it = powers_.emplace(r, mat_pow(eig_, r, tol_)).first;
  return it->second;
}

}  // namespace loewner_lab
