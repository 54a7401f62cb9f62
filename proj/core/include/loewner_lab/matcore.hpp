#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "loewner_lab/matrix.hpp"
#include "loewner_lab/tolerance.hpp"

namespace loewner_lab {

/// Orthonormal eigenbasis with ascending eigenvalues; column k of
/// `eigenvectors` pairs with `eigenvalues[k]`.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  /// U·diag(f(λ))·Uᵀ, re-symmetrized.
  template <typename F>
  SymMatrix apply(F&& f) const {
    std::vector<double> mapped(eigenvalues.size());
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) mapped[k] = f(eigenvalues[k]);
    return reconstruct(mapped);
  }

  SymMatrix reconstruct(const std::vector<double>& spectrum) const;
};

/// Cyclic Jacobi sweeps on the full matrix.
inline constexpr int kJacobiSweepBudget = 100;

/// Symmetric eigendecomposition. Throws NonConvergence if the off-diagonal
/// norm does not reach 1e-14·‖M‖_F within kJacobiSweepBudget sweeps.
EigenDecomposition eigh(const SymMatrix& m);

/// A^r through the spectral map. Nonnegative integer r accepts any
/// symmetric A; otherwise every eigenvalue must exceed tol.abs.
SymMatrix mat_pow(const SymMatrix& a, double r, const ToleranceModel& tol = {});
SymMatrix mat_pow(const EigenDecomposition& eig, double r, const ToleranceModel& tol = {});

SymMatrix mat_log(const SymMatrix& a, const ToleranceModel& tol = {});
SymMatrix mat_log(const EigenDecomposition& eig, const ToleranceModel& tol = {});

SymMatrix mat_exp(const SymMatrix& a);

double min_eigenvalue(const SymMatrix& m);
double max_eigenvalue(const SymMatrix& m);

/// Throws NotPositiveDefinite unless λmin > tol.abs.
void require_positive_definite(const EigenDecomposition& eig, const ToleranceModel& tol,
                               const char* what);

/// Memoizes real powers of one matrix from a single decomposition.
/// Not thread-safe; meant to live for the duration of one computation.
class PowerCache {
 public:
  PowerCache(const SymMatrix& m, const ToleranceModel& tol);

  const SymMatrix& pow(double r);
  const EigenDecomposition& decomposition() const noexcept { return eig_; }
  std::size_t dim() const noexcept { return eig_.eigenvalues.size(); }

 private:
  EigenDecomposition eig_;
  ToleranceModel tol_;
  std::map<double, SymMatrix> powers_;
};

}  // namespace loewner_lab
