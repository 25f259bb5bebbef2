#pragma once

#include <vector>

#include "slrc/errors.hpp"
#include "slrc/structure.hpp"
#include "slrc/types.hpp"

namespace slrc::relaxation {

/// Sum of singular values.
double nuclear_norm(const CMatrix& x);

/// U max(Sigma - tau, 0) V^H.
CMatrix soft_threshold_svd(const CMatrix& x, double tau);
RMatrix soft_threshold_svd(const RMatrix& x, double tau);
/// The same map from the Hermitian eigendecomposition of X^H X; this is the
/// form the solver iterates with.
CMatrix soft_threshold_gram(const CMatrix& x, double tau);

/// [[Re X, -Im X], [Im X, Re X]].
RMatrix real_extension(const CMatrix& x);
/// The real 2n x 2n embedding of S(p_re + i p_im).
RMatrix real_extension(const QuasiHankelStructure& s, const RVector& p_re, const RVector& p_im);

struct SolverConfig {
  double mu = 1.0;
  int max_iters = 50000;
  double primal_tol = 1e-9;
  double dual_tol = 1e-9;
  /// Iterate on the 2n x 2n real embedding instead of complex matrices.
  bool use_real_extension = false;
  double rank_tol = kDefaultRankTol;

  /// Throws InvalidInput for a nonpositive penalty, tolerance or budget.
  void validate() const;
};

struct ResidualPair {
  double primal;
  double dual;
};

struct SolverResult {
  CVector p;
  RVector singular_values;  ///< of S(p), decreasing
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double nuclear_norm = 0.0;
  /// Numerical rank of S(p) at the configured rank tolerance.
  int rank = 0;
};

/// Thrown when the iteration budget runs out. Carries the per-iteration
/// residuals and the last iterate.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, std::vector<ResidualPair> history, SolverResult last)
      : Error(what), history_(std::move(history)), last_(std::move(last)) {}

  const std::vector<ResidualPair>& history() const { return history_; }
  const SolverResult& last_result() const { return last_; }

 private:
  std::vector<ResidualPair> history_;
  SolverResult last_;
};

/// Minimizes ||S(p)||_* by alternating singular-value thresholding of a free
/// matrix with projection onto the affine structure, plus a scaled dual
/// update. The problem is solved after dividing S_0 by its Frobenius norm;
/// residuals are reported on that normalized scale and p is rescaled back.
/// With real data the iteration runs in real arithmetic, which reproduces
/// the complex iterates exactly.
SolverResult minimize_nuclear_norm(const QuasiHankelStructure& s, const SolverConfig& config = {});

/// Same, starting from the given parameters instead of zero.
SolverResult minimize_nuclear_norm(const QuasiHankelStructure& s, const SolverConfig& config,
                                   const CVector& start);

}  // namespace slrc::relaxation
