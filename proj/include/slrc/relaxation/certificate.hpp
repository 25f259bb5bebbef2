#pragma once

#include <iosfwd>
#include <string>

#include "slrc/structure.hpp"
#include "slrc/types.hpp"

namespace slrc::relaxation {

struct CertificateOptions {
  double rank_tol = kDefaultRankTol;
  /// first_order allows a multiplier norm up to 1 + first_order_slack.
  double first_order_slack = 1e-4;
  /// unique requires a multiplier norm below 1 - unique_slack.
  double unique_slack = 1e-3;
  /// unique requires sigma_min(A(P)) above this.
  double sigma_min_floor = 1e-6;
  /// Largest accepted residual of the multiplier system.
  double residual_tol = 1e-6;
  /// Orders above this use the N x N Gram matrix of A(P) instead of the
  /// dense N x n^2 operator.
  Eigen::Index dense_limit = 32;
  /// When M* does not already certify uniqueness, search the affine set of
  /// multipliers for one of smaller spectral norm.
  bool refine = true;
  int refine_iters = 3000;
  /// Skip the search when the reduced multiplier has more entries than this.
  Eigen::Index refine_limit = 4096;
};

struct Certificate {
  int rank = 0;            ///< numerical rank of S(p)
  CMatrix b;               ///< U V^H
  CMatrix p;               ///< U U^H
  CMatrix q;               ///< I - P
  int rank_ap = 0;
  double sigma_min_ap = 0.0;  ///< N-th singular value of A(P); +inf when N = 0
  CMatrix m_star;          ///< least-norm multiplier
  double spectral_norm_m = 0.0;
  /// Smallest-norm multiplier found (M* itself when no search ran).
  CMatrix m_best;
  double best_norm_m = 0.0;
  /// max_k |adjoint(B + Q M* Q^T)_k| via the operator form.
  double residual = 0.0;
  bool first_order = false;
  bool unique = false;
};

/// The dense N x n^2 matrix of M -> adjoint(Q M Q^T); column a + n*b holds
/// the coefficient of M(a,b).
CMatrix condition_matrix(const QuasiHankelStructure& s, const CMatrix& q);

/// The N x N Gram matrix A(P) A(P)^H for a Hermitian idempotent Q.
CMatrix condition_gram(const QuasiHankelStructure& s, const CMatrix& q);

Certificate certificate(const QuasiHankelStructure& s, const CVector& p,
                        const CertificateOptions& options = {});

/// max_k |sum over the orbit of beta_k of (B + Q M Q^T)(i,j)|, by direct
/// entry sums.
double brute_force_residual(const QuasiHankelStructure& s, const CMatrix& b, const CMatrix& q,
                            const CMatrix& m);

/// Minimizes ||M||_2 over solutions of the multiplier system, starting from
/// the least-norm one. Returns the feasible multiplier of smallest norm seen.
CMatrix refine_multiplier(const QuasiHankelStructure& s, const CMatrix& b, const CMatrix& q,
                          const CMatrix& start, int iterations);

/// CSV row helpers: instance,rank,rank_ap,sigma_min,norm_m,norm_m_best,residual,first_order,unique.
std::string certificate_csv_header();
std::string certificate_csv_row(const std::string& instance, const Certificate& c);

}  // namespace slrc::relaxation
