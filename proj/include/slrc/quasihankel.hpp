#pragma once

#include <iosfwd>

#include "slrc/structure.hpp"
#include "slrc/types.hpp"

namespace slrc::quasihankel {

struct FlatExtensionResult {
  int rank_b = 0;
  int rank_b_plus = 0;
  bool flat = false;
};

/// Ranks of H_B(h) and H_{B+}(h) with B = T(m, floor(d/2) - 1), where d is
/// the largest degree in A. h must be defined on 2(B+); otherwise
/// InvalidInput is thrown.
FlatExtensionResult flat_extension_rank(const IndexSet& a, const CoefficientArray& h,
                                        double tol = kDefaultRankTol);

/// Known values on T(m,d) generated by h_alpha = sum_k c_k z_k^alpha.
struct CanonicalProblem {
  int m = 1;
  int d = 0;
  PointList points;
  std::vector<Complex> coeffs;
};

struct CanonicalCompletion {
  CoefficientArray array;  ///< on 2A = T(m, 2d)
  int rank = 0;            ///< numerical rank of H_A of the completion
  bool unique = false;     ///< sufficient condition for uniqueness holds
};

/// Extends the exponential formula to all of 2A. Throws HypothesisViolated
/// unless the points are T(m, floor(d/2))-independent, and InvalidInput for a
/// zero coefficient or malformed points.
CanonicalCompletion canonical_completion(const CanonicalProblem& problem,
                                         double tol = kDefaultRankTol);

/// The known part of a canonical problem: the array restricted to T(m,d).
CoefficientArray known_values(const CanonicalProblem& problem);

/// binomial(floor(d/2)+m, m), or binomial(floor(d/2)+m-1, m) when strict.
long generic_rank_bound(int m, int d, bool strict);

long binomial(int n, int k);

/// CSV: z1_re,z1_im,...,zm_re,zm_im,c_re,c_im with one row per point.
void write_problem_csv(std::ostream& os, const CanonicalProblem& problem);
/// Reads points and coefficients; the degree is supplied by the caller.
CanonicalProblem read_problem_csv(std::istream& is, int d);

}  // namespace slrc::quasihankel
