#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "slrc/structure.hpp"
#include "slrc/types.hpp"

namespace slrc::hankel {

/// Relative threshold for the recurrence-system kernel test.
inline constexpr double kDefaultTol = 1e-9;
/// Radius within which companion eigenvalues are merged into one root.
inline constexpr double kDefaultClusterRadius = 1e-6;

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct CharacteristicInfo {
  int rank = 0;
  CVector q;                ///< q_0..q_r, unit norm, last nonzero entry real positive
  std::vector<Root> roots;  ///< empty when q_r vanishes
};

/// One term of a canonical representation. For a nonzero root the entries
/// are the coefficients of the polynomial c(k) = sum_l coeffs[l] k^l
/// multiplying root^k; for the zero root they are Kronecker weights
/// (coeffs[l] contributes at k = l only). The multiplicity is coeffs.size().
struct RootTerm {
  Complex root;
  std::vector<Complex> coeffs;
};

/// The (d-r+1) x (r+1) system whose kernel vectors are recurrences of order r.
CMatrix recurrence_system(const CVector& h, int r);

/// Smallest r for which a nonzero q annihilates h through
/// q_0 h_k + ... + q_r h_{k+r} = 0 for k = 0..d-r. Zero sequence gives 0.
int hankel_rank(const CVector& h, double tol = kDefaultTol);

/// Unit-norm kernel vector of the order-r recurrence system, normalized so
/// its last nonzero coefficient is real positive. Throws InvalidInput when
/// the system has no kernel at tolerance.
CVector characteristic_vector(const CVector& h, int r, double tol = kDefaultTol);

CharacteristicInfo characteristic_info(const CVector& h, double tol = kDefaultTol,
                                       double cluster_radius = kDefaultClusterRadius);

/// Roots of q_0 + q_1 z + ... + q_r z^r via companion eigenvalues, merged
/// within cluster_radius. Requires q_r != 0.
std::vector<Root> polynomial_roots(const CVector& q,
                                   double cluster_radius = kDefaultClusterRadius);

/// Continuation h_{d+1}..h_{2d} by the recurrence q. Throws DegenerateCase
/// when |q_r| <= tol * |q|.
CVector canonical_completion(const CVector& h, const CVector& q, double tol = kDefaultTol);

/// h_k for k = 0..length-1 from a canonical representation.
CVector canonical_representation(std::span<const RootTerm> terms, int length);

/// Banded Toeplitz n x (n-r) matrix whose columns carry q/q_r shifted down
/// by one row each.
CMatrix nullspace_toeplitz(const CVector& q, int n);

/// True when the minimal rank completion is unique: 2 * rank < d + 2.
bool is_unique_completion(const CVector& h, double tol = kDefaultTol);

/// The (d+1) x (d+1) Hankel matrix of a sequence h_0..h_{2d}.
CMatrix hankel_matrix(const CVector& full);

/// Completion structure for known values h_0..h_d (base set T(1,d)).
QuasiHankelStructure hankel_structure(const CVector& h);

/// CSV with header index,re,im.
void write_sequence_csv(std::ostream& os, const CVector& h);
CVector read_sequence_csv(std::istream& is);

}  // namespace slrc::hankel
