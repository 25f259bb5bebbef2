#pragma once

#include "slrc/types.hpp"

namespace slrc {

/// Singular values in decreasing order.
RVector singular_values(const CMatrix& x);

/// Number of singular values above tol * sigma_max (0 for the zero matrix).
int numerical_rank(const CMatrix& x, double tol = kDefaultRankTol);
int numerical_rank_of_spectrum(const RVector& sigma, double tol = kDefaultRankTol);

double spectral_norm(const CMatrix& x);

/// Orthogonal projector onto the span of the leading `rank` left singular
/// vectors of x.
CMatrix column_space_projector(const CMatrix& x, int rank);

/// Orthonormal basis of the range of a Hermitian projector (eigenvalues > 1/2).
CMatrix projector_range_basis(const CMatrix& p);

}  // namespace slrc
