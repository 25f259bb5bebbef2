#pragma once

#include <vector>

#include "slrc/indexsets.hpp"
#include "slrc/types.hpp"

namespace slrc::relaxation {

/// diag(I_s, 0) of order #A. Requires s <= binomial(m + floor(d/2), m)
/// where d is the largest degree in A.
CMatrix simple_projector(const IndexSet& a, int s);

struct ProjectorDistance {
  double distance = 0.0;        ///< ||P - P0||_F
  double squared = 0.0;         ///< ||P - P0||_F^2
  /// 2 ||(I - P0) U||_F^2 with U an orthonormal basis of range(P); equals
  /// `squared` when both projectors have the same rank.
  double identity_value = 0.0;
};

ProjectorDistance projector_distance(const CMatrix& p, const CMatrix& p0);

struct ProjectorLimit {
  int d0 = 0;          ///< smallest degree with r <= #T(m, d0)
  int identity_block = 0;  ///< K = #T(m, d0 - 1)
  CMatrix limit;       ///< diag(I_K, P2, 0)
};

/// The small-radius limit of the projector onto range V_A(rho y_1..rho y_r).
/// A must be ordered by degree and contain T(m, d0). Throws
/// HypothesisViolated when the points fail the required independence.
ProjectorLimit projector_limit(const IndexSet& a, const PointList& y, double tol = kDefaultRankTol);

struct ProjectorLimitRow {
  double rho;
  double distance;
};

/// ||P(rho) - P_limit||_F for each rho.
std::vector<ProjectorLimitRow> projector_limit_check(const IndexSet& a, const PointList& y,
                                                     const std::vector<double>& rhos);

}  // namespace slrc::relaxation
