#include "slrc/relaxation/projectors.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "slrc/errors.hpp"
#include "slrc/linalg.hpp"
#include "slrc/quasihankel.hpp"
#include "slrc/structure.hpp"

namespace slrc::relaxation {

CMatrix simple_projector(const IndexSet& a, int s) {
  if (a.empty()) throw InvalidInput("index set must be nonempty");
  const long bound = quasihankel::binomial(a.dimension() + a.max_degree() / 2, a.dimension());
  if (s < 0 || s > bound)
    throw InvalidInput("block size must lie in [0, " + std::to_string(bound) + "]");
  const auto n = static_cast<Eigen::Index>(a.size());
  CMatrix p = CMatrix::Zero(n, n);
  p.topLeftCorner(s, s).setIdentity();
  return p;
}

ProjectorDistance projector_distance(const CMatrix& p, const CMatrix& p0) {
  if (p.rows() != p0.rows() || p.cols() != p0.cols() || p.rows() != p.cols())
    throw DimensionMismatch("projectors must be square of equal order");
  ProjectorDistance out;
  out.squared = (p - p0).squaredNorm();
  out.distance = std::sqrt(out.squared);
  const CMatrix u = projector_range_basis(p);
  const CMatrix residual = u - p0 * u;
  out.identity_value = 2.0 * residual.squaredNorm();
  return out;
}

ProjectorLimit projector_limit(const IndexSet& a, const PointList& y, double tol) {
  const int m = a.dimension();
  const auto r = static_cast<long>(y.size());
  for (const auto& z : y)
    if (z.size() != m) throw DimensionMismatch("point dimension differs from the index set");

  ProjectorLimit out;
  while (quasihankel::binomial(m + out.d0, m) < r) ++out.d0;
  out.identity_block = out.d0 == 0 ? 0 : static_cast<int>(quasihankel::binomial(m + out.d0 - 1, m));

  const IndexSet top = triangle_set(m, out.d0);
  if (a.size() < top.size()) throw InvalidInput("index set does not contain T(m, d0)");
  for (std::size_t i = 0; i < top.size(); ++i)
    if (!(a[i] == top[i])) throw InvalidInput("index set does not start with T(m, d0)");

  const auto n = static_cast<Eigen::Index>(a.size());
  const Eigen::Index k = out.identity_block;
  out.limit = CMatrix::Zero(n, n);
  if (r == 0) return out;
  out.limit.topLeftCorner(k, k).setIdentity();

  // Directions in C^r annihilated by the lower-degree rows.
  CMatrix null_basis = CMatrix::Identity(r, r);
  if (k > 0) {
    const CMatrix lower = quasi_vandermonde(triangle_set(m, out.d0 - 1), y);
    if (numerical_rank(lower, tol) != k)
      throw HypothesisViolated("points are not T(m, d0 - 1)-independent");
    Eigen::JacobiSVD<CMatrix> svd(lower, Eigen::ComputeFullV);
    null_basis = svd.matrixV().rightCols(r - k);
  }
  const CMatrix layer = quasi_vandermonde(degree_set(m, out.d0), y) * null_basis;
  const auto inner = static_cast<int>(r - k);
  if (numerical_rank(layer, tol) != inner)
    throw HypothesisViolated("points do not span the degree-d0 layer as required");
  const Eigen::Index layer_size = layer.rows();
  out.limit.block(k, k, layer_size, layer_size) = column_space_projector(layer, inner);
  return out;
}

std::vector<ProjectorLimitRow> projector_limit_check(const IndexSet& a, const PointList& y,
                                                     const std::vector<double>& rhos) {
  const ProjectorLimit lim = projector_limit(a, y);
  const auto r = static_cast<int>(y.size());
  std::vector<ProjectorLimitRow> rows;
  rows.reserve(rhos.size());
  for (double rho : rhos) {
    if (!(rho > 0.0)) throw InvalidInput("radii must be positive");
    PointList scaled;
    scaled.reserve(y.size());
    for (const auto& z : y) scaled.push_back(rho * z);
    const CMatrix p = column_space_projector(quasi_vandermonde(a, scaled), r);
    rows.push_back({rho, (p - lim.limit).norm()});
  }
  return rows;
}

}  // namespace slrc::relaxation
