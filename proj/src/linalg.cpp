#include "slrc/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "slrc/errors.hpp"

namespace slrc {

RVector singular_values(const CMatrix& x) {
  if (x.size() == 0) return RVector();
  Eigen::JacobiSVD<CMatrix> svd(x);
  return svd.singularValues();
}

int numerical_rank_of_spectrum(const RVector& sigma, double tol) {
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double threshold = tol * sigma(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > threshold) ++r;
  return r;
}

int numerical_rank(const CMatrix& x, double tol) {
  return numerical_rank_of_spectrum(singular_values(x), tol);
}

double spectral_norm(const CMatrix& x) {
  if (x.size() == 0) return 0.0;
  return singular_values(x)(0);
}

CMatrix column_space_projector(const CMatrix& x, int rank) {
  if (rank < 0 || rank > std::min(x.rows(), x.cols()))
    throw InvalidInput("projector rank out of range");
  if (rank == 0) return CMatrix::Zero(x.rows(), x.rows());
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeThinU);
  const CMatrix u = svd.matrixU().leftCols(rank);
  return u * u.adjoint();
}

CMatrix projector_range_basis(const CMatrix& p) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p);
  const auto& ev = es.eigenvalues();
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.5) ++count;
  // Eigenvalues ascend, so the range sits in the trailing columns.
  return es.eigenvectors().rightCols(count);
}

}  // namespace slrc
