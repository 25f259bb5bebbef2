#include "slrc/relaxation/solver.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "slrc/linalg.hpp"

namespace slrc::relaxation {

namespace {

template <class Matrix>
Matrix threshold(const Matrix& x, double tau) {
  Eigen::BDCSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Eigen::Index keep = 0;
  while (keep < s.size() && s(keep) > tau) ++keep;
  if (keep == 0) return Matrix::Zero(x.rows(), x.cols());
  const Eigen::VectorXd shrunk = (s.head(keep).array() - tau).matrix();
  return svd.matrixU().leftCols(keep) * shrunk.asDiagonal() * svd.matrixV().leftCols(keep).adjoint();
}

// Same map as threshold(): with X^H X = V diag(sigma^2) V^H the result is
// X V diag(1 - tau/sigma) V^H over the kept sigma > tau.
template <class Matrix>
Matrix threshold_gram(const Matrix& x, double tau) {
  const Matrix gram = x.adjoint() * x;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  const auto& lambda = es.eigenvalues();
  const Eigen::Index n = lambda.size();
  Eigen::Index keep = 0;
  while (keep < n && lambda(n - 1 - keep) > tau * tau) ++keep;
  if (keep == 0) return Matrix::Zero(x.rows(), x.cols());
  const auto v = es.eigenvectors().rightCols(keep);
  const Eigen::VectorXd factor = (1.0 - tau / lambda.tail(keep).array().sqrt()).matrix();
  return (x * v) * factor.asDiagonal() * v.adjoint();
}

bool is_real(const CMatrix& x) { return x.imag().cwiseAbs().maxCoeff() == 0.0; }

// The affine set {S(p)} in one of three representations. Each provides
// assemble(p, out) and project(X) on the normalized problem.
struct ComplexAffine {
  using Matrix = CMatrix;
  using Vector = CVector;
  const QuasiHankelStructure& s;
  CMatrix s0;
  double residual_factor = 1.0;

  void assemble(const Vector& p, Matrix& out) const {
    out = s0;
    for (Eigen::Index k = 0; k < p.size(); ++k)
      for (const auto& pos : s.orbit(k)) out(pos.row, pos.col) = p(k);
  }
  Vector project(const Matrix& x) const { return s.project(x); }
  Vector to_params(const CVector& p) const { return p; }
  CVector from_params(const Vector& p) const { return p; }
};

struct RealAffine {
  using Matrix = RMatrix;
  using Vector = RVector;
  const QuasiHankelStructure& s;
  RMatrix s0;
  double residual_factor = 1.0;

  void assemble(const Vector& p, Matrix& out) const {
    out = s0;
    for (Eigen::Index k = 0; k < p.size(); ++k)
      for (const auto& pos : s.orbit(k)) out(pos.row, pos.col) = p(k);
  }
  Vector project(const Matrix& x) const {
    Vector p(s.num_parameters());
    for (Eigen::Index k = 0; k < p.size(); ++k) {
      double acc = 0.0;
      for (const auto& pos : s.orbit(k)) acc += x(pos.row, pos.col);
      p(k) = acc / static_cast<double>(s.orbit_size(k));
    }
    return p;
  }
  Vector to_params(const CVector& p) const { return p.real(); }
  CVector from_params(const Vector& p) const { return p.cast<Complex>(); }
};

// Parameters are stacked as (Re p, Im p).
struct ExtendedAffine {
  using Matrix = RMatrix;
  using Vector = RVector;
  const QuasiHankelStructure& s;
  RMatrix s0;
  double residual_factor = 1.0 / std::sqrt(2.0);

  void assemble(const Vector& p, Matrix& out) const {
    out = s0;
    const Eigen::Index n = s.order();
    const Eigen::Index count = s.num_parameters();
    for (Eigen::Index k = 0; k < count; ++k) {
      const double re = p(k);
      const double im = p(count + k);
      for (const auto& pos : s.orbit(k)) {
        out(pos.row, pos.col) = re;
        out(pos.row + n, pos.col + n) = re;
        out(pos.row + n, pos.col) = im;
        out(pos.row, pos.col + n) = -im;
      }
    }
  }
  Vector project(const Matrix& x) const {
    const Eigen::Index n = s.order();
    const Eigen::Index count = s.num_parameters();
    Vector p(2 * count);
    for (Eigen::Index k = 0; k < count; ++k) {
      double re = 0.0;
      double im = 0.0;
      for (const auto& pos : s.orbit(k)) {
        re += x(pos.row, pos.col) + x(pos.row + n, pos.col + n);
        im += x(pos.row + n, pos.col) - x(pos.row, pos.col + n);
      }
      const double denom = 2.0 * static_cast<double>(s.orbit_size(k));
      p(k) = re / denom;
      p(count + k) = im / denom;
    }
    return p;
  }
  Vector to_params(const CVector& p) const {
    Vector out(2 * p.size());
    out << p.real(), p.imag();
    return out;
  }
  CVector from_params(const Vector& p) const {
    const Eigen::Index count = p.size() / 2;
    CVector out(count);
    for (Eigen::Index k = 0; k < count; ++k) out(k) = Complex(p(k), p(count + k));
    return out;
  }
};

SolverResult finish(const QuasiHankelStructure& s, const SolverConfig& config, CVector p,
                    int iterations, double primal, double dual) {
  SolverResult out;
  out.p = std::move(p);
  const CMatrix full = s.assemble(out.p);
  out.singular_values = singular_values(full);
  out.iterations = iterations;
  out.primal_residual = primal;
  out.dual_residual = dual;
  out.nuclear_norm = out.singular_values.sum();
  out.rank = numerical_rank_of_spectrum(out.singular_values, config.rank_tol);
  return out;
}

template <class Affine>
SolverResult iterate(const QuasiHankelStructure& s, const Affine& affine, const SolverConfig& config,
                     const CVector& start, double scale) {
  using Matrix = typename Affine::Matrix;
  using Vector = typename Affine::Vector;
  Vector p = affine.to_params(start / scale);
  Matrix z, z_next;
  affine.assemble(p, z);
  Matrix u = Matrix::Zero(z.rows(), z.cols());
  const double tau = 1.0 / config.mu;
  std::vector<ResidualPair> history;
  double primal = 0.0;
  double dual = 0.0;
  for (int it = 1; it <= config.max_iters; ++it) {
    const Matrix x = threshold_gram<Matrix>(z - u, tau);
    const Matrix shifted = x + u;
    p = affine.project(shifted);
    affine.assemble(p, z_next);
    u += x - z_next;
    primal = (x - z_next).norm() * affine.residual_factor;
    dual = config.mu * (z_next - z).norm() * affine.residual_factor;
    z.swap(z_next);
    history.push_back({primal, dual});
    if (primal <= config.primal_tol && dual <= config.dual_tol)
      return finish(s, config, affine.from_params(p) * scale, it, primal, dual);
  }
  SolverResult last = finish(s, config, affine.from_params(p) * scale, config.max_iters, primal, dual);
  throw NonConvergence("nuclear-norm solver did not converge in " + std::to_string(config.max_iters) +
                           " iterations (primal " + std::to_string(primal) + ", dual " +
                           std::to_string(dual) + ")",
                       std::move(history), std::move(last));
}

}  // namespace

double nuclear_norm(const CMatrix& x) { return singular_values(x).sum(); }

CMatrix soft_threshold_svd(const CMatrix& x, double tau) {
  if (tau < 0.0) throw InvalidInput("threshold must be nonnegative");
  return threshold<CMatrix>(x, tau);
}

RMatrix soft_threshold_svd(const RMatrix& x, double tau) {
  if (tau < 0.0) throw InvalidInput("threshold must be nonnegative");
  return threshold<RMatrix>(x, tau);
}

CMatrix soft_threshold_gram(const CMatrix& x, double tau) {
  if (tau < 0.0) throw InvalidInput("threshold must be nonnegative");
  return threshold_gram<CMatrix>(x, tau);
}

RMatrix real_extension(const CMatrix& x) {
  const Eigen::Index r = x.rows();
  const Eigen::Index c = x.cols();
  RMatrix out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = x.real();
  out.topRightCorner(r, c) = -x.imag();
  out.bottomLeftCorner(r, c) = x.imag();
  out.bottomRightCorner(r, c) = x.real();
  return out;
}

RMatrix real_extension(const QuasiHankelStructure& s, const RVector& p_re, const RVector& p_im) {
  if (p_re.size() != s.num_parameters() || p_im.size() != s.num_parameters())
    throw DimensionMismatch("parameter vector length does not match N");
  CVector p(p_re.size());
  for (Eigen::Index k = 0; k < p.size(); ++k) p(k) = Complex(p_re(k), p_im(k));
  return real_extension(s.assemble(p));
}

void SolverConfig::validate() const {
  if (!(mu > 0.0)) throw InvalidInput("penalty mu must be positive");
  if (max_iters < 1) throw InvalidInput("max_iters must be at least 1");
  if (!(primal_tol > 0.0) || !(dual_tol > 0.0)) throw InvalidInput("tolerances must be positive");
  if (!(rank_tol > 0.0)) throw InvalidInput("rank tolerance must be positive");
}

SolverResult minimize_nuclear_norm(const QuasiHankelStructure& s, const SolverConfig& config) {
  return minimize_nuclear_norm(s, config, CVector::Zero(s.num_parameters()));
}

SolverResult minimize_nuclear_norm(const QuasiHankelStructure& s, const SolverConfig& config,
                                   const CVector& start) {
  config.validate();
  if (start.size() != s.num_parameters())
    throw DimensionMismatch("starting point length does not match N");
  if (s.num_parameters() == 0) return finish(s, config, CVector(0), 0, 0.0, 0.0);

  const CMatrix& s0 = s.constant_part();
  double scale = s0.norm();
  if (scale == 0.0) scale = 1.0;
  const CMatrix s0n = s0 / scale;

  if (config.use_real_extension)
    return iterate(s, ExtendedAffine{s, real_extension(s0n)}, config, start, scale);
  if (is_real(s0n) && is_real(start))
    return iterate(s, RealAffine{s, s0n.real()}, config, start, scale);
  return iterate(s, ComplexAffine{s, s0n}, config, start, scale);
}

}  // namespace slrc::relaxation
