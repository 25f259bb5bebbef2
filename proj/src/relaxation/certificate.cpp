#include "slrc/relaxation/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "slrc/errors.hpp"
#include "slrc/linalg.hpp"

namespace slrc::relaxation {

namespace {

double max_abs(const CVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

CMatrix orbit_combination(const QuasiHankelStructure& s, const CVector& y) {
  CMatrix out = CMatrix::Zero(s.order(), s.order());
  for (Eigen::Index k = 0; k < y.size(); ++k)
    for (const auto& pos : s.orbit(k)) out(pos.row, pos.col) = y(k);
  return out;
}

// prox of tau ||.||_2: singular values above theta are clipped to theta, with
// theta chosen so the clipped mass equals tau.
CMatrix prox_spectral(const CMatrix& v, double tau) {
  Eigen::BDCSVD<CMatrix> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
  RVector sigma = svd.singularValues();
  if (sigma.sum() <= tau) return CMatrix::Zero(v.rows(), v.cols());
  double theta = 0.0;
  double head = 0.0;
  for (Eigen::Index j = 0; j < sigma.size(); ++j) {
    head += sigma(j);
    theta = (head - tau) / static_cast<double>(j + 1);
    if (j + 1 == sigma.size() || sigma(j + 1) <= theta) break;
  }
  for (Eigen::Index j = 0; j < sigma.size(); ++j) sigma(j) = std::min(sigma(j), theta);
  return svd.matrixU() * sigma.asDiagonal() * svd.matrixV().adjoint();
}

}  // namespace

CMatrix refine_multiplier(const QuasiHankelStructure& s, const CMatrix& b, const CMatrix& q,
                          const CMatrix& start, int iterations) {
  const Eigen::Index count = s.num_parameters();
  const CMatrix w = projector_range_basis(q);
  const Eigen::Index k = w.cols();
  if (k == 0 || count == 0) return start;

  // Only W Y W^T with Y = W^H M conj(W) reaches the constraints.
  CMatrix a = CMatrix::Zero(count, k * k);
  for (Eigen::Index t = 0; t < count; ++t) {
    CMatrix coeff = CMatrix::Zero(k, k);
    for (const auto& pos : s.orbit(t)) coeff += w.row(pos.row).transpose() * w.row(pos.col);
    a.row(t) = coeff.reshaped().transpose();
  }
  const CVector rhs = -s.adjoint(b);
  Eigen::BDCSVD<CMatrix> asvd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = asvd.singularValues();
  Eigen::Index kept = 0;
  while (kept < sigma.size() && sigma(kept) > kDefaultRankTol * sigma(0)) ++kept;
  const CMatrix ur = asvd.matrixU().leftCols(kept);
  const CMatrix vr = asvd.matrixV().leftCols(kept);
  const RVector inv = sigma.head(kept).cwiseInverse();
  auto to_affine = [&](const CMatrix& y) -> CMatrix {
    const CVector shift = vr * (inv.asDiagonal() * (ur.adjoint() * (a * y.reshaped() - rhs)));
    return y - shift.reshaped(k, k);
  };

  CMatrix z = to_affine(w.adjoint() * start * w.conjugate());
  CMatrix u = CMatrix::Zero(k, k);
  CMatrix best = z;
  double best_norm = spectral_norm(z);
  for (int it = 0; it < iterations; ++it) {
    const CMatrix x = prox_spectral(z - u, 1.0);
    const CMatrix z_old = z;
    z = to_affine(x + u);
    u += x - z;
    const double norm = spectral_norm(z);
    if (norm < best_norm) {
      best_norm = norm;
      best = z;
    }
    if ((x - z).norm() < 1e-12 && (z - z_old).norm() < 1e-12) break;
  }
  return w * best * w.transpose();
}

CMatrix condition_matrix(const QuasiHankelStructure& s, const CMatrix& q) {
  const Eigen::Index n = s.order();
  if (q.rows() != n || q.cols() != n) throw DimensionMismatch("Q does not match the structure order");
  CMatrix a = CMatrix::Zero(s.num_parameters(), n * n);
  for (Eigen::Index k = 0; k < s.num_parameters(); ++k) {
    CMatrix coeff = CMatrix::Zero(n, n);
    for (const auto& pos : s.orbit(k)) coeff += q.row(pos.row).transpose() * q.row(pos.col);
    a.row(k) = coeff.reshaped().transpose();
  }
  return a;
}

CMatrix condition_gram(const QuasiHankelStructure& s, const CMatrix& q) {
  const Eigen::Index count = s.num_parameters();
  CMatrix g(count, count);
  for (Eigen::Index k = 0; k < count; ++k) {
    for (Eigen::Index l = k; l < count; ++l) {
      Complex acc(0.0, 0.0);
      for (const auto& u : s.orbit(k))
        for (const auto& v : s.orbit(l)) acc += q(u.row, v.row) * q(u.col, v.col);
      g(k, l) = acc;
      g(l, k) = std::conj(acc);
    }
  }
  return g;
}

double brute_force_residual(const QuasiHankelStructure& s, const CMatrix& b, const CMatrix& q,
                            const CMatrix& m) {
  const CMatrix g = b + q * m * q.transpose();
  double worst = 0.0;
  for (Eigen::Index k = 0; k < s.num_parameters(); ++k) {
    Complex acc(0.0, 0.0);
    for (const auto& pos : s.orbit(k)) acc += g(pos.row, pos.col);
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

Certificate certificate(const QuasiHankelStructure& s, const CVector& p,
                        const CertificateOptions& options) {
  const Eigen::Index n = s.order();
  const Eigen::Index count = s.num_parameters();
  const CMatrix full = s.assemble(p);

  Certificate c;
  Eigen::BDCSVD<CMatrix> svd(full, Eigen::ComputeThinU | Eigen::ComputeThinV);
  c.rank = numerical_rank_of_spectrum(svd.singularValues(), options.rank_tol);
  const auto u = svd.matrixU().leftCols(c.rank);
  const auto v = svd.matrixV().leftCols(c.rank);
  c.b = u * v.adjoint();
  c.p = u * u.adjoint();
  c.q = CMatrix::Identity(n, n) - c.p;

  const CVector rhs = -s.adjoint(c.b);
  if (count == 0) {
    c.rank_ap = 0;
    c.sigma_min_ap = std::numeric_limits<double>::infinity();
    c.m_star = CMatrix::Zero(n, n);
  } else if (n <= options.dense_limit) {
    const CMatrix a = condition_matrix(s, c.q);
    Eigen::BDCSVD<CMatrix> asvd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = asvd.singularValues();
    const double cutoff = options.rank_tol * sigma(0);
    CVector coeffs = asvd.matrixU().adjoint() * rhs;
    c.rank_ap = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > cutoff && sigma(i) > 0.0) {
        coeffs(i) /= sigma(i);
        ++c.rank_ap;
      } else {
        coeffs(i) = 0.0;
      }
    }
    c.sigma_min_ap = sigma(count - 1);
    const CVector m_vec = asvd.matrixV() * coeffs;
    c.m_star = m_vec.reshaped(n, n);
    c.residual = max_abs(a * m_vec - rhs);
  } else {
    const CMatrix g = condition_gram(s, c.q);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(g);
    const auto& lambda = es.eigenvalues();
    const double top = std::sqrt(std::max(lambda(count - 1), 0.0));
    const double cutoff = options.rank_tol * top;
    CVector coeffs = es.eigenvectors().adjoint() * rhs;
    c.rank_ap = 0;
    for (Eigen::Index i = 0; i < count; ++i) {
      const double sigma = std::sqrt(std::max(lambda(i), 0.0));
      if (sigma > cutoff && sigma > 0.0) {
        coeffs(i) /= lambda(i);
        ++c.rank_ap;
      } else {
        coeffs(i) = 0.0;
      }
    }
    c.sigma_min_ap = std::sqrt(std::max(lambda(0), 0.0));
    const CVector y = es.eigenvectors() * coeffs;
    c.m_star = c.q * orbit_combination(s, y) * c.q.transpose();
    c.residual = brute_force_residual(s, c.b, c.q, c.m_star);
  }

  c.spectral_norm_m = spectral_norm(c.m_star);
  c.m_best = c.m_star;
  c.best_norm_m = c.spectral_norm_m;
  const bool consistent = c.residual <= options.residual_tol;
  const Eigen::Index free_dim = n - c.rank;
  if (options.refine && consistent && count > 0 && c.best_norm_m >= 1.0 - options.unique_slack &&
      free_dim * free_dim <= options.refine_limit) {
    CMatrix m = refine_multiplier(s, c.b, c.q, c.m_star, options.refine_iters);
    const double norm = spectral_norm(m);
    if (norm < c.best_norm_m && brute_force_residual(s, c.b, c.q, m) <= options.residual_tol) {
      c.m_best = std::move(m);
      c.best_norm_m = norm;
    }
  }
  c.first_order = consistent && c.best_norm_m <= 1.0 + options.first_order_slack;
  c.unique = c.first_order && c.best_norm_m < 1.0 - options.unique_slack &&
             c.sigma_min_ap > options.sigma_min_floor && c.rank_ap == count;
  return c;
}

std::string certificate_csv_header() {
  return "instance,rank,rank_ap,sigma_min,norm_m,norm_m_best,residual,first_order,unique";
}

std::string certificate_csv_row(const std::string& instance, const Certificate& c) {
  char buf[192];
  std::snprintf(buf, sizeof buf, ",%d,%d,%.6e,%.6e,%.6e,%.6e,%d,%d", c.rank, c.rank_ap, c.sigma_min_ap,
                c.spectral_norm_m, c.best_norm_m, c.residual, c.first_order ? 1 : 0, c.unique ? 1 : 0);
  return instance + buf;
}

}  // namespace slrc::relaxation
