#include "slrc/hankel.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "slrc/errors.hpp"
#include "slrc/indexsets.hpp"

namespace slrc::hankel {

namespace {

int last_degree(const CVector& h) { return static_cast<int>(h.size()) - 1; }

void check_sequence(const CVector& h) {
  if (h.size() == 0) throw InvalidInput("sequence must contain at least h_0");
}

CVector normalize_characteristic(CVector q) {
  q /= q.norm();
  const double floor = 1e-12;
  for (Eigen::Index j = q.size() - 1; j >= 0; --j) {
    if (std::abs(q(j)) > floor) {
      q *= std::conj(q(j)) / std::abs(q(j));
      q(j) = Complex(q(j).real(), 0.0);
      break;
    }
  }
  return q;
}

}  // namespace

CMatrix recurrence_system(const CVector& h, int r) {
  check_sequence(h);
  const int d = last_degree(h);
  if (r < 0 || r > d + 1) throw InvalidInput("recurrence order out of range");
  const int rows = d - r + 1;
  CMatrix sys(rows, r + 1);
  for (int k = 0; k < rows; ++k)
    for (int j = 0; j <= r; ++j) sys(k, j) = h(k + j);
  return sys;
}

int hankel_rank(const CVector& h, double tol) {
  check_sequence(h);
  if (h.norm() == 0.0) return 0;
  const int d = last_degree(h);
  for (int r = 1;; ++r) {
    const int rows = d - r + 1;
    // Fewer equations than unknowns: a kernel vector always exists.
    if (rows < r + 1) return r;
    const CMatrix sys = recurrence_system(h, r);
    Eigen::JacobiSVD<CMatrix> svd(sys);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) <= tol * s(0)) return r;
  }
}

CVector characteristic_vector(const CVector& h, int r, double tol) {
  check_sequence(h);
  const int d = last_degree(h);
  if (r < 0 || r > d + 1) throw InvalidInput("recurrence order out of range");
  if (r == 0) {
    if (h.norm() != 0.0) throw InvalidInput("order-0 recurrence requires the zero sequence");
    return CVector::Ones(1);
  }
  const int rows = d - r + 1;
  if (rows == 0) {
    CVector q = CVector::Zero(r + 1);
    q(r) = 1.0;
    return q;
  }
  const CMatrix sys = recurrence_system(h, r);
  Eigen::JacobiSVD<CMatrix> svd(sys, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (rows >= r + 1 && s(s.size() - 1) > tol * s(0))
    throw InvalidInput("recurrence system of order " + std::to_string(r) + " has no kernel");
  return normalize_characteristic(svd.matrixV().col(r));
}

std::vector<Root> polynomial_roots(const CVector& q, double cluster_radius) {
  const Eigen::Index r = q.size() - 1;
  if (r < 0) throw InvalidInput("empty polynomial");
  if (std::abs(q(r)) == 0.0) throw DegenerateCase("leading coefficient vanishes");
  if (r == 0) return {};
  CMatrix companion = CMatrix::Zero(r, r);
  for (Eigen::Index i = 1; i < r; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < r; ++i) companion(i, r - 1) = -q(i) / q(r);
  Eigen::ComplexEigenSolver<CMatrix> es(companion, false);
  const CVector ev = es.eigenvalues();

  std::vector<Root> roots;
  std::vector<Complex> sums;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    bool merged = false;
    for (std::size_t c = 0; c < roots.size(); ++c) {
      if (std::abs(ev(i) - roots[c].value) <= cluster_radius) {
        sums[c] += ev(i);
        ++roots[c].multiplicity;
        roots[c].value = sums[c] / static_cast<double>(roots[c].multiplicity);
        merged = true;
        break;
      }
    }
    if (!merged) {
      roots.push_back({ev(i), 1});
      sums.push_back(ev(i));
    }
  }
  return roots;
}

CharacteristicInfo characteristic_info(const CVector& h, double tol, double cluster_radius) {
  CharacteristicInfo info;
  info.rank = hankel_rank(h, tol);
  info.q = characteristic_vector(h, info.rank, tol);
  if (std::abs(info.q(info.rank)) > tol * info.q.norm())
    info.roots = polynomial_roots(info.q, cluster_radius);
  return info;
}

CVector canonical_completion(const CVector& h, const CVector& q, double tol) {
  check_sequence(h);
  const int d = last_degree(h);
  const auto r = static_cast<int>(q.size()) - 1;
  if (r < 0) throw InvalidInput("characteristic vector is empty");
  if (std::abs(q(r)) <= tol * q.norm())
    throw DegenerateCase("leading characteristic coefficient vanishes (q_r = 0)");
  CVector full(2 * d + 1);
  full.head(d + 1) = h;
  for (int idx = d + 1; idx <= 2 * d; ++idx) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < r; ++j) acc += q(j) * full(idx - r + j);
    full(idx) = -acc / q(r);
  }
  return full.tail(d);
}

CVector canonical_representation(std::span<const RootTerm> terms, int length) {
  if (length < 0) throw InvalidInput("negative sequence length");
  CVector h = CVector::Zero(length);
  for (const auto& term : terms) {
    if (term.coeffs.empty()) throw InvalidInput("root multiplicity must be at least 1");
    if (term.root == Complex(0.0, 0.0)) {
      for (std::size_t l = 0; l < term.coeffs.size() && static_cast<int>(l) < length; ++l)
        h(static_cast<Eigen::Index>(l)) += term.coeffs[l];
      continue;
    }
    Complex power(1.0, 0.0);
    for (int k = 0; k < length; ++k) {
      Complex poly(0.0, 0.0);
      double kk = 1.0;
      for (const auto& c : term.coeffs) {
        poly += c * kk;
        kk *= k;
      }
      h(k) += poly * power;
      power *= term.root;
    }
  }
  return h;
}

CMatrix nullspace_toeplitz(const CVector& q, int n) {
  const auto r = static_cast<int>(q.size()) - 1;
  if (r < 0) throw InvalidInput("characteristic vector is empty");
  if (q(r) == Complex(0.0, 0.0)) throw DegenerateCase("leading characteristic coefficient vanishes");
  if (n < r) throw InvalidInput("matrix order smaller than the recurrence order");
  const CVector monic = q / q(r);
  CMatrix k = CMatrix::Zero(n, n - r);
  for (int c = 0; c < n - r; ++c) k.block(c, c, r + 1, 1) = monic;
  return k;
}

bool is_unique_completion(const CVector& h, double tol) {
  return 2 * hankel_rank(h, tol) < last_degree(h) + 2;
}

CMatrix hankel_matrix(const CVector& full) {
  if (full.size() % 2 == 0) throw InvalidInput("full sequence must have odd length 2d+1");
  const Eigen::Index n = (full.size() + 1) / 2;
  CMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) out(i, j) = full(i + j);
  return out;
}

QuasiHankelStructure hankel_structure(const CVector& h) {
  check_sequence(h);
  IndexSet base = triangle_set(1, last_degree(h));
  std::vector<Complex> v(h.data(), h.data() + h.size());
  return QuasiHankelStructure(base, CoefficientArray(base, std::move(v)));
}

void write_sequence_csv(std::ostream& os, const CVector& h) {
  os << "index,re,im\n";
  char buf[64];
  for (Eigen::Index k = 0; k < h.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", h(k).real(), h(k).imag());
    os << k << ',' << buf << '\n';
  }
}

CVector read_sequence_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("index,re,im", 0) != 0)
    throw InvalidInput("sequence CSV must start with the header index,re,im");
  std::vector<std::pair<long, Complex>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, c;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
      throw InvalidInput("malformed sequence CSV row: " + line);
    rows.emplace_back(std::stol(a), Complex(std::stod(b), std::stod(c)));
  }
  CVector h(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != static_cast<long>(i))
      throw InvalidInput("sequence CSV indices must run 0,1,2,...");
    h(static_cast<Eigen::Index>(i)) = rows[i].second;
  }
  return h;
}

}  // namespace slrc::hankel
