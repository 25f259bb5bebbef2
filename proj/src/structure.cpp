#include "slrc/structure.hpp"

#include <algorithm>

#include "slrc/errors.hpp"
#include "slrc/linalg.hpp"

namespace slrc {

CoefficientArray::CoefficientArray(IndexSet domain)
    : domain_(std::move(domain)), values_(domain_.size(), Complex(0.0, 0.0)) {}

CoefficientArray::CoefficientArray(IndexSet domain, std::vector<Complex> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size())
    throw InvalidInput("coefficient count does not match the domain size");
}

Complex CoefficientArray::at(const MultiIndex& a) const {
  auto pos = domain_.position(a);
  if (!pos) throw OutOfDomain("coefficient array is not defined at " + a.to_string());
  return values_[*pos];
}

void CoefficientArray::set(const MultiIndex& a, Complex v) {
  auto pos = domain_.position(a);
  if (!pos) throw OutOfDomain("coefficient array is not defined at " + a.to_string());
  values_[*pos] = v;
}

CoefficientArray CoefficientArray::restricted_to(const IndexSet& subset) const {
  std::vector<Complex> v;
  v.reserve(subset.size());
  for (const auto& a : subset) v.push_back(at(a));
  return CoefficientArray(subset, std::move(v));
}

QuasiHankelStructure::QuasiHankelStructure(IndexSet base, const CoefficientArray& known)
    : base_(std::move(base)),
      full_(minkowski_sum(base_, base_)),
      missing_(set_difference(full_, base_)) {
  if (base_.empty()) throw InvalidInput("base set must be nonempty");
  if (known.dimension() != base_.dimension())
    throw DimensionMismatch("known values and base set have different dimensions");
  known_values_.reserve(base_.size());
  for (const auto& a : base_) {
    if (!known.defined_at(a))
      throw InvalidInput("known values do not cover the base set at " + a.to_string());
    known_values_.push_back(known.at(a));
  }

  const Eigen::Index n = order();
  s0_ = CMatrix::Zero(n, n);
  full_index_.resize(static_cast<std::size_t>(n * n));
  param_index_.assign(static_cast<std::size_t>(n * n), -1);
  orbits_.resize(missing_.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const MultiIndex sum = base_[static_cast<std::size_t>(i)] + base_[static_cast<std::size_t>(j)];
      const auto slot = static_cast<std::size_t>(i + j * n);
      full_index_[slot] = *full_.position(sum);
      if (auto pos = base_.position(sum)) {
        s0_(i, j) = known_values_[*pos];
      } else {
        const auto k = static_cast<Eigen::Index>(*missing_.position(sum));
        param_index_[slot] = k;
        orbits_[static_cast<std::size_t>(k)].push_back({i, j});
      }
    }
  }
}

std::span<const Position> QuasiHankelStructure::orbit(Eigen::Index k) const {
  if (k < 0 || k >= num_parameters()) throw InvalidInput("parameter index out of range");
  return orbits_[static_cast<std::size_t>(k)];
}

Eigen::Index QuasiHankelStructure::orbit_size(Eigen::Index k) const {
  return static_cast<Eigen::Index>(orbit(k).size());
}

std::size_t QuasiHankelStructure::full_index(Eigen::Index i, Eigen::Index j) const {
  return full_index_[static_cast<std::size_t>(i + j * order())];
}

Eigen::Index QuasiHankelStructure::parameter_index(Eigen::Index i, Eigen::Index j) const {
  return param_index_[static_cast<std::size_t>(i + j * order())];
}

RMatrix QuasiHankelStructure::basis_matrix(Eigen::Index k) const {
  RMatrix s = RMatrix::Zero(order(), order());
  for (const auto& pos : orbit(k)) s(pos.row, pos.col) = 1.0;
  return s;
}

void QuasiHankelStructure::check_square(const CMatrix& x) const {
  if (x.rows() != order() || x.cols() != order())
    throw DimensionMismatch("matrix does not match the structure order");
}

void QuasiHankelStructure::check_parameters(const CVector& p) const {
  if (p.size() != num_parameters())
    throw DimensionMismatch("parameter vector length does not match N");
}

void QuasiHankelStructure::assemble_into(const CVector& p, CMatrix& out) const {
  check_parameters(p);
  out = s0_;
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    const Complex v = p(static_cast<Eigen::Index>(k));
    for (const auto& pos : orbits_[k]) out(pos.row, pos.col) = v;
  }
}

CMatrix QuasiHankelStructure::assemble(const CVector& p) const {
  CMatrix out;
  assemble_into(p, out);
  return out;
}

CVector QuasiHankelStructure::adjoint(const CMatrix& x) const {
  check_square(x);
  CVector g = CVector::Zero(num_parameters());
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    Complex s(0.0, 0.0);
    for (const auto& pos : orbits_[k]) s += x(pos.row, pos.col);
    g(static_cast<Eigen::Index>(k)) = s;
  }
  return g;
}

CVector QuasiHankelStructure::project(const CMatrix& x) const {
  CVector p = adjoint(x);
  for (std::size_t k = 0; k < orbits_.size(); ++k)
    p(static_cast<Eigen::Index>(k)) /= static_cast<double>(orbits_[k].size());
  return p;
}

CVector QuasiHankelStructure::parameters_from(const CoefficientArray& h) const {
  CVector p(num_parameters());
  for (std::size_t k = 0; k < missing_.size(); ++k)
    p(static_cast<Eigen::Index>(k)) = h.at(missing_[k]);
  return p;
}

CoefficientArray QuasiHankelStructure::completed_array(const CVector& p) const {
  check_parameters(p);
  CoefficientArray h(full_);
  for (std::size_t i = 0; i < base_.size(); ++i) h.set(base_[i], known_values_[i]);
  for (std::size_t k = 0; k < missing_.size(); ++k)
    h.set(missing_[k], p(static_cast<Eigen::Index>(k)));
  return h;
}

CMatrix quasi_hankel(const IndexSet& a, const CoefficientArray& h) {
  if (a.dimension() != h.dimension())
    throw DimensionMismatch("index set and array have different dimensions");
  const auto n = static_cast<Eigen::Index>(a.size());
  CMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i <= j; ++i) {
      const Complex v = h.at(a[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(j)]);
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

Complex monomial(const Point& z, const MultiIndex& alpha) {
  if (z.size() != alpha.dimension())
    throw DimensionMismatch("point dimension does not match the multi-index");
  Complex v(1.0, 0.0);
  for (int l = 0; l < alpha.dimension(); ++l)
    for (int e = 0; e < alpha[l]; ++e) v *= z(l);
  return v;
}

CMatrix quasi_vandermonde(const IndexSet& a, std::span<const Point> points) {
  CMatrix v(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j)
    for (std::size_t i = 0; i < a.size(); ++i)
      v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = monomial(points[j], a[i]);
  return v;
}

bool is_independent(const IndexSet& a, std::span<const Point> points, double tol) {
  if (points.empty()) return true;
  if (points.size() > a.size()) return false;
  return numerical_rank(quasi_vandermonde(a, points), tol) ==
         static_cast<int>(points.size());
}

CoefficientArray exp_array_on(const IndexSet& domain, std::span<const Point> points,
                              std::span<const Complex> coeffs) {
  if (points.size() != coeffs.size())
    throw InvalidInput("number of points and coefficients differ");
  std::vector<Complex> v(domain.size(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t k = 0; k < points.size(); ++k) v[i] += coeffs[k] * monomial(points[k], domain[i]);
  return CoefficientArray(domain, std::move(v));
}

CoefficientArray exp_array(const IndexSet& c, std::span<const Point> points,
                           std::span<const Complex> coeffs) {
  return exp_array_on(minkowski_sum(c, c), points, coeffs);
}

}  // namespace slrc
