#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "slrc/indexsets.hpp"
#include "slrc/types.hpp"

namespace slrc {

/// Values h_alpha on an explicit domain. Lookups outside the domain throw
/// OutOfDomain; missing values are never silently zero.
class CoefficientArray {
 public:
  explicit CoefficientArray(IndexSet domain);  // all zeros
  CoefficientArray(IndexSet domain, std::vector<Complex> values);

  const IndexSet& domain() const { return domain_; }
  int dimension() const { return domain_.dimension(); }
  std::size_t size() const { return values_.size(); }

  Complex at(const MultiIndex& a) const;
  bool defined_at(const MultiIndex& a) const { return domain_.contains(a); }
  std::span<const Complex> values() const { return values_; }

  void set(const MultiIndex& a, Complex v);

  /// The same values on a subset of the domain.
  CoefficientArray restricted_to(const IndexSet& subset) const;

 private:
  IndexSet domain_;
  std::vector<Complex> values_;
};

/// CSV with header alpha_1..alpha_m,re,im and one row per index in order.
void write_coefficient_csv(std::ostream& os, const CoefficientArray& h);
CoefficientArray read_coefficient_csv(std::istream& is);

struct Position {
  Eigen::Index row;
  Eigen::Index col;
};

/// The affine map S(p) = S_0 + sum_k p_k S_k of a symmetric quasi-Hankel
/// completion problem on base set A.
///
/// Row/column i carries alpha_i (the i-th element of A); the entry (i,j)
/// holds h at alpha_i + alpha_j. Known values live on A, the unknowns are
/// indexed by the missing set 2A \ A in increasing order (0-based k here).
/// The basis matrices S_k are kept as orbit lists: the positions whose index
/// sum equals beta_k.
class QuasiHankelStructure {
 public:
  QuasiHankelStructure(IndexSet base, const CoefficientArray& known);

  const IndexSet& base_set() const { return base_; }
  const IndexSet& full_set() const { return full_; }
  const IndexSet& missing_set() const { return missing_; }

  /// Matrix order n = #A.
  Eigen::Index order() const { return static_cast<Eigen::Index>(base_.size()); }
  /// Number of free parameters N = #(2A) - #A.
  Eigen::Index num_parameters() const { return static_cast<Eigen::Index>(missing_.size()); }

  const CMatrix& constant_part() const { return s0_; }
  std::span<const Position> orbit(Eigen::Index k) const;
  Eigen::Index orbit_size(Eigen::Index k) const;
  /// Position of alpha_i + alpha_j inside full_set().
  std::size_t full_index(Eigen::Index i, Eigen::Index j) const;
  /// Parameter index of entry (i,j), or -1 when the entry is known.
  Eigen::Index parameter_index(Eigen::Index i, Eigen::Index j) const;

  /// Dense 0/1 matrix S_k (materialized on demand).
  RMatrix basis_matrix(Eigen::Index k) const;

  CMatrix assemble(const CVector& p) const;
  void assemble_into(const CVector& p, CMatrix& out) const;
  /// Component k is the unconjugated sum of X over the orbit of beta_k.
  CVector adjoint(const CMatrix& x) const;
  /// Least-squares parameters: orbit means of X.
  CVector project(const CMatrix& x) const;

  /// Parameters p_k = h(beta_k) read from an array defined on the missing set.
  CVector parameters_from(const CoefficientArray& h) const;
  /// The full array over 2A given parameters.
  CoefficientArray completed_array(const CVector& p) const;

 private:
  void check_square(const CMatrix& x) const;
  void check_parameters(const CVector& p) const;

  IndexSet base_;
  IndexSet full_;
  IndexSet missing_;
  CMatrix s0_;
  std::vector<Complex> known_values_;       // aligned with base_
  std::vector<std::size_t> full_index_;      // n*n, column-major
  std::vector<Eigen::Index> param_index_;    // n*n, -1 for known
  std::vector<std::vector<Position>> orbits_;
};

/// H_A(h) = [h_{alpha_i + alpha_j}]; h must be defined on 2A.
CMatrix quasi_hankel(const IndexSet& a, const CoefficientArray& h);

/// V_A(z_1..z_r) = [z_j^{alpha_i}], #A x r.
CMatrix quasi_vandermonde(const IndexSet& a, std::span<const Point> points);

/// z^alpha with 0^0 = 1.
Complex monomial(const Point& z, const MultiIndex& alpha);

/// Points are A-independent when V_A has numerical rank r.
bool is_independent(const IndexSet& a, std::span<const Point> points,
                    double tol = kDefaultRankTol);

/// h_alpha = sum_k c_k z_k^alpha on 2C.
CoefficientArray exp_array(const IndexSet& c, std::span<const Point> points,
                           std::span<const Complex> coeffs);
/// The same formula on an arbitrary domain.
CoefficientArray exp_array_on(const IndexSet& domain, std::span<const Point> points,
                              std::span<const Complex> coeffs);

}  // namespace slrc
