#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace slrc {

/// Largest total degree a multi-index may carry.
inline constexpr int kMaxDegree = 64;

/// An exponent tuple alpha in N^m.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zero(int m);
  /// The unit index e_l (0-based l).
  static MultiIndex unit(int m, int l);

  int dimension() const { return static_cast<int>(entries_.size()); }
  /// Total degree |alpha|.
  int degree() const { return degree_; }
  int operator[](int l) const { return entries_[static_cast<std::size_t>(l)]; }
  std::span<const int> entries() const { return entries_; }

  MultiIndex operator+(const MultiIndex& other) const;
  bool operator==(const MultiIndex& other) const = default;

  std::string to_string() const;

 private:
  std::vector<int> entries_;
  int degree_ = 0;
};

/// The graded ordering: lower total degree first; on ties the tails
/// (alpha_2..alpha_m) are compared recursively. For m = 1 the degree decides.
/// Throws DimensionMismatch.
bool order_less(const MultiIndex& a, const MultiIndex& b);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& a) const noexcept;
};

/// A finite set of multi-indices of a fixed dimension, stored strictly
/// increasing under order_less. Positions are stable row/column indices.
class IndexSet {
 public:
  using const_iterator = std::vector<MultiIndex>::const_iterator;

  explicit IndexSet(int m);
  /// Sorts and deduplicates; every element must have dimension m.
  IndexSet(int m, std::vector<MultiIndex> elements);

  int dimension() const { return m_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const MultiIndex& operator[](std::size_t i) const { return elements_[i]; }
  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }
  std::span<const MultiIndex> elements() const { return elements_; }

  bool contains(const MultiIndex& a) const { return position(a).has_value(); }
  std::optional<std::size_t> position(const MultiIndex& a) const;
  /// Largest total degree, -1 for the empty set.
  int max_degree() const;

  bool operator==(const IndexSet& other) const {
    return m_ == other.m_ && elements_ == other.elements_;
  }

 private:
  int m_;
  std::vector<MultiIndex> elements_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> positions_;
};

/// T(m,d) = {alpha : |alpha| <= d}.
IndexSet triangle_set(int m, int d);
/// D(m,d) = {alpha : |alpha| = d}.
IndexSet degree_set(int m, int d);

IndexSet minkowski_sum(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);

/// A+ = A u (A + e_1) u ... u (A + e_m).
IndexSet extension(const IndexSet& a);
/// The exterior boundary A+ \ A.
IndexSet boundary(const IndexSet& a);
/// 2A \ A in increasing order: the unknown positions of a completion problem.
IndexSet missing_indices(const IndexSet& a);

/// One multi-index per line, entries separated by single spaces.
void write_index_set(std::ostream& os, const IndexSet& a);
std::string to_text(const IndexSet& a);
IndexSet read_index_set(std::istream& is);

}  // namespace slrc
