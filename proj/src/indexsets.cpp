#include "slrc/indexsets.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "slrc/errors.hpp"

namespace slrc {

namespace {

void check_dimension(int m) {
  if (m < 1) throw InvalidInput("multi-index dimension must be at least 1");
}

void check_same_dimension(int ma, int mb) {
  if (ma != mb) {
    throw DimensionMismatch("multi-index dimensions differ: " + std::to_string(ma) +
                            " vs " + std::to_string(mb));
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  check_dimension(dimension());
  for (int e : entries_) {
    if (e < 0) throw InvalidInput("multi-index entries must be nonnegative");
    if (e > kMaxDegree) throw InvalidInput("multi-index entry exceeds the degree limit");
  }
  degree_ = std::accumulate(entries_.begin(), entries_.end(), 0);
  if (degree_ > kMaxDegree) throw InvalidInput("multi-index degree exceeds the degree limit");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zero(int m) {
  check_dimension(m);
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(m), 0));
}

MultiIndex MultiIndex::unit(int m, int l) {
  check_dimension(m);
  if (l < 0 || l >= m) throw InvalidInput("unit index position out of range");
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  e[static_cast<std::size_t>(l)] = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  check_same_dimension(dimension(), other.dimension());
  std::vector<int> sum(entries_.size());
  for (std::size_t l = 0; l < sum.size(); ++l) sum[l] = entries_[l] + other.entries_[l];
  return MultiIndex(std::move(sum));
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t l = 0; l < entries_.size(); ++l) {
    if (l) s += ",";
    s += std::to_string(entries_[l]);
  }
  return s + ")";
}

bool order_less(const MultiIndex& a, const MultiIndex& b) {
  check_same_dimension(a.dimension(), b.dimension());
  // Unrolled recursion: compare the degree of each tail (a_l..a_m) in turn.
  int tail_a = a.degree();
  int tail_b = b.degree();
  for (int l = 0; l < a.dimension(); ++l) {
    if (tail_a != tail_b) return tail_a < tail_b;
    tail_a -= a[l];
    tail_b -= b[l];
  }
  return false;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& a) const noexcept {
  std::size_t h = static_cast<std::size_t>(a.dimension());
  for (int e : a.entries()) h = h * 1000003u ^ static_cast<std::size_t>(e + 1);
  return h;
}

IndexSet::IndexSet(int m) : m_(m) { check_dimension(m); }

IndexSet::IndexSet(int m, std::vector<MultiIndex> elements)
    : m_(m), elements_(std::move(elements)) {
  check_dimension(m);
  for (const auto& a : elements_) check_same_dimension(m, a.dimension());
  std::sort(elements_.begin(), elements_.end(), order_less);
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  positions_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) positions_.emplace(elements_[i], i);
}

std::optional<std::size_t> IndexSet::position(const MultiIndex& a) const {
  if (a.dimension() != m_) return std::nullopt;
  auto it = positions_.find(a);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

int IndexSet::max_degree() const {
  return elements_.empty() ? -1 : elements_.back().degree();
}

namespace {

// All exponent tuples of length m with entries summing to exactly d.
void compositions(int m, int d, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == m - 1) {
    prefix.push_back(d);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = 0; e <= d; ++e) {
    prefix.push_back(e);
    compositions(m, d - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

IndexSet degree_set(int m, int d) {
  check_dimension(m);
  if (d < 0) throw InvalidInput("degree must be nonnegative");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  compositions(m, d, prefix, out);
  return IndexSet(m, std::move(out));
}

IndexSet triangle_set(int m, int d) {
  check_dimension(m);
  if (d < 0) throw InvalidInput("degree must be nonnegative");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  for (int k = 0; k <= d; ++k) compositions(m, k, prefix, out);
  return IndexSet(m, std::move(out));
}

IndexSet minkowski_sum(const IndexSet& a, const IndexSet& b) {
  check_same_dimension(a.dimension(), b.dimension());
  std::vector<MultiIndex> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + y);
  return IndexSet(a.dimension(), std::move(out));
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  check_same_dimension(a.dimension(), b.dimension());
  std::vector<MultiIndex> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return IndexSet(a.dimension(), std::move(out));
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  check_same_dimension(a.dimension(), b.dimension());
  std::vector<MultiIndex> out;
  for (const auto& x : a)
    if (!b.contains(x)) out.push_back(x);
  return IndexSet(a.dimension(), std::move(out));
}

IndexSet extension(const IndexSet& a) {
  const int m = a.dimension();
  std::vector<MultiIndex> out(a.begin(), a.end());
  for (int l = 0; l < m; ++l) {
    const MultiIndex e = MultiIndex::unit(m, l);
    for (const auto& x : a) out.push_back(x + e);
  }
  return IndexSet(m, std::move(out));
}

IndexSet boundary(const IndexSet& a) { return set_difference(extension(a), a); }

IndexSet missing_indices(const IndexSet& a) {
  return set_difference(minkowski_sum(a, a), a);
}

void write_index_set(std::ostream& os, const IndexSet& a) {
  for (const auto& x : a) {
    for (int l = 0; l < x.dimension(); ++l) {
      if (l) os << ' ';
      os << x[l];
    }
    os << '\n';
  }
}

std::string to_text(const IndexSet& a) {
  std::ostringstream os;
  write_index_set(os, a);
  return os.str();
}

IndexSet read_index_set(std::istream& is) {
  std::vector<MultiIndex> out;
  int m = 0;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<int> e;
    int v = 0;
    while (ls >> v) e.push_back(v);
    if (e.empty()) continue;
    if (m == 0) m = static_cast<int>(e.size());
    check_same_dimension(m, static_cast<int>(e.size()));
    out.emplace_back(std::move(e));
  }
  if (m == 0) throw InvalidInput("index set text contains no multi-indices");
  return IndexSet(m, std::move(out));
}

}  // namespace slrc
