#pragma once

// Exact rank over Q(i) for small Gaussian-integer Hankel data.

#include <algorithm>
#include <complex>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

struct Gauss {
  Rational re = 0;
  Rational im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  Gauss operator-(const Gauss& o) const { return {re - o.re, im - o.im}; }
  Gauss operator*(const Gauss& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Gauss operator/(const Gauss& o) const {
    const Rational den = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den};
  }
};

using GaussMatrix = std::vector<std::vector<Gauss>>;

inline int exact_rank(GaussMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      const Gauss f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] - f * a[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Largest rank among the Hankel blocks [h_{i+j}] that only touch h_0..h_d.
/// Every fully known submatrix sits inside one of the leading (a+1)x(b+1)
/// blocks with a + b = d, so those suffice.
inline int max_known_block_rank(const std::vector<std::pair<int, int>>& h) {
  const int d = static_cast<int>(h.size()) - 1;
  int best = 0;
  for (int a = 0; a <= d; ++a) {
    const int b = d - a;
    GaussMatrix block(static_cast<std::size_t>(a + 1), std::vector<Gauss>(static_cast<std::size_t>(b + 1)));
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) {
        const auto& v = h[static_cast<std::size_t>(i + j)];
        block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {v.first, v.second};
      }
    best = std::max(best, exact_rank(std::move(block)));
  }
  return best;
}

}  // namespace oracle
