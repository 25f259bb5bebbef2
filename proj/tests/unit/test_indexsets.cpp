#include <random>
#include <sstream>

#include <doctest.h>

#include "../oracles/brute_force.hpp"
#include "slrc/errors.hpp"
#include "slrc/indexsets.hpp"
#include "slrc/quasihankel.hpp"

using namespace slrc;

namespace {

bool strictly_sorted(const IndexSet& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!order_less(a[i - 1], a[i])) return false;
  return true;
}

IndexSet from_lists(int m, std::initializer_list<std::initializer_list<int>> items) {
  std::vector<MultiIndex> v;
  for (const auto& e : items) v.emplace_back(e);
  return IndexSet(m, v);
}

}  // namespace

TEST_CASE("order_less examples") {
  CHECK(order_less({1, 0}, {0, 1}));
  CHECK_FALSE(order_less({0, 1}, {1, 0}));
  CHECK(order_less({0, 0}, {3, 0}));
  CHECK(order_less({2, 1}, {1, 2}));
  CHECK_FALSE(order_less({2, 1}, {2, 1}));
  CHECK(order_less(MultiIndex{2}, MultiIndex{5}));
  CHECK_THROWS_AS(order_less({1, 0}, {1, 0, 0}), DimensionMismatch);
}

TEST_CASE("order_less is a strict total order on random triples") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> e(0, 3);
  auto draw = [&] { return MultiIndex{e(gen), e(gen), e(gen)}; };
  for (int t = 0; t < 2000; ++t) {
    const auto a = draw(), b = draw(), c = draw();
    const int relations = order_less(a, b) + order_less(b, a) + (a == b);
    CHECK(relations == 1);
    if (order_less(a, b) && order_less(b, c)) CHECK(order_less(a, c));
  }
}

TEST_CASE("triangle_set examples") {
  const auto t23 = triangle_set(2, 3);
  const auto expected = from_lists(2, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}});
  REQUIRE(t23.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(t23[i] == expected[i]);

  const auto t1 = triangle_set(1, 4);
  REQUIRE(t1.size() == 5);
  for (int k = 0; k <= 4; ++k) CHECK(t1[static_cast<std::size_t>(k)] == MultiIndex{k});

  const auto t30 = triangle_set(3, 0);
  REQUIRE(t30.size() == 1);
  CHECK(t30[0] == MultiIndex::zero(3));
}

TEST_CASE("degree_set examples") {
  const auto d22 = degree_set(2, 2);
  REQUIRE(d22.size() == 3);
  CHECK(d22[0] == MultiIndex{2, 0});
  CHECK(d22[1] == MultiIndex{1, 1});
  CHECK(d22[2] == MultiIndex{0, 2});
  CHECK(degree_set(2, 0).size() == 1);
  const auto d15 = degree_set(1, 5);
  REQUIRE(d15.size() == 1);
  CHECK(d15[0] == MultiIndex{5});
}

TEST_CASE("cardinalities, ordering and partition match an independent enumeration") {
  for (int m = 1; m <= 4; ++m) {
    for (int d = 0; d <= 8; ++d) {
      const auto t = triangle_set(m, d);
      CHECK(static_cast<long>(t.size()) == quasihankel::binomial(m + d, m));
      CHECK(degree_set(m, d).size() == static_cast<std::size_t>(quasihankel::binomial(m + d - 1, m - 1)));
      CHECK(strictly_sorted(t));
      const auto reference = oracle::enumerate_triangle(m, d);
      REQUIRE(reference.size() == t.size());
      for (std::size_t i = 0; i < t.size(); ++i) CHECK(oracle::same_index(t[i], reference[i]));

      IndexSet layers(m);
      for (int k = 0; k <= d; ++k) {
        const auto layer = degree_set(m, k);
        CHECK(set_difference(layer, layers) == layer);
        layers = set_union(layers, layer);
      }
      CHECK(layers == t);
    }
  }
}

TEST_CASE("Minkowski sums") {
  CHECK(minkowski_sum(triangle_set(2, 3), triangle_set(2, 3)) == triangle_set(2, 6));
  const auto a = from_lists(2, {{0, 0}, {2, 1}, {0, 3}});
  CHECK(minkowski_sum(a, from_lists(2, {{0, 0}})) == a);
  CHECK(minkowski_sum(degree_set(2, 1), degree_set(2, 2)) == degree_set(2, 3));
  for (int m = 1; m <= 3; ++m)
    for (int d1 = 0; d1 <= 5; ++d1)
      for (int d2 = 0; d2 <= 5; ++d2) {
        CHECK(minkowski_sum(triangle_set(m, d1), triangle_set(m, d2)) == triangle_set(m, d1 + d2));
        CHECK(minkowski_sum(degree_set(m, d1), degree_set(m, d2)) == degree_set(m, d1 + d2));
      }
  CHECK_THROWS_AS(minkowski_sum(triangle_set(2, 1), triangle_set(3, 1)), DimensionMismatch);
}

TEST_CASE("extension and boundary") {
  for (int m = 1; m <= 3; ++m)
    for (int d = 0; d <= 4; ++d) {
      CHECK(extension(triangle_set(m, d)) == triangle_set(m, d + 1));
      CHECK(boundary(triangle_set(m, d)) == degree_set(m, d + 1));
    }
  const auto b = boundary(from_lists(2, {{0, 0}}));
  CHECK(b == from_lists(2, {{1, 0}, {0, 1}}));
}

TEST_CASE("missing indices") {
  for (int d = 0; d <= 6; ++d) {
    const auto miss = missing_indices(triangle_set(1, d));
    REQUIRE(miss.size() == static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) CHECK(miss[static_cast<std::size_t>(k)] == MultiIndex{d + 1 + k});
  }
  const auto miss = missing_indices(triangle_set(2, 3));
  CHECK(miss.size() == 18);
  CHECK(miss[0] == MultiIndex{4, 0});
  CHECK(strictly_sorted(miss));
  CHECK(missing_indices(triangle_set(1, 0)).empty());
}

TEST_CASE("sets are sorted and deduplicated on construction") {
  const IndexSet a(2, {MultiIndex{0, 2}, MultiIndex{1, 0}, MultiIndex{0, 2}, MultiIndex{0, 0}});
  REQUIRE(a.size() == 3);
  CHECK(strictly_sorted(a));
  CHECK(a.position(MultiIndex{0, 2}) == 2u);
  CHECK_FALSE(a.contains(MultiIndex{5, 5}));
  CHECK_THROWS_AS(IndexSet(2, {MultiIndex{1}}), DimensionMismatch);
  CHECK_THROWS_AS(MultiIndex({1, -1}), InvalidInput);
  CHECK_THROWS_AS(MultiIndex({kMaxDegree, 1}), InvalidInput);
}

TEST_CASE("text serialization round-trips") {
  const auto a = triangle_set(3, 2);
  std::ostringstream os;
  write_index_set(os, a);
  CHECK(os.str().substr(0, 12) == "0 0 0\n1 0 0\n");
  std::istringstream is(os.str());
  CHECK(read_index_set(is) == a);
  CHECK(to_text(a) == os.str());
}
