#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tw/bounds.hpp"
#include "tw/constructions.hpp"
#include "tw/terminal_wiener.hpp"

using namespace tw;
using testing_support::error_of;

namespace {

std::multiset<int> leg_lengths(const Tree& t, int center) {
  std::multiset<int> legs;
  for (int first : t.neighbors(center)) {
    int prev = center, v = first, len = 1;
    while (t.degree(v) == 2) {
      int next = t.neighbors(v)[0] == prev ? t.neighbors(v)[1] : t.neighbors(v)[0];
      prev = v;
      v = next;
      ++len;
    }
    legs.insert(len);
  }
  return legs;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("starlike trees") {
  auto a = construct_starlike(9, 4);
  CHECK(leg_lengths(a, 0) == std::multiset<int>{2, 2, 2, 2});
  CHECK(oracle::terminal_wiener(a) == 24);
  CHECK(oracle::terminal_wiener(a) == lower_bound_by_diameter(9, 4));
  auto b = construct_starlike(7, 4);
  CHECK(leg_lengths(b, 0) == std::multiset<int>{2, 2, 2});
  CHECK(oracle::terminal_wiener(b) == 12);
  for (int n = 4; n <= 20; ++n) CHECK(error_of([&] { construct_starlike(n, n - 1); }) == ErrorCode::Infeasible);
}

TEST_CASE("starlike trees have the claimed shape wherever they exist") {
  for (int n = 4; n <= 18; ++n) {
    for (int d = 2; d <= n - 2; ++d) {
      std::optional<Tree> t;
      try {
        t = construct_starlike(n, d);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Infeasible);
        continue;
      }
      const int l0 = leaf_bounds(n, d).l0;
      CHECK(t->order() == n);
      CHECK(oracle::diameter(*t) == d);
      CHECK(oracle::leaf_count(*t) == l0);
      CHECK(oracle::terminal_wiener(*t) == lower_bound_by_diameter(n, d));
    }
  }
}

TEST_CASE("double brooms") {
  auto even = construct_double_broom(10, 5);
  CHECK(oracle::terminal_wiener(even) == 57);
  CHECK(oracle::diameter(even) == 5);
  auto p1 = construct_double_broom(9, 5, 1), p2 = construct_double_broom(9, 5, 2);
  CHECK(oracle::terminal_wiener(p1) == 38);
  CHECK(oracle::terminal_wiener(p2) == 38);
  CHECK(oracle::tree_code(p1) != oracle::tree_code(p2));
  CHECK(oracle::terminal_wiener(construct_double_broom(23, 4)) == 580);

  CHECK(error_of([] { construct_double_broom(10, 5, 1); }) == ErrorCode::ParityMismatch);
  CHECK(error_of([] { construct_double_broom(9, 5); }) == ErrorCode::ParityMismatch);
  CHECK(error_of([] { construct_double_broom(9, 5, 3); }) == ErrorCode::BadPos);
  CHECK(error_of([] { construct_double_broom(9, 5, 0); }) == ErrorCode::BadPos);
  CHECK(error_of([] { construct_double_broom(9, 2); }) == ErrorCode::BadDiameter);
}

TEST_CASE("odd brooms are pairwise distinct and all meet the bound") {
  for (int n = 5; n <= 16; ++n) {
    for (int d = 3; d <= n - 1; ++d) {
      const auto bound = upper_bound_by_diameter(n, d).value;
      if ((n - d + 1) % 2 == 0) {
        auto t = construct_double_broom(n, d);
        CHECK(oracle::diameter(t) == d);
        CHECK(oracle::terminal_wiener(t) == bound);
        continue;
      }
      std::set<std::string> codes;
      for (int pos = 1; pos <= d / 2; ++pos) {
        auto t = construct_double_broom(n, d, pos);
        CHECK(t.order() == n);
        CHECK(oracle::diameter(t) == d);
        CHECK(oracle::terminal_wiener(t) == bound);
        codes.insert(oracle::tree_code(t));
      }
      CHECK(codes.size() == static_cast<std::size_t>(d / 2));
    }
  }
}

TEST_CASE("caterpillars") {
  auto a = construct_caterpillar({{1, 0, 1}});
  CHECK(a.order() == 7);
  CHECK(oracle::leaf_count(a) == 4);
  CHECK(oracle::terminal_wiener(a) == 20);
  auto s = construct_caterpillar({{3}});
  CHECK(s.order() == 6);
  CHECK(oracle::max_degree(s) == 5);
  auto b = construct_caterpillar({{1, 1, 1, 1}});
  CHECK(b.order() == 10);
  CHECK(oracle::terminal_wiener(b) == 55);
  CHECK(oracle::terminal_wiener(b) == delta3_max(10).value);
  CHECK(error_of([] { construct_caterpillar({{}}); }) == ErrorCode::BadSpec);
  CHECK(error_of([] { construct_caterpillar({{1, -1}}); }) == ErrorCode::BadSpec);
}

TEST_CASE("caterpillar spine degrees follow the vector") {
  const std::vector<std::vector<int>> specs{{0, 0}, {2, 0, 3}, {1, 4, 0, 0, 2}, {5}};
  for (const auto& x : specs) {
    auto t = construct_caterpillar({x});
    CHECK(oracle::is_caterpillar(t));
    CHECK(t.order() == static_cast<int>(x.size()) + 2 + std::accumulate(x.begin(), x.end(), 0));
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(t.degree(static_cast<int>(i)) == x[i] + 2);
  }
}

TEST_CASE("figure trees") {
  const int orders[] = {23, 30, 40, 40}, diameters[] = {4, 5, 6, 7};
  const std::int64_t values[] = {582, 1162, 2508, 2592};
  for (int id = 1; id <= 4; ++id) {
    auto t = construct_fig1(id);
    CHECK(t.order() == orders[id - 1]);
    CHECK(oracle::diameter(t) == diameters[id - 1]);
    CHECK(oracle::terminal_wiener(t) == values[id - 1]);
  }
  CHECK(error_of([] { construct_fig1(0); }) == ErrorCode::BadId);
  CHECK(error_of([] { construct_fig1(5); }) == ErrorCode::BadId);
}

TEST_CASE("degree-three optima") {
  CHECK(delta3_optimal_backbone(8) == BackboneVector{{1, 1, 1}});
  CHECK(delta3_optimal_backbone(9) == BackboneVector{{1, 1, 0, 1}});
  CHECK(delta3_optimal_backbone(10) == BackboneVector{{1, 1, 1, 1}});
  CHECK(delta3_optimal_backbone(11) == BackboneVector{{1, 1, 0, 1, 1}});
  CHECK(oracle::terminal_wiener(construct_delta3_optimal(8)) == 32);
  CHECK(oracle::terminal_wiener(construct_delta3_optimal(9)) == 38);
  CHECK(oracle::terminal_wiener(construct_delta3_optimal(11)) == 64);
  for (int n = 6; n <= 30; ++n) {
    auto t = construct_delta3_optimal(n);
    CHECK(t.order() == n);
    CHECK(oracle::max_degree(t) == 3);
    CHECK(oracle::terminal_wiener(t) == delta3_max(n).value);
  }
  CHECK(error_of([] { construct_delta3_optimal(5); }) == ErrorCode::OrderTooSmall);
}

}  // TEST_SUITE
