#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tw/bounds.hpp"
#include "tw/constructions.hpp"
#include "tw/enumerate.hpp"
#include "tw/families.hpp"
#include "tw/terminal_wiener.hpp"

using namespace tw;
using testing_support::error_of;

namespace {

// Every tree reachable by detaching one leaf and hanging it elsewhere, same diameter.
std::int64_t best_move_bruteforce(const Tree& t) {
  const int n = t.order();
  const int d = oracle::diameter(t);
  auto edges = oracle::edges_of(t);
  std::int64_t best = -1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    for (int side = 0; side < 2; ++side) {
      const int leaf = side ? v : u, stem = side ? u : v;
      if (t.degree(leaf) != 1) continue;
      for (int target = 0; target < n; ++target) {
        if (target == leaf || target == stem) continue;
        std::vector<Edge> moved;
        for (std::size_t j = 0; j < edges.size(); ++j) {
          if (j != i) moved.push_back({edges[j].first, edges[j].second});
        }
        moved.push_back({leaf, target});
        auto m = Tree::from_edges(n, moved);
        if (oracle::diameter(m) != d) continue;
        best = std::max(best, oracle::terminal_wiener(m));
      }
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("bundle spiders") {
  auto t = build_bundle_spider({{1, 7}, {1, 6}, {1, 6}});
  CHECK(oracle::tree_code(t) == oracle::tree_code(construct_fig1(1)));
  auto u = build_bundle_spider({{3, 0}, {2, 2}});
  CHECK(u.order() == 8);
  CHECK(oracle::diameter(u) == 6);
}

TEST_CASE("spider maximum equals listing every branch multiset") {
  for (int n = 5; n <= 13; ++n) {
    for (int d = 2; d <= 6; ++d) {
      const auto expected = oracle::spider_bruteforce(n, d);
      auto got = spider_family_max(n, d);
      if (expected < 0) {
        CHECK_FALSE(got);
        continue;
      }
      REQUIRE(got);
      CHECK(got->value == expected);
      auto t = build_bundle_spider(got->best);
      CHECK(t.order() == n);
      CHECK(oracle::diameter(t) == d);
      CHECK(oracle::terminal_wiener(t) == expected);
    }
  }
}

TEST_CASE("caterpillar maximum equals the exhaustive caterpillar scan") {
  for (int n = 5; n <= 12; ++n) {
    for (int d = 3; d <= n - 1; ++d) {
      std::int64_t best = -1;
      for_each_tree(n, [&](const Tree& t) {
        if (oracle::is_caterpillar(t) && oracle::diameter(t) == d) best = std::max(best, oracle::terminal_wiener(t));
      });
      auto got = caterpillar_family_max(n, d);
      CHECK(got.value == best);
      CHECK(got.best.k() == d - 1);
      CHECK(oracle::terminal_wiener(construct_caterpillar(got.best)) == best);
    }
  }
  CHECK(error_of([] { caterpillar_family_max(10, 2); }) == ErrorCode::BadDiameter);
  CHECK(error_of([] { caterpillar_family_max(10, 10); }) == ErrorCode::BadDiameter);
}

TEST_CASE("figure trees against the two families") {
  const int orders[] = {23, 30, 40, 40}, diameters[] = {4, 5, 6, 7};
  const std::int64_t values[] = {582, 1162, 2508, 2592};
  for (int i = 0; i < 4; ++i) {
    auto spider = spider_family_max(orders[i], diameters[i]);
    REQUIRE(spider);
    CHECK(spider->value == values[i]);
    auto cat = caterpillar_family_max(orders[i], diameters[i]);
    CHECK(cat.value < values[i]);
    CHECK(cat.value == upper_bound_by_diameter(orders[i], diameters[i]).value);
  }
}

TEST_CASE("leaf moves") {
  for (int n = 6; n <= 9; ++n) {
    for_each_tree(n, [&](const Tree& t) {
      if (oracle::diameter(t) < 3) return;
      auto r = best_leaf_move(t);
      const auto expected = best_move_bruteforce(t);
      CHECK(r.best_neighbor == std::max<std::int64_t>(expected, 0));
      CHECK(r.improvement.has_value() == (expected > oracle::terminal_wiener(t)));
      if (r.improvement) {
        CHECK(oracle::diameter(*r.improvement) == oracle::diameter(t));
        CHECK(oracle::terminal_wiener(*r.improvement) == expected);
      }
    });
  }
}

TEST_CASE("no single leaf move improves the larger figure trees") {
  for (int id : {3, 4}) {
    auto t = construct_fig1(id);
    auto r = best_leaf_move(t);
    CHECK(r.neighbors > 0);
    CHECK_FALSE(r.improvement);
    CHECK(r.best_neighbor < tw_edgecut(t));
  }
}

}  // TEST_SUITE
