#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "tw/constructions.hpp"
#include "tw/enumerate.hpp"
#include "tw/structure.hpp"

using namespace tw;
using testing_support::error_of;

namespace {

int outcomes(const StructureReport& r, const std::string& clause, ClauseOutcome o) {
  int count = 0;
  for (const auto& s : r.splits)
    for (const auto& c : s.clauses) count += c.clause == clause && c.outcome == o;
  return count;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("paths are out of scope and non-caterpillars are rejected") {
  auto r = check_optimal_structure(testing_support::path(7), 2);
  CHECK_FALSE(r.applicable);
  CHECK(r.consistent());
  auto spider = Tree::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK(error_of([&] { check_optimal_structure(spider, 3); }) == ErrorCode::NotCaterpillar);
  CHECK(error_of([] { check_optimal_structure(construct_caterpillar({{1, 1}}), 4); }) == ErrorCode::BadArg);
}

TEST_CASE("a broken first clause is reported as violated") {
  // degrees 4,3,3,3,3,4: with t=3 and s=4 the first clause wants d(v5)=4
  auto t = construct_caterpillar({{2, 1, 1, 1, 1, 2}});
  auto r = check_optimal_structure(t, 4);
  REQUIRE(r.applicable);
  CHECK(r.spine_degrees == std::vector<int>{4, 3, 3, 3, 3, 4});
  CHECK(outcomes(r, "clause-1", ClauseOutcome::Violated) > 0);
  CHECK_FALSE(r.consistent());
}

TEST_CASE("caterpillar optima where the clauses apply") {
  // best caterpillars at these orders; every applicable clause holds
  auto a = check_optimal_structure(construct_caterpillar({{3, 2, 1, 2, 3}}), 5);
  CHECK(a.consistent());
  CHECK(outcomes(a, "clause-1", ClauseOutcome::Holds) > 0);
  CHECK(outcomes(a, "clause-4", ClauseOutcome::Holds) > 0);
  CHECK(outcomes(a, "balance", ClauseOutcome::Holds) > 0);
  CHECK(a.valley == ClauseOutcome::Holds);

  auto b = check_optimal_structure(construct_caterpillar({{2, 2, 1, 1, 2, 2}}), 4);
  CHECK(b.consistent());
  CHECK(outcomes(b, "clause-3", ClauseOutcome::Holds) > 0);
  CHECK(outcomes(b, "clause-5", ClauseOutcome::Holds) > 0);
}

TEST_CASE("a conclusion before the first spine vertex is undefined") {
  auto r = check_optimal_structure(construct_caterpillar({{2, 1, 1, 2}}), 4);
  CHECK(r.count(ClauseOutcome::Undefined) > 0);
  CHECK(r.count(ClauseOutcome::Violated) == 0);
  CHECK(r.consistent());
}

TEST_CASE("degree-three optima satisfy every applicable clause") {
  for (int n = 6; n <= 16; ++n) {
    auto res = extremal_search({.n = n, .max_degree = 3}, Objective::Max);
    for (const auto& t : res.witness_trees) {
      REQUIRE(oracle::is_caterpillar(t));
      auto r = check_optimal_structure(t, 3);
      CHECK(r.count(ClauseOutcome::Violated) == 0);
      CHECK(r.valley != ClauseOutcome::Violated);
    }
  }
}

TEST_CASE("optima with maximum degree four and five are valley caterpillars") {
  for (int delta : {4, 5}) {
    for (int n = delta + 3; n <= 13; ++n) {
      auto res = extremal_search({.n = n, .max_degree = delta}, Objective::Max);
      for (const auto& t : res.witness_trees) {
        REQUIRE(oracle::is_caterpillar(t));
        auto r = check_optimal_structure(t, delta);
        CHECK(r.consistent());
      }
    }
  }
}

}  // TEST_SUITE
