#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "tw/error.hpp"
#include "tw/tree.hpp"

namespace testing_support {

inline tw::Tree path(int n) {
  std::vector<tw::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return tw::Tree::from_edges(n, e);
}

inline tw::Tree star(int n) {
  std::vector<tw::Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return tw::Tree::from_edges(n, e);
}

inline tw::Tree shuffled(const tw::Tree& t, std::mt19937_64& rng) {
  std::vector<int> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return tw::relabel(t, perm);
}

/// Code of the tw::Error the callable throws.
template <class F>
tw::ErrorCode error_of(F&& fn) {
  try {
    fn();
  } catch (const tw::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return tw::ErrorCode::BadArg;
}

}  // namespace testing_support
