#include "tw/fopt.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "tw/error.hpp"

namespace tw {

WeightMultiset::WeightMultiset(std::vector<int> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw Error(ErrorCode::BadArg, "weight multiset must be non-empty");
  if (std::any_of(w_.begin(), w_.end(), [](int v) { return v < 0; })) {
    throw Error(ErrorCode::BadArg, "weights must be non-negative");
  }
  std::sort(w_.begin(), w_.end(), std::greater<>());
}

std::int64_t f_value(std::span<const int> y) {
  std::int64_t total = std::accumulate(y.begin(), y.end(), std::int64_t{0});
  std::int64_t prefix = 0;
  std::int64_t f = 0;
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    prefix += y[i];
    f += prefix * (total - prefix);
  }
  return f;
}

namespace {

std::vector<int> mirror_representative(const std::vector<int>& y) {
  std::vector<int> r(y.rbegin(), y.rend());
  return r > y ? r : y;
}

void offer(FMaxResult& best, const std::vector<int>& y) {
  if (y.front() < y.back()) return;
  std::int64_t v = f_value(y);
  if (best.argmax.empty() || v > best.value) {
    best.value = v;
    best.argmax.clear();
  }
  if (v == best.value) best.argmax.insert(mirror_representative(y));
}

}  // namespace

FMaxResult f_max_bruteforce(const WeightMultiset& w, int cap) {
  if (w.k() > cap) {
    throw Error(ErrorCode::TooLarge,
                "k=" + std::to_string(w.k()) + " exceeds brute-force cap " + std::to_string(cap));
  }
  std::vector<int> y(w.weights().rbegin(), w.weights().rend());
  FMaxResult best;
  do {
    offer(best, y);
  } while (std::next_permutation(y.begin(), y.end()));
  return best;
}

FMaxResult f_max_valley(const WeightMultiset& w) {
  // Group equal weights: only how many of each value go left matters.
  std::vector<std::pair<int, int>> groups;
  for (int v : w.weights()) {
    if (groups.empty() || groups.back().first != v) groups.emplace_back(v, 0);
    ++groups.back().second;
  }
  FMaxResult best;
  std::vector<int> left, right, y;
  std::function<void(std::size_t)> place = [&](std::size_t g) {
    if (g == groups.size()) {
      y.assign(left.begin(), left.end());
      y.insert(y.end(), right.rbegin(), right.rend());
      offer(best, y);
      return;
    }
    auto [value, count] = groups[g];
    for (int to_left = 0; to_left <= count; ++to_left) {
      left.insert(left.end(), to_left, value);
      right.insert(right.end(), count - to_left, value);
      place(g + 1);
      left.resize(left.size() - to_left);
      right.resize(right.size() - (count - to_left));
    }
  };
  place(0);
  return best;
}

namespace {

std::optional<ValleyCertificate> certify_oriented(std::span<const int> y) {
  const int k = static_cast<int>(y.size());
  // prefix[i] = y_1 + .. + y_i (1-based), prefix[0] = 0.
  std::vector<std::int64_t> prefix(k + 1, 0);
  for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + y[i];
  auto range_sum = [&](int from, int to) {  // y_from + .. + y_to, empty if from > to
    return from > to ? std::int64_t{0} : prefix[to] - prefix[from - 1];
  };
  auto at = [&](int i) { return y[i - 1]; };

  for (int t = 2; t <= k - 2; ++t) {
    ValleyCertificate c;
    c.t = t;
    c.left_lhs = range_sum(1, t - 1);
    c.left_rhs = range_sum(t + 2, k);
    c.right_lhs = range_sum(1, t);
    c.right_rhs = range_sum(t + 3, k);
    if (!(c.left_lhs <= c.left_rhs && c.right_lhs > c.right_rhs)) continue;

    bool head_falls = true;
    for (int i = 1; i < t; ++i) head_falls = head_falls && at(i) >= at(i + 1);
    auto rises_from = [&](int i0) {
      for (int i = i0; i < k; ++i) {
        if (at(i) > at(i + 1)) return false;
      }
      return true;
    };
    bool bottom_after_t = head_falls && at(t) >= at(t + 1) && rises_from(t + 1);
    bool bottom_at_t = head_falls && rises_from(t);

    if (c.left_lhs < c.left_rhs) {
      if (!bottom_after_t) return std::nullopt;
      c.shape = ValleyShape::StrictValley;
      return c;
    }
    if (bottom_after_t) {
      c.shape = ValleyShape::ValleyAtT;
      return c;
    }
    if (bottom_at_t) {
      c.shape = ValleyShape::ValleyBeforeT;
      return c;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ValleyCertificate> certify_valley(std::span<const int> y) {
  if (y.size() < 4) throw Error(ErrorCode::TooShort, "need k >= 4, got " + std::to_string(y.size()));
  if (auto c = certify_oriented(y)) return c;
  std::vector<int> r(y.rbegin(), y.rend());
  if (auto c = certify_oriented(r)) {
    c->reversed = true;
    return c;
  }
  return std::nullopt;
}

}  // namespace tw
