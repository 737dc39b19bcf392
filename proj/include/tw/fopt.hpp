#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace tw {

/// Non-increasing, non-negative weights w_1 >= ... >= w_k >= 0, k >= 1.
class WeightMultiset {
 public:
  /// Sorts the input. Throws Error{BadArg} if empty or any weight is negative.
  explicit WeightMultiset(std::vector<int> weights);

  std::span<const int> weights() const noexcept { return w_; }
  int k() const noexcept { return static_cast<int>(w_.size()); }

 private:
  std::vector<int> w_;
};

/// sum_{i=1}^{k-1} (y_1 + ... + y_i)(y_{i+1} + ... + y_k); 0 for k <= 1.
std::int64_t f_value(std::span<const int> y);

/// Maximum of f over arrangements of a multiset. Every maximizing arrangement
/// is kept, stored once per mirror pair as the lexicographically larger of
/// (y, reverse(y)); that representative always satisfies y_1 >= y_k.
struct FMaxResult {
  std::int64_t value = 0;
  std::set<std::vector<int>> argmax;
};

inline constexpr int kBruteForceCap = 9;

/// Scans every distinct permutation. Throws Error{TooLarge} when k > cap.
FMaxResult f_max_bruteforce(const WeightMultiset& w, int cap = kBruteForceCap);

/// Scans only valley arrangements: the weights, taken in non-increasing
/// order, are each placed at the inner end of a left block or of a right
/// block, giving a sequence that falls then rises.
FMaxResult f_max_valley(const WeightMultiset& w);

enum class ValleyShape {
  StrictValley,   // y_1 >= .. >= y_t >= y_{t+1} <= .. <= y_k with a strict left balance
  ValleyAtT,      // same shape, left balance tight
  ValleyBeforeT,  // y_1 >= .. >= y_t <= y_{t+1} <= .. <= y_k, left balance tight
};

/// Index t (1-based, 2 <= t <= k-2) with
///   y_1 + .. + y_{t-1} <= y_{t+2} + .. + y_k   (left balance)
///   y_1 + .. + y_t      > y_{t+3} + .. + y_k   (right balance)
/// and the shape those balances force. `reversed` is set when the
/// certificate holds for reverse(y) rather than y; f cannot tell them apart.
struct ValleyCertificate {
  int t = 0;
  ValleyShape shape = ValleyShape::StrictValley;
  std::int64_t left_lhs = 0, left_rhs = 0;
  std::int64_t right_lhs = 0, right_rhs = 0;
  bool reversed = false;
};

/// nullopt when neither orientation has a balanced t with a matching shape.
/// Throws Error{TooShort} for k < 4.
std::optional<ValleyCertificate> certify_valley(std::span<const int> y);

}  // namespace tw
