#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tw/backbone.hpp"
#include "tw/tree.hpp"

namespace tw {

inline constexpr int kEnumerationCap = 20;
inline constexpr int kCaterpillarCap = 26;

/// Membership test for the classes T(n,d), T(n,Delta), T(n,d,l) and their
/// caterpillar restrictions. Infeasible combinations simply match nothing.
struct EnumFilter {
  int n = 1;
  std::optional<int> diameter;
  std::optional<int> max_degree;
  std::optional<int> leaf_count;
  bool caterpillar_only = false;

  bool accepts(const Tree& t) const;
};

/// A static slice of a stream: items whose 0-based position p satisfies
/// p % count == index.
struct Shard {
  int index = 0;
  int count = 1;

  bool owns(std::uint64_t position) const {
    return count <= 1 || position % static_cast<std::uint64_t>(count) == static_cast<std::uint64_t>(index);
  }
};

/// Free trees of order n, one per isomorphism class, generated as canonical
/// level sequences (Wright-Richmond-Odlyzko-McKay). Constant memory.
class FreeTreeStream {
 public:
  /// Throws Error{TooLarge} when n > cap, Error{BadArg} when n < 1.
  explicit FreeTreeStream(int n, int cap = kEnumerationCap);

  /// Advances to the next tree; false once exhausted.
  bool advance();
  /// Level sequence of the current tree (root at level 0, preorder).
  const std::vector<int>& level_sequence() const noexcept { return layout_; }
  Tree tree() const;
  std::optional<Tree> next();

 private:
  int n_;
  std::vector<int> layout_;
  bool started_ = false;
  bool done_ = false;
};

Tree tree_from_level_sequence(const std::vector<int>& levels);

using TreeVisitor = std::function<void(const Tree&)>;

/// Visits every free tree of order n in the shard; returns how many were visited.
std::uint64_t for_each_tree(int n, const TreeVisitor& visit, Shard shard = {},
                            int cap = kEnumerationCap);

/// Visits every tree accepted by the filter, in all_trees order.
std::uint64_t for_each_matching(const EnumFilter& filter, const TreeVisitor& visit,
                                Shard shard = {}, int cap = kEnumerationCap);

/// Every caterpillar of order n once, as a spine vector normalized so that x
/// is lexicographically >= its reversal. spine_length restricts k (a
/// caterpillar with spine length k has diameter k+1). n = 2 yields nothing:
/// the single edge has no internal vertex. Throws Error{TooLarge}.
std::uint64_t for_each_caterpillar(int n, const std::function<void(const CaterpillarSpec&)>& visit,
                                   std::optional<int> spine_length = std::nullopt,
                                   int cap = kCaterpillarCap);

/// Diameter-4 trees of order n: a center whose k >= 2 branches are stars
/// carrying c_1 >= .. >= c_k >= 0 pendants with at least two c_i >= 1, one
/// per multiset. Nothing for n < 5.
std::uint64_t for_each_diameter4_tree(int n, const TreeVisitor& visit, Shard shard = {});

/// Diameter-5 trees of order n: two adjacent centers, each with such a
/// branch multiset (at least one c_i >= 1 per side), one per unordered pair.
/// Nothing for n < 6.
std::uint64_t for_each_diameter5_tree(int n, const TreeVisitor& visit, Shard shard = {});

enum class Objective { Max, Min };
enum class Generator { Auto, Exhaustive, Structured };

struct ExtremalResult {
  std::int64_t value = 0;
  std::vector<CanonicalCode> witnesses;  // ascending
  std::vector<Tree> witness_trees;       // aligned with witnesses
  std::uint64_t scanned = 0;             // trees in the class
};

using TreeObjective = std::function<std::int64_t(const Tree&)>;

/// Exact optimum of the objective (terminal Wiener index by default) over
/// the filtered class with the complete witness set. Auto uses the
/// structured generators for diameter 4 and 5. The result does not depend on
/// `jobs`. Throws Error{EmptyClass} when nothing matches.
ExtremalResult extremal_search(const EnumFilter& filter, Objective objective, int jobs = 1,
                               Generator generator = Generator::Auto,
                               const TreeObjective& value_of = {});

}  // namespace tw
