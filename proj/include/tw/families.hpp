#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tw/backbone.hpp"
#include "tw/tree.hpp"

namespace tw {

/// Best caterpillar of order n and diameter d (spine length d-1), scored
/// with the spine formula. `count` is the number of spine vectors scanned.
struct CaterpillarFamilyMax {
  std::int64_t value = 0;
  CaterpillarSpec best;
  std::uint64_t count = 0;
};

/// Throws Error{BadDiameter} unless 3 <= d <= n-1.
CaterpillarFamilyMax caterpillar_family_max(int n, int d);

/// One branch of a bundle spider: a path of `arm` edges from the center to a
/// hub carrying `pendants` leaves. With no pendants the hub is itself a leaf.
struct SpiderBranch {
  int arm = 1;
  int pendants = 0;

  friend auto operator<=>(const SpiderBranch&, const SpiderBranch&) = default;
};

/// Center with at least two branches, arms in 1..max_arm.
Tree build_bundle_spider(const std::vector<SpiderBranch>& branches);

struct SpiderFamilyMax {
  std::int64_t value = 0;
  std::vector<SpiderBranch> best;  // sorted descending
};

/// Exact maximum TW over bundle spiders of order n and diameter d whose arms
/// have length at most max_arm. nullopt when the family has no such tree.
std::optional<SpiderFamilyMax> spider_family_max(int n, int d, int max_arm = 3);

/// Trees reachable from t by moving one leaf to another vertex while keeping
/// the diameter. Returns the best TW found among them.
struct LocalMoveResult {
  std::int64_t best_neighbor = 0;
  std::uint64_t neighbors = 0;
  std::optional<Tree> improvement;
};

LocalMoveResult best_leaf_move(const Tree& t);

}  // namespace tw
