#pragma once

#include <optional>
#include <vector>

#include "tw/tree.hpp"

namespace tw {

/// Caterpillar parametrization along the spine v_1..v_k: x_i = d(v_i) - 2.
/// The two spine ends carry x_i + 1 pendants, interior vertices carry x_i, so
/// the tree has k + 2 + sum(x) vertices. k = 1 is the star with x_1 + 2 leaves.
struct BackboneVector {
  std::vector<int> x;

  int k() const noexcept { return static_cast<int>(x.size()); }
  int order() const;
  int leaf_count() const { return order() - k(); }
  bool valid() const;
  BackboneVector reversed() const;
  /// Lexicographically larger of x and its reversal.
  BackboneVector oriented() const;

  friend bool operator==(const BackboneVector&, const BackboneVector&) = default;
};

using CaterpillarSpec = BackboneVector;

/// Spine vector of a caterpillar (in spine order from the lower-id end), or
/// nullopt when t has no internal vertex or is not a caterpillar.
std::optional<BackboneVector> backbone_vector(const Tree& t);

}  // namespace tw
