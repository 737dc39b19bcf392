#pragma once

#include <cstdint>

#include "tw/backbone.hpp"
#include "tw/tree.hpp"

namespace tw {

/// Sum of distances over unordered pairs of leaves, by one BFS per leaf.
/// 0 when the tree has fewer than two leaves.
std::int64_t tw_pairwise(const Tree& t);

/// Same quantity as a sum over edges of the product of leaf counts on the
/// two sides, from a single rooted traversal. Throws Error{OrderTooSmall}
/// for n < 2.
std::int64_t tw_edgecut(const Tree& t);

/// (n-1)(n-k-1) + F(x) for the caterpillar with spine vector x.
/// Throws Error{InconsistentOrder} if n != k + 2 + sum(x), Error{BadSpec}
/// for an empty or negative vector.
std::int64_t tw_backbone(int n, const BackboneVector& x);

}  // namespace tw
