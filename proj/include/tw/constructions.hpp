#pragma once

#include <optional>

#include "tw/backbone.hpp"
#include "tw/tree.hpp"

namespace tw {

/// Spider of degree l0 with diameter d: l0-2 legs of length floor(d/2), one of
/// length ceil(d/2) and one carrying the remaining vertices. Vertex 0 is the
/// center. Throws Error{Infeasible} unless 2 <= d <= n-2 and the last leg is
/// non-empty.
Tree construct_starlike(int n, int d);

/// Path on d-1 vertices with floor((n-d+1)/2) pendants at each end. When
/// n-d+1 is odd one more pendant goes on spine vertex `pos` (1-based from one
/// end, 1 <= pos <= floor(d/2)). Throws Error{ParityMismatch} when pos is
/// given for an even leaf count or missing for an odd one, Error{BadPos} for
/// pos out of range, Error{BadDiameter} unless 3 <= d <= n-1.
Tree construct_double_broom(int n, int d, std::optional<int> pos = std::nullopt);

/// Spine v_1..v_k in ids 0..k-1, then the pendants. Throws Error{BadSpec}.
Tree construct_caterpillar(const CaterpillarSpec& spec);

/// The four extremal trees drawn for n=23 d=4, n=30 d=5, n=40 d=6 and n=40
/// d=7. Throws Error{BadId} for ids other than 1..4.
Tree construct_fig1(int id);

/// Maximizer of the terminal Wiener index among trees with maximum degree 3.
/// With n = 4p + r the spine is
///   r=0: 2p-1 vertices, all degree 3
///   r=1: 2p vertices, v_{p+1} of degree 2
///   r=2: 2p vertices, all degree 3
///   r=3: 2p+1 vertices, v_{p+1} of degree 2
/// Throws Error{OrderTooSmall} for n < 6.
Tree construct_delta3_optimal(int n);
BackboneVector delta3_optimal_backbone(int n);

}  // namespace tw
