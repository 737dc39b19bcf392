#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "tw/backbone.hpp"

namespace tw {

using Rational = boost::rational<std::int64_t>;

/// Leaf-count range for trees of order n and diameter d:
/// l0 = ceil((n-1)/floor(d/2)) for even d, ceil((n-2)/floor(d/2)) for odd d,
/// and l_max = n-d+1.
struct LeafBounds {
  int l0 = 0;
  int l_max = 0;
};

/// Throws Error{BadDiameter} unless 2 <= d <= n-1.
LeafBounds leaf_bounds(int n, int d);

/// (n-1)(l-1). Throws Error{BadLeafCount} unless 3 <= l <= n-1.
std::int64_t lower_bound_by_leaves(int n, int l);

/// (n-1)(l0-1). Throws Error{BadDiameter} unless 2 <= d <= n-1.
std::int64_t lower_bound_by_diameter(int n, int d);

/// x(x-1) + (n-x-1) floor(x/2) ceil(x/2). Throws Error{BadArg} unless 2 <= x <= n-1.
std::int64_t g_value(int x, int n);

/// The same polynomial without the domain check.
std::int64_t g_polynomial(std::int64_t x, std::int64_t n);

/// Residue-split closed form for the maximum of g and its maximizers. For
/// n < 8 some listed maximizers exceed n-1 and are attained only by the
/// polynomial extension. Throws Error{BadArg} for n < 3.
struct GMax {
  std::int64_t value = 0;
  std::vector<int> argmax;
};
GMax g_max(int n);

/// (n-d+1)(n-d) + (d-2) floor((n-d+1)/2) ceil((n-d+1)/2). The formula is
/// evaluated for every 2 <= d <= n-1; asserted_valid is d >= floor((n-2)/3).
struct DiameterUpperBound {
  std::int64_t value = 0;
  bool asserted_valid = false;
};
DiameterUpperBound upper_bound_by_diameter(int n, int d);

Rational g1_value(Rational x, int n);
Rational g2_value(Rational x, int n);

/// Terminal Wiener index of the caterpillar with l = n-k leaves whose spine
/// is t vertices of degree 3, then n+2-2l vertices of degree 2, then the
/// remaining l-2-t vertices of degree 3:
///   (l-1)(l^2+7l-12)/6 + (t+shift)(l-(t+shift))(n+2-2l).
/// shift = 1 is the correct coefficient; shift = 2 is kept so the verifier
/// can show where the other variant disagrees.
/// Throws Error{InfeasibleShape} unless l >= 4, n+2-2l >= 0 and 1 <= t <= l-2.
std::int64_t spine3_closed_form(int n, int k, int t, int shift = 1);

/// The spine vector that spine3_closed_form describes.
BackboneVector spine3_backbone(int n, int k, int t);

/// Maximum terminal Wiener index over trees of order n with maximum degree 3,
/// with n = 4p + residue. Throws Error{OrderTooSmall} for n < 6.
struct Delta3Max {
  std::int64_t value = 0;
  int p = 0;
  int residue = 0;
};
Delta3Max delta3_max(int n);

}  // namespace tw
