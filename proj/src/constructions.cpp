#include "tw/constructions.hpp"

#include <string>
#include <vector>

#include "tw/bounds.hpp"
#include "tw/error.hpp"

namespace tw {

namespace {

// Small helper for assembling trees vertex by vertex.
class Builder {
 public:
  int add() { return n_++; }
  int attach(int parent) {
    int v = add();
    edges_.push_back({parent, v});
    return v;
  }
  void pendants(int parent, int count) {
    for (int i = 0; i < count; ++i) attach(parent);
  }
  int path(int from, int length) {
    for (int i = 0; i < length; ++i) from = attach(from);
    return from;
  }
  Tree build() const { return Tree::from_edges(n_, edges_); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace

Tree construct_starlike(int n, int d) {
  if (d < 2 || d > n - 2) {
    throw Error(ErrorCode::Infeasible,
                "starlike tree needs 2 <= d <= n-2, got n=" + std::to_string(n) + " d=" +
                    std::to_string(d));
  }
  const int l0 = leaf_bounds(n, d).l0;
  const int short_leg = d / 2;
  const int long_leg = (d + 1) / 2;
  const int last = n - short_leg * (l0 - 2) - long_leg - 1;
  if (last < 1) {
    throw Error(ErrorCode::Infeasible, "residual leg length " + std::to_string(last));
  }
  Builder b;
  int center = b.add();
  for (int i = 0; i < l0 - 2; ++i) b.path(center, short_leg);
  b.path(center, long_leg);
  b.path(center, last);
  return b.build();
}

Tree construct_double_broom(int n, int d, std::optional<int> pos) {
  if (d < 3 || d > n - 1) {
    throw Error(ErrorCode::BadDiameter,
                "double broom needs 3 <= d <= n-1, got n=" + std::to_string(n) + " d=" +
                    std::to_string(d));
  }
  const int leaves = n - d + 1;
  const bool odd = leaves % 2 == 1;
  if (odd != pos.has_value()) {
    throw Error(ErrorCode::ParityMismatch, odd ? "odd leaf count needs a position"
                                               : "even leaf count takes no position");
  }
  if (pos && (*pos < 1 || *pos > d / 2)) {
    throw Error(ErrorCode::BadPos, "position " + std::to_string(*pos) + " outside 1.." +
                                       std::to_string(d / 2));
  }
  Builder b;
  std::vector<int> spine{b.add()};
  for (int i = 1; i < d - 1; ++i) spine.push_back(b.attach(spine.back()));
  b.pendants(spine.front(), leaves / 2);
  b.pendants(spine.back(), leaves / 2);
  if (pos) b.attach(spine[*pos - 1]);
  return b.build();
}

Tree construct_caterpillar(const CaterpillarSpec& spec) {
  if (!spec.valid()) throw Error(ErrorCode::BadSpec, "spine vector must be non-empty and non-negative");
  const int k = spec.k();
  Builder b;
  std::vector<int> spine{b.add()};
  for (int i = 1; i < k; ++i) spine.push_back(b.attach(spine.back()));
  for (int i = 0; i < k; ++i) {
    int ends = (i == 0 ? 1 : 0) + (i == k - 1 ? 1 : 0);
    b.pendants(spine[i], spec.x[i] + ends);
  }
  return b.build();
}

Tree construct_fig1(int id) {
  Builder b;
  int root = b.add();
  switch (id) {
    case 1:
      for (int bundle : {6, 6, 7}) b.pendants(b.attach(root), bundle);
      break;
    case 2: {
      int left = b.attach(root);
      b.pendants(b.attach(left), 7);
      b.pendants(b.attach(left), 8);
      b.pendants(b.attach(root), 10);
      break;
    }
    case 3:
      for (int i = 0; i < 3; ++i) b.pendants(b.path(root, 2), 11);
      break;
    case 4:
      b.pendants(b.path(root, 2), 10);
      b.pendants(b.path(root, 2), 10);
      b.pendants(b.path(root, 3), 12);
      break;
    default:
      throw Error(ErrorCode::BadId, "figure tree id must be 1..4, got " + std::to_string(id));
  }
  return b.build();
}

BackboneVector delta3_optimal_backbone(int n) {
  if (n < 6) throw Error(ErrorCode::OrderTooSmall, "need n >= 6, got " + std::to_string(n));
  const int p = n / 4;
  BackboneVector b;
  switch (n % 4) {
    case 0: b.x.assign(2 * p - 1, 1); break;
    case 1: b.x.assign(2 * p, 1); b.x[p] = 0; break;
    case 2: b.x.assign(2 * p, 1); break;
    default: b.x.assign(2 * p + 1, 1); b.x[p] = 0; break;
  }
  return b;
}

Tree construct_delta3_optimal(int n) { return construct_caterpillar(delta3_optimal_backbone(n)); }

}  // namespace tw
