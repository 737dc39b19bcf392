#include "tw/terminal_wiener.hpp"

#include <string>
#include <vector>

#include "tw/error.hpp"
#include "tw/fopt.hpp"

namespace tw {

std::int64_t tw_pairwise(const Tree& t) {
  std::vector<char> leaf(t.order(), 0);
  std::vector<int> leaves;
  for (int v = 0; v < t.order(); ++v) {
    if (t.is_leaf(v)) {
      leaf[v] = 1;
      leaves.push_back(v);
    }
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
    auto dist = distances_from(t, leaves[i]);
    for (std::size_t j = i + 1; j < leaves.size(); ++j) total += dist[leaves[j]];
  }
  return total;
}

std::int64_t tw_edgecut(const Tree& t) {
  const int n = t.order();
  if (n < 2) throw Error(ErrorCode::OrderTooSmall, "edge-cut formula needs n >= 2");

  int root = 0;
  for (int v = 0; v < n; ++v) {
    if (!t.is_leaf(v)) {
      root = v;
      break;
    }
  }
  std::vector<int> parent(n, -1);
  std::vector<int> order{root};
  order.reserve(n);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : t.neighbors(v)) {
      if (w != parent[v]) {
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<std::int64_t> below(n, 0);
  std::int64_t leaves = 0;
  for (int v = 0; v < n; ++v) leaves += t.is_leaf(v) ? 1 : 0;

  std::int64_t total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (t.is_leaf(v)) below[v] += 1;
    if (parent[v] >= 0) {
      total += below[v] * (leaves - below[v]);
      below[parent[v]] += below[v];
    }
  }
  return total;
}

std::int64_t tw_backbone(int n, const BackboneVector& x) {
  if (!x.valid()) throw Error(ErrorCode::BadSpec, "spine vector must be non-empty and non-negative");
  if (n != x.order()) {
    throw Error(ErrorCode::InconsistentOrder,
                "n=" + std::to_string(n) + " but spine vector implies " + std::to_string(x.order()));
  }
  const std::int64_t nn = n;
  return (nn - 1) * (nn - x.k() - 1) + f_value(x.x);
}

}  // namespace tw
