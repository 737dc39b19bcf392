#include "tw/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tw/error.hpp"

namespace tw {

Tree Tree::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) {
    throw Error(ErrorCode::NotATree, "order must be at least 1, got " + std::to_string(n));
  }
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::IdOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + ") with n=" +
                                               std::to_string(n));
    }
  }
  if (static_cast<int>(edges.size()) != n - 1) {
    throw Error(ErrorCode::NotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                         std::to_string(edges.size()));
  }

  Tree t;
  t.n_ = n;
  t.edges_.assign(edges.begin(), edges.end());
  t.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::NotATree, "self-loop at " + std::to_string(e.u));
    ++t.offsets_[e.u + 1];
    ++t.offsets_[e.v + 1];
  }
  std::partial_sum(t.offsets_.begin(), t.offsets_.end(), t.offsets_.begin());
  t.adj_.resize(2 * edges.size());
  std::vector<int> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const Edge& e : edges) {
    t.adj_[fill[e.u]++] = e.v;
    t.adj_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = t.adj_.begin() + t.offsets_[v];
    auto last = t.adj_.begin() + t.offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw Error(ErrorCode::NotATree, "duplicate edge at vertex " + std::to_string(v));
    }
  }

  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::NotATree, "graph is disconnected");
  }
  return t;
}

Tree Tree::from_edges(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return from_edges(n, edges);
}

std::vector<int> distances_from(const Tree& t, int source) {
  const int n = t.order();
  if (source < 0 || source >= n) {
    throw Error(ErrorCode::IdOutOfRange, "vertex " + std::to_string(source));
  }
  std::vector<int> dist(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : t.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int distance(const Tree& t, int u, int v) {
  if (v < 0 || v >= t.order()) throw Error(ErrorCode::IdOutOfRange, "vertex " + std::to_string(v));
  return distances_from(t, u)[v];
}

namespace {

int farthest(const std::vector<int>& dist) {
  return static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

int diameter(const Tree& t) {
  int a = farthest(distances_from(t, 0));
  auto from_a = distances_from(t, a);
  return from_a[farthest(from_a)];
}

int max_degree(const Tree& t) {
  int best = 0;
  for (int v = 0; v < t.order(); ++v) best = std::max(best, t.degree(v));
  return best;
}

int leaf_count(const Tree& t) {
  int count = 0;
  for (int v = 0; v < t.order(); ++v) count += t.is_leaf(v) ? 1 : 0;
  return count;
}

std::vector<int> centers(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  // Peel leaves layer by layer; the last one or two vertices are the center.
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::optional<std::vector<int>> caterpillar_backbone(const Tree& t) {
  const int n = t.order();
  std::vector<int> inner_degree(n, 0);
  int inner = 0;
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) < 2) continue;
    ++inner;
    for (int w : t.neighbors(v)) inner_degree[v] += t.degree(w) >= 2 ? 1 : 0;
  }
  if (inner == 0) return std::nullopt;
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) < 2) continue;
    if (inner_degree[v] > 2) return std::nullopt;
    if (inner_degree[v] <= 1 && start < 0) start = v;
  }
  if (start < 0) return std::nullopt;
  std::vector<int> path{start};
  int prev = -1;
  int cur = start;
  while (true) {
    int next = -1;
    for (int w : t.neighbors(cur)) {
      if (w != prev && t.degree(w) >= 2) next = w;
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  if (static_cast<int>(path.size()) != inner) return std::nullopt;
  return path;
}

TreeMetrics metrics(const Tree& t) {
  const int n = t.order();
  TreeMetrics m;
  int big = 0;
  int big_degree = 0;
  for (int v = 0; v < n; ++v) {
    int d = t.degree(v);
    m.degree_sequence.push_back(d);
    if (d == 1) m.leaves.push_back(v);
    if (d >= 3) {
      ++big;
      big_degree = d;
    }
    m.max_degree = std::max(m.max_degree, d);
  }
  std::sort(m.degree_sequence.rbegin(), m.degree_sequence.rend());
  m.leaf_count = static_cast<int>(m.leaves.size());
  m.diameter = diameter(t);
  bool has_inner = n >= 3;
  m.is_caterpillar = !has_inner || caterpillar_backbone(t).has_value();
  m.is_starlike = big == 1 && n >= 4;
  if (m.is_starlike) m.starlike_degree = big_degree;
  return m;
}

CanonicalCode canonical_code(const Tree& t) {
  const int n = t.order();
  std::vector<int> order;
  std::vector<int> parent(n);
  std::vector<std::string> word(n);
  std::vector<std::string> children;
  std::string best;
  for (int root : centers(t)) {
    order.assign(1, root);
    parent[root] = -1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      int v = order[head];
      for (int w : t.neighbors(v)) {
        if (w != parent[v]) {
          parent[w] = v;
          order.push_back(w);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      children.clear();
      for (int w : t.neighbors(v)) {
        if (w != parent[v]) children.push_back(std::move(word[w]));
      }
      std::sort(children.begin(), children.end());
      std::string& out = word[v];
      out.assign(1, '(');
      for (const auto& c : children) out += c;
      out += ')';
    }
    if (best.empty() || word[root] < best) best = std::move(word[root]);
  }
  return CanonicalCode(std::move(best));
}

Tree relabel(const Tree& t, std::span<const int> perm) {
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const Edge& e : t.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Tree::from_edges(t.order(), edges);
}

}  // namespace tw
