#include "tw/families.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tw/constructions.hpp"
#include "tw/enumerate.hpp"
#include "tw/error.hpp"
#include "tw/terminal_wiener.hpp"

namespace tw {

CaterpillarFamilyMax caterpillar_family_max(int n, int d) {
  if (d < 3 || d > n - 1) {
    throw Error(ErrorCode::BadDiameter, "need 3 <= d <= n-1, got n=" + std::to_string(n) +
                                            " d=" + std::to_string(d));
  }
  CaterpillarFamilyMax out;
  // The spine is fixed, so the scan is polynomial and the order cap does not apply.
  for_each_caterpillar(
      n,
      [&](const CaterpillarSpec& spec) {
        const std::int64_t v = tw_backbone(n, spec);
        if (out.count++ == 0 || v > out.value) {
          out.value = v;
          out.best = spec;
        }
      },
      d - 1, n);
  return out;
}

Tree build_bundle_spider(const std::vector<SpiderBranch>& branches) {
  std::vector<Edge> edges;
  int next = 1;
  for (const auto& b : branches) {
    if (b.arm < 1 || b.pendants < 0) throw Error(ErrorCode::BadSpec, "bad spider branch");
    int at = 0;
    for (int i = 0; i < b.arm; ++i) {
      edges.push_back({at, next});
      at = next++;
    }
    for (int i = 0; i < b.pendants; ++i) edges.push_back({at, next++});
  }
  return Tree::from_edges(next, edges);
}

namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

struct Item {
  SpiderBranch branch;
  int vertices;
  int leaves;
  int depth;
};

// Knapsack over branch types for a fixed total leaf count. The state counts
// vertices, leaves, and how many branches reach depth `second` (capped at 2).
// Items deeper than `second` are excluded; the single deepest branch (when
// first > second) is added separately.
struct Solver {
  int budget;  // non-center vertices
  int total_leaves;
  int first, second;
  std::vector<Item> items;

  std::int64_t value_of(const Item& it) const {
    const std::int64_t c = it.branch.pendants;
    const std::int64_t inner = c >= 2 ? c * (c - 1) : 0;
    return inner + std::int64_t{it.leaves} * it.depth * (total_leaves - it.leaves);
  }

  int index(int v, int l, int cnt) const { return (v * (total_leaves + 1) + l) * 3 + cnt; }

  std::optional<SpiderFamilyMax> solve() const {
    std::vector<Item> body;
    for (const auto& it : items) {
      if (it.depth <= second) body.push_back(it);
    }
    const std::size_t states = static_cast<std::size_t>(budget + 1) * (total_leaves + 1) * 3;
    std::vector<std::vector<std::int64_t>> layer(body.size() + 1, std::vector<std::int64_t>(states, kNone));
    layer[0][index(0, 0, 0)] = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      auto& cur = layer[i + 1];
      cur = layer[i];
      const Item& it = body[i];
      const std::int64_t gain = value_of(it);
      const int bump = it.depth == second ? 1 : 0;
      for (int v = it.vertices; v <= budget; ++v) {
        for (int l = it.leaves; l <= total_leaves; ++l) {
          for (int cnt = 0; cnt < 3; ++cnt) {
            const std::int64_t prev = cur[index(v - it.vertices, l - it.leaves, cnt)];
            if (prev == kNone) continue;
            const int to = std::min(2, cnt + bump);
            auto& slot = cur[index(v, l, to)];
            slot = std::max(slot, prev + gain);
          }
        }
      }
    }

    // Choose the top branch (if any) and the body state.
    std::optional<SpiderFamilyMax> best;
    const auto& last = layer.back();
    auto consider = [&](const Item* top, int v, int l, int cnt) {
      const std::int64_t base = last[index(v, l, cnt)];
      if (base == kNone) return;
      const std::int64_t total = base + (top ? value_of(*top) : 0);
      if (best && total <= best->value) return;
      SpiderFamilyMax out{total, {}};
      if (top) out.best.push_back(top->branch);
      // Walk the layers back to recover the multiset.
      std::size_t i = body.size();
      while (i > 0) {
        if (layer[i][index(v, l, cnt)] == layer[i - 1][index(v, l, cnt)]) {
          --i;
          continue;
        }
        const Item& it = body[i - 1];
        const std::int64_t target = layer[i][index(v, l, cnt)] - value_of(it);
        const int pv = v - it.vertices;
        const int pl = l - it.leaves;
        int pc = -1;
        for (int c = 0; c < 3 && pc < 0; ++c) {
          if (std::min(2, c + (it.depth == second ? 1 : 0)) == cnt && layer[i][index(pv, pl, c)] == target) pc = c;
        }
        out.best.push_back(it.branch);
        v = pv;
        l = pl;
        cnt = pc;
      }
      std::sort(out.best.begin(), out.best.end(), std::greater<>());
      best = out;
    };

    if (first > second) {
      for (const auto& top : items) {
        if (top.depth != first) continue;
        const int v = budget - top.vertices;
        const int l = total_leaves - top.leaves;
        if (v < 0 || l < 0) continue;
        consider(&top, v, l, 1);
        consider(&top, v, l, 2);
      }
    } else {
      consider(nullptr, budget, total_leaves, 2);
    }
    return best;
  }
};

}  // namespace

std::optional<SpiderFamilyMax> spider_family_max(int n, int d, int max_arm) {
  std::vector<Item> items;
  for (int arm = 1; arm <= max_arm; ++arm) {
    for (int c = 0; arm + c <= n - 1; ++c) {
      items.push_back({{arm, c}, arm + c, c == 0 ? 1 : c, c == 0 ? arm : arm + 1});
    }
  }
  std::optional<SpiderFamilyMax> best;
  for (int second = 1; 2 * second <= d; ++second) {
    const int first = d - second;
    if (first > max_arm + 1) continue;
    for (int leaves = 2; leaves <= n - 1; ++leaves) {
      Solver solver{n - 1, leaves, first, second, items};
      auto r = solver.solve();
      if (r && (!best || r->value > best->value)) best = r;
    }
  }
  return best;
}

LocalMoveResult best_leaf_move(const Tree& t) {
  const int n = t.order();
  const int d = diameter(t);
  const std::int64_t own = tw_edgecut(t);
  LocalMoveResult out;
  const auto edges = t.edges();
  std::vector<Edge> moved(edges.begin(), edges.end());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    for (int side = 0; side < 2; ++side) {
      const int leaf = side == 0 ? a : b;
      const int anchor = side == 0 ? b : a;
      if (!t.is_leaf(leaf)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == leaf || z == anchor) continue;
        moved[e] = {leaf, z};
        Tree other = Tree::from_edges(n, moved);
        if (diameter(other) == d) {
          const std::int64_t v = tw_edgecut(other);
          if (out.neighbors++ == 0 || v > out.best_neighbor) {
            out.best_neighbor = v;
            if (v > own) out.improvement = other;
          }
        }
      }
      moved[e] = edges[e];
    }
  }
  return out;
}

}  // namespace tw
