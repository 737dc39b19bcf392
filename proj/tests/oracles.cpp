#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

EdgeList edges_of(const tw::Tree& t) {
  EdgeList out;
  for (const auto& e : t.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::vector<int>> all_pairs(int n, const EdgeList& edges) {
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

namespace {

std::vector<int> degrees(int n, const EdgeList& edges) {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<int>> adjacency(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::string rooted_word(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v]) {
    if (w != parent) kids.push_back(rooted_word(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::vector<int> strip_to_centers(int n, const EdgeList& edges) {
  if (n <= 2) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  auto adj = adjacency(n, edges);
  auto deg = degrees(n, edges);
  std::vector<bool> gone(n, false);
  int left = n;
  while (left > 2) {
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
      if (!gone[v] && deg[v] <= 1) layer.push_back(v);
    }
    for (int v : layer) {
      gone[v] = true;
      --left;
      for (int w : adj[v]) --deg[w];
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (!gone[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

int diameter(const tw::Tree& t) {
  auto d = all_pairs(t.order(), edges_of(t));
  int best = 0;
  for (const auto& row : d) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

int max_degree(const tw::Tree& t) {
  auto deg = degrees(t.order(), edges_of(t));
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int leaf_count(const tw::Tree& t) {
  auto deg = degrees(t.order(), edges_of(t));
  return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

std::int64_t terminal_wiener(const tw::Tree& t) {
  const int n = t.order();
  auto e = edges_of(t);
  auto d = all_pairs(n, e);
  auto deg = degrees(n, e);
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (deg[i] == 1 && deg[j] == 1) sum += d[i][j];
  return sum;
}

bool is_caterpillar(const tw::Tree& t) {
  const int n = t.order();
  auto e = edges_of(t);
  auto deg = degrees(n, e);
  std::vector<int> inner(n, 0);
  for (auto [u, v] : e) {
    if (deg[u] > 1 && deg[v] > 1) {
      ++inner[u];
      ++inner[v];
    }
  }
  // internal vertices induce a subtree; it is a path iff no vertex has three inner neighbors
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 1 && inner[v] > 2) return false;
  }
  return true;
}

std::string tree_code(int n, const EdgeList& edges) {
  if (n == 1) return "()";
  auto adj = adjacency(n, edges);
  std::string best;
  for (int c : strip_to_centers(n, edges)) {
    auto w = rooted_word(adj, c, -1);
    if (best.empty() || w < best) best = w;
  }
  return best;
}

std::string tree_code(const tw::Tree& t) { return tree_code(t.order(), edges_of(t)); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t automorphisms(int n, const EdgeList& edges) {
  if (n == 1) return 1;
  auto adj = adjacency(n, edges);
  // returns (word, automorphisms fixing v) for the subtree under v
  std::function<std::pair<std::string, std::uint64_t>(int, int)> walk = [&](int v, int parent) {
    std::vector<std::pair<std::string, std::uint64_t>> kids;
    for (int w : adj[v]) {
      if (w != parent) kids.push_back(walk(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::uint64_t aut = 1;
    std::string word = "(";
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && kids[j].first == kids[i].first) {
        aut *= kids[j].second;
        word += kids[j].first;
        ++j;
      }
      aut *= factorial(static_cast<int>(j - i));
      i = j;
    }
    return std::make_pair(word + ")", aut);
  };
  auto c = strip_to_centers(n, edges);
  if (c.size() == 1) return walk(c[0], -1).second;
  auto a = walk(c[0], c[1]);
  auto b = walk(c[1], c[0]);
  return a.second * b.second * (a.first == b.first ? 2 : 1);
}

EdgeList prufer_decode(const std::vector<int>& seq, int n) {
  EdgeList out;
  if (n == 1) return out;
  if (n == 2) return {{0, 1}};
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  for (int s : seq) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    out.emplace_back(leaf, s);
    --deg[leaf];
    --deg[s];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        out.emplace_back(a, v);
      }
    }
  }
  return out;
}

std::map<std::string, std::uint64_t> prufer_classes(int n) {
  std::map<std::string, std::uint64_t> out;
  const int len = std::max(0, n - 2);
  std::vector<int> seq(len, 0);
  while (true) {
    ++out[tree_code(n, prufer_decode(seq, n))];
    int i = len - 1;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

std::uint64_t partitions(int m) {
  if (m < 0) return 0;
  std::vector<std::int64_t> p(m + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= m; ++i) {
    std::int64_t s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > i) break;
      const int sign = k % 2 ? 1 : -1;
      s += sign * p[i - g1];
      if (g2 <= i) s += sign * p[i - g2];
    }
    p[i] = s;
  }
  return static_cast<std::uint64_t>(p[m]);
}

std::uint64_t otter_free_trees(int n) {
  if (n <= 1) return n == 1 ? 1 : 0;
  // rooted trees r[1..n]
  std::vector<std::uint64_t> r(n + 1, 0);
  r[1] = 1;
  for (int m = 1; m < n; ++m) {
    std::uint64_t s = 0;
    for (int k = 1; k <= m; ++k) {
      std::uint64_t dsum = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) dsum += static_cast<std::uint64_t>(d) * r[d];
      }
      s += dsum * r[m - k + 1];
    }
    r[m + 1] = s / static_cast<std::uint64_t>(m);
  }
  std::uint64_t pairs = 0;
  for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
  if (n % 2 == 0) pairs -= r[n / 2];
  return r[n] - pairs / 2;
}

std::int64_t f_literal(const std::vector<int>& y) {
  std::int64_t total = 0;
  const int k = static_cast<int>(y.size());
  for (int i = 0; i + 1 < k; ++i) {
    for (int a = 0; a <= i; ++a)
      for (int b = i + 1; b < k; ++b) total += static_cast<std::int64_t>(y[a]) * y[b];
  }
  return total;
}

EdgeList spider_edges(const std::vector<std::pair<int, int>>& branches, int& n_out) {
  EdgeList e;
  int next = 1;
  for (auto [arm, pendants] : branches) {
    int prev = 0;
    for (int i = 0; i < arm; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    for (int i = 0; i < pendants; ++i) e.emplace_back(prev, next++);
  }
  n_out = next;
  return e;
}

std::int64_t spider_bruteforce(int n, int d) {
  std::int64_t best = -1;
  std::vector<std::pair<int, int>> chosen;
  // branches listed in non-increasing (arm, pendants) order
  std::function<void(int, std::pair<int, int>)> extend = [&](int left, std::pair<int, int> cap) {
    if (left == 0) {
      if (chosen.size() < 2) return;
      int m = 0;
      auto e = spider_edges(chosen, m);
      auto t = tw::Tree::from_edges(m, [&] {
        std::vector<tw::Edge> out;
        for (auto [u, v] : e) out.push_back({u, v});
        return out;
      }());
      if (oracle::diameter(t) != d) return;
      best = std::max(best, oracle::terminal_wiener(t));
      return;
    }
    for (int arm = 1; arm <= 3; ++arm) {
      for (int c = 0; arm + c <= left; ++c) {
        std::pair<int, int> b{arm, c};
        if (b > cap) continue;
        chosen.push_back(b);
        extend(left - arm - c, b);
        chosen.pop_back();
      }
    }
  };
  extend(n - 1, {3, n});
  return best;
}

}  // namespace oracle
