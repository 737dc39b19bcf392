#include "tw/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "tw/error.hpp"
#include "tw/terminal_wiener.hpp"

namespace tw {

bool EnumFilter::accepts(const Tree& t) const {
  if (t.order() != n) return false;
  if (max_degree && tw::max_degree(t) != *max_degree) return false;
  if (leaf_count && tw::leaf_count(t) != *leaf_count) return false;
  if (diameter && tw::diameter(t) != *diameter) return false;
  if (caterpillar_only && !metrics(t).is_caterpillar) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Free trees as level sequences.

namespace {

// Beyer-Hedetniemi successor of a rooted level sequence, modifying from
// position p. Returns false when no successor exists.
bool next_rooted(std::vector<int>& layout, int p = -1) {
  const int n = static_cast<int>(layout.size());
  if (p < 0) {
    p = n - 1;
    while (layout[p] == 1) --p;
  }
  if (p == 0) return false;
  int q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (int i = p; i < n; ++i) layout[i] = layout[i - p + q];
  return true;
}

// Index of the second level-1 vertex, i.e. where the first root subtree ends.
int first_subtree_end(const std::vector<int>& layout) {
  const int n = static_cast<int>(layout.size());
  for (int i = 2; i < n; ++i) {
    if (layout[i] == 1) return i;
  }
  return n;
}

// Moves layout to the next level sequence that is canonical for a free tree
// (the first subtree of the root is no taller and, on ties, no larger than
// the rest of the tree).
void next_free(std::vector<int>& layout) {
  const int n = static_cast<int>(layout.size());
  const int m = first_subtree_end(layout);
  int left_height = 0;
  for (int i = 1; i < m; ++i) left_height = std::max(left_height, layout[i] - 1);
  int rest_height = 0;
  for (int i = m; i < n; ++i) rest_height = std::max(rest_height, layout[i]);

  const int left_size = m - 1;
  const int rest_size = n - m + 1;
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left_size > rest_size) {
      valid = false;
    } else if (left_size == rest_size) {
      // left = layout[1..m) - 1, rest = 0 followed by layout[m..n)
      for (int i = 0; i < left_size; ++i) {
        int a = layout[1 + i] - 1;
        int b = i == 0 ? 0 : layout[m + i - 1];
        if (a != b) {
          valid = a < b;
          break;
        }
      }
    }
  }
  if (valid) return;

  const int p = left_size;
  const int jumped_from = layout[p];
  next_rooted(layout, p);
  if (jumped_from > 2) {
    const int m2 = first_subtree_end(layout);
    int h = 0;
    for (int i = 1; i < m2; ++i) h = std::max(h, layout[i] - 1);
    for (int j = 0; j <= h; ++j) layout[n - (h + 1) + j] = j + 1;
  }
}

}  // namespace

FreeTreeStream::FreeTreeStream(int n, int cap) : n_(n) {
  if (n < 1) throw Error(ErrorCode::BadArg, "order must be positive");
  if (n > cap) {
    throw Error(ErrorCode::TooLarge, "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

bool FreeTreeStream::advance() {
  if (done_) return false;
  if (n_ <= 2) {
    if (started_) {
      done_ = true;
      return false;
    }
    started_ = true;
    layout_ = n_ == 1 ? std::vector<int>{0} : std::vector<int>{0, 1};
    return true;
  }
  if (!started_) {
    started_ = true;
    // The path rooted at its center.
    layout_.clear();
    for (int i = 0; i <= n_ / 2; ++i) layout_.push_back(i);
    for (int i = 1; i < (n_ + 1) / 2; ++i) layout_.push_back(i);
  } else if (!next_rooted(layout_)) {
    done_ = true;
    return false;
  }
  next_free(layout_);
  return true;
}

Tree FreeTreeStream::tree() const { return tree_from_level_sequence(layout_); }

std::optional<Tree> FreeTreeStream::next() {
  if (!advance()) return std::nullopt;
  return tree();
}

Tree tree_from_level_sequence(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) edges.push_back({stack.back(), i});
    stack.push_back(i);
  }
  return Tree::from_edges(n, edges);
}

std::uint64_t for_each_tree(int n, const TreeVisitor& visit, Shard shard, int cap) {
  FreeTreeStream stream(n, cap);
  std::uint64_t position = 0;
  std::uint64_t visited = 0;
  while (stream.advance()) {
    if (shard.owns(position++)) {
      visit(stream.tree());
      ++visited;
    }
  }
  return visited;
}

std::uint64_t for_each_matching(const EnumFilter& filter, const TreeVisitor& visit, Shard shard,
                                int cap) {
  std::uint64_t visited = 0;
  for_each_tree(
      filter.n,
      [&](const Tree& t) {
        if (filter.accepts(t)) {
          visit(t);
          ++visited;
        }
      },
      shard, cap);
  return visited;
}

// ---------------------------------------------------------------------------
// Caterpillars.

std::uint64_t for_each_caterpillar(int n, const std::function<void(const CaterpillarSpec&)>& visit,
                                   std::optional<int> spine_length, int cap) {
  if (n > cap) {
    throw Error(ErrorCode::TooLarge, "n=" + std::to_string(n) + " exceeds caterpillar cap " +
                                         std::to_string(cap));
  }
  std::uint64_t emitted = 0;
  CaterpillarSpec spec;
  for (int k = 1; k <= n - 2; ++k) {
    if (spine_length && k != *spine_length) continue;
    const int budget = n - k - 2;
    spec.x.assign(k, 0);
    // Compositions of budget into k parts, in lexicographic order.
    std::function<void(int, int)> fill = [&](int i, int left) {
      if (i == k - 1) {
        spec.x[i] = left;
        if (!std::lexicographical_compare(spec.x.begin(), spec.x.end(), spec.x.rbegin(),
                                          spec.x.rend())) {
          visit(spec);
          ++emitted;
        }
        return;
      }
      for (int v = 0; v <= left; ++v) {
        spec.x[i] = v;
        fill(i + 1, left - v);
      }
    };
    fill(0, budget);
  }
  return emitted;
}

// ---------------------------------------------------------------------------
// Structured generators for diameter 4 and 5.

namespace {

// Calls visit for every partition of total into non-increasing parts >= 1.
void for_each_partition(int total, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int largest) {
    if (left == 0) {
      visit(parts);
      return;
    }
    for (int part = std::min(left, largest); part >= 1; --part) {
      parts.push_back(part);
      rec(left - part, part);
      parts.pop_back();
    }
  };
  rec(total, total);
}

int parts_at_least_two(const std::vector<int>& parts) {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int p) { return p >= 2; }));
}

// A branch of size b is a vertex adjacent to the center with b-1 pendants.
void add_branches(int center, const std::vector<int>& sizes, int& next_id, std::vector<Edge>& edges) {
  for (int b : sizes) {
    int hub = next_id++;
    edges.push_back({center, hub});
    for (int i = 1; i < b; ++i) edges.push_back({hub, next_id++});
  }
}

}  // namespace

std::uint64_t for_each_diameter4_tree(int n, const TreeVisitor& visit, Shard shard) {
  if (n < 5) return 0;
  std::uint64_t position = 0;
  std::uint64_t visited = 0;
  std::vector<Edge> edges;
  for_each_partition(n - 1, [&](const std::vector<int>& sizes) {
    if (parts_at_least_two(sizes) < 2) return;
    if (!shard.owns(position++)) return;
    edges.clear();
    int next_id = 1;
    add_branches(0, sizes, next_id, edges);
    visit(Tree::from_edges(n, edges));
    ++visited;
  });
  return visited;
}

std::uint64_t for_each_diameter5_tree(int n, const TreeVisitor& visit, Shard shard) {
  if (n < 6) return 0;
  // halves[s]: branch multisets with s non-center vertices and a branch of size >= 2.
  std::vector<std::vector<std::vector<int>>> halves(n - 3);
  for (int s = 2; s <= n - 4; ++s) {
    for_each_partition(s, [&](const std::vector<int>& sizes) {
      if (parts_at_least_two(sizes) >= 1) halves[s].push_back(sizes);
    });
  }
  std::uint64_t position = 0;
  std::uint64_t visited = 0;
  std::vector<Edge> edges;
  const int total = n - 2;
  for (int sa = 2; 2 * sa <= total; ++sa) {
    const int sb = total - sa;
    for (std::size_t ia = 0; ia < halves[sa].size(); ++ia) {
      for (std::size_t ib = sa == sb ? ia : 0; ib < halves[sb].size(); ++ib) {
        if (!shard.owns(position++)) continue;
        edges.assign(1, Edge{0, 1});
        int next_id = 2;
        add_branches(0, halves[sa][ia], next_id, edges);
        add_branches(1, halves[sb][ib], next_id, edges);
        visit(Tree::from_edges(n, edges));
        ++visited;
      }
    }
  }
  return visited;
}

// ---------------------------------------------------------------------------
// Extremal search.

namespace {

struct PartialBest {
  bool any = false;
  std::int64_t value = 0;
  std::map<CanonicalCode, Tree> witnesses;
  std::uint64_t scanned = 0;
};

}  // namespace

ExtremalResult extremal_search(const EnumFilter& filter, Objective objective, int jobs,
                               Generator generator, const TreeObjective& value_of) {
  const TreeObjective score = value_of ? value_of : TreeObjective(tw_edgecut);
  bool structured = false;
  if (generator != Generator::Exhaustive && filter.diameter) {
    structured = (*filter.diameter == 4 && filter.n >= 5) || (*filter.diameter == 5 && filter.n >= 6);
  }
  if (generator == Generator::Structured && !structured) {
    throw Error(ErrorCode::BadArg, "structured generators cover diameter 4 and 5 only");
  }
  if (!structured && filter.n > kEnumerationCap) {
    throw Error(ErrorCode::TooLarge, "n=" + std::to_string(filter.n) + " exceeds cap " +
                                         std::to_string(kEnumerationCap));
  }
  jobs = std::max(1, jobs);

  auto run_shard = [&](Shard shard, PartialBest& best) {
    TreeVisitor visit = [&](const Tree& t) {
      if (!filter.accepts(t)) return;
      ++best.scanned;
      const std::int64_t v = score(t);
      const bool better = objective == Objective::Max ? v > best.value : v < best.value;
      if (!best.any || better) {
        best.any = true;
        best.value = v;
        best.witnesses.clear();
      }
      if (v == best.value) best.witnesses.emplace(canonical_code(t), t);
    };
    if (structured && *filter.diameter == 4) {
      for_each_diameter4_tree(filter.n, visit, shard);
    } else if (structured) {
      for_each_diameter5_tree(filter.n, visit, shard);
    } else {
      for_each_tree(filter.n, visit, shard);
    }
  };

  std::vector<PartialBest> partial(jobs);
  if (jobs == 1) {
    run_shard({0, 1}, partial[0]);
  } else {
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) workers.emplace_back(run_shard, Shard{j, jobs}, std::ref(partial[j]));
    for (auto& w : workers) w.join();
  }

  PartialBest merged;
  for (auto& part : partial) {
    merged.scanned += part.scanned;
    if (!part.any) continue;
    const bool better = objective == Objective::Max ? part.value > merged.value : part.value < merged.value;
    if (!merged.any || better) {
      merged.any = true;
      merged.value = part.value;
      merged.witnesses.clear();
    }
    if (part.value == merged.value) merged.witnesses.merge(part.witnesses);
  }
  if (!merged.any) throw Error(ErrorCode::EmptyClass, "no tree matches the filter");

  ExtremalResult out;
  out.value = merged.value;
  out.scanned = merged.scanned;
  for (auto& [code, tree] : merged.witnesses) {
    out.witnesses.push_back(code);
    out.witness_trees.push_back(tree);
  }
  return out;
}

}  // namespace tw
