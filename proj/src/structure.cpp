#include "tw/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "tw/backbone.hpp"
#include "tw/error.hpp"

namespace tw {

std::string_view to_string(ClauseOutcome o) {
  switch (o) {
    case ClauseOutcome::Inapplicable: return "inapplicable";
    case ClauseOutcome::Holds: return "holds";
    case ClauseOutcome::Violated: return "violated";
    case ClauseOutcome::Undefined: return "undefined";
  }
  return "?";
}

int StructureReport::count(ClauseOutcome o) const {
  int c = 0;
  for (const auto& split : splits) {
    for (const auto& clause : split.clauses) c += clause.outcome == o;
  }
  return c;
}

bool StructureReport::consistent() const {
  return count(ClauseOutcome::Violated) == 0 && valley != ClauseOutcome::Violated;
}

namespace {

// 1-based access to the spine degrees; nullopt off the spine.
struct Spine {
  const std::vector<int>& deg;
  std::optional<int> at(int i) const {
    if (i < 1 || i > static_cast<int>(deg.size())) return std::nullopt;
    return deg[i - 1];
  }
  int k() const { return static_cast<int>(deg.size()); }
};

std::string vertex_name(int i) { return "v" + std::to_string(i); }

// A hypothesis is a list of (vertex, predicate) pairs; the conclusion is a
// list of vertices that must have degree delta.
using DegreeTest = std::function<bool(int)>;

ClauseResult evaluate(const std::string& name, const Spine& spine,
                      const std::vector<std::pair<int, DegreeTest>>& hypothesis, bool extra,
                      const std::vector<int>& must_be_max, int delta) {
  ClauseResult r{name, ClauseOutcome::Inapplicable, ""};
  if (!extra) return r;
  for (const auto& [i, test] : hypothesis) {
    auto d = spine.at(i);
    if (!d || !test(*d)) return r;
  }
  for (int i : must_be_max) {
    auto d = spine.at(i);
    if (!d) {
      r.outcome = ClauseOutcome::Undefined;
      r.detail = vertex_name(i) + " is not on the spine (k=" + std::to_string(spine.k()) + ")";
      return r;
    }
    if (*d != delta) {
      r.outcome = ClauseOutcome::Violated;
      r.detail = "d(" + vertex_name(i) + ")=" + std::to_string(*d) + ", expected " + std::to_string(delta);
      return r;
    }
  }
  r.outcome = ClauseOutcome::Holds;
  return r;
}

std::vector<std::pair<int, int>> valid_splits(const std::vector<int>& deg) {
  const int k = static_cast<int>(deg.size());
  std::vector<std::pair<int, int>> out;
  for (int t = 1; t <= k; ++t) {
    bool left_ok = true;
    for (int i = 1; i <= t; ++i) {
      left_ok = left_ok && deg[i - 1] >= 3 && (i == 1 || deg[i - 2] >= deg[i - 1]);
    }
    if (!left_ok) break;
    for (int s = t + 1; s <= k; ++s) {
      bool gap_ok = true;
      for (int i = t + 1; i < s; ++i) gap_ok = gap_ok && deg[i - 1] == 2;
      if (!gap_ok) break;
      bool right_ok = true;
      for (int i = s; i <= k; ++i) {
        right_ok = right_ok && deg[i - 1] >= 3 && (i == s || deg[i - 2] <= deg[i - 1]);
      }
      if (right_ok) out.emplace_back(t, s);
    }
  }
  return out;
}

SplitReport evaluate_split(const std::vector<int>& deg, int t, int s, bool reversed, int delta,
                           int leaves) {
  const Spine spine{deg};
  SplitReport sr{t, s, reversed, {}};
  auto below = [delta](int d) { return d < delta; };
  auto at_max = [delta](int d) { return d == delta; };

  sr.clauses.push_back(evaluate("clause-1", spine, {{t - 1, below}, {s, below}}, true, {t - 2, s + 1}, delta));
  sr.clauses.push_back(evaluate("clause-2", spine, {{t - 1, below}, {s, at_max}}, s > t + 1, {t - 2}, delta));
  sr.clauses.push_back(evaluate("clause-3", spine, {{t - 1, below}, {s, at_max}}, s == t + 1, {t - 3}, delta));
  sr.clauses.push_back(evaluate("clause-4", spine, {{t - 1, at_max}, {s, below}, {t, below}, {s + 1, below}},
                                true, {s + 2}, delta));
  sr.clauses.push_back(evaluate("clause-5", spine, {{t - 1, at_max}, {s, below}, {t, at_max}, {s + 1, below}},
                                true, {s + 3}, delta));

  // Pendant balance across the edge v_{t-1} v_t.
  ClauseResult balance{"balance", ClauseOutcome::Inapplicable, ""};
  auto d_prev = spine.at(t - 1);
  auto d_s = spine.at(s);
  if (d_prev && d_s && *d_prev < delta && (*d_s < delta || (*d_s == delta && s > t + 1))) {
    int left = 1;
    for (int j = 1; j <= t - 1; ++j) left += deg[j - 1] - 2;
    const int right = leaves - left;
    const int d_t = *spine.at(t);
    const bool ok = d_t == 3 && left - right + 1 == 0;
    balance.outcome = ok ? ClauseOutcome::Holds : ClauseOutcome::Violated;
    if (!ok) {
      balance.detail = "d(" + vertex_name(t) + ")=" + std::to_string(d_t) +
                       ", leaf sides " + std::to_string(left) + "|" + std::to_string(right);
    }
  }
  sr.clauses.push_back(balance);
  return sr;
}

}  // namespace

StructureReport check_optimal_structure(const Tree& t, int max_degree) {
  if (max_degree != tw::max_degree(t)) {
    throw Error(ErrorCode::BadArg, "max_degree " + std::to_string(max_degree) +
                                       " differs from the tree's " + std::to_string(tw::max_degree(t)));
  }
  StructureReport report;
  report.max_degree = max_degree;
  const int n = t.order();
  if (!metrics(t).is_caterpillar) throw Error(ErrorCode::NotCaterpillar, "tree is not a caterpillar");
  auto backbone = backbone_vector(t);
  if (backbone) {
    for (int x : backbone->x) report.spine_degrees.push_back(x + 2);
  }
  if (max_degree < 3 || max_degree > n - 3) {
    report.reason = "max degree " + std::to_string(max_degree) + " outside 3..n-3";
    return report;
  }
  report.applicable = true;
  const int leaves = leaf_count(t);

  for (bool reversed : {false, true}) {
    std::vector<int> deg = report.spine_degrees;
    if (reversed) std::reverse(deg.begin(), deg.end());
    for (auto [ti, si] : valid_splits(deg)) {
      report.splits.push_back(evaluate_split(deg, ti, si, reversed, max_degree, leaves));
    }
  }

  if (backbone->k() >= 4) {
    report.valley_certificate = certify_valley(backbone->x);
    report.valley = report.valley_certificate ? ClauseOutcome::Holds : ClauseOutcome::Violated;
  }
  return report;
}

}  // namespace tw
