#include "tw/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "tw/backbone.hpp"
#include "tw/bounds.hpp"
#include "tw/constructions.hpp"
#include "tw/enumerate.hpp"
#include "tw/error.hpp"
#include "tw/families.hpp"
#include "tw/fopt.hpp"
#include "tw/structure.hpp"
#include "tw/terminal_wiener.hpp"
#include "tw/version.hpp"

namespace tw {

namespace {

constexpr std::size_t kMaxRecords = 25;

// TW by the edge-cut route, optionally corrupted on one tree.
struct Evaluator {
  std::optional<CanonicalCode> target;
  int target_n = 0;
  std::int64_t shift = 0;

  std::int64_t operator()(const Tree& t) const {
    std::int64_t v = tw_edgecut(t);
    if (target && t.order() == target_n && canonical_code(t) == *target) v += shift;
    return v;
  }
};

struct Context {
  int jobs = 1;
  Evaluator eval;
};

std::string join_vector(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

TreeRecord record(std::string label, const Tree& t, std::int64_t value) {
  return {std::move(label), canonical_code(t).str(), value};
}

std::string nd_label(int n, int d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }

void sort_records(std::vector<TreeRecord>& v) {
  std::sort(v.begin(), v.end(), [](const TreeRecord& a, const TreeRecord& b) {
    return std::tie(a.label, a.code, a.value) < std::tie(b.label, b.code, b.value);
  });
}

// Appends records in a stable order, keeping at most kMaxRecords in total.
void add_capped(std::vector<TreeRecord>& dst, std::vector<TreeRecord> src, std::uint64_t& dropped) {
  sort_records(src);
  for (auto& r : src) {
    if (dst.size() < kMaxRecords) {
      dst.push_back(std::move(r));
    } else {
      ++dropped;
    }
  }
}

void note_dropped(VerificationReport& r, std::uint64_t dropped, const char* what) {
  if (dropped > 0) {
    r.findings.push_back(std::to_string(dropped) + " further " + what + " not listed");
  }
}

// Runs fn over every free tree of order n, split across workers. Each worker
// owns one accumulator; the caller merges them.
template <class Acc>
std::vector<Acc> scan_sharded(int n, int jobs, const std::function<void(const Tree&, Acc&)>& fn) {
  jobs = std::max(1, jobs);
  std::vector<Acc> acc(jobs);
  auto work = [&](int j) {
    for_each_tree(n, [&](const Tree& t) { fn(t, acc[j]); }, Shard{j, jobs});
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& th : pool) th.join();
  }
  return acc;
}

struct Extreme {
  bool any = false;
  std::int64_t value = 0;
  std::map<CanonicalCode, Tree> trees;

  void offer(std::int64_t v, const Tree& t, bool maximize) {
    if (!any || (maximize ? v > value : v < value)) {
      any = true;
      value = v;
      trees.clear();
    }
    if (v == value) trees.emplace(canonical_code(t), t);
  }
  void absorb(Extreme& o, bool maximize) {
    if (!o.any) return;
    if (!any || (maximize ? o.value > value : o.value < value)) {
      any = true;
      value = o.value;
      trees.clear();
    }
    if (o.value == value) trees.merge(o.trees);
  }
};

bool is_starlike_fast(const Tree& t) {
  int branching = 0;
  for (int v = 0; v < t.order(); ++v) branching += t.degree(v) >= 3;
  return branching == 1;
}

// ---------------------------------------------------------------------------

VerificationReport check_lower_by_leaves(int lo, int hi, const Context& ctx) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  struct Acc {
    std::uint64_t scanned = 0, equal = 0, starlike = 0;
    std::vector<TreeRecord> bad;
  };
  for (int n = lo; n <= hi; ++n) {
    auto parts = scan_sharded<Acc>(n, ctx.jobs, [&](const Tree& t, Acc& a) {
      const int l = leaf_count(t);
      if (l < 3) return;
      ++a.scanned;
      const std::int64_t v = ctx.eval(t);
      const std::int64_t bound = lower_bound_by_leaves(n, l);
      const bool star = is_starlike_fast(t);
      a.equal += v == bound;
      a.starlike += star;
      if (v < bound) {
        a.bad.push_back(record("n=" + std::to_string(n) + " below bound " + std::to_string(bound), t, v));
      } else if ((v == bound) != star) {
        a.bad.push_back(record("n=" + std::to_string(n) + (star ? " starlike above bound" : " equality but not starlike"), t, v));
      }
    });
    Acc total;
    for (auto& p : parts) {
      total.scanned += p.scanned;
      total.equal += p.equal;
      total.starlike += p.starlike;
      total.bad.insert(total.bad.end(), p.bad.begin(), p.bad.end());
    }
    r.scanned += total.scanned;
    ReportRow row{{{"n", n}}, total.bad.empty() ? Status::Pass : Status::Fail,
                  static_cast<std::int64_t>(total.equal), static_cast<std::int64_t>(total.starlike),
                  "equality cases vs starlike trees; trees with l>=3: " + std::to_string(total.scanned)};
    r.rows.push_back(row);
    add_capped(r.counterexamples, std::move(total.bad), dropped);
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

VerificationReport check_leaf_bounds(int lo, int hi, const Context& ctx) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  struct Acc {
    std::map<int, std::pair<int, int>> range;  // d -> (min l, max l)
    std::vector<TreeRecord> bad;
    std::uint64_t scanned = 0;
  };
  for (int n = std::max(lo, 3); n <= hi; ++n) {
    auto parts = scan_sharded<Acc>(n, ctx.jobs, [&](const Tree& t, Acc& a) {
      ++a.scanned;
      const int d = diameter(t);
      const int l = leaf_count(t);
      auto [it, fresh] = a.range.try_emplace(d, l, l);
      if (!fresh) {
        it->second.first = std::min(it->second.first, l);
        it->second.second = std::max(it->second.second, l);
      }
      const auto b = leaf_bounds(n, d);
      if (l < b.l0 || l > b.l_max) a.bad.push_back(record(nd_label(n, d) + " l=" + std::to_string(l), t, l));
    });
    std::map<int, std::pair<int, int>> range;
    std::vector<TreeRecord> bad;
    for (auto& p : parts) {
      r.scanned += p.scanned;
      for (auto& [d, mm] : p.range) {
        auto [it, fresh] = range.try_emplace(d, mm);
        if (!fresh) {
          it->second.first = std::min(it->second.first, mm.first);
          it->second.second = std::max(it->second.second, mm.second);
        }
      }
      bad.insert(bad.end(), p.bad.begin(), p.bad.end());
    }
    for (int d = 2; d <= n - 1; ++d) {
      const auto b = leaf_bounds(n, d);
      ReportRow row{{{"n", n}, {"d", d}}, Status::Pass, std::nullopt, b.l0, ""};
      auto it = range.find(d);
      if (it == range.end()) {
        row.note = "class empty";
      } else {
        row.value = it->second.first;
        row.note = "max l=" + std::to_string(it->second.second) + " l_max=" + std::to_string(b.l_max);
        if (it->second.first < b.l0 || it->second.second > b.l_max) row.status = Status::Fail;
        if (it->second.first != b.l0) {
          r.findings.push_back(nd_label(n, d) + ": lower leaf bound " + std::to_string(b.l0) +
                               " not attained (min " + std::to_string(it->second.first) + ")");
        }
        if (it->second.second != b.l_max) {
          r.findings.push_back(nd_label(n, d) + ": upper leaf bound not attained");
        }
      }
      r.rows.push_back(row);
    }
    add_capped(r.counterexamples, std::move(bad), dropped);
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

// One pass per n, grouping by diameter.
std::map<int, Extreme> extremes_by_diameter(int n, const Context& ctx, bool maximize, int min_d,
                                            std::uint64_t& scanned) {
  struct Acc {
    std::map<int, Extreme> by_d;
    std::uint64_t scanned = 0;
  };
  auto parts = scan_sharded<Acc>(n, ctx.jobs, [&](const Tree& t, Acc& a) {
    const int d = diameter(t);
    if (d < min_d) return;
    ++a.scanned;
    a.by_d[d].offer(ctx.eval(t), t, maximize);
  });
  std::map<int, Extreme> out;
  for (auto& p : parts) {
    scanned += p.scanned;
    for (auto& [d, e] : p.by_d) out[d].absorb(e, maximize);
  }
  return out;
}

VerificationReport check_lower_by_diameter(int lo, int hi, const Context& ctx) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  for (int n = std::max(lo, 3); n <= hi; ++n) {
    auto by_d = extremes_by_diameter(n, ctx, false, 2, r.scanned);
    for (int d = 2; d <= n - 1; ++d) {
      const Extreme& e = by_d.at(d);
      const std::int64_t bound = lower_bound_by_diameter(n, d);
      const int l0 = leaf_bounds(n, d).l0;
      ReportRow row{{{"n", n}, {"d", d}}, Status::Pass, e.value, bound, ""};
      std::vector<TreeRecord> bad;
      if (e.value != bound) {
        for (auto& [code, t] : e.trees) bad.push_back(record(nd_label(n, d) + " minimum off bound", t, e.value));
      }
      if (d == n - 1) {
        // Only the path has diameter n-1.
        row.note = "minimizer is the path";
        for (auto& [code, t] : e.trees) {
          if (leaf_count(t) != 2) bad.push_back(record(nd_label(n, d) + " minimizer not a path", t, e.value));
        }
      } else {
        for (auto& [code, t] : e.trees) {
          auto m = metrics(t);
          if (!(m.is_starlike && m.starlike_degree == l0)) {
            bad.push_back(record(nd_label(n, d) + " minimizer not starlike of degree l0", t, e.value));
          }
        }
        try {
          Tree s = construct_starlike(n, d);
          const bool ok = diameter(s) == d && ctx.eval(s) == bound && e.trees.count(canonical_code(s));
          row.note = "minimizers=" + std::to_string(e.trees.size()) +
                     (ok ? ", construction attains" : ", construction misses");
          if (!ok) bad.push_back(record(nd_label(n, d) + " construction misses the bound", s, ctx.eval(s)));
        } catch (const Error& err) {
          row.note = "minimizers=" + std::to_string(e.trees.size()) + ", construction infeasible";
          r.findings.push_back(nd_label(n, d) + ": spider construction infeasible (" + err.what() + ")");
        }
      }
      if (!bad.empty()) row.status = Status::Fail;
      r.rows.push_back(row);
      add_capped(r.counterexamples, std::move(bad), dropped);
    }
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

VerificationReport check_upper_by_diameter(int lo, int hi, const Context& ctx) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  for (int n = std::max(lo, 3); n <= hi; ++n) {
    const int boundary = (n - 2) / 3;
    const int min_d = std::max(2, boundary);
    auto by_d = extremes_by_diameter(n, ctx, true, min_d, r.scanned);
    for (int d = min_d; d <= n - 1; ++d) {
      const Extreme& e = by_d.at(d);
      const std::int64_t bound = upper_bound_by_diameter(n, d).value;
      const int m = n - d + 1;
      ReportRow row{{{"n", n}, {"d", d}}, Status::Pass, e.value, bound, ""};
      std::vector<TreeRecord> bad;
      if (e.value != bound) {
        for (auto& [code, t] : e.trees) bad.push_back(record(nd_label(n, d) + " maximum off bound", t, e.value));
      }
      // Expected maximizers.
      std::set<CanonicalCode> expected;
      if (d == 2) {
        expected.insert(canonical_code(construct_caterpillar({{n - 3}})));
      } else if (m % 2 == 0) {
        expected.insert(canonical_code(construct_double_broom(n, d)));
      } else {
        for (int pos = 1; pos <= d / 2; ++pos) expected.insert(canonical_code(construct_double_broom(n, d, pos)));
      }
      const std::size_t want = d == 2 ? 1 : (m % 2 == 0 ? 1 : static_cast<std::size_t>(d / 2));
      std::set<CanonicalCode> found;
      for (auto& [code, t] : e.trees) found.insert(code);
      if (found != expected || expected.size() != want) {
        for (auto& [code, t] : e.trees) {
          if (!expected.count(code)) bad.push_back(record(nd_label(n, d) + " unexpected maximizer", t, e.value));
        }
        if (bad.empty()) {
          r.findings.push_back(nd_label(n, d) + ": maximizer census " + std::to_string(found.size()) +
                               ", expected " + std::to_string(want));
          row.status = Status::Fail;
        }
      }
      row.note = "maximizers=" + std::to_string(found.size()) + " expected=" + std::to_string(want) +
                 (m % 2 ? " (odd)" : " (even)") + (d == boundary ? " boundary" : "");
      if (!bad.empty()) row.status = Status::Fail;
      r.rows.push_back(row);
      add_capped(r.counterexamples, std::move(bad), dropped);
      if (d == boundary) {
        r.findings.push_back(nd_label(n, d) + " is the boundary case d = floor((n-2)/3): " +
                             (row.status == Status::Pass ? "holds" : "fails"));
      }
    }
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

VerificationReport check_delta3(int lo, int hi, const Context& ctx) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  for (int n = lo; n <= hi; ++n) {
    EnumFilter f;
    f.n = n;
    f.max_degree = 3;
    auto res = extremal_search(f, Objective::Max, ctx.jobs, Generator::Exhaustive,
                               [&](const Tree& t) { return ctx.eval(t); });
    r.scanned += res.scanned;
    const auto closed = delta3_max(n);
    Tree built = construct_delta3_optimal(n);
    const auto code = canonical_code(built);
    const bool contains = std::binary_search(res.witnesses.begin(), res.witnesses.end(), code);
    ReportRow row{{{"n", n}}, Status::Pass, res.value, closed.value,
                  "r=" + std::to_string(closed.residue) + " maximizers=" + std::to_string(res.witnesses.size()) +
                      (contains ? ", construction among them" : ", construction missing")};
    std::vector<TreeRecord> bad;
    if (res.value != closed.value || res.witnesses.size() != 1 || !contains) {
      for (std::size_t i = 0; i < res.witness_trees.size(); ++i) {
        if (res.witnesses[i] != code || res.value != closed.value) {
          bad.push_back(record("n=" + std::to_string(n) + " maximizer", res.witness_trees[i], res.value));
        }
      }
      if (!contains) bad.push_back(record("n=" + std::to_string(n) + " construction", built, ctx.eval(built)));
      row.status = Status::Fail;
    }
    r.witnesses.push_back(record("n=" + std::to_string(n), built, ctx.eval(built)));
    r.rows.push_back(row);
    add_capped(r.counterexamples, std::move(bad), dropped);
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

VerificationReport check_pairwise_vs_edgecut(int lo, int hi, const Context& ctx) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  struct Acc {
    std::uint64_t count = 0;
    std::vector<TreeRecord> bad;
  };
  for (int n = std::max(lo, 2); n <= hi; ++n) {
    auto parts = scan_sharded<Acc>(n, ctx.jobs, [&](const Tree& t, Acc& a) {
      ++a.count;
      const std::int64_t p = tw_pairwise(t);
      const std::int64_t e = ctx.eval(t);
      if (p != e) a.bad.push_back(record("n=" + std::to_string(n) + " pairwise " + std::to_string(p), t, e));
    });
    Acc total;
    for (auto& p : parts) {
      total.count += p.count;
      total.bad.insert(total.bad.end(), p.bad.begin(), p.bad.end());
    }
    r.scanned += total.count;
    r.rows.push_back({{{"n", n}}, total.bad.empty() ? Status::Pass : Status::Fail,
                      static_cast<std::int64_t>(total.bad.size()), 0,
                      "mismatches over " + std::to_string(total.count) + " trees"});
    add_capped(r.counterexamples, std::move(total.bad), dropped);
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

VerificationReport check_backbone_identity(int lo, int hi, const Context& ctx) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  for (int n = std::max(lo, 3); n <= hi; ++n) {
    std::uint64_t count = 0;
    std::vector<TreeRecord> bad;
    for_each_caterpillar(
        n,
        [&](const CaterpillarSpec& spec) {
          ++count;
          Tree t = construct_caterpillar(spec);
          const std::int64_t formula = tw_backbone(n, spec);
          const std::int64_t direct = ctx.eval(t);
          if (formula != direct) {
            bad.push_back(record("n=" + std::to_string(n) + " spine " + join_vector(spec.x) + " formula " +
                                     std::to_string(formula),
                                 t, direct));
          }
        },
        std::nullopt, std::max(n, kCaterpillarCap));
    r.scanned += count;
    r.rows.push_back({{{"n", n}}, bad.empty() ? Status::Pass : Status::Fail,
                      static_cast<std::int64_t>(bad.size()), 0,
                      "mismatches over " + std::to_string(count) + " caterpillars"});
    add_capped(r.counterexamples, std::move(bad), dropped);
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

// Multisets of size k with entries in [0, top], each non-increasing.
void for_each_multiset(int k, int top, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w(k);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == k) {
      fn(w);
      return;
    }
    for (int v = cap; v >= 0; --v) {
      w[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, top);
}

VerificationReport check_valley_lemma(int lo, int hi, const Context&) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  constexpr int kTop = 4;
  for (int k = lo; k <= hi; ++k) {
    std::uint64_t multisets = 0, value_mismatch = 0, argmax_failures = 0, none_certified = 0, degenerate = 0;
    std::uint64_t tie_failures = 0;
    std::vector<TreeRecord> bad;
    for_each_multiset(k, kTop, [&](const std::vector<int>& w) {
      ++multisets;
      WeightMultiset ws(w);
      auto brute = f_max_bruteforce(ws);
      auto valley = f_max_valley(ws);
      if (brute.value != valley.value) {
        ++value_mismatch;
        bad.push_back({"k=" + std::to_string(k) + " valley search " + std::to_string(valley.value),
                       join_vector(w), brute.value});
      }
      const bool is_degenerate = std::count_if(w.begin(), w.end(), [](int v) { return v > 0; }) < 2;
      degenerate += is_degenerate;
      bool some = false;
      for (const auto& y : brute.argmax) {
        if (certify_valley(y)) {
          some = true;
        } else {
          ++argmax_failures;
          if (!is_degenerate) ++tie_failures;
          bad.push_back({"k=" + std::to_string(k) + " argmax " + join_vector(y) + " not certified" +
                             (is_degenerate ? " (fewer than two positive weights)" : ""),
                         join_vector(w), brute.value});
        }
      }
      none_certified += !some;
    });
    r.scanned += multisets;
    std::ostringstream note;
    note << "multisets=" << multisets << " valley_mismatch=" << value_mismatch << " argmax_uncertified=" << argmax_failures
         << " (degenerate inputs " << degenerate << ", non-degenerate failures " << tie_failures
         << ") multisets_with_no_certified_argmax=" << none_certified;
    r.rows.push_back({{{"k", k}}, bad.empty() ? Status::Pass : Status::Fail,
                      static_cast<std::int64_t>(argmax_failures), 0, note.str()});
    if (argmax_failures > 0) {
      r.findings.push_back("k=" + std::to_string(k) + ": " + std::to_string(argmax_failures) +
                           " maximizing arrangements admit no balanced valley index; " +
                           std::to_string(none_certified) + " multisets have no certified maximizer at all");
    }
    add_capped(r.counterexamples, std::move(bad), dropped);
  }

  // Larger entries, seeded.
  {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> size(5, 8), entry(0, 20);
    std::uint64_t mismatch = 0;
    std::vector<TreeRecord> bad;
    for (int i = 0; i < 500; ++i) {
      std::vector<int> w(size(rng));
      for (auto& v : w) v = entry(rng);
      WeightMultiset ws(w);
      auto brute = f_max_bruteforce(ws);
      auto valley = f_max_valley(ws);
      if (brute.value != valley.value) {
        ++mismatch;
        bad.push_back({"random valley search " + std::to_string(valley.value), join_vector(w), brute.value});
      }
    }
    r.scanned += 500;
    r.rows.push_back({{{"random_cases", 500}}, bad.empty() ? Status::Pass : Status::Fail,
                      static_cast<std::int64_t>(mismatch), 0, "valley search vs brute force, entries 0..20"});
    add_capped(r.counterexamples, std::move(bad), dropped);
  }

  // k = 4 sits below the length the valley claim covers; report what happens there.
  {
    std::uint64_t total = 0, certified = 0;
    for_each_multiset(4, kTop, [&](const std::vector<int>& w) {
      for (const auto& y : f_max_bruteforce(WeightMultiset(w)).argmax) {
        ++total;
        certified += certify_valley(y).has_value();
      }
    });
    r.findings.push_back("k=4 (outside hypothesis): " + std::to_string(certified) + " of " + std::to_string(total) +
                         " maximizing arrangements certified");
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

VerificationReport check_spine3(int lo, int hi, const Context& ctx) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  for (int n = lo; n <= hi; ++n) {
    std::uint64_t shapes = 0, shifted_mismatch = 0;
    std::vector<TreeRecord> bad;
    for (int k = 1; k <= n; ++k) {
      const int l = n - k;
      if (l < 4 || n + 2 - 2 * l < 0) continue;
      for (int t = 1; t <= l - 2; ++t) {
        ++shapes;
        Tree tree = construct_caterpillar(spine3_backbone(n, k, t));
        const std::int64_t direct = ctx.eval(tree);
        const std::int64_t plus_one = spine3_closed_form(n, k, t, 1);
        const std::int64_t plus_two = spine3_closed_form(n, k, t, 2);
        if (plus_one != direct) {
          bad.push_back(record("n=" + std::to_string(n) + " k=" + std::to_string(k) + " t=" + std::to_string(t) +
                                   " formula " + std::to_string(plus_one),
                               tree, direct));
        }
        shifted_mismatch += plus_two != direct;
      }
    }
    r.scanned += shapes;
    r.rows.push_back({{{"n", n}}, bad.empty() ? Status::Pass : Status::Fail, static_cast<std::int64_t>(bad.size()), 0,
                      "shapes=" + std::to_string(shapes) + "; coefficient (t+2) disagrees on " +
                          std::to_string(shifted_mismatch)});
    if (shifted_mismatch > 0) {
      r.findings.push_back("n=" + std::to_string(n) + ": the (t+2) variant disagrees with direct TW on " +
                           std::to_string(shifted_mismatch) + " of " + std::to_string(shapes) + " shapes");
    }
    add_capped(r.counterexamples, std::move(bad), dropped);
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

VerificationReport check_g12_monotone(int lo, int hi, const Context&) {
  VerificationReport r;
  for (int n = lo; n <= hi; ++n) {
    const Rational upper(n + 4, 2);
    std::int64_t points = 0, failures = 0;
    Rational prev_x(1);
    for (int j = 1;; ++j) {
      Rational x = Rational(1) + Rational(j, 8);
      if (x >= upper) break;
      ++points;
      if (j > 1 && !(g1_value(x, n) > g1_value(prev_x, n) && g2_value(x, n) > g2_value(prev_x, n))) {
        ++failures;
        r.counterexamples.push_back({"n=" + std::to_string(n) + " grid step",
                                     std::to_string(x.numerator()) + "/" + std::to_string(x.denominator()), 0});
      }
      prev_x = x;
    }
    r.scanned += points;
    r.rows.push_back({{{"n", n}}, failures ? Status::Fail : Status::Pass, failures, 0,
                      "grid points=" + std::to_string(points)});
  }
  if (r.counterexamples.size() > kMaxRecords) r.counterexamples.resize(kMaxRecords);
  return r;
}

VerificationReport check_g_shape(int lo, int hi, const Context&) {
  VerificationReport r;
  for (int n = lo; n <= hi; ++n) {
    const int rise_end = std::min(2 * n / 3 + 2, n - 1);
    const int fall_start = (2 * n + 1) / 3 + 2;
    std::int64_t failures = 0;
    for (int x = 2; x < rise_end; ++x) {
      if (!(g_value(x + 1, n) > g_value(x, n))) {
        ++failures;
        r.counterexamples.push_back({"n=" + std::to_string(n) + " not increasing", "x=" + std::to_string(x), g_value(x, n)});
      }
    }
    for (int x = fall_start; x < n - 2; ++x) {
      if (!(g_value(x + 1, n) < g_value(x, n))) {
        ++failures;
        r.counterexamples.push_back({"n=" + std::to_string(n) + " not decreasing", "x=" + std::to_string(x), g_value(x, n)});
      }
    }
    std::int64_t best = 0;
    std::set<int> argmax;
    for (int x = 2; x <= n - 1; ++x) {
      const std::int64_t v = g_value(x, n);
      if (argmax.empty() || v > best) {
        best = v;
        argmax.clear();
      }
      if (v == best) argmax.insert(x);
    }
    const GMax closed = g_max(n);
    const std::set<int> claimed(closed.argmax.begin(), closed.argmax.end());
    const bool claimed_in_domain = *claimed.rbegin() <= n - 1;
    ReportRow row{{{"n", n}}, Status::Pass, best, closed.value, ""};
    if (best > closed.value) {
      ++failures;
      r.counterexamples.push_back({"n=" + std::to_string(n) + " exceeds closed form", "x=" + std::to_string(*argmax.begin()), best});
    }
    if (claimed_in_domain) {
      if (best != closed.value || argmax != claimed) {
        ++failures;
        r.counterexamples.push_back({"n=" + std::to_string(n) + " maximizer set differs", "x=" + std::to_string(*argmax.begin()), best});
      }
    } else {
      row.note = "claimed maximizer outside 2..n-1";
      r.findings.push_back("n=" + std::to_string(n) + ": closed-form maximizer lies beyond n-1; max over 2..n-1 is " +
                           std::to_string(best) + " vs closed form " + std::to_string(closed.value));
    }
    if (failures) row.status = Status::Fail;
    r.scanned += n - 2;
    r.rows.push_back(row);
  }
  if (r.counterexamples.size() > kMaxRecords) r.counterexamples.resize(kMaxRecords);
  return r;
}

constexpr int kCaterpillarStructureLo = 15;
constexpr int kCaterpillarStructureHi = 24;

VerificationReport check_local_structure(int lo, int hi, const Context& ctx) {
  VerificationReport r;
  std::uint64_t dropped = 0;
  std::map<std::string, std::map<ClauseOutcome, std::uint64_t>> tally;

  struct Counts {
    int holds = 0, undefined = 0, applied = 0, valley_ok = 0, valley_applied = 0;
  };
  // Optima over caterpillars only are not known to be optimal trees, so
  // anything they break is a finding rather than a counterexample.
  auto inspect = [&](const Tree& t, int delta, std::int64_t value, const std::string& label, Counts& c,
                     std::vector<TreeRecord>& bad, bool restricted) {
    auto flag = [&](std::string what) {
      if (restricted) {
        r.findings.push_back(std::move(what));
      } else {
        bad.push_back(record(std::move(what), t, value));
      }
    };
    if (!metrics(t).is_caterpillar) {
      flag(label + " optimum is not a caterpillar");
      return;
    }
    auto s = check_optimal_structure(t, delta);
    for (const auto& split : s.splits) {
      for (const auto& cl : split.clauses) {
        ++tally[cl.clause][cl.outcome];
        if (cl.outcome == ClauseOutcome::Inapplicable) continue;
        ++c.applied;
        c.holds += cl.outcome == ClauseOutcome::Holds;
        const std::string where = label + " spine " + join_vector(s.spine_degrees) + " split t=" +
                                  std::to_string(split.t) + " s=" + std::to_string(split.s) +
                                  (split.reversed ? " reversed" : "") + " " + cl.clause;
        if (cl.outcome == ClauseOutcome::Undefined) {
          ++c.undefined;
          r.findings.push_back(where + ": " + cl.detail);
        } else if (cl.outcome == ClauseOutcome::Violated) {
          if (cl.clause == "clause-4" || cl.clause == "clause-5") {
            r.findings.push_back(where + " violated: " + cl.detail);
          } else {
            flag(where + " violated: " + cl.detail);
          }
        }
      }
    }
    if (s.valley != ClauseOutcome::Inapplicable) {
      ++c.valley_applied;
      if (s.valley == ClauseOutcome::Holds) {
        ++c.valley_ok;
      } else {
        flag(label + " spine " + join_vector(s.spine_degrees) + " has no valley certificate");
      }
    }
  };
  auto add_row = [&](std::vector<std::pair<std::string, std::int64_t>> params, std::int64_t value,
                     std::size_t optima, const Counts& c, std::vector<TreeRecord> bad) {
    std::ostringstream note;
    note << "optima=" << optima << " clause evaluations applied=" << c.applied << " held=" << c.holds
         << " undefined=" << c.undefined << " valley certified " << c.valley_ok << "/" << c.valley_applied;
    r.rows.push_back({std::move(params), bad.empty() ? Status::Pass : Status::Fail, value, std::nullopt, note.str()});
    add_capped(r.counterexamples, std::move(bad), dropped);
  };

  for (int delta : {3, 4, 5}) {
    for (int n = std::max(lo, delta + 3); n <= hi; ++n) {
      EnumFilter f;
      f.n = n;
      f.max_degree = delta;
      auto res = extremal_search(f, Objective::Max, ctx.jobs, Generator::Exhaustive,
                                 [&](const Tree& t) { return ctx.eval(t); });
      r.scanned += res.scanned;
      std::vector<TreeRecord> bad;
      Counts c;
      const std::string label = "delta=" + std::to_string(delta) + " n=" + std::to_string(n);
      for (const Tree& t : res.witness_trees) inspect(t, delta, res.value, label, c, bad, false);
      add_row({{"delta", delta}, {"n", n}}, res.value, res.witnesses.size(), c, std::move(bad));
    }
  }

  // Exhaustive optima above are too small for most clauses to apply. Optima
  // over caterpillars alone reach further and exercise every clause.
  std::uint64_t cat_scanned = 0;
  for (int n = kCaterpillarStructureLo; n <= kCaterpillarStructureHi; ++n) {
    std::map<int, std::pair<std::int64_t, std::vector<CaterpillarSpec>>> best;
    cat_scanned += for_each_caterpillar(n, [&](const CaterpillarSpec& spec) {
      const int delta = *std::max_element(spec.x.begin(), spec.x.end()) + 2;
      if (delta < 4 || delta > 6) return;
      const std::int64_t v = tw_backbone(n, spec);
      auto [it, fresh] = best.try_emplace(delta, v, std::vector<CaterpillarSpec>{spec});
      if (fresh) return;
      if (v > it->second.first) {
        it->second = {v, {spec}};
      } else if (v == it->second.first) {
        it->second.second.push_back(spec);
      }
    }, std::nullopt, kCaterpillarStructureHi);
    for (auto& [delta, entry] : best) {
      std::vector<TreeRecord> bad;
      Counts c;
      const std::string label = "caterpillars delta=" + std::to_string(delta) + " n=" + std::to_string(n);
      for (const auto& spec : entry.second) inspect(construct_caterpillar(spec), delta, entry.first, label, c, bad, true);
      add_row({{"delta", delta}, {"n", n}, {"caterpillars_only", 1}}, entry.first, entry.second.size(), c,
              std::move(bad));
    }
  }
  r.scanned += cat_scanned;
  r.findings.push_back("rows with caterpillars_only=1 take the optimum over caterpillars of that order and maximum "
                       "degree, not over all trees");

  for (const auto& [clause, counts] : tally) {
    std::ostringstream s;
    s << clause << ":";
    for (ClauseOutcome o : {ClauseOutcome::Holds, ClauseOutcome::Violated, ClauseOutcome::Undefined,
                            ClauseOutcome::Inapplicable}) {
      auto it = counts.find(o);
      s << ' ' << to_string(o) << '=' << (it == counts.end() ? 0 : it->second);
    }
    r.findings.push_back(s.str());
  }
  note_dropped(r, dropped, "counterexamples");
  return r;
}

// ---------------------------------------------------------------------------

struct CheckSpec {
  std::string id;
  std::string param;
  int lo;
  int hi;
  int cap;
  bool exhaustive_trees;  // n_max from `all` applies
  int fault_direction;    // +1 raise, -1 lower, 0 unsupported
  std::function<bool(const Tree&, int n)> fault_pool;
  std::function<VerificationReport(int, int, const Context&)> run;
};

const std::vector<CheckSpec>& specs() {
  static const std::vector<CheckSpec> all = {
      {"thm-2.1", "n", 4, 12, 18, true, -1, [](const Tree& t, int) { return leaf_count(t) >= 3; },
       check_lower_by_leaves},
      {"lem-2.2", "n", 3, 14, 18, true, 0, nullptr, check_leaf_bounds},
      {"thm-2.3", "n", 3, 14, 18, true, -1, [](const Tree&, int) { return true; }, check_lower_by_diameter},
      {"thm-2.5", "n", 3, 14, 18, true, +1,
       [](const Tree& t, int n) { return diameter(t) >= std::max(2, (n - 2) / 3); }, check_upper_by_diameter},
      {"thm-3.11", "n", 6, 18, 20, true, +1, [](const Tree& t, int) { return max_degree(t) == 3; }, check_delta3},
      {"eq-1-vs-2", "n", 2, 12, 16, true, +1, [](const Tree&, int) { return true; }, check_pairwise_vs_edgecut},
      {"eq-9", "n", 3, 14, 22, true, +1, [](const Tree& t, int) { return metrics(t).is_caterpillar; },
       check_backbone_identity},
      {"lem-3.2", "k", 5, 8, 9, false, 0, nullptr, check_valley_lemma},
      {"lem-3.9", "n", 5, 16, 60, false, 0, nullptr, check_spine3},
      {"lem-3.10", "n", 3, 200, 2000, false, 0, nullptr, check_g12_monotone},
      {"lem-2.4", "n", 3, 200, 5000, false, 0, nullptr, check_g_shape},
      {"thm-3.8", "n", 6, 14, 16, true, 0, nullptr, check_local_structure},
  };
  return all;
}

const CheckSpec* find_spec(const std::string& id) {
  for (const auto& s : specs()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::string range_string(const CheckSpec& s, int hi) {
  std::string out = s.param + "=" + std::to_string(s.lo) + ".." + std::to_string(hi);
  if (s.id == "lem-3.2") out += ",w<=4";
  if (s.id == "thm-3.8") out += ",delta=3..5,caterpillars n=15..24 delta=4..6";
  return out;
}

std::optional<Tree> pick_fault_target(const CheckSpec& s, std::uint64_t seed, int hi) {
  if (s.fault_direction == 0) return std::nullopt;
  const int n = std::clamp(std::min(hi, 10), s.lo, hi);
  std::vector<Tree> pool;
  for_each_tree(n, [&](const Tree& t) {
    if (s.fault_pool(t, n)) pool.push_back(t);
  });
  if (pool.empty()) return std::nullopt;
  return pool[seed % pool.size()];
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& check, const std::string& range) {
  std::string key = check + "__" + range + "__" + kVersion;
  for (char& c : key) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')) c = '_';
  }
  return dir / (key + ".json");
}

VerificationReport run_spec(const CheckSpec& s, int hi, const VerifyOptions& options) {
  if (hi < s.lo) throw Error(ErrorCode::BadArg, s.id + ": empty range, upper end " + std::to_string(hi));
  const std::string range = range_string(s, hi);
  const bool cacheable = options.cache_dir && !options.fault_seed && !options.timing;
  if (cacheable) {
    auto p = cache_path(*options.cache_dir, s.id, range);
    if (std::filesystem::exists(p)) return load_report(p);
  }

  Context ctx;
  ctx.jobs = std::max(1, options.jobs);
  std::vector<std::string> fault_notes;
  if (options.fault_seed) {
    auto target = pick_fault_target(s, *options.fault_seed, hi);
    if (!target) throw Error(ErrorCode::BadArg, s.id + " evaluates no tree index to corrupt");
    const std::int64_t n = target->order();
    ctx.eval.target = canonical_code(*target);
    ctx.eval.target_n = target->order();
    ctx.eval.shift = s.fault_direction * (n * n * n + 1);
    fault_notes.push_back("fault injected: TW of " + ctx.eval.target->str() + " shifted by " +
                          std::to_string(ctx.eval.shift));
  }

  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = s.run(s.lo, hi, ctx);
  const auto stop = std::chrono::steady_clock::now();
  r.check_id = s.id;
  r.range = range;
  r.version = kVersion;
  r.findings.insert(r.findings.begin(), fault_notes.begin(), fault_notes.end());
  if (options.timing) {
    r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  }
  r.settle();

  if (cacheable) {
    std::filesystem::create_directories(*options.cache_dir);
    emit_report(r, ReportFormat::Json, cache_path(*options.cache_dir, s.id, range));
  }
  return r;
}

// ---------------------------------------------------------------------------

VerificationReport compute_fig1(const VerifyOptions& options) {
  VerificationReport r;
  Context ctx;
  ctx.jobs = std::max(1, options.jobs);
  struct Printed {
    int id, n, d;
    std::int64_t tw;
  };
  const Printed printed[] = {{1, 23, 4, 582}, {2, 30, 5, 1162}, {3, 40, 6, 2508}, {4, 40, 7, 2592}};

  // (a) printed values
  std::vector<Tree> figure;
  for (const auto& p : printed) {
    Tree t = construct_fig1(p.id);
    const std::int64_t v = ctx.eval(t);
    const bool ok = v == p.tw && t.order() == p.n && diameter(t) == p.d;
    r.rows.push_back({{{"tree", p.id}, {"n", t.order()}, {"d", diameter(t)}}, ok ? Status::Pass : Status::Fail, v,
                      p.tw, "printed value"});
    const std::string label = "T" + std::to_string(p.id);
    if (ok) {
      r.witnesses.push_back(record(label, t, v));
    } else {
      r.counterexamples.push_back(record(label + " differs from the drawing", t, v));
    }
    figure.push_back(t);
  }

  // (b), (c) complete structured scans.
  for (int i = 0; i < 2; ++i) {
    const auto& p = printed[i];
    EnumFilter f;
    f.n = p.n;
    f.diameter = p.d;
    auto res = extremal_search(f, Objective::Max, ctx.jobs, Generator::Structured,
                               [&](const Tree& t) { return ctx.eval(t); });
    r.scanned += res.scanned;
    const std::uint64_t expected_count = p.d == 4 ? diameter4_class_size(p.n) : diameter5_class_size(p.n);
    const auto code = canonical_code(figure[i]);
    const bool attained = std::binary_search(res.witnesses.begin(), res.witnesses.end(), code);
    const bool unique = res.witnesses.size() == 1;
    const auto formula = upper_bound_by_diameter(p.n, p.d);
    const bool formula_below = formula.value < res.value;
    // T1 must be the unique maximum; T2 only a maximum.
    const bool ok = res.value == p.tw && attained && (i == 1 || unique) && res.scanned == expected_count &&
                    formula_below;
    std::ostringstream note;
    note << "complete scan of " << res.scanned << " classes (counted " << expected_count << "), maximizers "
         << res.witnesses.size() << ", diameter formula " << formula.value;
    r.rows.push_back({{{"n", p.n}, {"d", p.d}}, ok ? Status::Pass : Status::Fail, res.value, p.tw, note.str()});
    if (!ok) {
      for (const auto& t : res.witness_trees) r.counterexamples.push_back(record(nd_label(p.n, p.d) + " maximizer", t, res.value));
      if (res.witness_trees.empty()) r.counterexamples.push_back(record(nd_label(p.n, p.d) + " drawing", figure[i], p.tw));
    }
    if (i == 1) {
      r.findings.push_back(nd_label(p.n, p.d) + ": " + std::to_string(res.witnesses.size()) +
                           " maximizer(s) in the complete class");
    }
  }

  // (d) family-restricted evidence only.
  for (int i = 2; i < 4; ++i) {
    const auto& p = printed[i];
    const Tree& t = figure[i];
    const std::int64_t v = ctx.eval(t);
    const auto formula = upper_bound_by_diameter(p.n, p.d);
    const auto cats = caterpillar_family_max(p.n, p.d);
    const auto spiders = spider_family_max(p.n, p.d);
    const auto moves = best_leaf_move(t);
    r.scanned += cats.count + moves.neighbors;
    const bool beaten = cats.value > v || (spiders && spiders->value > v) || moves.improvement.has_value() ||
                        formula.value >= v;
    std::ostringstream note;
    note << "diameter formula " << formula.value << ", best caterpillar " << cats.value << " over " << cats.count
         << ", best bundle spider " << (spiders ? spiders->value : 0) << ", " << moves.neighbors
         << " leaf moves best " << moves.best_neighbor << "; full class not scanned";
    r.rows.push_back({{{"n", p.n}, {"d", p.d}}, beaten ? Status::Fail : Status::Partial, v,
                      spiders ? std::optional<std::int64_t>(spiders->value) : std::nullopt, note.str()});
    if (beaten) {
      if (moves.improvement) r.counterexamples.push_back(record(nd_label(p.n, p.d) + " leaf move", *moves.improvement, ctx.eval(*moves.improvement)));
      if (spiders && spiders->value > v) {
        Tree s = build_bundle_spider(spiders->best);
        r.counterexamples.push_back(record(nd_label(p.n, p.d) + " bundle spider", s, ctx.eval(s)));
      }
      if (cats.value > v) {
        Tree c = construct_caterpillar(cats.best);
        r.counterexamples.push_back(record(nd_label(p.n, p.d) + " caterpillar", c, cats.value));
      }
      if (r.counterexamples.empty()) r.counterexamples.push_back(record(nd_label(p.n, p.d) + " below formula", t, v));
    }
  }
  r.findings.push_back("n=40 d=6 and d=7: optimality checked only against caterpillars, bundle spiders with arms up to 3, and single leaf moves");
  return r;
}

}  // namespace

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.push_back(s.id);
    out.push_back("fig-1");
    return out;
  }();
  return ids;
}

VerificationReport verify_fig1(const VerifyOptions& options) {
  const std::string range = "n=23,30,40";
  const bool cacheable = options.cache_dir && !options.timing && !options.fault_seed;
  if (cacheable) {
    auto p = cache_path(*options.cache_dir, "fig-1", range);
    if (std::filesystem::exists(p)) return load_report(p);
  }
  if (options.fault_seed) throw Error(ErrorCode::BadArg, "fig-1 does not take a fault seed");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = compute_fig1(options);
  const auto stop = std::chrono::steady_clock::now();
  r.check_id = "fig-1";
  r.range = range;
  r.version = kVersion;
  if (options.timing) r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  r.settle();
  if (cacheable) {
    std::filesystem::create_directories(*options.cache_dir);
    emit_report(r, ReportFormat::Json, cache_path(*options.cache_dir, "fig-1", range));
  }
  return r;
}

VerificationReport verify_theorem(const std::string& check, const VerifyOptions& options) {
  if (check == "fig-1") return verify_fig1(options);
  const CheckSpec* s = find_spec(check);
  if (!s) throw Error(ErrorCode::UnknownCheck, "unknown check '" + check + "'");
  const int hi = options.n_max.value_or(s->hi);
  if (hi > s->cap) {
    throw Error(ErrorCode::RangeTooLarge, check + ": " + s->param + " up to " + std::to_string(hi) +
                                              " exceeds cap " + std::to_string(s->cap));
  }
  return run_spec(*s, hi, options);
}

std::vector<VerificationReport> verify_all(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  for (const auto& s : specs()) {
    VerifyOptions o = options;
    o.n_max = s.exhaustive_trees && options.n_max ? std::optional<int>(std::min(*options.n_max, s.cap)) : std::nullopt;
    if (s.fault_direction == 0) o.fault_seed.reset();
    const int hi = o.n_max.value_or(s.hi);
    if (hi < s.lo) continue;
    out.push_back(run_spec(s, hi, o));
  }
  VerifyOptions o = options;
  o.fault_seed.reset();
  out.push_back(verify_fig1(o));
  return out;
}

std::optional<Tree> fault_target(const std::string& check, std::uint64_t seed, std::optional<int> n_max) {
  const CheckSpec* s = find_spec(check);
  if (!s) throw Error(ErrorCode::UnknownCheck, "unknown check '" + check + "'");
  return pick_fault_target(*s, seed, n_max.value_or(s->hi));
}

int exit_code(const std::vector<VerificationReport>& reports) {
  bool partial = false;
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return 1;
    partial = partial || r.status == Status::Partial;
  }
  return partial ? 3 : 0;
}

std::uint64_t partition_count(int m) {
  if (m < 0) return 0;
  std::vector<std::uint64_t> p(m + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= m; ++part) {
    for (int s = part; s <= m; ++s) p[s] += p[s - part];
  }
  return p[m];
}

std::uint64_t diameter4_class_size(int n) {
  if (n < 5) return 0;
  // Branch sizes partition n-1; drop the partitions with at most one part >= 2.
  return partition_count(n - 1) - static_cast<std::uint64_t>(n - 1);
}

std::uint64_t diameter5_class_size(int n) {
  if (n < 6) return 0;
  auto half = [](int s) { return partition_count(s) - 1; };
  std::uint64_t total = 0;
  const int sum = n - 2;
  for (int a = 2; 2 * a <= sum; ++a) {
    const int b = sum - a;
    total += a == b ? half(a) * (half(a) + 1) / 2 : half(a) * half(b);
  }
  return total;
}

}  // namespace tw
