#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tw/fopt.hpp"
#include "tw/tree.hpp"

namespace tw {

enum class ClauseOutcome {
  Inapplicable,  // hypothesis false, or it mentions a vertex beyond the spine
  Holds,
  Violated,
  Undefined,     // hypothesis true but the conclusion names a vertex that does not exist
};

std::string_view to_string(ClauseOutcome o);

struct ClauseResult {
  std::string clause;  // "clause-1" .. "clause-5", "balance"
  ClauseOutcome outcome = ClauseOutcome::Inapplicable;
  std::string detail;
};

/// One way of reading the spine as a falling run v_1..v_t and a rising run
/// v_s..v_k (all degrees >= 3), with only degree-2 vertices strictly between.
struct SplitReport {
  int t = 0;
  int s = 0;
  bool reversed = false;  // spine read from the other end
  std::vector<ClauseResult> clauses;
};

struct StructureReport {
  bool applicable = false;
  std::string reason;             // why not applicable
  int max_degree = 0;
  std::vector<int> spine_degrees;  // in the orientation of backbone_vector()
  std::vector<SplitReport> splits;
  ClauseOutcome valley = ClauseOutcome::Inapplicable;
  std::optional<ValleyCertificate> valley_certificate;

  int count(ClauseOutcome o) const;
  /// No clause is Violated and the valley check did not fail.
  bool consistent() const;
};

/// Evaluates the local-structure implications expected of a maximum-TW tree
/// with the given maximum degree on every valid split and both spine
/// orientations, plus the valley-shape certificate of its spine vector.
/// Not applicable (no error) when max_degree < 3 or max_degree > n-3.
/// Throws Error{NotCaterpillar}; Error{BadArg} if max_degree differs from the
/// tree's.
StructureReport check_optimal_structure(const Tree& t, int max_degree);

}  // namespace tw
