#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eumin/multigraph.hpp"
#include "eumin/trace.hpp"

namespace eumin {

enum class SearchStatus { found, absent, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<Trace> trace; // set when found
    long expanded = 0;          // states explored in this call
};

/// Exhaustive reachability over operation sequences with canonical-form
/// memoization. Every op strictly decreases |V| or |E|, so the state space
/// is a DAG and definitive verdicts are cached across queries against the
/// same target. Deterministic: first-found traces under a fixed op order
/// (contractions by edge id, cycle deletions in enumeration order, vertex
/// deletions by id, demotions in peripheral-enumeration order).
class MinorSearch {
public:
    MinorSearch(Multigraph target, bool with_demotions);

    const Multigraph& target() const { return target_; }
    bool with_demotions() const { return with_demotions_; }

    /// Decide whether the target is reachable from g (bounds: |V| <= 7,
    /// |E| <= 14, no free-loops). budget limits memo-miss explorations.
    SearchResult contains(const Multigraph& g, long budget = kDefaultBudget);

    static constexpr long kDefaultBudget = 2'000'000;

private:
    enum class Verdict : char { yes, no, unknown };

    Verdict reach(const Multigraph& g, long& budget, long& expanded);
    std::vector<std::pair<TraceOp, Multigraph>> successors(const Multigraph& g) const;

    Multigraph target_;
    std::string target_code_;
    int target_v_, target_e_;
    bool with_demotions_;
    std::unordered_map<std::string, bool> memo_; // canonical code -> reachable
};

/// Search without demotions. Returns a validated trace from g to a graph
/// isomorphic to h, definitive absence, or budget exhaustion.
SearchResult has_eulerian_minor(const Multigraph& g, const Multigraph& h,
                                long budget = MinorSearch::kDefaultBudget);

} // namespace eumin
