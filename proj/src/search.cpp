#include "eumin/search.hpp"

#include "eumin/eulerian.hpp"
#include "eumin/isomorphism.hpp"
#include "eumin/peripheral.hpp"

namespace eumin {

MinorSearch::MinorSearch(Multigraph target, bool with_demotions)
    : target_(std::move(target)),
      target_code_(canonical_code(target_)),
      target_v_(target_.vertex_count()),
      target_e_(target_.edge_count()),
      with_demotions_(with_demotions) {
    if (target_.free_loops() != 0)
        throw PreconditionError("minor search targets must not carry free-loops");
}

std::vector<std::pair<TraceOp, Multigraph>> MinorSearch::successors(const Multigraph& g) const {
    std::vector<std::pair<TraceOp, Multigraph>> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!g.is_loop(e)) out.emplace_back(ContractOp{e}, contract_edge(g, e));
    for (const Cycle& c : enumerate_cycles(g))
        out.emplace_back(DeleteCycleOp{c.edges}, delete_cycle(g, c));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out.emplace_back(DeleteVertexOp{v}, delete_isolated_vertex(g, v));
    if (with_demotions_)
        for (const DemotionSite& d : enumerate_demotions(g))
            out.emplace_back(DemoteOp{d.vertex, d.h1, d.h2, d.witness.edges},
                             admissible_demotion(g, d.vertex, d.h1, d.h2, d.witness));
    return out;
}

MinorSearch::Verdict MinorSearch::reach(const Multigraph& g, long& budget, long& expanded) {
    if (g.vertex_count() < target_v_ || g.edge_count() < target_e_) return Verdict::no;
    std::string code = canonical_code(g);
    if (code == target_code_) return Verdict::yes;
    if (g.vertex_count() == target_v_ && g.edge_count() == target_e_) return Verdict::no;
    auto it = memo_.find(code);
    if (it != memo_.end()) return it->second ? Verdict::yes : Verdict::no;
    if (budget <= 0) return Verdict::unknown;
    --budget;
    ++expanded;
    bool hit_budget = false;
    for (auto& [op, h] : successors(g)) {
        Verdict v = reach(h, budget, expanded);
        if (v == Verdict::yes) {
            memo_[code] = true;
            return Verdict::yes;
        }
        if (v == Verdict::unknown) hit_budget = true;
    }
    if (hit_budget) return Verdict::unknown;
    memo_[code] = false;
    return Verdict::no;
}

SearchResult MinorSearch::contains(const Multigraph& g, long budget) {
    if (g.free_loops() != 0)
        throw PreconditionError("minor search is not defined on graphs with free-loops");
    if (g.vertex_count() > 7 || g.edge_count() > 14)
        throw BoundError("minor search is bounded to graphs with at most 7 vertices and 14 edges");
    SearchResult res;
    Verdict v = reach(g, budget, res.expanded);
    if (v == Verdict::unknown) {
        res.status = SearchStatus::budget_exceeded;
        return res;
    }
    if (v == Verdict::no) {
        res.status = SearchStatus::absent;
        return res;
    }
    // reconstruct the first-found trace by greedy descent over reachable
    // successors; memo entries make this deterministic and cheap
    res.status = SearchStatus::found;
    TraceBuilder tb(g);
    long aux_budget = budget < 0 ? 0 : budget;
    for (;;) {
        const Multigraph& cur = tb.current();
        if (canonical_code(cur) == target_code_) break;
        bool advanced = false;
        for (auto& [op, h] : successors(cur)) {
            long e2 = 0;
            if (reach(h, aux_budget, e2) == Verdict::yes) {
                tb.push(op);
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw PreconditionError("trace reconstruction failed"); // unreachable
    }
    Trace t = tb.finish();
    res.trace = std::move(t);
    return res;
}

SearchResult has_eulerian_minor(const Multigraph& g, const Multigraph& h, long budget) {
    MinorSearch search(h, /*with_demotions=*/false);
    return search.contains(g, budget);
}

} // namespace eumin
