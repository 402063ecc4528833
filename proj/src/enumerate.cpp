#include "eumin/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "eumin/eulerian.hpp"
#include "eumin/isomorphism.hpp"

namespace eumin {
namespace {

void check_bounds(int n_max, int m_max) {
    if (n_max < 0 || m_max < 0) throw PreconditionError("bounds must be non-negative");
    if (n_max > 7 || m_max > 14)
        throw BoundError("enumeration is bounded to n_max <= 7, m_max <= 14");
}

std::vector<Multigraph> sorted_by_code(std::map<std::string, Multigraph>&& classes) {
    std::vector<Multigraph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

} // namespace

std::vector<Multigraph> enumerate_multigraphs(int n_max, int m_max, bool connected) {
    check_bounds(n_max, m_max);
    std::vector<Multigraph> out;
    for (int n = 0; n <= n_max; ++n) {
        // level m -> m+1 by adding one edge in every slot
        std::map<std::string, Multigraph> level;
        Multigraph base(n);
        level.emplace(canonical_code(base), base);
        for (int m = 0; m <= m_max; ++m) {
            for (auto& [code, g] : level)
                if (!connected || is_connected(g)) out.push_back(g);
            if (m == m_max) break;
            std::map<std::string, Multigraph> next;
            for (auto& [code, g] : level) {
                for (VertexId i = 0; i < n; ++i)
                    for (VertexId j = i; j < n; ++j) {
                        Multigraph h = g;
                        h.add_edge(i, j);
                        Multigraph canon = canonical_graph(h);
                        next.emplace(canonical_code(canon), std::move(canon));
                    }
            }
            level = std::move(next);
        }
    }
    return out;
}

namespace {

// All cycles addable to an n-vertex graph, described as fresh edge lists
// over vertex sequences: loops, digons, and k-cycles for k >= 3 (subsets
// with rotation/reflection-deduplicated orders).
std::vector<std::vector<std::pair<VertexId, VertexId>>> cycle_shapes(int n) {
    std::vector<std::vector<std::pair<VertexId, VertexId>>> shapes;
    for (VertexId v = 0; v < n; ++v) shapes.push_back({{v, v}});
    for (VertexId u = 0; u < n; ++u)
        for (VertexId w = u + 1; w < n; ++w)
            shapes.push_back({{u, w}, {u, w}});
    // k >= 3: sequences starting at the minimum vertex, second < last
    std::vector<VertexId> seq;
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (static_cast<int>(seq.size()) == k) {
            if (seq[1] < seq.back()) {
                std::vector<std::pair<VertexId, VertexId>> sh;
                for (int i = 0; i < k; ++i) sh.emplace_back(seq[i], seq[(i + 1) % k]);
                shapes.push_back(std::move(sh));
            }
            return;
        }
        for (VertexId v = seq[0] + 1; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            seq.push_back(v);
            self(self, k);
            seq.pop_back();
            used[v] = 0;
        }
    };
    for (int k = 3; k <= n; ++k)
        for (VertexId s = 0; s + k <= n; ++s) {
            seq = {s};
            std::fill(used.begin(), used.end(), 0);
            used[s] = 1;
            rec(rec, k);
        }
    return shapes;
}

} // namespace

std::vector<Multigraph> enumerate_eulerian_multigraphs(int n_max, int m_max) {
    check_bounds(n_max, m_max);
    std::vector<Multigraph> out;
    for (int n = 0; n <= n_max; ++n) {
        auto shapes = cycle_shapes(n);
        std::map<std::string, Multigraph> seen;
        Multigraph base(n);
        seen.emplace(canonical_code(base), base);
        std::vector<const Multigraph*> frontier{&seen.begin()->second};
        while (!frontier.empty()) {
            std::vector<Multigraph> created;
            for (const Multigraph* gp : frontier) {
                for (const auto& shape : shapes) {
                    if (gp->edge_count() + static_cast<int>(shape.size()) > m_max) continue;
                    Multigraph h = *gp;
                    for (auto [u, w] : shape) h.add_edge(u, w);
                    Multigraph canon = canonical_graph(h);
                    std::string code = canonical_code(canon);
                    if (!seen.count(code)) {
                        auto [it, fresh] = seen.emplace(std::move(code), std::move(canon));
                        if (fresh) created.push_back(it->second);
                    }
                }
            }
            frontier.clear();
            for (Multigraph& g : created) {
                auto it = seen.find(canonical_code(g));
                frontier.push_back(&it->second);
            }
        }
        for (auto& [code, g] : seen) out.push_back(g);
    }
    return out;
}

std::vector<Multigraph> enumerate_4_regular(int n) {
    if (n < 1 || n > 7) throw BoundError("4-regular enumeration is bounded to 1 <= n <= 7");
    // slots (i, j) with i <= j in lexicographic order; loops count 2
    std::vector<std::pair<VertexId, VertexId>> slots;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i; j < n; ++j) slots.emplace_back(i, j);
    std::map<std::string, Multigraph> classes;
    std::vector<int> remaining(n, 4);
    std::vector<int> mult(slots.size(), 0);
    auto rec = [&](auto&& self, std::size_t s) -> void {
        if (s == slots.size()) {
            if (std::any_of(remaining.begin(), remaining.end(), [](int r) { return r != 0; }))
                return;
            Multigraph g(n);
            for (std::size_t t = 0; t < slots.size(); ++t)
                for (int c = 0; c < mult[t]; ++c) g.add_edge(slots[t].first, slots[t].second);
            if (!is_connected(g)) return;
            Multigraph canon = canonical_graph(g);
            classes.emplace(canonical_code(canon), std::move(canon));
            return;
        }
        auto [i, j] = slots[s];
        int cap = (i == j) ? remaining[i] / 2 : std::min(remaining[i], remaining[j]);
        for (int c = 0; c <= cap; ++c) {
            if (i == j)
                remaining[i] -= 2 * c;
            else {
                remaining[i] -= c;
                remaining[j] -= c;
            }
            mult[s] = c;
            // a vertex whose slots are exhausted must be saturated
            bool ok = true;
            if (j == n - 1 && remaining[i] != 0) ok = false;
            if (ok) self(self, s + 1);
            mult[s] = 0;
            if (i == j)
                remaining[i] += 2 * c;
            else {
                remaining[i] += c;
                remaining[j] += c;
            }
        }
    };
    rec(rec, 0);
    return sorted_by_code(std::move(classes));
}

} // namespace eumin
