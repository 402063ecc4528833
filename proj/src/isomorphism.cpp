#include "eumin/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace eumin {
namespace {

struct CanonContext {
    int n = 0;
    std::vector<std::vector<int>> mult; // n x n, loops on the diagonal
    std::vector<int> color;             // refined invariant classes

    // search state
    std::vector<int> placed;        // vertex at each position
    std::vector<char> used;
    std::vector<int> cur;           // row codes of the partial labeling
    std::vector<int> best;          // best complete code so far
    std::vector<int> best_perm;     // p[position] = vertex
    bool have_best = false;
};

void refine_colors(CanonContext& c) {
    int n = c.n;
    c.color.assign(n, 0);
    // start from (degree, loop count)
    {
        std::vector<std::pair<int, int>> inv(n);
        for (int v = 0; v < n; ++v) {
            int deg = 0;
            for (int u = 0; u < n; ++u) deg += c.mult[v][u] * (u == v ? 2 : 1);
            inv[v] = {deg, c.mult[v][v]};
        }
        std::vector<std::pair<int, int>> sorted(inv.begin(), inv.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            c.color[v] = int(std::lower_bound(sorted.begin(), sorted.end(), inv[v]) -
                             sorted.begin());
    }
    // neighborhood refinement to a fixpoint
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < n; ++u)
                if (u != v && c.mult[v][u] > 0) nb.emplace_back(c.color[u], c.mult[v][u]);
            std::sort(nb.begin(), nb.end());
            sig[v].push_back(c.color[v]);
            for (auto& [cc, m] : nb) {
                sig[v].push_back(cc);
                sig[v].push_back(m);
            }
        }
        std::vector<std::vector<int>> sorted(sig.begin(), sig.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = int(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                          sorted.begin());
        if (next == c.color) break;
        c.color = std::move(next);
    }
}

// cmp_less: the current prefix is already strictly below best.
void search(CanonContext& c, int pos, bool cmp_less) {
    int n = c.n;
    if (pos == n) {
        if (!c.have_best || cmp_less) {
            c.best = c.cur;
            c.best_perm = c.placed;
            c.have_best = true;
        }
        return;
    }
    // candidates: unplaced vertices of the minimal refined color
    int min_color = -1;
    for (int v = 0; v < n; ++v)
        if (!c.used[v] && (min_color == -1 || c.color[v] < min_color)) min_color = c.color[v];
    for (int v = 0; v < n; ++v) {
        if (c.used[v] || c.color[v] != min_color) continue;
        // row code: loop count, then multiplicities to already placed vertices
        std::size_t base = c.cur.size();
        c.cur.push_back(c.mult[v][v]);
        for (int i = 0; i < pos; ++i) c.cur.push_back(c.mult[v][c.placed[i]]);
        bool less = cmp_less, prune = false;
        if (!less && c.have_best) {
            for (std::size_t i = base; i < c.cur.size(); ++i) {
                if (c.cur[i] < c.best[i]) {
                    less = true;
                    break;
                }
                if (c.cur[i] > c.best[i]) {
                    prune = true;
                    break;
                }
            }
        }
        if (!prune) {
            c.used[v] = 1;
            c.placed.push_back(v);
            search(c, pos + 1, less);
            c.placed.pop_back();
            c.used[v] = 0;
        }
        c.cur.resize(base);
    }
}

CanonContext make_context(const Multigraph& g) {
    CanonContext c;
    c.n = g.vertex_count();
    c.mult.assign(c.n, std::vector<int>(c.n, 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (a == b)
            ++c.mult[a][a];
        else {
            ++c.mult[a][b];
            ++c.mult[b][a];
        }
    }
    refine_colors(c);
    return c;
}

std::vector<int> best_code(CanonContext& c) {
    c.used.assign(c.n, 0);
    c.cur.clear();
    c.placed.clear();
    c.have_best = false;
    search(c, 0, false);
    return c.best;
}

} // namespace

std::string canonical_code(const Multigraph& g) {
    CanonContext c = make_context(g);
    std::vector<int> code = best_code(c);
    std::string out;
    out.reserve(code.size() + 3);
    out.push_back(static_cast<char>(g.vertex_count()));
    out.push_back(static_cast<char>(g.edge_count()));
    out.push_back(static_cast<char>(g.free_loops()));
    for (int x : code) out.push_back(static_cast<char>(x));
    return out;
}

std::vector<int> canonical_labeling(const Multigraph& g) {
    CanonContext c = make_context(g);
    best_code(c);
    std::vector<int> perm(g.vertex_count());
    for (int pos = 0; pos < g.vertex_count(); ++pos) perm[c.best_perm[pos]] = pos;
    return perm;
}

Multigraph canonical_graph(const Multigraph& g) {
    std::vector<int> perm = canonical_labeling(g);
    int n = g.vertex_count();
    // rebuild with a fixed edge order: per vertex i ascending, loops first,
    // then edges to smaller-id vertices
    Multigraph out(n, g.free_loops());
    std::vector<std::vector<int>> m2(n, std::vector<int>(n, 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        int pa = perm[a], pb = perm[b];
        if (pa == pb)
            ++m2[pa][pa];
        else {
            ++m2[std::max(pa, pb)][std::min(pa, pb)];
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < m2[i][i]; ++k) out.add_edge(i, i);
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < m2[i][j]; ++k) out.add_edge(j, i);
    }
    return out;
}

bool is_isomorphic(const Multigraph& g, const Multigraph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() ||
        g.free_loops() != h.free_loops())
        return false;
    if (degree_sequence(g) != degree_sequence(h)) return false;
    return canonical_code(g) == canonical_code(h);
}

std::vector<int> isomorphism_map(const Multigraph& g, const Multigraph& h) {
    if (!is_isomorphic(g, h)) throw PreconditionError("graphs are not isomorphic");
    std::vector<int> pg = canonical_labeling(g);
    std::vector<int> ph = canonical_labeling(h);
    std::vector<int> inv_h(ph.size());
    for (std::size_t v = 0; v < ph.size(); ++v) inv_h[ph[v]] = static_cast<int>(v);
    std::vector<int> out(pg.size());
    for (std::size_t v = 0; v < pg.size(); ++v) out[v] = inv_h[pg[v]];
    return out;
}

} // namespace eumin
