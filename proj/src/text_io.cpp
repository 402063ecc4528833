#include "eumin/text_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace eumin {
namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

long to_int(const std::string& t) {
    try {
        std::size_t used = 0;
        long v = std::stol(t, &used);
        if (used != t.size()) throw ParseError("bad integer: " + t);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer: " + t);
    }
}

// reads lines until the graph block is complete; returns leftover position
Multigraph parse_graph_lines(const std::vector<std::string>& lines, std::size_t& pos) {
    // header
    while (pos < lines.size() && strip(lines[pos]).empty()) ++pos;
    if (pos >= lines.size() || strip(lines[pos]) != "multigraph")
        throw ParseError("expected 'multigraph' header");
    ++pos;
    while (pos < lines.size() && strip(lines[pos]).empty()) ++pos;
    auto vt = pos < lines.size() ? tokens(strip(lines[pos])) : std::vector<std::string>{};
    if (vt.size() != 2 || vt[0] != "v") throw ParseError("expected 'v <vertex-count>'");
    long n = to_int(vt[1]);
    if (n < 0) throw ParseError("negative vertex count");
    ++pos;
    Multigraph g(static_cast<int>(n));
    std::vector<char> seen;
    long expected = 0;
    bool saw_free = false;
    while (pos < lines.size()) {
        std::string s = strip(lines[pos]);
        if (s.empty()) {
            ++pos;
            continue;
        }
        auto t = tokens(s);
        if (t[0] == "e") {
            if (saw_free) throw ParseError("'e' lines must precede 'f'");
            if (t.size() != 4) throw ParseError("expected 'e <id> <u> <w>'");
            long id = to_int(t[1]), u = to_int(t[2]), w = to_int(t[3]);
            if (id != expected)
                throw ParseError("edge ids must be dense and ascending; got " + t[1]);
            ++expected;
            if (u < 0 || u >= n || w < 0 || w >= n)
                throw ParseError("edge endpoint out of range: " + s);
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(w));
            ++pos;
        } else if (t[0] == "f") {
            if (t.size() != 2) throw ParseError("expected 'f <free-loop-count>'");
            long k = to_int(t[1]);
            if (k < 0) throw ParseError("negative free-loop count");
            g.set_free_loops(static_cast<int>(k));
            saw_free = true;
            ++pos;
        } else {
            break; // not part of the graph block
        }
    }
    return g;
}

} // namespace

std::string format_multigraph(const Multigraph& g) {
    std::ostringstream out;
    out << "multigraph\n";
    out << "v " << g.vertex_count() << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, w] = g.endpoints(e);
        out << "e " << e << " " << u << " " << w << "\n";
    }
    if (g.free_loops() > 0) out << "f " << g.free_loops() << "\n";
    return out.str();
}

Multigraph parse_multigraph(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    std::size_t pos = 0;
    Multigraph g = parse_graph_lines(lines, pos);
    for (; pos < lines.size(); ++pos)
        if (!strip(lines[pos]).empty())
            throw ParseError("unexpected content after graph: " + strip(lines[pos]));
    return g;
}

Multigraph parse_multigraph(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_multigraph(buf.str());
}

std::string format_op(const TraceOp& op) {
    std::ostringstream out;
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, ContractOp>) {
                out << "contract " << o.edge;
            } else if constexpr (std::is_same_v<T, DeleteCycleOp>) {
                out << "delcycle";
                for (EdgeId e : o.edges) out << " " << e;
            } else if constexpr (std::is_same_v<T, DeleteVertexOp>) {
                out << "delvertex " << o.vertex;
            } else if constexpr (std::is_same_v<T, DemoteOp>) {
                out << "demote " << o.vertex << " " << o.h1 << " " << o.h2 << " witness";
                for (EdgeId e : o.witness) out << " " << e;
            } else if constexpr (std::is_same_v<T, SubdivideOp>) {
                out << "subdiv " << o.edge;
            } else if constexpr (std::is_same_v<T, SubdivideFreeLoopOp>) {
                out << "subdivfree";
            } else {
                static_assert(std::is_same_v<T, MergeOp>);
                out << "merge " << o.u << " " << o.w;
            }
        },
        op);
    return out.str();
}

TraceOp parse_op(const std::string& line) {
    auto t = tokens(strip(line));
    if (t.empty()) throw ParseError("empty op line");
    const std::string& kind = t[0];
    auto arg = [&](std::size_t i) {
        if (i >= t.size()) throw ParseError("missing argument in op: " + line);
        return static_cast<int>(to_int(t[i]));
    };
    if (kind == "contract") {
        if (t.size() != 2) throw ParseError("contract takes one edge id");
        return ContractOp{arg(1)};
    }
    if (kind == "delcycle") {
        if (t.size() < 2) throw ParseError("delcycle needs at least one edge id");
        DeleteCycleOp op;
        for (std::size_t i = 1; i < t.size(); ++i) op.edges.push_back(arg(i));
        return op;
    }
    if (kind == "delvertex") {
        if (t.size() != 2) throw ParseError("delvertex takes one vertex id");
        return DeleteVertexOp{arg(1)};
    }
    if (kind == "demote") {
        if (t.size() < 6 || t[4] != "witness")
            throw ParseError("expected 'demote <v> <h1> <h2> witness <e>...'");
        DemoteOp op;
        op.vertex = arg(1);
        op.h1 = arg(2);
        op.h2 = arg(3);
        for (std::size_t i = 5; i < t.size(); ++i) op.witness.push_back(arg(i));
        return op;
    }
    if (kind == "subdiv") {
        if (t.size() != 2) throw ParseError("subdiv takes one edge id");
        return SubdivideOp{arg(1)};
    }
    if (kind == "subdivfree") {
        if (t.size() != 1) throw ParseError("subdivfree takes no arguments");
        return SubdivideFreeLoopOp{};
    }
    if (kind == "merge") {
        if (t.size() != 3) throw ParseError("merge takes two vertex ids");
        return MergeOp{arg(1), arg(2)};
    }
    throw ParseError("unknown op: " + kind);
}

std::string format_trace(const Trace& t) {
    std::ostringstream out;
    out << format_multigraph(t.source);
    for (const TraceOp& op : t.ops) out << format_op(op) << "\n";
    out << "target:\n";
    out << format_multigraph(t.target);
    return out.str();
}

Trace parse_trace(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    std::size_t pos = 0;
    Trace t;
    t.source = parse_graph_lines(lines, pos);
    while (pos < lines.size()) {
        std::string s = strip(lines[pos]);
        if (s.empty()) {
            ++pos;
            continue;
        }
        if (s == "target:") {
            ++pos;
            t.target = parse_graph_lines(lines, pos);
            for (; pos < lines.size(); ++pos)
                if (!strip(lines[pos]).empty())
                    throw ParseError("unexpected content after target graph");
            return t;
        }
        t.ops.push_back(parse_op(s));
        ++pos;
    }
    throw ParseError("trace is missing its 'target:' section");
}

Trace parse_trace(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_trace(buf.str());
}

std::string format_embedding(const Multigraph& g, const RotationSystem& rot) {
    std::ostringstream out;
    out << format_multigraph(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "rot " << v << ":";
        for (HalfEdgeId h : rot.order[v]) out << " " << h;
        out << "\n";
    }
    return out.str();
}

bool looks_like_trace(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (strip(line) == "target:") return true;
    return false;
}

} // namespace eumin
