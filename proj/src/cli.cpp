#include "eumin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eumin/eulerian.hpp"
#include "eumin/fourreg.hpp"
#include "eumin/isomorphism.hpp"
#include "eumin/obstructions.hpp"
#include "eumin/peripheral.hpp"
#include "eumin/planarity.hpp"
#include "eumin/search.hpp"
#include "eumin/text_io.hpp"

namespace eumin {
namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

int run_check(const std::string& what, const Multigraph& g, std::ostream& out) {
    if (what == "eulerian") {
        if (is_eulerian(g)) {
            out << "yes\n";
            return kExitYes;
        }
        out << "no\n";
        out << "odd-degree vertices:";
        auto d = g.degrees();
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (d[v] % 2) out << " " << v;
        out << "\n";
        return kExitNo;
    }
    if (what == "planar") {
        PlanarityResult r = is_planar(g);
        if (auto* rot = std::get_if<RotationSystem>(&r)) {
            out << "yes\n";
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                out << "rot " << v << ":";
                for (HalfEdgeId h : rot->order[v]) out << " " << h;
                out << "\n";
            }
            return kExitYes;
        }
        const auto& w = std::get<KuratowskiWitness>(r);
        out << "no\n";
        out << "witness "
            << (w.kind == KuratowskiWitness::Kind::k5_subdivision ? "K5-subdivision"
                                                                  : "K33-subdivision")
            << "\n";
        out << "branch:";
        for (VertexId v : w.branch_vertices) out << " " << v;
        out << "\n";
        for (const auto& p : w.paths) {
            out << "path:";
            for (EdgeId e : p) out << " " << e;
            out << "\n";
        }
        return kExitNo;
    }
    if (what == "outerplanar") {
        if (is_outerplanar(g)) {
            out << "yes\n";
            return kExitYes;
        }
        out << "no\n";
        return kExitNo;
    }
    throw ParseError("unknown check: " + what);
}

int run_search_result(const SearchResult& res, std::ostream& out, std::ostream& err) {
    switch (res.status) {
        case SearchStatus::found:
            out << format_trace(*res.trace);
            return kExitYes;
        case SearchStatus::absent:
            out << "absent\n";
            return kExitNo;
        case SearchStatus::budget_exceeded:
            out << "budget\n";
            err << "budget exhausted before a definitive answer\n";
            return kExitPrecondition;
    }
    return kExitPrecondition;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"multigraph minor calculus toolkit"};
    app.require_subcommand(1);
    long budget = MinorSearch::kDefaultBudget;
    std::string strategy = "direct";
    std::string format = "text";
    app.add_option("--budget", budget, "step bound for searches");
    app.add_option("--strategy", strategy, "peripheral search strategy: direct|descent")
        ->check(CLI::IsMember({"direct", "descent"}));
    app.add_option("--format", format, "output format (text)")->check(CLI::IsMember({"text"}));

    std::string check_what, file, target_name;
    int gen_n = 1;
    bool inverse = false;

    auto* check = app.add_subcommand("check", "verdict with certificate");
    check->add_option("property", check_what)->required()->check(
        CLI::IsMember({"eulerian", "planar", "outerplanar"}));
    check->add_option("file", file)->required();

    auto* decompose = app.add_subcommand("decompose", "cycle decomposition");
    decompose->add_option("file", file)->required();

    auto* peripheral = app.add_subcommand("peripheral", "one peripheral certificate or none");
    peripheral->add_option("file", file)->required();

    auto* obstruct = app.add_subcommand("obstruct", "obstruction trace");
    obstruct->add_option("kind", check_what)->required()->check(
        CLI::IsMember({"planar", "outerplanar", "eulerian"}));
    obstruct->add_option("file", file)->required();

    auto* reduce = app.add_subcommand("reduce", "reduction trace to the one-vertex double loop");
    reduce->add_option("file", file)->required();

    auto* replay = app.add_subcommand("replay", "replay a trace and print the final graph");
    replay->add_option("file", file)->required();
    replay->add_flag("--inverse", inverse, "reconstruct the source of a reduction trace");

    auto* verify = app.add_subcommand("verify", "validate a trace step by step");
    verify->add_option("file", file)->required();

    auto* generate = app.add_subcommand("generate", "stream of 4-regular planar graphs");
    generate->add_option("--n", gen_n, "vertex count")->required();

    auto* contains = app.add_subcommand("contains", "starred-minor containment search");
    contains->add_option("--target", target_name, "K2|K5|K33p|K23p|K4p")->required();
    contains->add_option("file", file)->required();

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargv;
        cargv.push_back("eumin");
        for (const std::string& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kExitYes;
        }
        err << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (check->parsed()) {
            return run_check(check_what, parse_multigraph(read_file(file, in)), out);
        }
        if (decompose->parsed()) {
            Multigraph g = parse_multigraph(read_file(file, in));
            for (const Cycle& c : cycle_decomposition(g)) {
                out << "cycle";
                for (EdgeId e : c.edges) out << " " << e;
                out << "\n";
            }
            return kExitYes;
        }
        if (peripheral->parsed()) {
            Multigraph g = parse_multigraph(read_file(file, in));
            auto s = strategy == "direct" ? PeripheralStrategy::direct
                                          : PeripheralStrategy::descent;
            auto cert = find_peripheral_cycle(g, s);
            if (!cert) {
                out << "none\n";
                return kExitNo;
            }
            out << "cycle";
            for (EdgeId e : cert->cycle.edges) out << " " << e;
            out << "\nvertices";
            for (VertexId v : cert->cycle.vertices) out << " " << v;
            out << "\ncomponents " << cert->components_before << " -> "
                << cert->components_after << "\n";
            return kExitYes;
        }
        if (obstruct->parsed()) {
            Multigraph g = parse_multigraph(read_file(file, in));
            Trace t;
            if (check_what == "planar")
                t = extract_planar_obstruction(g);
            else if (check_what == "outerplanar")
                t = extract_outerplanar_obstruction(g);
            else
                t = k2_obstruction(g);
            out << format_trace(t);
            return kExitYes;
        }
        if (reduce->parsed()) {
            Multigraph g = parse_multigraph(read_file(file, in));
            ReductionTrace rt = reduce_to_b2(g);
            out << format_trace(rt.trace);
            return kExitYes;
        }
        if (replay->parsed()) {
            Trace t = parse_trace(read_file(file, in));
            if (inverse) {
                // rebuild the reduction step records by replaying forward
                ReductionTrace rt;
                rt.trace = t;
                Multigraph cur = t.source;
                for (std::size_t i = 0; i + 1 < t.ops.size(); i += 2) {
                    auto* dem = std::get_if<DemoteOp>(&t.ops[i]);
                    auto* con = std::get_if<ContractOp>(&t.ops[i + 1]);
                    if (!dem || !con)
                        throw PreconditionError(
                            "inverse replay expects alternating demote/contract ops");
                    ReductionStep step;
                    step.demote = *dem;
                    step.contracted = con->edge;
                    Multigraph demoted = apply_op(cur, *dem);
                    IdMaps cmap = id_maps(demoted, *con);
                    EdgeId e1 = half_edge_owner(dem->h1), e2 = half_edge_owner(dem->h2);
                    if (e1 != e2) step.fused_image = cmap.edge[demoted.edge_count() - 1];
                    EdgeId other = -1;
                    for (EdgeId h : demoted.incident_edges(dem->vertex))
                        if (h != con->edge) other = h;
                    step.other_image = other >= 0 ? cmap.edge[other] : -1;
                    cur = apply_op(demoted, *con);
                    rt.steps.push_back(step);
                }
                ConstructionReplay cr = construct_replay(rt, free_loop_seeds_required(rt));
                const Multigraph& rebuilt = cr.graph;
                out << format_multigraph(rebuilt);
                out << "ok\n";
                return kExitYes;
            }
            Multigraph g = apply_trace(t);
            out << format_multigraph(g);
            out << "ok\n";
            return kExitYes;
        }
        if (verify->parsed()) {
            Trace t = parse_trace(read_file(file, in));
            apply_trace(t);
            out << "ok\n";
            return kExitYes;
        }
        if (generate->parsed()) {
            bool first = true;
            for (const Multigraph& g : generate_4rp(gen_n)) {
                if (!first) out << "\n";
                out << format_multigraph(g);
                first = false;
            }
            return kExitYes;
        }
        if (contains->parsed()) {
            auto name = obstruction_from_string(target_name);
            if (!name) throw ParseError("unknown target: " + target_name);
            Multigraph g = parse_multigraph(read_file(file, in));
            if (*name == ObstructionName::K2)
                return run_search_result(has_eulerian_minor(g, make_obstruction(*name).graph, budget),
                                         out, err);
            return run_search_result(minor_star_contains(g, make_obstruction(*name), budget), out,
                                     err);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const TraceError& e) {
        err << "invalid trace: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const BoundError& e) {
        err << "bound exceeded: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    }
    err << "no subcommand\n";
    return kExitParse;
}

} // namespace eumin
