#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mecs/distances.hpp"
#include "mecs/errors.hpp"
#include "mecs/exact.hpp"
#include "mecs/gadgets.hpp"
#include "mecs/greedy.hpp"
#include "mecs/io.hpp"
#include "mecs/mip/build.hpp"
#include "mecs/mip/lp.hpp"
#include "mecs/mip/solve.hpp"
#include "mecs/mst.hpp"
#include "mecs/spanner.hpp"
#include "mecs/target.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mecs;

Graph load_instance(const std::string& spec) {
    std::ifstream probe(spec);
    if (probe.good()) return io::load_edge_list(probe);
    auto names = io::builtin_instance_names();
    bool builtin = spec == "krebs";
    for (const std::string& n : names) builtin = builtin || n == spec;
    if (builtin) return io::builtin_instance(spec);
    throw parse_error("no such file or built-in instance: '" + spec + "'");
}

struct TargetOpts {
    std::string stretch;
    std::string increment;
    std::string absolute;
};

void add_target_flags(CLI::App* cmd, TargetOpts& t) {
    auto* a = cmd->add_option("--stretch", t.stretch,
                              "APL budget as a factor of the input APL (rational, e.g. 1.25 or 5/4)");
    auto* b = cmd->add_option("--increment", t.increment, "APL budget as input APL plus this delta");
    auto* c = cmd->add_option("--target-apl", t.absolute, "APL budget as an absolute value");
    a->excludes(b)->excludes(c);
    b->excludes(c);
}

SpannerTarget make_target(const TargetOpts& t) {
    const int given = (!t.stretch.empty()) + (!t.increment.empty()) + (!t.absolute.empty());
    if (given != 1)
        throw parse_error("exactly one of --stretch, --increment, --target-apl is required");
    if (!t.stretch.empty()) return SpannerTarget::stretch(Rational::parse(t.stretch));
    if (!t.increment.empty()) return SpannerTarget::increment(Rational::parse(t.increment));
    return SpannerTarget::absolute(Rational::parse(t.absolute));
}

void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_string())
            std::cout << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
}

json result_report(const Graph& g, const SpannerResult& r, double runtime_ms) {
    json j = json::object();
    j["algorithm"] = r.algorithm;
    j["nodes"] = g.node_count();
    j["edges_in"] = g.edge_count();
    j["edges_out"] = r.edge_count();
    j["weight_in"] = g.total_weight();
    j["weight_out"] = r.total_weight;
    j["apl_in"] = r.input_apl.str();
    j["apl_in_decimal"] = r.input_apl.to_double();
    j["apl_out"] = r.apl.value().str();
    j["apl_out_decimal"] = r.apl.value().to_double();
    j["bound"] = r.bound.str();
    j["bound_decimal"] = r.bound.to_double();
    j["iterations"] = r.iterations;
    j["optimal"] = r.optimal;
    j["runtime_ms"] = runtime_ms;
    return j;
}

void write_result_files(const Graph& g, const SpannerResult& r, const std::string& out,
                        const std::string& out_dot) {
    if (!out.empty()) {
        Graph sub = g.spanning_subgraph(r.edges);
        std::vector<std::string> header = {
            "algorithm: " + r.algorithm,
            "apl: " + r.apl.value().str(),
            "bound: " + r.bound.str(),
        };
        io::save_edge_list_file(sub, out, header);
    }
    if (!out_dot.empty()) {
        std::ofstream dot(out_dot);
        if (!dot) throw parse_error("cannot open '" + out_dot + "' for writing");
        io::write_dot(g, dot, r.edges);
    }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw parse_error("empty entry in list '" + text + "'");
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw parse_error("empty list");
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int run(int argc, char** argv) {
    CLI::App app{"compact spanners: sparsify a graph while keeping its average path length in budget"};
    app.require_subcommand(1);

    // --- apl ---
    auto* c_apl = app.add_subcommand("apl", "report size, APL, diameter and MST weight");
    std::string apl_instance;
    bool apl_json = false;
    c_apl->add_option("instance", apl_instance, "edge-list file or built-in name")->required();
    c_apl->add_flag("--json", apl_json, "emit the report as JSON");

    // --- sparsify ---
    auto* c_sparsify = app.add_subcommand("sparsify", "run a sparsification heuristic");
    std::string sp_instance, sp_algo = "removal", sp_out, sp_dot, sp_edge_stretch;
    bool sp_json = false;
    TargetOpts sp_target;
    c_sparsify->add_option("instance", sp_instance)->required();
    c_sparsify
        ->add_option("--algo", sp_algo, "greedy-spanner | removal | addition | addition-filtered")
        ->check(CLI::IsMember({"greedy-spanner", "removal", "addition", "addition-filtered"}));
    add_target_flags(c_sparsify, sp_target);
    c_sparsify->add_option("--edge-stretch", sp_edge_stretch,
                           "per-edge distance filter for addition-filtered (default: bound / APL)");
    c_sparsify->add_option("--out", sp_out, "write the spanner as an edge list");
    c_sparsify->add_option("--out-dot", sp_dot, "write a Graphviz view with the spanner bold");
    c_sparsify->add_flag("--json", sp_json);

    // --- exact ---
    auto* c_exact = app.add_subcommand("exact", "solve the minimum spanner exactly");
    std::string ex_instance, ex_method = "enumerate", ex_objective = "edges", ex_out, ex_dot;
    int ex_max_extra = -1;
    bool ex_json = false;
    TargetOpts ex_target;
    c_exact->add_option("instance", ex_instance)->required();
    c_exact->add_option("--method", ex_method, "enumerate | bnb")
        ->check(CLI::IsMember({"enumerate", "bnb"}));
    c_exact->add_option("--objective", ex_objective, "edges | weight")
        ->check(CLI::IsMember({"edges", "weight"}));
    c_exact->add_option("--max-extra", ex_max_extra,
                        "cap on edges beyond n-1 before giving up (-1: none)");
    add_target_flags(c_exact, ex_target);
    c_exact->add_option("--out", ex_out);
    c_exact->add_option("--out-dot", ex_dot);
    c_exact->add_flag("--json", ex_json);

    // --- export-mip ---
    auto* c_export = app.add_subcommand("export-mip", "write an LP model for an external solver");
    std::string mx_instance, mx_formulation = "path", mx_out, mx_meta;
    int mx_L = -1;
    bool mx_relax = false, mx_leaf = false, mx_iso = false, mx_conn = false, mx_json = false;
    TargetOpts mx_target;
    c_export->add_option("instance", mx_instance)->required();
    c_export->add_option("--formulation", mx_formulation, "flow | path | path-weighted")
        ->check(CLI::IsMember({"flow", "path", "path-weighted"}));
    c_export->add_option("--L", mx_L, "path horizon (default: graph diameter)");
    c_export->add_flag("--relax-paths", mx_relax, "continuous path variables, no lower bounds");
    c_export->add_flag("--leaf-reduction", mx_leaf, "fold degree-1 nodes into the budget row");
    c_export->add_flag("--iso-cuts", mx_iso, "add per-node degree cuts");
    c_export->add_flag("--conn-cut", mx_conn, "add the n-1 edge-count cut");
    add_target_flags(c_export, mx_target);
    c_export->add_option("-o,--out", mx_out, "LP output path")->required();
    c_export->add_option("--meta", mx_meta, "sidecar metadata path (default: <out>.meta.json)");
    c_export->add_flag("--json", mx_json);

    // --- solve-mip ---
    auto* c_solve = app.add_subcommand("solve-mip", "solve the level model, iterating the horizon");
    std::string sv_instance, sv_formulation = "auto", sv_cmd = "internal:exact", sv_out, sv_dot;
    int sv_timeout = 0;
    bool sv_relax = false, sv_leaf = false, sv_iso = false, sv_conn = false, sv_json = false;
    TargetOpts sv_target;
    c_solve->add_option("instance", sv_instance)->required();
    c_solve->add_option("--formulation", sv_formulation, "auto | path | path-weighted | flow")
        ->check(CLI::IsMember({"auto", "path", "path-weighted", "flow"}));
    c_solve->add_option("--solver-cmd", sv_cmd,
                        "shell command with {model} and {solution} placeholders, or internal:exact");
    c_solve->add_option("--timeout", sv_timeout, "per-solve wall clock limit in seconds (0: none)");
    c_solve->add_flag("--relax-paths", sv_relax);
    c_solve->add_flag("--leaf-reduction", sv_leaf);
    c_solve->add_flag("--iso-cuts", sv_iso);
    c_solve->add_flag("--conn-cut", sv_conn);
    add_target_flags(c_solve, sv_target);
    c_solve->add_option("--out", sv_out);
    c_solve->add_option("--out-dot", sv_dot);
    c_solve->add_flag("--json", sv_json);

    // --- gen ---
    auto* c_gen = app.add_subcommand("gen", "generate instances");
    c_gen->require_subcommand(1);

    auto* g_disk = c_gen->add_subcommand("unit-disk", "random points, edges below a range");
    io::UnitDiskParams disk;
    std::string gd_out, gd_coords;
    bool gd_weighted = false, gd_json = false;
    g_disk->add_option("--count", disk.count, "number of points");
    g_disk->add_option("--box", disk.box, "side of the sampling square");
    g_disk->add_option("--range", disk.range, "connection range (unweighted mode)");
    g_disk->add_flag("--weighted", gd_weighted, "weight 1 below --near, 2 below --far");
    g_disk->add_option("--near", disk.near_threshold);
    g_disk->add_option("--far", disk.far_threshold);
    g_disk->add_option("--seed", disk.seed);
    g_disk->add_option("--attempts", disk.max_attempts, "regeneration attempts before giving up");
    g_disk->add_option("-o,--out", gd_out)->required();
    g_disk->add_option("--coords", gd_coords, "write point coordinates");
    g_disk->add_flag("--json", gd_json);

    auto* g_ss = c_gen->add_subcommand("gadget-subset-sum", "dual-budget subset-sum gadget");
    std::string gs_values, gs_out;
    std::int64_t gs_target = 0;
    bool gs_json = false;
    g_ss->add_option("--values", gs_values, "comma-separated positive integers")->required();
    g_ss->add_option("--target", gs_target, "subset-sum target")->required();
    g_ss->add_option("-o,--out", gs_out)->required();
    g_ss->add_flag("--json", gs_json);

    auto* g_ec = c_gen->add_subcommand("gadget-ecsts", "exact-cover spanning-tree gadget");
    std::string ge_subsets, ge_out;
    int ge_elements = 0;
    bool ge_json = false;
    g_ec->add_option("--elements", ge_elements, "element count (a multiple of 3)")->required();
    g_ec->add_option("--subsets", ge_subsets, "semicolon-separated triples, e.g. '0,1,2;3,4,5'")
        ->required();
    g_ec->add_option("-o,--out", ge_out)->required();
    g_ec->add_flag("--json", ge_json);

    // --- verify ---
    auto* c_verify = app.add_subcommand("verify", "check a spanner file against its base graph");
    std::string vf_instance, vf_against;
    bool vf_json = false;
    TargetOpts vf_target;
    c_verify->add_option("instance", vf_instance)->required();
    c_verify->add_option("--against", vf_against, "edge list of the claimed spanner")->required();
    add_target_flags(c_verify, vf_target);
    c_verify->add_flag("--json", vf_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(c_apl)) {
        Graph g = load_instance(apl_instance);
        json j = json::object();
        j["instance"] = apl_instance;
        j["nodes"] = g.node_count();
        j["edges"] = g.edge_count();
        j["total_weight"] = g.total_weight();
        const bool connected = is_connected(g);
        j["connected"] = connected;
        if (connected && g.node_count() >= 2) {
            AplValue a = apl(g);
            j["apl"] = a.value().str();
            j["apl_decimal"] = a.value().to_double();
            j["diameter"] = diameter(g).value();
            j["mst_weight"] = spanning_tree_weight(g, minimum_spanning_tree(g));
        }
        emit(j, apl_json);
        return 0;
    }

    if (app.got_subcommand(c_sparsify)) {
        Graph g = load_instance(sp_instance);
        SpannerTarget target = make_target(sp_target);
        const auto start = std::chrono::steady_clock::now();
        SpannerResult r;
        if (sp_algo == "greedy-spanner") {
            r = greedy_spanner(g, resolve_target(g, target).stretch_factor());
        } else if (sp_algo == "removal") {
            r = greedy_removal(g, target);
        } else if (sp_algo == "addition") {
            r = greedy_addition(g, target);
        } else {
            std::optional<Rational> es;
            if (!sp_edge_stretch.empty()) es = Rational::parse(sp_edge_stretch);
            r = greedy_addition_filtered(g, target, es);
        }
        json j = result_report(g, r, elapsed_ms(start));
        write_result_files(g, r, sp_out, sp_dot);
        emit(j, sp_json);
        return 0;
    }

    if (app.got_subcommand(c_exact)) {
        Graph g = load_instance(ex_instance);
        SpannerTarget target = make_target(ex_target);
        ExactParams params;
        params.method = ex_method == "bnb" ? ExactMethod::BranchAndBound : ExactMethod::Enumerate;
        params.objective = ex_objective == "weight" ? Objective::TotalWeight : Objective::EdgeCount;
        params.max_extra_edges = ex_max_extra;
        const auto start = std::chrono::steady_clock::now();
        SpannerResult r = exact_solve(g, target, params);
        json j = result_report(g, r, elapsed_ms(start));
        write_result_files(g, r, ex_out, ex_dot);
        emit(j, ex_json);
        return 0;
    }

    if (app.got_subcommand(c_export)) {
        Graph g = load_instance(mx_instance);
        ResolvedTarget rt = resolve_target(g, make_target(mx_target));
        mip::MipModel model;
        if (mx_formulation == "flow") {
            mip::FlowOptions opt;
            opt.iso_cuts = mx_iso;
            opt.conn_cut = mx_conn;
            model = mip::build_flow_model(g, rt, opt);
        } else {
            mip::PathOptions opt;
            opt.L = mx_L;
            opt.relax_paths = mx_relax;
            opt.leaf_reduction = mx_leaf;
            opt.iso_cuts = mx_iso;
            opt.conn_cut = mx_conn;
            model = mx_formulation == "path" ? mip::build_path_model(g, rt, opt)
                                             : mip::build_weighted_path_model(g, rt, opt);
        }
        std::ofstream out(mx_out);
        if (!out) throw parse_error("cannot open '" + mx_out + "' for writing");
        mip::write_lp(model, out);

        json meta = json::object();
        meta["formulation"] = model.info.formulation;
        meta["nodes"] = model.info.nodes;
        meta["edges"] = model.info.edges;
        meta["total_weight"] = model.info.total_weight;
        meta["L"] = model.info.L;
        meta["bound"] = model.info.bound.str();
        std::ostringstream fp;
        fp << std::hex << model.info.graph_fingerprint;
        meta["graph_fingerprint"] = fp.str();
        meta["x_vars"] = model.info.x_vars;
        meta["u_vars"] = model.info.u_vars;
        meta["y_vars"] = model.info.y_vars;
        meta["f_vars"] = model.info.f_vars;
        meta["declared_vars"] = model.info.declared_vars;
        meta["declared_constraints"] = model.info.declared_constraints;
        meta["forced_leaf_edges"] = model.info.forced_leaf_edges;
        meta["relaxed_paths"] = model.info.relaxed_paths;
        meta["leaf_reduction"] = model.info.leaf_reduction;
        meta["iso_cuts"] = model.info.iso_cuts;
        meta["conn_cut"] = model.info.conn_cut;
        const std::string meta_path = mx_meta.empty() ? mx_out + ".meta.json" : mx_meta;
        std::ofstream meta_out(meta_path);
        if (!meta_out) throw parse_error("cannot open '" + meta_path + "' for writing");
        meta_out << meta.dump(2) << "\n";

        json j = meta;
        j["model"] = mx_out;
        j["meta"] = meta_path;
        emit(j, mx_json);
        return 0;
    }

    if (app.got_subcommand(c_solve)) {
        Graph g = load_instance(sv_instance);
        SpannerTarget target = make_target(sv_target);
        std::string formulation = sv_formulation;
        if (formulation == "auto") formulation = g.unit_weights() ? "path" : "path-weighted";
        if (formulation == "path" && !g.unit_weights())
            throw parse_error("the path formulation needs unit weights; use path-weighted");

        const auto start = std::chrono::steady_clock::now();
        SpannerResult r;
        if (formulation == "flow") {
            if (!g.unit_weights()) throw parse_error("the flow formulation needs unit weights");
            if (sv_cmd == "internal:exact") {
                r = exact_solve(g, target);
            } else {
                ResolvedTarget rt = resolve_target(g, target);
                mip::FlowOptions opt;
                opt.iso_cuts = sv_iso;
                opt.conn_cut = sv_conn;
                mip::MipModel model = mip::build_flow_model(g, rt, opt);
                mip::SolverCommand cmd{sv_cmd, std::chrono::seconds(sv_timeout)};
                std::vector<int> edges = mip::solve_model_external(model, g, cmd);
                FeasibilityReport rep = verify_feasibility(g, edges, target);
                if (!rep.feasible)
                    throw solver_error("solver returned an infeasible edge selection");
                r.edges = edges;
                r.apl = rep.apl;
                r.bound = rep.bound;
                r.input_apl = rt.input_apl;
                r.total_weight = rep.total_weight;
                r.algorithm = "flow-external";
                r.iterations = 1;
                r.optimal = false;
            }
        } else {
            mip::PathOptions opt;
            opt.relax_paths = sv_relax;
            opt.leaf_reduction = sv_leaf;
            opt.iso_cuts = sv_iso;
            opt.conn_cut = sv_conn;
            if (sv_cmd == "internal:exact") {
                mip::InternalExactSolver solver;
                r = mip::iterative_exact(g, target, solver, opt);
            } else {
                mip::CommandSolver solver(
                    mip::SolverCommand{sv_cmd, std::chrono::seconds(sv_timeout)});
                r = mip::iterative_exact(g, target, solver, opt);
            }
        }
        json j = result_report(g, r, elapsed_ms(start));
        write_result_files(g, r, sv_out, sv_dot);
        emit(j, sv_json);
        return 0;
    }

    if (app.got_subcommand(c_gen)) {
        if (c_gen->got_subcommand(g_disk)) {
            disk.weighted = gd_weighted;
            io::UnitDiskInstance inst = io::generate_unit_disk(disk);
            std::vector<std::string> header = {
                "unit-disk seed " + std::to_string(disk.seed),
            };
            io::save_edge_list_file(inst.graph, gd_out, header);
            if (!gd_coords.empty()) {
                std::ofstream out(gd_coords);
                if (!out) throw parse_error("cannot open '" + gd_coords + "' for writing");
                io::save_coordinates(inst.points, out);
            }
            json j = json::object();
            j["nodes"] = inst.graph.node_count();
            j["edges"] = inst.graph.edge_count();
            j["attempts"] = inst.attempts;
            j["out"] = gd_out;
            emit(j, gd_json);
            return 0;
        }
        if (c_gen->got_subcommand(g_ss)) {
            gadgets::SubsetSumInstance inst;
            inst.values = parse_int_list(gs_values);
            inst.target = gs_target;
            gadgets::SubsetSumGadget gadget = gadgets::build_subset_sum_gadget(inst);
            std::vector<std::string> header = {
                "gadget: subset-sum",
                "values: " + gs_values,
                "target: " + std::to_string(gs_target),
                "weight-budget: " + std::to_string(gadget.weight_budget),
                "distance-budget: " + std::to_string(gadget.distance_budget),
            };
            io::save_edge_list_file(gadget.graph, gs_out, header);
            json j = json::object();
            j["nodes"] = gadget.graph.node_count();
            j["edges"] = gadget.graph.edge_count();
            j["weight_budget"] = gadget.weight_budget;
            j["distance_budget"] = gadget.distance_budget;
            j["out"] = gs_out;
            emit(j, gs_json);
            return 0;
        }
        if (ge_elements < 3 || ge_elements % 3 != 0)
            throw parse_error("--elements must be a positive multiple of 3");
        gadgets::EcstsInstance inst;
        inst.t = ge_elements / 3;
        std::stringstream ss(ge_subsets);
        std::string triple;
        while (std::getline(ss, triple, ';')) {
            auto items = parse_int_list(triple);
            if (items.size() != 3) throw parse_error("each subset needs exactly 3 elements");
            inst.subsets.push_back({static_cast<int>(items[0]), static_cast<int>(items[1]),
                                    static_cast<int>(items[2])});
        }
        gadgets::EcstsGadget gadget = gadgets::build_ecsts_gadget(inst);
        std::vector<std::string> header = {
            "gadget: ecsts",
            "elements: " + std::to_string(ge_elements),
            "subsets: " + ge_subsets,
            "pads: " + std::to_string(gadget.pad_count),
            "distance-budget: " + std::to_string(gadget.distance_budget),
            std::string("has-cover: ") + (gadget.canonical_tree.empty() ? "no" : "yes"),
        };
        io::save_edge_list_file(gadget.graph, ge_out, header);
        json j = json::object();
        j["nodes"] = gadget.graph.node_count();
        j["edges"] = gadget.graph.edge_count();
        j["pads"] = gadget.pad_count;
        j["distance_budget"] = gadget.distance_budget;
        j["has_cover"] = !gadget.canonical_tree.empty();
        j["out"] = ge_out;
        emit(j, ge_json);
        return 0;
    }

    if (app.got_subcommand(c_verify)) {
        Graph g = load_instance(vf_instance);
        SpannerTarget target = make_target(vf_target);
        Graph sub = io::load_edge_list_file(vf_against);
        if (sub.node_count() != g.node_count())
            throw parse_error("spanner file declares a different node count than the base graph");
        std::vector<int> edges;
        for (const Edge& e : sub.edges()) {
            const int idx = g.edge_index(e.u, e.v);
            if (idx < 0 || g.edge(idx).weight != e.weight) {
                std::ostringstream msg;
                msg << "edge " << e.u << "-" << e.v << " (weight " << e.weight
                    << ") is not in the base graph";
                throw parse_error(msg.str());
            }
            edges.push_back(idx);
        }
        FeasibilityReport rep = verify_feasibility(g, edges, target);
        json j = json::object();
        j["feasible"] = rep.feasible;
        j["connected"] = rep.connected;
        j["spans_all_nodes"] = rep.spans_all_nodes;
        j["mst_weight_match"] = rep.mst_weight_match;
        j["edges"] = static_cast<int>(edges.size());
        j["total_weight"] = rep.total_weight;
        if (rep.connected) {
            j["apl"] = rep.apl.value().str();
            j["apl_decimal"] = rep.apl.value().to_double();
        }
        j["bound"] = rep.bound.str();
        j["bound_decimal"] = rep.bound.to_double();
        emit(j, vf_json);
        return rep.feasible ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const infeasible_target_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const infeasible_result_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const incomplete_search_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.incumbent())
            std::cerr << "best found: " << e.incumbent()->edge_count() << " edges, apl "
                      << e.incumbent()->apl.value().str() << "\n";
        return 4;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const solver_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
