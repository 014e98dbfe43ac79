#include "mecs/mip/build.hpp"

#include <algorithm>
#include <stdexcept>

#include "mecs/distances.hpp"

namespace mecs::mip {

namespace {

std::uint64_t fingerprint(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    const auto mix = [&h](std::uint64_t v) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (v >> (8 * byte)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(g.node_count()));
    for (const Edge& e : g.edges()) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
        mix(static_cast<std::uint64_t>(e.weight));
    }
    return h;
}

Rational binary_lower() { return Rational(0); }
Rational binary_upper() { return Rational(1); }

void require_unit_weights(const Graph& g, const char* formulation) {
    if (!g.unit_weights()) {
        throw std::invalid_argument(std::string(formulation) +
                                    " formulation requires unit weights");
    }
}

// Degree-1 nodes folded into the budget constants. A node only counts as a
// leaf when its single neighbor keeps degree >= 2, so a lone edge is never
// folded from both sides.
struct LeafFold {
    std::vector<char> keep;
    std::vector<std::int64_t> hosted;  // leaves attached to each kept node
    int leaf_count = 0;
};

LeafFold fold_leaves(const Graph& g, bool enabled) {
    LeafFold fold;
    fold.keep.assign(g.node_count(), 1);
    fold.hosted.assign(g.node_count(), 0);
    if (!enabled) return fold;
    for (int i = 0; i < g.node_count(); ++i) {
        if (g.degree(i) != 1) continue;
        const int host = g.arcs(i)[0].to;
        if (g.degree(host) < 2) continue;
        fold.keep[i] = 0;
        fold.hosted[host] += 1;
        fold.leaf_count += 1;
    }
    return fold;
}

void add_shared_cuts(MipModel& model, const Graph& g, const std::vector<int>& x_of_edge,
                     const LeafFold& fold, bool iso_cuts, bool conn_cut,
                     const CutPools& pools) {
    if (iso_cuts) {
        for (int i = 0; i < g.node_count(); ++i) {
            if (!fold.keep[i]) continue;
            Constraint c;
            c.name = "deg_" + std::to_string(i);
            for (const Graph::Arc& arc : g.arcs(i)) {
                if (x_of_edge[arc.edge] >= 0) c.terms.push_back({x_of_edge[arc.edge], Rational(1)});
            }
            if (c.terms.empty()) continue;
            c.sense = Sense::GreaterEq;
            c.rhs = Rational(1);
            model.add_constraint(std::move(c));
        }
    }
    if (conn_cut) {
        Constraint c;
        c.name = "conn";
        std::int64_t kept_nodes = 0;
        for (char k : fold.keep) kept_nodes += k;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (x_of_edge[e] >= 0) c.terms.push_back({x_of_edge[e], Rational(1)});
        }
        c.sense = Sense::GreaterEq;
        c.rhs = Rational(kept_nodes - 1);
        model.add_constraint(std::move(c));
    }
    const auto add_pool = [&](const std::vector<std::vector<int>>& pool, const char* prefix) {
        for (std::size_t s = 0; s < pool.size(); ++s) {
            Constraint c;
            c.name = std::string(prefix) + "_" + std::to_string(s);
            bool satisfied_by_forced_edge = false;
            for (int e : pool[s]) {
                if (e < 0 || e >= g.edge_count()) {
                    throw std::invalid_argument("cut pool references unknown edge");
                }
                if (x_of_edge[e] < 0) {
                    satisfied_by_forced_edge = true;  // leaf edge, always chosen
                    break;
                }
                c.terms.push_back({x_of_edge[e], Rational(1)});
            }
            if (satisfied_by_forced_edge) continue;
            c.sense = Sense::GreaterEq;
            c.rhs = Rational(1);
            model.add_constraint(std::move(c));
        }
    };
    add_pool(pools.connectivity, "cut_conn");
    add_pool(pools.apl, "cut_apl");
}

void finish_info(MipModel& model) {
    model.info.declared_vars = static_cast<std::int64_t>(model.variables().size());
    model.info.declared_constraints = static_cast<std::int64_t>(model.constraints().size());
}

}  // namespace

MipModel build_flow_model(const Graph& g, const ResolvedTarget& target,
                          const FlowOptions& options) {
    require_unit_weights(g, "flow");
    const int n = g.node_count();
    const int m = g.edge_count();
    if (n < 2) throw std::invalid_argument("flow model needs at least 2 nodes");

    MipModel model;
    model.info.formulation = "flow";
    model.info.nodes = n;
    model.info.edges = m;
    model.info.total_weight = g.total_weight();
    model.info.bound = target.bound;
    model.info.graph_fingerprint = fingerprint(g);
    model.info.iso_cuts = options.iso_cuts;
    model.info.conn_cut = options.conn_cut;

    std::vector<int> x_of_edge(m, -1);
    for (int e = 0; e < m; ++e) {
        x_of_edge[e] = model.add_variable(x_name(g.edge(e).u, g.edge(e).v), VarKind::Binary,
                                          binary_lower(), binary_upper());
    }

    // f[s][t][arc] with arcs enumerated edge-by-edge, forward then reverse.
    const auto arc_var = [&](int s, int t, int from, int to) {
        return model.variable_index(f_name(s, t, from, to));
    };
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            for (int e = 0; e < m; ++e) {
                model.add_variable(f_name(s, t, g.edge(e).u, g.edge(e).v),
                                   VarKind::Continuous, Rational(0), Rational(1));
                model.add_variable(f_name(s, t, g.edge(e).v, g.edge(e).u),
                                   VarKind::Continuous, Rational(0), Rational(1));
            }
        }
    }

    const Rational bound = target.bound;
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    {
        // Total routed volume bounds the distance sum: scaled through by the
        // budget's denominator so every coefficient stays integral.
        Constraint c;
        c.name = "apl_budget";
        for (int s = 0; s < n; ++s) {
            for (int t = s + 1; t < n; ++t) {
                for (int e = 0; e < m; ++e) {
                    c.terms.push_back({arc_var(s, t, g.edge(e).u, g.edge(e).v),
                                       Rational(bound.den())});
                    c.terms.push_back({arc_var(s, t, g.edge(e).v, g.edge(e).u),
                                       Rational(bound.den())});
                }
            }
        }
        c.sense = Sense::LessEq;
        c.rhs = Rational(bound.num()) * Rational(pairs);
        model.add_constraint(std::move(c));
    }

    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            Constraint src;
            src.name = "flow_src_" + std::to_string(s) + "_" + std::to_string(t);
            for (const Graph::Arc& arc : g.arcs(s)) {
                src.terms.push_back({arc_var(s, t, s, arc.to), Rational(1)});
                src.terms.push_back({arc_var(s, t, arc.to, s), Rational(-1)});
            }
            src.sense = Sense::GreaterEq;
            src.rhs = Rational(1);
            model.add_constraint(std::move(src));

            Constraint snk;
            snk.name = "flow_snk_" + std::to_string(s) + "_" + std::to_string(t);
            for (const Graph::Arc& arc : g.arcs(t)) {
                snk.terms.push_back({arc_var(s, t, arc.to, t), Rational(1)});
                snk.terms.push_back({arc_var(s, t, t, arc.to), Rational(-1)});
            }
            snk.sense = Sense::GreaterEq;
            snk.rhs = Rational(1);
            model.add_constraint(std::move(snk));

            for (int i = 0; i < n; ++i) {
                if (i == s || i == t) continue;
                Constraint bal;
                bal.name = "flow_bal_" + std::to_string(s) + "_" + std::to_string(t) + "_" +
                           std::to_string(i);
                for (const Graph::Arc& arc : g.arcs(i)) {
                    bal.terms.push_back({arc_var(s, t, i, arc.to), Rational(1)});
                    bal.terms.push_back({arc_var(s, t, arc.to, i), Rational(-1)});
                }
                bal.sense = Sense::Equal;
                bal.rhs = Rational(0);
                model.add_constraint(std::move(bal));
            }

            for (int e = 0; e < m; ++e) {
                const Edge& edge = g.edge(e);
                for (const auto& [from, to] : {std::pair{edge.u, edge.v}, {edge.v, edge.u}}) {
                    Constraint cap;
                    cap.name = "cap_" + std::to_string(s) + "_" + std::to_string(t) + "_" +
                               std::to_string(from) + "_" + std::to_string(to);
                    cap.terms.push_back({arc_var(s, t, from, to), Rational(1)});
                    cap.terms.push_back({x_of_edge[e], Rational(-1)});
                    cap.sense = Sense::LessEq;
                    cap.rhs = Rational(0);
                    model.add_constraint(std::move(cap));
                }
            }
        }
    }

    std::vector<Term> objective;
    for (int e = 0; e < m; ++e) objective.push_back({x_of_edge[e], Rational(1)});
    model.set_objective(std::move(objective));

    add_shared_cuts(model, g, x_of_edge, fold_leaves(g, false), options.iso_cuts,
                    options.conn_cut, options.pools);

    model.info.x_vars = m;
    model.info.f_vars = static_cast<std::int64_t>(n) * (n - 1) * m;
    finish_info(model);
    return model;
}

namespace {

// Shared scaffolding for the two level formulations.
struct PathBuild {
    MipModel model;
    std::vector<int> x_of_edge;          // -1 for folded leaf edges
    std::vector<std::vector<int>> u_of;  // [level-1][pair] variable index, -1 unused
    int n = 0;
    int L = 0;
    std::vector<char> keep;

    int pair_id(int i, int j) const { return i * n + j; }  // i < j
    int u_var(int level, int i, int j) const {
        if (i > j) std::swap(i, j);
        return u_of[level - 1][pair_id(i, j)];
    }
};

// Telescoped per-pair coefficient series for the two leaf families:
// host-leaf pairs gain d+1, leaf-leaf pairs d+2.
std::vector<std::int64_t> host_leaf_series(int L) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(L) + 1, 0);
    c[1] += 2;
    for (int l = 2; l <= L; ++l) {
        c[l] += l + 1;
        c[l - 1] -= l + 1;
    }
    c.erase(c.begin());
    return c;
}

std::vector<std::int64_t> leaf_leaf_series(int L) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(L) + 1, 0);
    c[1] += 3;
    for (int l = 2; l <= L - 1; ++l) {
        c[l] += l + 2;
        c[l - 1] -= l + 2;
    }
    c.erase(c.begin());
    return c;
}

}  // namespace

MipModel build_path_model(const Graph& g, const ResolvedTarget& target,
                          const PathOptions& options) {
    require_unit_weights(g, "path");
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("path model needs at least 2 nodes");
    if (options.L == 0 || options.L < -1) throw std::invalid_argument("bad path horizon");

    const LeafFold fold = fold_leaves(g, options.leaf_reduction);
    std::vector<int> kept;
    for (int i = 0; i < n; ++i) {
        if (fold.keep[i]) kept.push_back(i);
    }
    const int kept_count = static_cast<int>(kept.size());

    // Reduced adjacency: neighbors that survived the fold.
    std::vector<std::vector<int>> nbr(n);
    std::vector<int> x_of_edge(g.edge_count(), -1);
    std::vector<int> reduced_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (!fold.keep[edge.u] || !fold.keep[edge.v]) continue;
        reduced_edges.push_back(e);
        nbr[edge.u].push_back(edge.v);
        nbr[edge.v].push_back(edge.u);
    }
    for (auto& list : nbr) std::sort(list.begin(), list.end());

    int L = options.L;
    if (L < 0) {
        const Distance diam = diameter(g);
        L = static_cast<int>(diam.value()) + (options.leaf_reduction ? 1 : 0);
        L = std::max(L, 1);
    }

    PathBuild b;
    b.n = n;
    b.L = L;
    b.keep = fold.keep;
    b.x_of_edge = x_of_edge;
    MipModel& model = b.model;

    model.info.formulation = "path";
    model.info.nodes = n;
    model.info.edges = g.edge_count();
    model.info.total_weight = g.total_weight();
    model.info.L = L;
    model.info.bound = target.bound;
    model.info.graph_fingerprint = fingerprint(g);
    model.info.relaxed_paths = options.relax_paths;
    model.info.leaf_reduction = options.leaf_reduction;
    model.info.iso_cuts = options.iso_cuts;
    model.info.conn_cut = options.conn_cut;
    model.info.forced_leaf_edges = fold.leaf_count;

    const VarKind lift_kind = options.relax_paths ? VarKind::Continuous : VarKind::Binary;

    for (int e : reduced_edges) {
        b.x_of_edge[e] = model.add_variable(x_name(g.edge(e).u, g.edge(e).v), VarKind::Binary,
                                            binary_lower(), binary_upper());
    }
    b.u_of.assign(L, std::vector<int>(static_cast<std::size_t>(n) * n, -1));
    for (int l = 1; l <= L; ++l) {
        for (int a = 0; a < kept_count; ++a) {
            for (int c = a + 1; c < kept_count; ++c) {
                const int i = kept[a], j = kept[c];
                b.u_of[l - 1][b.pair_id(i, j)] =
                    model.add_variable(u_name(l, i, j), lift_kind, Rational(0), Rational(1));
            }
        }
    }
    // y^l_ikj: pair (i, j) reached by stepping from i to its neighbor k.
    for (int l = 2; l <= L; ++l) {
        for (int a = 0; a < kept_count; ++a) {
            for (int c = a + 1; c < kept_count; ++c) {
                const int i = kept[a], j = kept[c];
                for (int k : nbr[i]) {
                    if (k == j) continue;
                    model.add_variable(y_name(l, i, k, j), lift_kind, Rational(0), Rational(1));
                }
            }
        }
    }

    const Rational bound = target.bound;
    const std::int64_t q = bound.den();
    const std::int64_t full_pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const std::int64_t kept_pairs =
        static_cast<std::int64_t>(kept_count) * (kept_count - 1) / 2;

    {
        const auto c_host = host_leaf_series(L);
        const auto c_leaf = leaf_leaf_series(L);
        std::int64_t constant = (static_cast<std::int64_t>(L) + 1) * kept_pairs;
        for (int i = 0; i < n; ++i) {
            constant += fold.hosted[i] + fold.hosted[i] * (fold.hosted[i] - 1);
        }
        Constraint c;
        c.name = "apl_budget";
        for (int a = 0; a < kept_count; ++a) {
            for (int cc = a + 1; cc < kept_count; ++cc) {
                const int i = kept[a], j = kept[cc];
                const std::int64_t vi = fold.hosted[i], vj = fold.hosted[j];
                for (int l = 1; l <= L; ++l) {
                    const std::int64_t coeff =
                        -1 + (vi + vj) * c_host[l - 1] + vi * vj * c_leaf[l - 1];
                    if (coeff == 0) continue;
                    c.terms.push_back({b.u_var(l, i, j), Rational(coeff * q)});
                }
            }
        }
        c.sense = Sense::LessEq;
        c.rhs = Rational(bound.num()) * Rational(full_pairs) - Rational(q) * Rational(constant);
        model.add_constraint(std::move(c));
    }

    for (int a = 0; a < kept_count; ++a) {
        for (int c = a + 1; c < kept_count; ++c) {
            const int i = kept[a], j = kept[c];
            const int x = g.edge_index(i, j) >= 0 ? b.x_of_edge[g.edge_index(i, j)] : -1;
            Constraint lvl1;
            lvl1.terms.push_back({b.u_var(1, i, j), Rational(1)});
            if (x >= 0) {
                lvl1.name = "lvl1_on_" + std::to_string(i) + "_" + std::to_string(j);
                lvl1.terms.push_back({x, Rational(-1)});
            } else {
                lvl1.name = "lvl1_off_" + std::to_string(i) + "_" + std::to_string(j);
            }
            lvl1.sense = Sense::Equal;
            lvl1.rhs = Rational(0);
            model.add_constraint(std::move(lvl1));
        }
    }

    if (!options.relax_paths) {
        for (int l = 1; l < L; ++l) {
            for (int a = 0; a < kept_count; ++a) {
                for (int c = a + 1; c < kept_count; ++c) {
                    const int i = kept[a], j = kept[c];
                    Constraint mono;
                    mono.name = "mono_" + std::to_string(l) + "_" + std::to_string(i) + "_" +
                                std::to_string(j);
                    mono.terms.push_back({b.u_var(l, i, j), Rational(1)});
                    mono.terms.push_back({b.u_var(l + 1, i, j), Rational(-1)});
                    mono.sense = Sense::LessEq;
                    mono.rhs = Rational(0);
                    model.add_constraint(std::move(mono));
                }
            }
        }
    }

    for (int l = 2; l <= L; ++l) {
        for (int a = 0; a < kept_count; ++a) {
            for (int c = a + 1; c < kept_count; ++c) {
                const int i = kept[a], j = kept[c];
                const int eidx = g.edge_index(i, j);
                const int x = eidx >= 0 ? b.x_of_edge[eidx] : -1;

                Constraint ub;
                ub.name = "ub_" + std::to_string(l) + "_" + std::to_string(i) + "_" +
                          std::to_string(j);
                ub.terms.push_back({b.u_var(l, i, j), Rational(1)});
                if (x >= 0) ub.terms.push_back({x, Rational(-1)});
                for (int k : nbr[i]) {
                    if (k == j) continue;
                    ub.terms.push_back({model.variable_index(y_name(l, i, k, j)), Rational(-1)});
                }
                ub.sense = Sense::LessEq;
                ub.rhs = Rational(0);
                model.add_constraint(std::move(ub));

                if (!options.relax_paths) {
                    const std::int64_t deg = static_cast<std::int64_t>(nbr[i].size());
                    if (deg > 0 || x >= 0) {
                        // Averaged lower bound, scaled by the degree so the
                        // coefficients stay integral.
                        Constraint lb;
                        lb.name = "lb_" + std::to_string(l) + "_" + std::to_string(i) + "_" +
                                  std::to_string(j);
                        lb.terms.push_back({b.u_var(l, i, j), Rational(deg)});
                        if (x >= 0) lb.terms.push_back({x, Rational(-1)});
                        for (int k : nbr[i]) {
                            if (k == j) continue;
                            lb.terms.push_back(
                                {model.variable_index(y_name(l, i, k, j)), Rational(-1)});
                        }
                        lb.sense = Sense::GreaterEq;
                        lb.rhs = Rational(0);
                        model.add_constraint(std::move(lb));
                    }
                }

                for (int k : nbr[i]) {
                    if (k == j) continue;
                    const int y = model.variable_index(y_name(l, i, k, j));
                    const int x_ik = b.x_of_edge[g.edge_index(i, k)];
                    const std::string suffix = std::to_string(l) + "_" + std::to_string(i) +
                                               "_" + std::to_string(k) + "_" + std::to_string(j);

                    Constraint cap1;
                    cap1.name = "ycap1_" + suffix;
                    cap1.terms.push_back({y, Rational(1)});
                    cap1.terms.push_back({x_ik, Rational(-1)});
                    cap1.sense = Sense::LessEq;
                    cap1.rhs = Rational(0);
                    model.add_constraint(std::move(cap1));

                    Constraint cap2;
                    cap2.name = "ycap2_" + suffix;
                    cap2.terms.push_back({y, Rational(1)});
                    cap2.terms.push_back(
                        {b.u_var(l - 1, std::min(k, j), std::max(k, j)), Rational(-1)});
                    cap2.sense = Sense::LessEq;
                    cap2.rhs = Rational(0);
                    model.add_constraint(std::move(cap2));

                    if (!options.relax_paths) {
                        Constraint ylb;
                        ylb.name = "ylb_" + suffix;
                        ylb.terms.push_back({y, Rational(1)});
                        ylb.terms.push_back({x_ik, Rational(-1)});
                        ylb.terms.push_back(
                            {b.u_var(l - 1, std::min(k, j), std::max(k, j)), Rational(-1)});
                        ylb.sense = Sense::GreaterEq;
                        ylb.rhs = Rational(-1);
                        model.add_constraint(std::move(ylb));
                    }
                }
            }
        }
    }

    std::vector<Term> objective;
    for (int e : reduced_edges) objective.push_back({b.x_of_edge[e], Rational(1)});
    model.set_objective(std::move(objective), Rational(fold.leaf_count));

    add_shared_cuts(model, g, b.x_of_edge, fold, options.iso_cuts, options.conn_cut,
                    options.pools);

    model.info.x_vars = static_cast<std::int64_t>(reduced_edges.size());
    model.info.u_vars = static_cast<std::int64_t>(L) * kept_pairs;
    model.info.y_vars = static_cast<std::int64_t>(L) * kept_count *
                        static_cast<std::int64_t>(reduced_edges.size());
    finish_info(model);
    return model;
}

MipModel build_weighted_path_model(const Graph& g, const ResolvedTarget& target,
                                   const PathOptions& options) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("path model needs at least 2 nodes");
    if (options.L == 0 || options.L < -1) throw std::invalid_argument("bad path horizon");
    if (options.leaf_reduction) {
        throw std::invalid_argument("leaf reduction is defined only for the unit-weight model");
    }

    int L = options.L;
    if (L < 0) {
        L = static_cast<int>(diameter(g).value());
        L = std::max(L, 1);
    }

    MipModel model;
    model.info.formulation = "path-weighted";
    model.info.nodes = n;
    model.info.edges = g.edge_count();
    model.info.total_weight = g.total_weight();
    model.info.L = L;
    model.info.bound = target.bound;
    model.info.graph_fingerprint = fingerprint(g);
    model.info.relaxed_paths = options.relax_paths;
    model.info.iso_cuts = options.iso_cuts;
    model.info.conn_cut = options.conn_cut;

    const VarKind lift_kind = options.relax_paths ? VarKind::Continuous : VarKind::Binary;

    std::vector<int> x_of_edge(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        x_of_edge[e] = model.add_variable(x_name(g.edge(e).u, g.edge(e).v), VarKind::Binary,
                                          binary_lower(), binary_upper());
    }
    const auto u_var = [&](int l, int i, int j) {
        if (i > j) std::swap(i, j);
        return model.variable_index(u_name(l, i, j));
    };
    for (int l = 1; l <= L; ++l) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                model.add_variable(u_name(l, i, j), lift_kind, Rational(0), Rational(1));
            }
        }
    }
    // Step through neighbor k only when the stepping edge fits under the
    // level: w_ik <= l-1 (otherwise the variable is identically zero).
    const auto step_allowed = [&](int l, int i, int k) {
        return g.edge(g.edge_index(i, k)).weight <= l - 1;
    };
    for (int l = 2; l <= L; ++l) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (const Graph::Arc& arc : g.arcs(i)) {
                    if (arc.to == j || !step_allowed(l, i, arc.to)) continue;
                    model.add_variable(y_name(l, i, arc.to, j), lift_kind, Rational(0),
                                       Rational(1));
                }
            }
        }
    }

    const Rational bound = target.bound;
    const std::int64_t q = bound.den();
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    {
        Constraint c;
        c.name = "apl_budget";
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int l = 1; l <= L; ++l) {
                    c.terms.push_back({u_var(l, i, j), Rational(-q)});
                }
            }
        }
        c.sense = Sense::LessEq;
        c.rhs = Rational(bound.num()) * Rational(pairs) -
                Rational(q) * Rational((static_cast<std::int64_t>(L) + 1) * pairs);
        model.add_constraint(std::move(c));
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int eidx = g.edge_index(i, j);
            const bool unit_edge = eidx >= 0 && g.edge(eidx).weight == 1;
            Constraint lvl1;
            lvl1.terms.push_back({u_var(1, i, j), Rational(1)});
            if (unit_edge) {
                lvl1.name = "lvl1_on_" + std::to_string(i) + "_" + std::to_string(j);
                lvl1.terms.push_back({x_of_edge[eidx], Rational(-1)});
            } else {
                lvl1.name = "lvl1_off_" + std::to_string(i) + "_" + std::to_string(j);
            }
            lvl1.sense = Sense::Equal;
            lvl1.rhs = Rational(0);
            model.add_constraint(std::move(lvl1));
        }
    }

    if (!options.relax_paths) {
        for (int l = 1; l < L; ++l) {
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    Constraint mono;
                    mono.name = "mono_" + std::to_string(l) + "_" + std::to_string(i) + "_" +
                                std::to_string(j);
                    mono.terms.push_back({u_var(l, i, j), Rational(1)});
                    mono.terms.push_back({u_var(l + 1, i, j), Rational(-1)});
                    mono.sense = Sense::LessEq;
                    mono.rhs = Rational(0);
                    model.add_constraint(std::move(mono));
                }
            }
        }
    }

    for (int l = 2; l <= L; ++l) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const int eidx = g.edge_index(i, j);

                Constraint ub;
                ub.name = "ub_" + std::to_string(l) + "_" + std::to_string(i) + "_" +
                          std::to_string(j);
                ub.terms.push_back({u_var(l, i, j), Rational(1)});
                if (eidx >= 0 && g.edge(eidx).weight <= l) {
                    ub.terms.push_back({x_of_edge[eidx], Rational(-1)});
                }
                for (const Graph::Arc& arc : g.arcs(i)) {
                    if (arc.to == j || !step_allowed(l, i, arc.to)) continue;
                    ub.terms.push_back(
                        {model.variable_index(y_name(l, i, arc.to, j)), Rational(-1)});
                }
                ub.sense = Sense::LessEq;
                ub.rhs = Rational(0);
                model.add_constraint(std::move(ub));

                for (const Graph::Arc& arc : g.arcs(i)) {
                    const int k = arc.to;
                    if (k == j || !step_allowed(l, i, k)) continue;
                    const int y = model.variable_index(y_name(l, i, k, j));
                    const std::string suffix = std::to_string(l) + "_" + std::to_string(i) +
                                               "_" + std::to_string(k) + "_" + std::to_string(j);

                    Constraint cap1;
                    cap1.name = "ycap1_" + suffix;
                    cap1.terms.push_back({y, Rational(1)});
                    cap1.terms.push_back({x_of_edge[arc.edge], Rational(-1)});
                    cap1.sense = Sense::LessEq;
                    cap1.rhs = Rational(0);
                    model.add_constraint(std::move(cap1));

                    Constraint cap2;
                    cap2.name = "ycap2_" + suffix;
                    cap2.terms.push_back({y, Rational(1)});
                    cap2.terms.push_back(
                        {u_var(static_cast<int>(l - arc.weight), std::min(k, j),
                               std::max(k, j)),
                         Rational(-1)});
                    cap2.sense = Sense::LessEq;
                    cap2.rhs = Rational(0);
                    model.add_constraint(std::move(cap2));
                }
            }
        }
    }

    std::vector<Term> objective;
    for (int e = 0; e < g.edge_count(); ++e) objective.push_back({x_of_edge[e], Rational(1)});
    model.set_objective(std::move(objective));

    add_shared_cuts(model, g, x_of_edge, fold_leaves(g, false), options.iso_cuts,
                    options.conn_cut, options.pools);

    model.info.x_vars = g.edge_count();
    model.info.u_vars = static_cast<std::int64_t>(L) * pairs;
    model.info.y_vars = static_cast<std::int64_t>(L) * n * g.edge_count();
    finish_info(model);
    return model;
}

}  // namespace mecs::mip
