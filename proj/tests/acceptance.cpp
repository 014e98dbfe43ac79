// Acceptance gate: every criterion prints exactly one PASS/FAIL line and the
// binary exits nonzero when any gating criterion fails. All tolerances and
// time limits are pinned here as named constants.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "mecs/distances.hpp"
#include "mecs/errors.hpp"
#include "mecs/exact.hpp"
#include "mecs/gadgets.hpp"
#include "mecs/graph.hpp"
#include "mecs/greedy.hpp"
#include "mecs/io.hpp"
#include "mecs/mip/build.hpp"
#include "mecs/mip/model.hpp"
#include "mecs/mip/solve.hpp"
#include "mecs/mst.hpp"
#include "mecs/rational.hpp"
#include "mecs/spanner.hpp"
#include "mecs/target.hpp"
#include "support/oracles.hpp"

namespace {

using mecs::Graph;
using mecs::Rational;
using mecs::SpannerTarget;

// Pinned tolerances and limits.
const Rational kKarateAplLow(240, 100);    // APL interval lower end
const Rational kKarateAplHigh(242, 100);   // APL interval upper end
constexpr int kKarateMstEdges = 33;
constexpr int kKarateEdges = 78;
constexpr int kBandPercent = 15;           // +-15% around the reference counts
constexpr int kRemovalReference[3] = {73, 71, 66};
constexpr int kAdditionReference[3] = {72, 67, 67};
constexpr double kLimitKarateApl = 1.0;    // seconds
constexpr double kLimitBand = 30.0;
constexpr double kLimitGadgetLemmas = 10.0;
constexpr double kLimitReduction = 60.0;
constexpr double kLimitOracles = 120.0;
constexpr std::uint64_t kSeedGadgetLemmas = 601;
constexpr std::uint64_t kSeedReduction = 602;
constexpr std::uint64_t kSeedOracles = 603;
constexpr std::uint64_t kSeedLeafed = 604;
constexpr std::uint64_t kSeedLoop = 605;
constexpr std::uint64_t kSeedTruncation = 606;
constexpr std::uint64_t kSeedSizeBounds = 607;

int failures = 0;

struct Failure {
    std::string detail;
};

void fail(const std::string& detail) { throw Failure{detail}; }

void run(const char* name, double limit_seconds, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        body();
    } catch (const Failure& f) {
        ok = false;
        detail = f.detail;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("unexpected exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && limit_seconds > 0 && seconds >= limit_seconds) {
        ok = false;
        std::ostringstream s;
        s << "exceeded the " << limit_seconds << " s limit";
        detail = s.str();
    }
    if (ok) {
        std::printf("PASS %-34s (%.2f s)\n", name, seconds);
    } else {
        std::printf("FAIL %-34s (%.2f s): %s\n", name, seconds, detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

std::string describe(const char* what, std::int64_t got, std::int64_t want) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    return s.str();
}

// Ascending-index combinations of size k out of m; calls fn with each pick.
// fn returns true to stop early.
bool for_each_combination(int m, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    if (k > m) return false;
    while (true) {
        if (fn(comb)) return true;
        int i = k - 1;
        while (i >= 0 && comb[i] == m - k + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

// --- criterion bodies -------------------------------------------------------

void karate_apl_interval() {
    const Graph g = mecs::io::builtin_instance("karate");
    const Rational a = mecs::apl(g).value();
    if (a < kKarateAplLow || a > kKarateAplHigh) {
        std::ostringstream s;
        s << "APL " << a.num() << "/" << a.den() << " outside [2.40, 2.42]";
        fail(s.str());
    }
}

void karate_mst_size() {
    const Graph g = mecs::io::builtin_instance("karate");
    const auto tree = mecs::minimum_spanning_tree(g);
    if (static_cast<int>(tree.size()) != kKarateMstEdges)
        fail(describe("MST edges", static_cast<int>(tree.size()), kKarateMstEdges));
}

void karate_removal_tree_size() {
    const Graph g = mecs::io::builtin_instance("karate");
    const auto target = SpannerTarget::increment(Rational(2));
    const auto result = mecs::greedy_removal(g, target);
    if (result.edge_count() != kKarateMstEdges)
        fail(describe("removal edges at delta 2", result.edge_count(), kKarateMstEdges));
    const auto report = mecs::verify_feasibility(g, result.edges, target);
    if (!report.feasible) fail("removal result at delta 2 is not feasible");
}

void karate_distance_spanner_keeps_all() {
    const Graph g = mecs::io::builtin_instance("karate");
    const Rational mu = mecs::apl(g).value();
    for (int tenth = 1; tenth <= 3; ++tenth) {
        const Rational t = (mu + Rational(tenth, 10)) / mu;  // < 2 on this graph
        const auto result = mecs::greedy_spanner(g, t);
        if (result.edge_count() != kKarateEdges) {
            std::ostringstream s;
            s << "stretch for delta 0." << tenth << " kept " << result.edge_count()
              << " edges, want " << kKarateEdges;
            fail(s.str());
        }
    }
}

void karate_greedy_band() {
    const Graph g = mecs::io::builtin_instance("karate");
    const auto check = [&](const char* label, const mecs::SpannerResult& result,
                           const SpannerTarget& target, int reference) {
        const auto report = mecs::verify_feasibility(g, result.edges, target);
        std::ostringstream s;
        s << label << " with " << result.edge_count() << " edges (reference " << reference
          << ")";
        if (!report.feasible) fail(s.str() + ": infeasible");
        if (!report.mst_weight_match) fail(s.str() + ": no MST-weight spanning tree inside");
        if (result.edge_count() < kKarateMstEdges || result.edge_count() > kKarateEdges)
            fail(s.str() + ": outside [33, 78]");
        if (100 * std::abs(result.edge_count() - reference) > kBandPercent * reference)
            fail(s.str() + ": outside the +-15% band");
    };
    for (int tenth = 1; tenth <= 3; ++tenth) {
        const auto target = SpannerTarget::increment(Rational(tenth, 10));
        std::ostringstream label;
        label << "delta 0." << tenth;
        check(("removal " + label.str()).c_str(), mecs::greedy_removal(g, target), target,
              kRemovalReference[tenth - 1]);
        check(("addition " + label.str()).c_str(), mecs::greedy_addition(g, target), target,
              kAdditionReference[tenth - 1]);
    }
}

void subset_sum_gadget_lemmas() {
    mecs::io::SplitMix64 rng(kSeedGadgetLemmas);
    for (int round = 0; round < 200; ++round) {
        mecs::gadgets::SubsetSumInstance inst;
        const int k = 1 + static_cast<int>(rng.next() % 8);
        for (int i = 0; i < k; ++i)
            inst.values.push_back(1 + static_cast<std::int64_t>(rng.next() % 20));
        const std::int64_t total = std::accumulate(inst.values.begin(), inst.values.end(),
                                                   std::int64_t{0});
        inst.target = 1 + static_cast<std::int64_t>(rng.next() % total);
        const auto gadget = mecs::gadgets::build_subset_sum_gadget(inst);

        std::int64_t spoke_weight = 0;
        for (int e : gadget.spoke_edges) spoke_weight += gadget.graph.edge(e).weight;
        if (spoke_weight != 2 * total)
            fail(describe("spoke weight", spoke_weight, 2 * total));

        const auto spoke_sum = oracle::distance_sum(gadget.graph, &gadget.spoke_edges);
        if (!spoke_sum || *spoke_sum != 4 * k * total)
            fail(describe("spoke distance sum", spoke_sum.value_or(-1), 4 * k * total));

        for (int i = 0; i < k; ++i) {
            const int chord = gadget.chord_edges[i];
            if (gadget.graph.edge(chord).weight != inst.values[i])
                fail(describe("chord weight", gadget.graph.edge(chord).weight,
                              inst.values[i]));
            std::vector<int> with_chord = gadget.spoke_edges;
            with_chord.push_back(chord);
            const auto sum = oracle::distance_sum(gadget.graph, &with_chord);
            if (!sum || *sum != 4 * k * total - inst.values[i])
                fail(describe("distance sum with one chord", sum.value_or(-1),
                              4 * k * total - inst.values[i]));
        }
    }
}

void subset_sum_reduction_equivalence() {
    mecs::io::SplitMix64 rng(kSeedReduction);
    for (int round = 0; round < 50; ++round) {
        mecs::gadgets::SubsetSumInstance inst;
        const int k = 1 + static_cast<int>(rng.next() % 6);
        for (int i = 0; i < k; ++i)
            inst.values.push_back(1 + static_cast<std::int64_t>(rng.next() % 9));
        const std::int64_t total = std::accumulate(inst.values.begin(), inst.values.end(),
                                                   std::int64_t{0});
        inst.target = 1 + static_cast<std::int64_t>(rng.next() % total);
        const auto gadget = mecs::gadgets::build_subset_sum_gadget(inst);
        const auto witness = mecs::exact_feasibility(gadget.graph, gadget.weight_budget,
                                                     gadget.distance_budget);
        const bool expect = oracle::subset_sum(inst.values, inst.target);
        if (witness.feasible != expect) {
            std::ostringstream s;
            s << "round " << round << ": gadget says " << witness.feasible
              << ", subset-sum says " << expect;
            fail(s.str());
        }
    }
}

void cover_tree_distance_identity() {
    using mecs::gadgets::EcstsInstance;
    std::vector<EcstsInstance> instances;
    instances.push_back({1, {{{0, 1, 2}}}});
    instances.push_back({1, {{{0, 1, 2}}, {{0, 1, 2}}}});
    instances.push_back({1, {{{0, 1, 2}}, {{0, 1, 2}}, {{0, 1, 2}}}});
    instances.push_back({2, {{{0, 1, 2}}}});
    instances.push_back({2, {{{0, 1, 2}}, {{3, 4, 5}}}});
    instances.push_back({2, {{{0, 1, 2}}, {{3, 4, 5}}, {{0, 1, 3}}}});

    std::int64_t trees_checked = 0;
    for (const auto& inst : instances) {
        const auto gadget = mecs::gadgets::build_ecsts_gadget(inst);
        const Graph& g = gadget.graph;
        std::vector<char> is_pad(g.node_count(), 0);
        for (int p : gadget.pad_nodes) is_pad[p] = 1;
        std::vector<int> pad_edges;
        std::vector<int> core_edges;
        for (int e = 0; e < g.edge_count(); ++e) {
            const mecs::Edge& edge = g.edge(e);
            (is_pad[edge.u] || is_pad[edge.v] ? pad_edges : core_edges).push_back(e);
        }
        // Degree-1 pads force their edges; a spanning tree is the pads plus a
        // tree over the hub/subset/element core.
        const int core_pick = g.node_count() - 1 - static_cast<int>(pad_edges.size());
        for_each_combination(
            static_cast<int>(core_edges.size()), core_pick,
            [&](const std::vector<int>& comb) {
                std::vector<int> tree = pad_edges;
                for (int i : comb) tree.push_back(core_edges[i]);
                if (!mecs::is_connected(g, mecs::mask_from_indices(g, tree))) return false;
                const auto profile = mecs::gadgets::cover_profile(gadget, tree);
                if (!profile.spoke_complete) return false;
                ++trees_checked;
                if (profile.element_distance_sum != profile.identity_value) {
                    fail(describe("element distance sum vs identity",
                                  profile.element_distance_sum, profile.identity_value));
                }
                return false;
            });
    }
    if (trees_checked == 0) fail("no spanning tree with all hub-subset edges was enumerated");
}

void exact_oracle_agreement() {
    mecs::io::SplitMix64 rng(kSeedOracles);
    for (int round = 0; round < 100; ++round) {
        const int n = 4 + static_cast<int>(rng.next() % 5);
        const int extra = static_cast<int>(rng.next() % (12 - (n - 1) + 1));
        const std::int64_t max_w = (round % 2 == 0) ? 1 : 5;
        const Graph g = oracle::random_connected_graph(rng, n, extra, max_w);

        SpannerTarget target = SpannerTarget::stretch(Rational(5, 4));
        switch (round % 5) {
            case 0: break;
            case 1: target = SpannerTarget::stretch(Rational(3, 2)); break;
            case 2: target = SpannerTarget::stretch(Rational(2)); break;
            case 3: target = SpannerTarget::increment(Rational(1, 2)); break;
            case 4: target = SpannerTarget::increment(Rational(1)); break;
        }

        mecs::ExactParams enumerate;
        enumerate.method = mecs::ExactMethod::Enumerate;
        mecs::ExactParams bnb;
        bnb.method = mecs::ExactMethod::BranchAndBound;
        const auto via_enum = mecs::exact_solve(g, target, enumerate);
        const auto via_bnb = mecs::exact_solve(g, target, bnb);
        if (via_enum.edge_count() != via_bnb.edge_count())
            fail(describe("enumerate vs branch-and-bound", via_enum.edge_count(),
                          via_bnb.edge_count()));

        const auto resolved = mecs::resolve_target(g, target);
        const auto brute = oracle::min_spanner(g, resolved.bound);
        if (!brute || static_cast<int>(brute->edges.size()) != via_enum.edge_count())
            fail(describe("exact vs brute force",
                          via_enum.edge_count(),
                          brute ? static_cast<std::int64_t>(brute->edges.size()) : -1));

        std::vector<mecs::SpannerResult> greedy;
        greedy.push_back(mecs::greedy_spanner(g, resolved.bound / resolved.input_apl));
        greedy.push_back(mecs::greedy_removal(g, target));
        greedy.push_back(mecs::greedy_addition(g, target));
        try {
            greedy.push_back(mecs::greedy_addition_filtered(g, target));
        } catch (const mecs::infeasible_result_error&) {
            // The edge filter may starve the budget; no result to compare then.
        }
        for (const auto& r : greedy) {
            if (r.edge_count() < via_enum.edge_count()) {
                std::ostringstream s;
                s << r.algorithm << " returned " << r.edge_count()
                  << " edges, below the optimum " << via_enum.edge_count();
                fail(s.str());
            }
        }
    }
}

// Honest level-variable assignment for a chosen edge set: u says "within l",
// y says "step over an edge at the smaller endpoint then be within l-1".
struct LevelAssignment {
    std::unordered_map<std::string, Rational> values;

    LevelAssignment(const mecs::mip::MipModel& model, const Graph& g,
                    const std::vector<int>& subset) {
        const auto d = oracle::floyd_warshall(g, &subset);
        std::vector<char> chosen(g.edge_count(), 0);
        for (int e : subset) chosen[e] = 1;
        const auto edge_on = [&](int a, int b) {
            const int idx = g.edge_index(a, b);
            return idx >= 0 && chosen[idx];
        };
        const auto within = [&](int a, int b, long l) { return d[a][b] && *d[a][b] <= l; };
        for (const auto& var : model.variables()) {
            std::vector<long> idx;
            std::size_t pos = var.name.find('_');
            while (pos != std::string::npos) {
                const std::size_t next = var.name.find('_', pos + 1);
                idx.push_back(std::strtol(var.name.c_str() + pos + 1, nullptr, 10));
                pos = next;
            }
            bool value = false;
            if (var.name[0] == 'x') value = edge_on(static_cast<int>(idx[0]),
                                                    static_cast<int>(idx[1]));
            else if (var.name[0] == 'u')
                value = within(static_cast<int>(idx[1]), static_cast<int>(idx[2]), idx[0]);
            else if (var.name[0] == 'y')
                value = edge_on(static_cast<int>(idx[1]), static_cast<int>(idx[2])) &&
                        within(static_cast<int>(idx[2]), static_cast<int>(idx[3]),
                               idx[0] - 1);
            values.emplace(var.name, Rational(value ? 1 : 0));
        }
    }
};

void level_model_soundness() {
    // Every connected graph with at most 10 edges lives on at most 5 labeled
    // nodes once isolated nodes are excluded; enumerate them all.
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        const int m_all = static_cast<int>(slots.size());
        for (std::uint32_t pick = 1; pick < (1u << m_all); ++pick) {
            std::vector<mecs::Edge> edges;
            for (int i = 0; i < m_all; ++i)
                if (pick >> i & 1) edges.push_back({slots[i].first, slots[i].second, 1});
            const Graph g(n, edges);
            if (!oracle::connected(g)) continue;

            const auto resolved =
                mecs::resolve_target(g, SpannerTarget::stretch(Rational(5, 4)));
            mecs::mip::PathOptions options;
            options.L = n - 1;
            const auto model = mecs::mip::build_path_model(g, resolved, options);

            const auto brute = oracle::min_spanner(g, resolved.bound);
            const int m = g.edge_count();
            int best = -1;
            for (int k = n - 1; k <= m && best < 0; ++k) {
                for_each_combination(m, k, [&](const std::vector<int>& comb) {
                    const LevelAssignment honest(model, g, comb);
                    if (!mecs::mip::evaluate_assignment(model, honest.values).feasible)
                        return false;
                    best = k;
                    return true;
                });
            }
            if (!brute || best != static_cast<int>(brute->edges.size()))
                fail(describe("level-model minimum vs oracle", best,
                              brute ? static_cast<std::int64_t>(brute->edges.size()) : -1));
        }
    }

    // Folding leaves: the bookkeeping around degree-1 nodes must rebuild the
    // full ordered distance total exactly.
    mecs::io::SplitMix64 rng(kSeedLeafed);
    for (int round = 0; round < 100; ++round) {
        const int n_core = 2 + static_cast<int>(rng.next() % 6);
        const int extra = static_cast<int>(rng.next() % 4);
        const Graph core = oracle::random_connected_graph(rng, n_core, extra);
        std::vector<mecs::Edge> edges(core.edges().begin(), core.edges().end());
        const int pendants = 1 + static_cast<int>(rng.next() % 4);
        for (int p = 0; p < pendants; ++p) {
            const int host = static_cast<int>(rng.next() % n_core);
            edges.push_back({host, n_core + p, 1});
        }
        const Graph g(n_core + pendants, edges);
        const int n = g.node_count();

        const auto d = oracle::floyd_warshall(g);
        const std::int64_t L = *oracle::diameter(g);
        std::vector<int> hosts;  // nodes kept by the fold
        std::vector<std::int64_t> leaf_count(n, 0);
        for (int v = 0; v < n; ++v)
            if (g.degree(v) != 1) hosts.push_back(v);
        std::vector<char> is_leaf(n, 1);
        for (int v : hosts) is_leaf[v] = 0;
        for (int v : hosts)
            for (int e = 0; e < g.edge_count(); ++e) {
                const mecs::Edge& edge = g.edge(e);
                if (edge.u == v && is_leaf[edge.v]) ++leaf_count[v];
                if (edge.v == v && is_leaf[edge.u]) ++leaf_count[v];
            }

        const auto within = [&](int a, int b, std::int64_t l) {
            return (d[a][b] && *d[a][b] <= l) ? 1 : 0;
        };
        const auto series = [&](int a, int b, std::int64_t first, std::int64_t last,
                                std::int64_t offset) {
            std::int64_t value = first * within(a, b, 1);
            for (std::int64_t l = 2; l <= last; ++l)
                value += (l + offset) * (within(a, b, l) - within(a, b, l - 1));
            return value;
        };

        std::int64_t braced = 0;
        for (int v : hosts) braced += leaf_count[v] + leaf_count[v] * (leaf_count[v] - 1);
        for (std::size_t a = 0; a < hosts.size(); ++a)
            for (std::size_t b = a + 1; b < hosts.size(); ++b) {
                const int i = hosts[a];
                const int j = hosts[b];
                braced += series(i, j, 1, L + 1, 0);
                braced += (leaf_count[i] + leaf_count[j]) * series(i, j, 2, L, 1);
                braced += leaf_count[i] * leaf_count[j] * series(i, j, 3, L - 1, 2);
            }

        const Rational ordered_total = Rational(static_cast<std::int64_t>(n) * (n - 1)) *
                                       mecs::apl(g).value();
        if (Rational(2 * braced) != ordered_total)
            fail(describe("folded distance total (ordered)", 2 * braced,
                          ordered_total.num() / ordered_total.den()));
    }
}

struct RecordingSolver final : mecs::mip::PathSolver {
    mecs::mip::InternalExactSolver inner;
    std::vector<int> levels;

    std::vector<int> solve(const Graph& g, const mecs::ResolvedTarget& target, int L,
                           const mecs::mip::PathOptions& options) override {
        levels.push_back(L);
        return inner.solve(g, target, L, options);
    }
    bool exact() const override { return inner.exact(); }
};

void horizon_refinement_loop() {
    {
        const Graph k3(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
        RecordingSolver solver;
        const auto result = mecs::mip::iterative_exact(
            k3, SpannerTarget::absolute(Rational(4, 3)), solver, {});
        if (result.iterations != 2)
            fail(describe("triangle iterations", result.iterations, 2));
        if (result.edge_count() != 2)
            fail(describe("triangle edges", result.edge_count(), 2));
    }

    mecs::io::SplitMix64 rng(kSeedLoop);
    for (int round = 0; round < 30; ++round) {
        const int n = 3 + static_cast<int>(rng.next() % 5);
        const int extra = static_cast<int>(rng.next() % (12 - (n - 1) + 1));
        const Graph g = oracle::random_connected_graph(rng, n, extra);
        SpannerTarget target = SpannerTarget::stretch(Rational(3, 2));
        if (round % 3 == 1) target = SpannerTarget::increment(Rational(1));
        if (round % 3 == 2) target = SpannerTarget::stretch(Rational(2));

        RecordingSolver solver;
        const auto result = mecs::mip::iterative_exact(g, target, solver, {});
        const auto sub_diam = mecs::diameter_from_matrix(
            mecs::all_pairs_distances(g, mecs::mask_from_indices(g, result.edges)));
        if (!sub_diam.is_finite() || sub_diam.value() > solver.levels.back())
            fail(describe("final diameter vs final horizon",
                          sub_diam.is_finite() ? sub_diam.value() : -1,
                          solver.levels.back()));
        if (result.iterations != static_cast<int>(solver.levels.size()) ||
            result.iterations > n - 1)
            fail(describe("iteration count vs node bound", result.iterations, n - 1));
    }
}

void truncation_bound() {
    mecs::io::SplitMix64 rng(kSeedTruncation);
    for (int round = 0; round < 200; ++round) {
        const int n = 3 + static_cast<int>(rng.next() % 8);
        const int extra = static_cast<int>(rng.next() % (2 * n));
        const std::int64_t max_w = (round % 3 == 0) ? 4 : 1;
        const Graph g = oracle::random_connected_graph(rng, n, extra, max_w);
        const std::int64_t diam = mecs::diameter(g).value();
        const Rational mu = mecs::apl(g).value();

        std::vector<std::int64_t> horizons = {1, diam, diam + 1 +
                                              static_cast<std::int64_t>(rng.next() % 3)};
        if (diam > 1) horizons.push_back(diam - 1);
        for (std::int64_t L : horizons) {
            const Rational truncated = mecs::truncated_apl(g, L);
            if (truncated > mu) fail("truncated APL above the true APL");
            if ((truncated == mu) != (L >= diam)) {
                std::ostringstream s;
                s << "equality at L=" << L << " disagrees with diameter " << diam;
                fail(s.str());
            }
        }
    }
}

// Smallest c >= 1 with c^t >= n, in exact integer arithmetic.
std::int64_t ceil_root(std::int64_t n, int t) {
    std::int64_t c = 1;
    while (true) {
        std::int64_t power = 1;
        for (int i = 0; i < t; ++i) power *= c;
        if (power >= n) return c;
        ++c;
    }
}

void spanner_size_weight_bounds() {
    mecs::io::SplitMix64 rng(kSeedSizeBounds);
    for (int round = 0; round < 100; ++round) {
        const int n = 5 + static_cast<int>(rng.next() % 26);
        const int extra = static_cast<int>(rng.next() % (2 * n));
        const Graph g = oracle::random_connected_graph(rng, n, extra, 10);
        const std::int64_t mst_weight =
            mecs::spanning_tree_weight(g, mecs::minimum_spanning_tree(g));
        for (int t = 1; t <= 3; ++t) {
            const auto result = mecs::greedy_spanner(g, Rational(2 * t + 1));
            const std::int64_t size_cap = static_cast<std::int64_t>(n) * ceil_root(n, t);
            if (result.edge_count() >= size_cap)
                fail(describe("spanner size cap", result.edge_count(), size_cap));
            const Rational weight_cap = Rational(mst_weight) * Rational(2 * t + n, 2 * t);
            if (Rational(result.total_weight) >= weight_cap) {
                std::ostringstream s;
                s << "spanner weight " << result.total_weight << " not below "
                  << weight_cap.num() << "/" << weight_cap.den();
                fail(s.str());
            }
        }
    }
}

// Optional, non-gating: reproduce the karate level-model optima with a real
// MIP solver when one is configured through MECS_SOLVER_CMD.
void external_solver_optima() {
    const char* command = std::getenv("MECS_SOLVER_CMD");
    if (!command) {
        std::printf("INFO external-solver-optima: skipped (MECS_SOLVER_CMD unset)\n");
        return;
    }
    const Graph g = mecs::io::builtin_instance("karate");
    const int expected[3] = {48, 40, 37};
    for (int tenth = 1; tenth <= 3; ++tenth) {
        try {
            mecs::mip::CommandSolver solver({command, std::chrono::seconds(300)});
            const auto result = mecs::mip::iterative_exact(
                g, SpannerTarget::increment(Rational(tenth, 10)), solver, {});
            std::printf("INFO external-solver-optima delta 0.%d: %s (%d edges, want %d)\n",
                        tenth,
                        result.edge_count() == expected[tenth - 1] ? "match" : "MISMATCH",
                        result.edge_count(), expected[tenth - 1]);
        } catch (const std::exception& e) {
            std::printf("INFO external-solver-optima delta 0.%d: error: %s\n", tenth,
                        e.what());
        }
    }
}

}  // namespace

int main() {
    run("karate-apl-interval", kLimitKarateApl, karate_apl_interval);
    run("karate-mst-size", 0, karate_mst_size);
    run("karate-removal-tree-size", 0, karate_removal_tree_size);
    run("karate-distance-spanner-keeps-all", 0, karate_distance_spanner_keeps_all);
    run("karate-greedy-band", kLimitBand, karate_greedy_band);
    run("subset-sum-gadget-lemmas", kLimitGadgetLemmas, subset_sum_gadget_lemmas);
    run("subset-sum-reduction-equivalence", kLimitReduction, subset_sum_reduction_equivalence);
    run("cover-tree-distance-identity", 0, cover_tree_distance_identity);
    run("exact-oracle-agreement", kLimitOracles, exact_oracle_agreement);
    run("level-model-soundness", 0, level_model_soundness);
    run("horizon-refinement-loop", 0, horizon_refinement_loop);
    run("truncation-bound", 0, truncation_bound);
    run("spanner-size-weight-bounds", 0, spanner_size_weight_bounds);
    external_solver_optima();
    if (failures == 0) {
        std::printf("acceptance: all 13 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
