#include "mecs/mip/solve.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <thread>

#include "mecs/errors.hpp"
#include "mecs/mip/lp.hpp"

namespace mecs::mip {

namespace {

namespace fs = std::filesystem;

constexpr double kBinaryTolerance = 1e-6;

std::string substitute(std::string text, const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(key, pos)) != std::string::npos) {
        text.replace(pos, key.size(), value);
        pos += value.size();
    }
    return text;
}

int run_shell(const std::string& command, std::chrono::seconds timeout) {
    const pid_t pid = fork();
    if (pid < 0) throw solver_error("failed to spawn solver process");
    if (pid == 0) {
        setpgid(0, 0);  // own process group, so a timeout kill reaches any children
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    setpgid(pid, pid);  // mirror the child's call; whichever runs first wins
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    int status = 0;
    while (true) {
        const pid_t done = waitpid(pid, &status, timeout.count() > 0 ? WNOHANG : 0);
        if (done == pid) break;
        if (done < 0) throw solver_error("waitpid failed while running solver");
        if (timeout.count() > 0 && std::chrono::steady_clock::now() >= deadline) {
            kill(-pid, SIGKILL);
            waitpid(pid, &status, 0);
            throw solver_error("solver timed out after " + std::to_string(timeout.count()) +
                               "s");
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    if (!WIFEXITED(status)) throw solver_error("solver terminated abnormally");
    return WEXITSTATUS(status);
}

fs::path make_scratch_dir() {
    std::string templ = (fs::temp_directory_path() / "mecs-solve-XXXXXX").string();
    std::vector<char> buf(templ.begin(), templ.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) throw solver_error("could not create solver scratch directory");
    return fs::path(buf.data());
}

}  // namespace

std::vector<int> solve_model_external(const MipModel& model, const Graph& g,
                                      const SolverCommand& command) {
    if (command.command_template.find("{model}") == std::string::npos ||
        command.command_template.find("{solution}") == std::string::npos) {
        throw std::invalid_argument("solver command needs {model} and {solution} placeholders");
    }

    const fs::path dir = make_scratch_dir();
    const fs::path model_path = dir / "model.lp";
    const fs::path solution_path = dir / "solution.txt";
    {
        std::ofstream out(model_path);
        write_lp(model, out);
        if (!out) throw solver_error("could not write " + model_path.string());
    }

    const std::string command_line = substitute(
        substitute(command.command_template, "{model}", model_path.string()), "{solution}",
        solution_path.string());
    const int exit_code = run_shell(command_line, command.timeout);
    if (exit_code != 0) {
        throw solver_error("solver command exited with status " + std::to_string(exit_code) +
                           " (inputs kept in " + dir.string() + ")");
    }

    std::ifstream in(solution_path);
    if (!in) {
        throw solver_error("solver produced no solution file (expected " +
                           solution_path.string() + ")");
    }
    const auto values = read_solution(in);

    std::vector<int> chosen;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        const int var = model.variable_index(x_name(edge.u, edge.v));
        if (var < 0) {
            chosen.push_back(e);  // folded edge, forced into every solution
            continue;
        }
        const auto it = values.find(model.variable(var).name);
        if (it == values.end()) {
            throw solver_error("solution is missing " + model.variable(var).name +
                               " (inputs kept in " + dir.string() + ")");
        }
        if (std::abs(it->second) <= kBinaryTolerance) continue;
        if (std::abs(it->second - 1.0) <= kBinaryTolerance) {
            chosen.push_back(e);
            continue;
        }
        throw solver_error("non-binary value " + std::to_string(it->second) + " for " +
                           model.variable(var).name);
    }
    fs::remove_all(dir);
    return chosen;
}

std::vector<int> InternalExactSolver::solve(const Graph& g, const ResolvedTarget& target,
                                            int L, const PathOptions&) {
    const int n = g.node_count();
    const int m = g.edge_count();
    constexpr int kEnumerationGuard = 26;
    if (m > kEnumerationGuard) {
        throw resource_limit_error("graph too large for the internal exact solver (" +
                                   std::to_string(m) + " edges)");
    }
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const Rational budget = target.bound * Rational(pairs);
    const std::vector<int> canonical = g.edges_by_weight();

    for (int k = 0; k <= m; ++k) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::vector<int> subset;
            subset.reserve(k);
            for (int i : comb) subset.push_back(canonical[i]);
            const EdgeMask mask = mask_from_indices(g, subset);
            const std::int64_t sum =
                truncated_distance_sum(all_pairs_distances(g, mask), L + 1);
            if (Rational(sum) <= budget) {
                std::sort(subset.begin(), subset.end());
                return subset;
            }
            int i = k - 1;
            while (i >= 0 && comb[i] == m - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw infeasible_result_error("level model infeasible at horizon " + std::to_string(L));
}

std::vector<int> CommandSolver::solve(const Graph& g, const ResolvedTarget& target, int L,
                                      const PathOptions& options) {
    PathOptions opts = options;
    opts.L = L;
    const MipModel model = g.unit_weights() ? build_path_model(g, target, opts)
                                            : build_weighted_path_model(g, target, opts);
    return solve_model_external(model, g, command_);
}

SpannerResult iterative_exact(const Graph& g, const SpannerTarget& target, PathSolver& solver,
                              const PathOptions& base_options) {
    const ResolvedTarget resolved = resolve_target(g, target);
    std::int64_t max_weight = 1;
    for (const Edge& e : g.edges()) max_weight = std::max(max_weight, e.weight);
    // Any horizon at or past the budget prices disconnected subgraphs out of the
    // truncated model, because a single unreachable pair is charged L + 1.
    const std::int64_t pairs =
        static_cast<std::int64_t>(g.node_count()) * (g.node_count() - 1) / 2;
    const __int128 budget_floor = static_cast<__int128>(resolved.bound.num()) * pairs /
                                  resolved.bound.den();
    const std::int64_t horizon_cap = std::numeric_limits<int>::max();
    const std::int64_t max_horizon =
        std::max(static_cast<std::int64_t>(g.node_count() - 1) * max_weight,
                 static_cast<std::int64_t>(
                     std::min<__int128>(budget_floor, horizon_cap)));

    std::int64_t L = diameter(g).value();
    int iterations = 0;
    std::vector<int> chosen;
    while (true) {
        chosen = solver.solve(g, resolved, static_cast<int>(L), base_options);
        ++iterations;
        const Distance sub_diam =
            diameter_from_matrix(all_pairs_distances(g, mask_from_indices(g, chosen)));
        if (sub_diam.is_finite() && sub_diam.value() <= L) break;
        if (!sub_diam.is_finite() && L >= max_horizon) {
            throw infeasible_result_error(
                "budget admits disconnected truncated solutions at the maximal horizon");
        }
        // Both branches raise the horizon strictly, so this terminates.
        L = sub_diam.is_finite() ? sub_diam.value() : max_horizon;
    }

    SpannerResult result;
    result.edges = chosen;
    result.apl = apl(g, mask_from_indices(g, chosen));
    result.bound = resolved.bound;
    result.input_apl = resolved.input_apl;
    for (int idx : chosen) result.total_weight += g.edge(idx).weight;
    result.algorithm = "iterative-exact";
    result.iterations = iterations;
    result.optimal = solver.exact();
    if (!result.apl.finite || result.apl.value() > resolved.bound) {
        throw infeasible_result_error("iterative refinement returned an infeasible subgraph");
    }
    return result;
}

}  // namespace mecs::mip
