#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "mecs/graph.hpp"
#include "mecs/mip/build.hpp"
#include "mecs/spanner.hpp"

namespace mecs::mip {

struct SolverCommand {
    // Shell command with {model} and {solution} placeholders; it must read
    // the LP file and write "name value" lines to the solution path.
    std::string command_template;
    std::chrono::seconds timeout{0};  // 0 = unlimited
};

// Writes the model, runs the command, reads the solution back and returns
// the selected edge indices (x within 1e-6 of 0/1; edges without an x
// variable are forced and always selected). Failures raise solver_error.
std::vector<int> solve_model_external(const MipModel& model, const Graph& g,
                                      const SolverCommand& command);

// One level-model solve at a fixed horizon.
class PathSolver {
public:
    virtual ~PathSolver() = default;
    virtual std::vector<int> solve(const Graph& g, const ResolvedTarget& target, int L,
                                   const PathOptions& options) = 0;
    virtual bool exact() const = 0;
};

// Reference solver: enumerates edge subsets by ascending cardinality
// against the truncated distance budget, which is exactly the level
// model's feasible set. Small instances only.
class InternalExactSolver final : public PathSolver {
public:
    std::vector<int> solve(const Graph& g, const ResolvedTarget& target, int L,
                           const PathOptions& options) override;
    bool exact() const override { return true; }
};

class CommandSolver final : public PathSolver {
public:
    explicit CommandSolver(SolverCommand command) : command_(std::move(command)) {}

    std::vector<int> solve(const Graph& g, const ResolvedTarget& target, int L,
                           const PathOptions& options) override;
    bool exact() const override { return false; }

private:
    SolverCommand command_;
};

// Level refinement: solve at L = diam(G), and while the solution's diameter
// exceeds the horizon, raise the horizon to that diameter and re-solve.
// Once diam(solution) <= L the truncated distances are the true ones and
// the solution is certified. iterations counts solver calls.
SpannerResult iterative_exact(const Graph& g, const SpannerTarget& target, PathSolver& solver,
                              const PathOptions& base_options = {});

}  // namespace mecs::mip
