#pragma once

#include <stdexcept>
#include <string>

namespace mecs {

// Input could not be parsed or violates a structural precondition.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested APL bound is below the input graph's own APL, so no
// subgraph can satisfy it.
class infeasible_target_error : public std::runtime_error {
public:
    explicit infeasible_target_error(const std::string& what) : std::runtime_error(what) {}
};

// An algorithm terminated with a result that violates its own feasibility
// contract (e.g. the filtered addition heuristic ran out of edges).
class infeasible_result_error : public std::runtime_error {
public:
    explicit infeasible_result_error(const std::string& what) : std::runtime_error(what) {}
};

// A search hit its configured cap before producing an optimality
// certificate. best_known() describes the incumbent, if any.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what, std::string incumbent = {})
        : std::runtime_error(what), incumbent_(std::move(incumbent)) {}

    const std::string& best_known() const { return incumbent_; }

private:
    std::string incumbent_;
};

// An external solver invocation failed (spawn error, timeout, bad exit,
// unparseable solution file).
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mecs
