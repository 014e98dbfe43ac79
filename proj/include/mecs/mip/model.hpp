#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mecs/rational.hpp"

namespace mecs::mip {

enum class VarKind { Binary, Continuous };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    Rational lower;
    Rational upper;
};

enum class Sense { LessEq, GreaterEq, Equal };

struct Term {
    int var = -1;  // index into MipModel::variables()
    Rational coeff;
};

struct Constraint {
    std::string name;
    std::vector<Term> terms;
    Sense sense = Sense::LessEq;
    Rational rhs;
};

// Export-side size and provenance record for a built model. The *_vars
// fields are the formulation's closed-form size bookkeeping; declared_*
// count what the model actually contains (unreferenced lifting variables
// are never declared).
struct ModelInfo {
    std::string formulation;
    int nodes = 0;
    int edges = 0;
    std::int64_t total_weight = 0;
    int L = 0;  // path horizon; 0 for the flow model
    Rational bound;
    std::uint64_t graph_fingerprint = 0;
    std::int64_t x_vars = 0;
    std::int64_t u_vars = 0;
    std::int64_t y_vars = 0;
    std::int64_t f_vars = 0;
    std::int64_t declared_vars = 0;
    std::int64_t declared_constraints = 0;
    int forced_leaf_edges = 0;
    bool relaxed_paths = false;
    bool leaf_reduction = false;
    bool iso_cuts = false;
    bool conn_cut = false;
};

// Minimization model with named variables and linear constraints. All
// coefficients are exact rationals; the builders in build.hpp only ever
// emit integers (fractional budgets are cleared by scaling).
class MipModel {
public:
    int add_variable(std::string name, VarKind kind, Rational lower, Rational upper);
    int variable_index(const std::string& name) const;  // -1 when absent
    const Variable& variable(int index) const { return vars_.at(index); }
    Variable& mutable_variable(int index) { return vars_.at(index); }
    const std::vector<Variable>& variables() const { return vars_; }

    void add_constraint(Constraint c);
    const std::vector<Constraint>& constraints() const { return constraints_; }

    void set_objective(std::vector<Term> terms, Rational constant = Rational(0));
    const std::vector<Term>& objective_terms() const { return objective_; }
    Rational objective_constant() const { return objective_constant_; }

    ModelInfo info;

private:
    std::vector<Variable> vars_;
    std::vector<Constraint> constraints_;
    std::vector<Term> objective_;
    Rational objective_constant_;
    std::unordered_map<std::string, int> index_;
};

std::string x_name(int i, int j);
std::string u_name(int level, int i, int j);
std::string y_name(int level, int i, int k, int j);
std::string f_name(int s, int t, int i, int j);

struct Evaluation {
    Rational objective;
    bool feasible = false;
    std::vector<std::string> violated;  // constraint names, in model order
};

// Exact check of a full assignment (every declared variable must be
// present; missing names throw invalid_argument).
Evaluation evaluate_assignment(const MipModel& model,
                               const std::unordered_map<std::string, Rational>& assignment);

}  // namespace mecs::mip
