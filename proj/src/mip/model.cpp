#include "mecs/mip/model.hpp"

#include <stdexcept>

namespace mecs::mip {

int MipModel::add_variable(std::string name, VarKind kind, Rational lower, Rational upper) {
    if (index_.count(name)) throw std::invalid_argument("duplicate variable " + name);
    const int idx = static_cast<int>(vars_.size());
    index_.emplace(name, idx);
    vars_.push_back(Variable{std::move(name), kind, lower, upper});
    return idx;
}

int MipModel::variable_index(const std::string& name) const {
    const auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

void MipModel::add_constraint(Constraint c) {
    for (const Term& t : c.terms) {
        if (t.var < 0 || t.var >= static_cast<int>(vars_.size())) {
            throw std::invalid_argument("constraint " + c.name + " references unknown variable");
        }
    }
    constraints_.push_back(std::move(c));
}

void MipModel::set_objective(std::vector<Term> terms, Rational constant) {
    for (const Term& t : terms) {
        if (t.var < 0 || t.var >= static_cast<int>(vars_.size())) {
            throw std::invalid_argument("objective references unknown variable");
        }
    }
    objective_ = std::move(terms);
    objective_constant_ = constant;
}

std::string x_name(int i, int j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string u_name(int level, int i, int j) {
    return "u_" + std::to_string(level) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string y_name(int level, int i, int k, int j) {
    return "y_" + std::to_string(level) + "_" + std::to_string(i) + "_" + std::to_string(k) +
           "_" + std::to_string(j);
}

std::string f_name(int s, int t, int i, int j) {
    return "f_" + std::to_string(s) + "_" + std::to_string(t) + "_" + std::to_string(i) + "_" +
           std::to_string(j);
}

Evaluation evaluate_assignment(const MipModel& model,
                               const std::unordered_map<std::string, Rational>& assignment) {
    std::vector<Rational> value(model.variables().size());
    for (std::size_t i = 0; i < model.variables().size(); ++i) {
        const auto it = assignment.find(model.variables()[i].name);
        if (it == assignment.end()) {
            throw std::invalid_argument("assignment missing variable " +
                                        model.variables()[i].name);
        }
        value[i] = it->second;
    }

    Evaluation out;
    out.objective = model.objective_constant();
    for (const Term& t : model.objective_terms()) out.objective = out.objective + t.coeff * value[t.var];

    for (const Constraint& c : model.constraints()) {
        Rational lhs(0);
        for (const Term& t : c.terms) lhs = lhs + t.coeff * value[t.var];
        bool ok = true;
        switch (c.sense) {
            case Sense::LessEq: ok = lhs <= c.rhs; break;
            case Sense::GreaterEq: ok = lhs >= c.rhs; break;
            case Sense::Equal: ok = lhs == c.rhs; break;
        }
        if (!ok) out.violated.push_back(c.name);
    }
    out.feasible = out.violated.empty();
    return out;
}

}  // namespace mecs::mip
