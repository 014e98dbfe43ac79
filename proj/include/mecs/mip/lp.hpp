#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>

#include "mecs/mip/model.hpp"

namespace mecs::mip {

// CPLEX-style LP text: Minimize / Subject To / Bounds / Binaries / End.
// Coefficients are emitted exactly (integers, or terminating decimals);
// a non-terminating rational coefficient is a builder bug and throws.
// Bounds and Binaries are listed name-sorted so the text is a pure
// function of the model's structure.
void write_lp(const MipModel& model, std::ostream& out);
std::string write_lp_string(const MipModel& model);

// Inverse of write_lp for the dialect it emits. Every continuous variable
// must receive explicit bounds. Malformed input raises parse_error.
MipModel read_lp(std::istream& in);

// Same variables (name, kind, bounds), same constraints in order (name,
// terms, sense, rhs) and same objective; metadata is not compared.
bool structurally_equal(const MipModel& a, const MipModel& b);

// Solution files are "name value" lines; '#' starts a comment.
std::unordered_map<std::string, double> read_solution(std::istream& in);

}  // namespace mecs::mip
