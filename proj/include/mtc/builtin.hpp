#pragma once

#include <string>
#include <vector>

#include "mtc/category.hpp"

namespace mtc {

// Built-in example categories. Tables follow the conventions of this
// library: braid coefficients are complex conjugates of the commonly
// tabulated ones and the topological charge is negated to match.
CategoryData make_trivial();
CategoryData make_fibonacci();
CategoryData make_ising();
CategoryData make_z3();

// Case-sensitive lookup by name; throws CategoryError(Kind::Schema) for
// unknown names.
CategoryData builtin_by_name(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace mtc
