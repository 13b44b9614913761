#pragma once

#include <string>
#include <string_view>

#include "six/algebra.hpp"

namespace six {

/// JSON algebra description:
///   {"name": "...", "elements": ["0", "a", "1"],
///    "meet": [["0","0","0"], ...], "join": [[...]], "neg": ["1","a","0"],
///    "nabla": ["0","1","1"], "kind": "involutive-stone" | "de-morgan"}
/// Table entries are element names; the order is read off the meet table.
/// Throws AlgebraError for malformed input or failed axioms.
FiniteAlgebra algebra_from_json(std::string_view text);
std::string algebra_to_json(const FiniteAlgebra& a, int indent = 2);

/// A builtin name (S6, L2..L5, B4) or the path of a JSON description.
FiniteAlgebra load_algebra(const std::string& name_or_path);

}  // namespace six
