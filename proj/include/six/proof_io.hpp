#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "six/sequent.hpp"

namespace six {

class ProofFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nested records {"rule", "sequent", "principal"?, "macro"?, "premises"}
/// with formulas and sequents in the parser's grammar.
std::string proof_to_json(const ProofTree& t, int indent = 2);
ProofTree proof_from_json(std::string_view text);

/// One node per line, premises indented below their conclusion.
std::string proof_to_text(const ProofTree& t);

}  // namespace six
