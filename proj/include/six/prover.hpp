#pragma once

#include <optional>

#include "six/derived.hpp"
#include "six/normal_form.hpp"
#include "six/sequent.hpp"

namespace six {

struct ProverOptions {
  SearchLimits limits;
  NormalFormOptions normal_form;
};

struct ProofResult {
  /// Present for valid sequents; may contain conjunctive-form macros.
  std::optional<ProofTree> proof;
  /// Present for invalid sequents.
  std::optional<Countermodel> countermodel;

  bool proved() const { return proof.has_value(); }
};

/// Decides the sequent.  Valid sequents get a derivation: every formula
/// that is not already an &/| combination of blocks is replaced by its
/// conjunctive form through a cut, the lattice connectives are decomposed
/// by the invertible rules, and each leaf is closed by a constant axiom or
/// one of the base patterns.  Throws BudgetError past the limits.
ProofResult prove(const Sequent& s, ProverOptions options = {});

}  // namespace six
