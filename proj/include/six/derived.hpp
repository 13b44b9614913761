#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "six/normal_form.hpp"
#include "six/proof_builder.hpp"
#include "six/sequent.hpp"

namespace six {

class MacroError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A schematic derivable sequent together with its derivation.
struct DerivedSequent {
  std::string name;
  int arity = 0;
  std::function<Sequent(std::span<const Formula>)> instance;
  std::function<ProofTree(std::span<const Formula>)> derive;
};

/// The minimal valid sequents over the blocks of a single formula a
/// (a => a, a => #a, ~#~a => a, => #a, ~#a, #a, ~#a =>, ...), in the order
/// the prover tries them.  Every entry has arity 1.
const std::vector<DerivedSequent>& base_patterns();

/// Every law of the normal-form rewriting in both directions (the converse
/// carries the suffix " converse"), the double-negation sequents used by the
/// De Morgan derivations, => ~#bot, and the base patterns.
const std::vector<DerivedSequent>& derived_sequents();
const DerivedSequent& derived_sequent(const std::string& name);

/// Macro-free derivation of s => t by a rewriting law, read in whichever
/// direction matches, or nullopt when s => t is no instance of the law.
/// Also accepts lattice-rearrange, tautology and contradiction for
/// &/| combinations of blocks.
std::optional<ProofTree> derive_law(const std::string& law, const Formula& s, const Formula& t);

/// Proof of a valid sequent all of whose formulas are &/| combinations of
/// blocks and constants.  Throws MacroError when the sequent is invalid.
ProofTree prove_block_lattice(const Sequent& s, SearchLimits limits = {});

/// Proof of f => g (forward) or g => f, with g the conjunctive form of f,
/// built from one law macro per rewriting step lifted through its context.
ProofTree conjunctive_form_proof(const Formula& f, bool forward, NormalFormOptions options = {});

/// Macro names: every rewriting law plus lattice-rearrange, tautology,
/// contradiction, cong-nabla, mono-and, mono-or and conjunctive-form.
std::vector<std::string> macro_names();

/// Replaces every macro node by its derivation in the primitive rules.
/// Throws MacroError for unknown macros or conclusions that do not fit.
ProofTree expand_macros(const ProofTree& t, NormalFormOptions options = {});

}  // namespace six
