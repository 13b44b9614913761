#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "six/formula.hpp"
#include "six/semantics.hpp"

namespace six {

/// A pair of finite formula sets.  Both sides are kept sorted and
/// duplicate-free, so exchange and contraction hold by construction.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::vector<Formula> antecedent, std::vector<Formula> succedent);

  const std::vector<Formula>& antecedent() const { return ant_; }
  const std::vector<Formula>& succedent() const { return suc_; }

  bool in_antecedent(const Formula& f) const;
  bool in_succedent(const Formula& f) const;

  Sequent add_left(const Formula& f) const;
  Sequent add_right(const Formula& f) const;
  Sequent remove_left(const Formula& f) const;
  Sequent remove_right(const Formula& f) const;

  /// Both sides of `other` are subsets of the matching sides here.
  bool contains(const Sequent& other) const;

  /// "p, ~p => q"; an empty side prints as nothing.
  std::string to_string() const;

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend auto operator<=>(const Sequent&, const Sequent&) = default;

 private:
  std::vector<Formula> ant_;
  std::vector<Formula> suc_;
};

/// Parses "a, b => c, d"; either side may be empty.
Sequent parse_sequent(std::string_view text);

enum class Rule {
  kStructuralAxiom,
  kBottomAxiom,
  kTopAxiom,
  kFirstModalAxiom,
  kSecondModalAxiom,
  kLeftWeakening,
  kRightWeakening,
  kCut,
  kAndLeft,
  kAndRight,
  kOrLeft,
  kOrRight,
  kNegContraposition,
  kNegNegLeft,
  kNegNegRight,
  kNablaLeft,
  kNegNablaLeft,
  kMacro,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
/// Number of premises; -1 for macros, whose arity depends on the macro.
int rule_arity(Rule r);
const std::vector<Rule>& all_rules();

/// A derivation node.  `principal` is the cut formula for Cut, the added
/// formula for weakenings, the introduced compound for logical rules and
/// the schematic formula for axioms.  It may be left empty, in which case
/// the checker looks for a formula that makes the node a legal instance.
struct ProofTree {
  Sequent conclusion;
  Rule rule = Rule::kStructuralAxiom;
  std::optional<Formula> principal;
  std::string macro;
  std::vector<ProofTree> premises;
};

std::size_t proof_size(const ProofTree& t);
int proof_height(const ProofTree& t);
std::size_t count_rule(const ProofTree& t, Rule r);

struct ProofCheck {
  bool ok = true;
  /// Premise indices from the root down to the offending node.
  std::vector<int> path;
  std::string reason;

  explicit operator bool() const { return ok; }
  std::string to_string() const;
};

ProofCheck check_proof(const ProofTree& t);

struct Validity {
  bool valid = true;
  std::optional<Countermodel> countermodel;
};

/// meet(antecedent) <= join(succedent) under every S6 valuation.
Validity valid(const Sequent& s, SearchLimits limits = {});

/// The premises of the instance of `rule` with conclusion `conclusion` and
/// principal formula `principal`, each premise keeping the principal's
/// context minus the principal itself.  Throws std::invalid_argument for
/// weakenings, macros and conclusions that do not fit the rule.
std::vector<Sequent> inversion_premises(Rule rule, const Sequent& conclusion, const std::optional<Formula>& principal);

/// True when the conclusion is invalid or every premise is valid.
bool check_inversion(Rule rule, const Sequent& conclusion, const std::optional<Formula>& principal,
                     SearchLimits limits = {});

}  // namespace six
