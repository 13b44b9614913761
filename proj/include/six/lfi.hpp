#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "six/formula.hpp"
#include "six/semantics.hpp"

namespace six {

/// A formula outside the fragment an operation accepts.
class LanguageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConsistencyRow {
  TruthValue value;
  TruthValue circ;
  TruthValue bullet;
};

/// Values of o x and * x for every x in S6, in carrier order.
std::vector<ConsistencyRow> consistency_truth_table();

/// One entailment claim with its expected outcome.
struct LawCheck {
  std::string name;
  std::string statement;
  bool expected = true;
  bool holds = true;
  std::optional<Countermodel> witness;

  bool ok() const { return expected == holds; }
};

struct LfiReport {
  std::vector<LawCheck> checks;
  bool all_ok() const;
};

/// |= o bot, o a |= o #a, o a |= o ~a, o a, o b |= o(a & b) and o(a | b),
/// and |= o ~^n o a for n = 0..max_n.
LfiReport check_propagation(int max_n = 3);

/// a & ~a |= *a (not conversely), *a |= *~a and back,
/// *(a & b) |= *a | *b and *(a | b) |= *a | *b (not conversely).
LfiReport check_bullet_laws();

/// o p, p |/= q;  o p, ~p |/= q;  o p, p, ~p |= bot.
LfiReport check_gentle_explosion();

/// p, ~p |/= q and |/= q | ~q.
LfiReport check_paraconsistency();

/// Everything above plus the o / * truth-table comparison and the
/// o a | *a = top, o a & *a = bottom identities.
LfiReport lfi_audit(int max_n = 3);

struct CplOptions {
  /// Reject # instead of reading it as the identity.
  bool strict = false;
  int max_vars = 16;
};

/// Classical entailment by two-valued truth tables.
bool cpl_entails(std::span<const Formula> premises, const Formula& goal, CplOptions options = {});

struct DatResult {
  bool cpl = false;
  bool six_with_circ = false;
  bool agree = false;
  std::vector<Formula> augmented_premises;
};

/// Classical entailment versus Six-entailment with o p added for every
/// variable p of the query.  Input must be #-free.
DatResult dat_check(std::span<const Formula> premises, const Formula& goal, SearchLimits limits = {});

}  // namespace six
