#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "six/formula.hpp"
#include "six/semantics.hpp"

namespace six {

enum class BlockShape : std::uint8_t { kP, kNegP, kNablaP, kNablaNegP, kNegNablaP, kNegNablaNegP };

/// One of p, ~p, #p, #~p, ~#p, ~#~p.
struct Block {
  std::string var;
  BlockShape shape = BlockShape::kP;

  Formula to_formula() const;

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

std::optional<Block> as_block(const Formula& f);

using Clause = std::vector<Block>;

class ConjunctiveForm {
 public:
  enum class Tag { kTop, kBottom, kCnf };

  static ConjunctiveForm top();
  static ConjunctiveForm bottom();
  /// Requires at least one clause, every clause nonempty and duplicate-free.
  static ConjunctiveForm cnf(std::vector<Clause> clauses);

  Tag tag() const { return tag_; }
  /// Clauses in production order; empty for top and bottom.
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Left-nested conjunction of left-nested disjunctions; top / bottom for
  /// the tagged forms.
  Formula as_formula() const;
  std::string to_string() const;

  /// Order-insensitive: clauses and blocks are compared after sorting.
  friend bool operator==(const ConjunctiveForm& a, const ConjunctiveForm& b);

 private:
  ConjunctiveForm(Tag tag, std::vector<Clause> clauses) : tag_(tag), clauses_(std::move(clauses)) {}
  std::vector<std::vector<Block>> canonical() const;

  Tag tag_;
  std::vector<Clause> clauses_;
};

std::size_t block_count(const ConjunctiveForm& cf);

struct NormalFormOptions {
  std::size_t max_blocks = 10000;
  /// Drop duplicate, subsumed and tautological clauses.
  bool simplify = false;
};

/// Throws BudgetError when an intermediate form exceeds max_blocks.
ConjunctiveForm to_conjunctive_form(const Formula& f, NormalFormOptions options = {});

/// True for top, bottom, and conjunctions of disjunctions of blocks.
bool is_conjunctive_form_shape(const Formula& f);
/// True for &/| combinations of blocks and constants.
bool is_lattice_of_blocks(const Formula& f);

/// True when the disjunction of these blocks is always 1 in S6.
bool clause_is_tautology(const Clause& clause);

/// Child indices from the root: 0 for the operand of ~ / # and for left
/// children, 1 for right children.
using FormulaPath = std::vector<int>;

const Formula& subformula_at(const Formula& f, const FormulaPath& path);
Formula replace_at(const Formula& f, const FormulaPath& path, const Formula& replacement);

/// One equivalence step: `after` is `before` with the instance
/// `redex_before` <=> `redex_after` of `law` rewritten at `path`.
struct NfStep {
  Formula before;
  Formula after;
  FormulaPath path;
  std::string law;
  Formula redex_before;
  Formula redex_after;
};

struct NfDerivation {
  Formula source;
  Formula result;
  std::vector<NfStep> steps;
};

/// Rewrites f into as_formula(to_conjunctive_form(f)) by named equivalence
/// laws: constant elimination, double negation, De Morgan, # over & and |,
/// ## and #~#, then distribution of | over &.  A closing step named
/// lattice-rearrange, tautology or contradiction bridges any remaining gap.
NfDerivation nf_derivation(const Formula& f, NormalFormOptions options = {});

/// The result of rewriting `f` at its root by the named law, if `f` is an
/// instance of the law's left-hand side.
std::optional<Formula> apply_law(std::string_view law, const Formula& f);
/// Every law apply_law knows, in the order nf_derivation tries them.
std::vector<std::string> rewrite_law_names();

/// Short statement of a law, e.g. "#(a | b) <=> #a | #b".
std::string law_statement(const std::string& law);

}  // namespace six
