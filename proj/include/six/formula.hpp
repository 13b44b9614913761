#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace six {

enum class Connective { kVar, kBottom, kTop, kNeg, kNabla, kAnd, kOr };

/// Immutable formula over the primitive signature {var, bot, top, ~, #, &, |}.
/// Nodes are shared; copies are cheap.  Delta, circle and bullet are not
/// nodes: the factories below build their definitions.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula neg(Formula a);
  static Formula nabla(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);

  /// ~#~a
  static Formula delta(Formula a);
  /// Da | D~a
  static Formula circ(Formula a);
  /// ~(o a)
  static Formula bullet(Formula a);

  /// Left-nested conjunction / disjunction; empty input gives top / bottom.
  static Formula conj_all(std::span<const Formula> parts);
  static Formula disj_all(std::span<const Formula> parts);

  Connective kind() const;
  bool is(Connective c) const { return kind() == c; }
  bool is_binary() const { return is(Connective::kAnd) || is(Connective::kOr); }
  bool is_unary() const { return is(Connective::kNeg) || is(Connective::kNabla); }
  bool is_constant() const { return is(Connective::kBottom) || is(Connective::kTop); }

  const std::string& name() const;
  /// Operand of ~ / #.
  const Formula& arg() const;
  const Formula& left() const;
  const Formula& right() const;

  /// Number of nodes.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  static std::strong_ordering compare(const Node* x, const Node* y);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (loosest to tightest): `|`, `&`, prefix `~ # D o *`.  Atoms are
/// variables `[a-z][a-zA-Z0-9_]*`, `bot`, `top` and parenthesised formulas.
/// `bot`, `top` and `o` are reserved.
Formula parse_formula(std::string_view text);

/// Comma separated formulas; an empty or blank string gives an empty list.
std::vector<Formula> parse_formula_list(std::string_view text);

struct EntailmentQuery {
  std::vector<Formula> premises;
  Formula goal;
};

/// `G1, G2 |= a`; the premise list may be empty.
EntailmentQuery parse_entailment(std::string_view text);

struct SequentText {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;
};

/// `G1, G2 => S1, S2`; either side may be empty.
SequentText parse_sequent_text(std::string_view text);

/// Minimal-parenthesis rendering; parse_formula(render(f)) == f.
std::string render(const Formula& f);
std::string render_list(std::span<const Formula> fs);

/// Count of ~, #, & and | occurrences.
std::size_t complexity(const Formula& f);
/// Height of the syntax tree; atoms have depth 0.
int depth(const Formula& f);

/// Variable names, sorted and unique.
std::vector<std::string> vars(const Formula& f);
std::vector<std::string> vars(std::span<const Formula> fs);

bool contains_nabla(const Formula& f);

}  // namespace six
