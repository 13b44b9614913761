#include "six/proof_builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace six::build {

namespace {

using F = Formula;
using Side = std::vector<Formula>;

Side minus(const Side& side, std::initializer_list<Formula> drop) {
  Side out;
  for (const auto& f : side)
    if (std::find(drop.begin(), drop.end(), f) == drop.end()) out.push_back(f);
  return out;
}

Side plus(Side side, const Formula& f) {
  side.push_back(f);
  return side;
}

ProofTree node(Sequent conclusion, Rule rule, std::optional<Formula> principal, std::vector<ProofTree> premises) {
  return ProofTree{std::move(conclusion), rule, std::move(principal), {}, std::move(premises)};
}

ProofTree ensure_left(ProofTree t, std::initializer_list<Formula> fs) {
  for (const auto& f : fs)
    if (!t.conclusion.in_antecedent(f)) t = weaken_left(std::move(t), f);
  return t;
}

ProofTree ensure_right(ProofTree t, std::initializer_list<Formula> fs) {
  for (const auto& f : fs)
    if (!t.conclusion.in_succedent(f)) t = weaken_right(std::move(t), f);
  return t;
}

void require(bool ok, const char* message) {
  if (!ok) throw std::logic_error(message);
}

}  // namespace

ProofTree axiom(const Formula& a) { return node(Sequent({a}, {a}), Rule::kStructuralAxiom, a, {}); }
ProofTree bottom_axiom() { return node(Sequent({F::bottom()}, {}), Rule::kBottomAxiom, F::bottom(), {}); }
ProofTree top_axiom() { return node(Sequent({}, {F::top()}), Rule::kTopAxiom, F::top(), {}); }
ProofTree first_modal(const Formula& a) { return node(Sequent({a}, {F::nabla(a)}), Rule::kFirstModalAxiom, a, {}); }

ProofTree second_modal(const Formula& a) {
  const F na = F::nabla(a);
  return node(Sequent({}, {F::disj(na, F::neg(na))}), Rule::kSecondModalAxiom, a, {});
}

ProofTree weaken_left(ProofTree t, const Formula& f) {
  Sequent c = t.conclusion.add_left(f);
  return node(std::move(c), Rule::kLeftWeakening, f, {std::move(t)});
}

ProofTree weaken_right(ProofTree t, const Formula& f) {
  Sequent c = t.conclusion.add_right(f);
  return node(std::move(c), Rule::kRightWeakening, f, {std::move(t)});
}

ProofTree weaken_to(ProofTree t, const Sequent& target) {
  require(target.contains(t.conclusion), "weakening target does not contain the proved sequent");
  for (const auto& f : target.antecedent())
    if (!t.conclusion.in_antecedent(f)) t = weaken_left(std::move(t), f);
  for (const auto& f : target.succedent())
    if (!t.conclusion.in_succedent(f)) t = weaken_right(std::move(t), f);
  return t;
}

ProofTree cut(ProofTree left, ProofTree right, const Formula& a) {
  left = ensure_right(std::move(left), {a});
  right = ensure_left(std::move(right), {a});
  Side ant = left.conclusion.antecedent();
  for (const auto& f : right.conclusion.antecedent())
    if (f != a) ant.push_back(f);
  Side suc = right.conclusion.succedent();
  for (const auto& f : left.conclusion.succedent())
    if (f != a) suc.push_back(f);
  Sequent c(ant, suc);
  left = weaken_to(std::move(left), Sequent(c.antecedent(), plus(c.succedent(), a)));
  right = weaken_to(std::move(right), Sequent(plus(c.antecedent(), a), c.succedent()));
  return node(std::move(c), Rule::kCut, a, {std::move(left), std::move(right)});
}

ProofTree and_left(ProofTree t, const Formula& conj) {
  require(conj.is(Connective::kAnd), "and_left needs a conjunction");
  t = ensure_left(std::move(t), {conj.left(), conj.right()});
  Sequent c(plus(minus(t.conclusion.antecedent(), {conj.left(), conj.right()}), conj), t.conclusion.succedent());
  return node(std::move(c), Rule::kAndLeft, conj, {std::move(t)});
}

ProofTree and_right(ProofTree a, ProofTree b, const Formula& conj) {
  require(conj.is(Connective::kAnd), "and_right needs a conjunction");
  a = ensure_right(std::move(a), {conj.left()});
  b = ensure_right(std::move(b), {conj.right()});
  Side ant = a.conclusion.antecedent();
  ant.insert(ant.end(), b.conclusion.antecedent().begin(), b.conclusion.antecedent().end());
  Side ctx = minus(a.conclusion.succedent(), {conj.left()});
  for (const auto& f : minus(b.conclusion.succedent(), {conj.right()})) ctx.push_back(f);
  a = weaken_to(std::move(a), Sequent(ant, plus(ctx, conj.left())));
  b = weaken_to(std::move(b), Sequent(ant, plus(ctx, conj.right())));
  return node(Sequent(ant, plus(ctx, conj)), Rule::kAndRight, conj, {std::move(a), std::move(b)});
}

ProofTree or_left(ProofTree a, ProofTree b, const Formula& disj) {
  require(disj.is(Connective::kOr), "or_left needs a disjunction");
  a = ensure_left(std::move(a), {disj.left()});
  b = ensure_left(std::move(b), {disj.right()});
  Side suc = a.conclusion.succedent();
  suc.insert(suc.end(), b.conclusion.succedent().begin(), b.conclusion.succedent().end());
  Side ctx = minus(a.conclusion.antecedent(), {disj.left()});
  for (const auto& f : minus(b.conclusion.antecedent(), {disj.right()})) ctx.push_back(f);
  a = weaken_to(std::move(a), Sequent(plus(ctx, disj.left()), suc));
  b = weaken_to(std::move(b), Sequent(plus(ctx, disj.right()), suc));
  return node(Sequent(plus(ctx, disj), suc), Rule::kOrLeft, disj, {std::move(a), std::move(b)});
}

ProofTree or_right(ProofTree t, const Formula& disj) {
  require(disj.is(Connective::kOr), "or_right needs a disjunction");
  t = ensure_right(std::move(t), {disj.left(), disj.right()});
  Sequent c(t.conclusion.antecedent(), plus(minus(t.conclusion.succedent(), {disj.left(), disj.right()}), disj));
  return node(std::move(c), Rule::kOrRight, disj, {std::move(t)});
}

ProofTree neg(ProofTree t) {
  const Sequent& p = t.conclusion;
  require(p.antecedent().size() <= 1 && p.succedent().size() <= 1, "(~) needs at most one formula per side");
  Side ant, suc;
  if (!p.succedent().empty()) ant.push_back(F::neg(p.succedent()[0]));
  if (!p.antecedent().empty()) suc.push_back(F::neg(p.antecedent()[0]));
  return node(Sequent(ant, suc), Rule::kNegContraposition, std::nullopt, {std::move(t)});
}

ProofTree negneg_left(ProofTree t, const Formula& negneg) {
  require(negneg.is(Connective::kNeg) && negneg.arg().is(Connective::kNeg), "negneg_left needs ~~a");
  const F& inner = negneg.arg().arg();
  t = ensure_left(std::move(t), {inner});
  Sequent c(plus(minus(t.conclusion.antecedent(), {inner}), negneg), t.conclusion.succedent());
  return node(std::move(c), Rule::kNegNegLeft, negneg, {std::move(t)});
}

ProofTree negneg_right(ProofTree t, const Formula& negneg) {
  require(negneg.is(Connective::kNeg) && negneg.arg().is(Connective::kNeg), "negneg_right needs ~~a");
  const F& inner = negneg.arg().arg();
  t = ensure_right(std::move(t), {inner});
  Sequent c(t.conclusion.antecedent(), plus(minus(t.conclusion.succedent(), {inner}), negneg));
  return node(std::move(c), Rule::kNegNegRight, negneg, {std::move(t)});
}

ProofTree nabla_left(ProofTree t, const Formula& nabla) {
  require(nabla.is(Connective::kNabla), "nabla_left needs #a");
  for (const auto& s : t.conclusion.succedent()) require(s.is(Connective::kNabla), "(#) needs a #-succedent");
  t = ensure_left(std::move(t), {nabla.arg()});
  Sequent c(plus(minus(t.conclusion.antecedent(), {nabla.arg()}), nabla), t.conclusion.succedent());
  return node(std::move(c), Rule::kNablaLeft, nabla, {std::move(t)});
}

ProofTree negnabla_left(ProofTree t, const Formula& nabla_neg_nabla) {
  require(nabla_neg_nabla.is(Connective::kNabla) && nabla_neg_nabla.arg().is(Connective::kNeg) &&
              nabla_neg_nabla.arg().arg().is(Connective::kNabla),
          "negnabla_left needs #~#a");
  const F& inner = nabla_neg_nabla.arg();
  t = ensure_left(std::move(t), {inner});
  Sequent c(plus(minus(t.conclusion.antecedent(), {inner}), nabla_neg_nabla), t.conclusion.succedent());
  return node(std::move(c), Rule::kNegNablaLeft, nabla_neg_nabla, {std::move(t)});
}

ProofTree macro(std::string name, Sequent conclusion, std::vector<ProofTree> premises) {
  ProofTree t{std::move(conclusion), Rule::kMacro, std::nullopt, std::move(name), std::move(premises)};
  return t;
}

}  // namespace six::build
