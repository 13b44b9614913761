#include "six/sequent.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace six {

namespace {

std::vector<Formula> normalize_side(std::vector<Formula> side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  return side;
}

bool has(const std::vector<Formula>& side, const Formula& f) { return std::binary_search(side.begin(), side.end(), f); }

std::vector<Formula> with(std::vector<Formula> side, std::initializer_list<Formula> extra) {
  side.insert(side.end(), extra.begin(), extra.end());
  return normalize_side(std::move(side));
}

std::vector<Formula> without(const std::vector<Formula>& side, const Formula& f) {
  std::vector<Formula> out;
  for (const auto& g : side)
    if (g != f) out.push_back(g);
  return out;
}

}  // namespace

Sequent::Sequent(std::vector<Formula> antecedent, std::vector<Formula> succedent)
    : ant_(normalize_side(std::move(antecedent))), suc_(normalize_side(std::move(succedent))) {}

bool Sequent::in_antecedent(const Formula& f) const { return has(ant_, f); }
bool Sequent::in_succedent(const Formula& f) const { return has(suc_, f); }

Sequent Sequent::add_left(const Formula& f) const { return {with(ant_, {f}), suc_}; }
Sequent Sequent::add_right(const Formula& f) const { return {ant_, with(suc_, {f})}; }
Sequent Sequent::remove_left(const Formula& f) const { return {without(ant_, f), suc_}; }
Sequent Sequent::remove_right(const Formula& f) const { return {ant_, without(suc_, f)}; }

bool Sequent::contains(const Sequent& other) const {
  return std::includes(ant_.begin(), ant_.end(), other.ant_.begin(), other.ant_.end()) &&
         std::includes(suc_.begin(), suc_.end(), other.suc_.begin(), other.suc_.end());
}

std::string Sequent::to_string() const {
  std::string out = render_list(ant_);
  out += ant_.empty() ? "=>" : " =>";
  if (!suc_.empty()) out += " " + render_list(suc_);
  return out;
}

Sequent parse_sequent(std::string_view text) {
  auto parts = parse_sequent_text(text);
  return {std::move(parts.antecedent), std::move(parts.succedent)};
}

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  int arity;
};

constexpr std::array<RuleInfo, 18> kRules = {{
    {Rule::kStructuralAxiom, "axiom", 0},
    {Rule::kBottomAxiom, "bottom-axiom", 0},
    {Rule::kTopAxiom, "top-axiom", 0},
    {Rule::kFirstModalAxiom, "first-modal-axiom", 0},
    {Rule::kSecondModalAxiom, "second-modal-axiom", 0},
    {Rule::kLeftWeakening, "weaken-left", 1},
    {Rule::kRightWeakening, "weaken-right", 1},
    {Rule::kCut, "cut", 2},
    {Rule::kAndLeft, "and-left", 1},
    {Rule::kAndRight, "and-right", 2},
    {Rule::kOrLeft, "or-left", 2},
    {Rule::kOrRight, "or-right", 1},
    {Rule::kNegContraposition, "neg", 1},
    {Rule::kNegNegLeft, "negneg-left", 1},
    {Rule::kNegNegRight, "negneg-right", 1},
    {Rule::kNablaLeft, "nabla-left", 1},
    {Rule::kNegNablaLeft, "negnabla-left", 1},
    {Rule::kMacro, "macro", -1},
}};

const RuleInfo& info(Rule r) {
  for (const auto& i : kRules)
    if (i.rule == r) return i;
  throw std::logic_error("unknown rule");
}

}  // namespace

std::string_view rule_name(Rule r) { return info(r).name; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& i : kRules)
    if (i.name == name) return i.rule;
  return std::nullopt;
}

int rule_arity(Rule r) { return info(r).arity; }

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> out;
    for (const auto& i : kRules) out.push_back(i.rule);
    return out;
  }();
  return rules;
}

std::size_t proof_size(const ProofTree& t) {
  std::size_t n = 1;
  for (const auto& p : t.premises) n += proof_size(p);
  return n;
}

int proof_height(const ProofTree& t) {
  int h = 0;
  for (const auto& p : t.premises) h = std::max(h, proof_height(p));
  return h + 1;
}

std::size_t count_rule(const ProofTree& t, Rule r) {
  std::size_t n = t.rule == r ? 1 : 0;
  for (const auto& p : t.premises) n += count_rule(p, r);
  return n;
}

std::string ProofCheck::to_string() const {
  if (ok) return "ok";
  std::string where = "root";
  for (int i : path) where += "." + std::to_string(i);
  return "error at " + where + ": " + reason;
}

namespace {

using Side = std::vector<Formula>;
using Error = std::optional<std::string>;

// One sequent side taking part in a rule, with the formulas the rule acts on.
struct Part {
  const Side& side;
  std::vector<Formula> active;
};

// The parts of one side position (all antecedents or all succedents of the
// premises and conclusion) must share a common context.
Error shared_context(std::initializer_list<Part> parts, const char* where) {
  for (const auto& p : parts)
    for (const auto& a : p.active)
      if (!has(p.side, a)) return std::string(where) + " is missing " + render(a);
  std::vector<Formula> common = parts.begin()->side;
  for (const auto& p : parts) {
    std::vector<Formula> next;
    std::set_intersection(common.begin(), common.end(), p.side.begin(), p.side.end(), std::back_inserter(next));
    common = std::move(next);
  }
  for (const auto& p : parts)
    for (const auto& f : p.side) {
      if (std::find(p.active.begin(), p.active.end(), f) != p.active.end()) continue;
      if (!has(common, f)) return std::string(where) + " contexts differ at " + render(f);
    }
  return std::nullopt;
}

Error same(const Side& a, const Side& b, const char* where) {
  if (a == b) return std::nullopt;
  return std::string(where) + " must be unchanged";
}

Error first_error(std::initializer_list<Error> errors) {
  for (const auto& e : errors)
    if (e) return e;
  return std::nullopt;
}

Error check_with(const ProofTree& t, const Formula& phi) {
  using C = Connective;
  const Sequent& c = t.conclusion;
  auto prem = [&](std::size_t i) -> const Sequent& { return t.premises[i].conclusion; };
  switch (t.rule) {
    case Rule::kStructuralAxiom:
      if (c.antecedent() == Side{phi} && c.succedent() == Side{phi}) return std::nullopt;
      return "axiom must be exactly a => a";
    case Rule::kBottomAxiom:
      if (phi.is(C::kBottom) && c.antecedent() == Side{phi} && c.succedent().empty()) return std::nullopt;
      return "bottom axiom must be exactly bot =>";
    case Rule::kTopAxiom:
      if (phi.is(C::kTop) && c.antecedent().empty() && c.succedent() == Side{phi}) return std::nullopt;
      return "top axiom must be exactly => top";
    case Rule::kFirstModalAxiom:
      if (c.antecedent() == Side{phi} && c.succedent() == Side{Formula::nabla(phi)}) return std::nullopt;
      return "first modal axiom must be exactly a => #a";
    case Rule::kSecondModalAxiom: {
      const Formula nb = Formula::nabla(phi);
      if (c.antecedent().empty() && c.succedent() == Side{Formula::disj(nb, Formula::neg(nb))}) return std::nullopt;
      return "second modal axiom must be exactly => #a | ~#a";
    }
    case Rule::kLeftWeakening:
      if (prem(0).succedent() == c.succedent() && with(prem(0).antecedent(), {phi}) == c.antecedent())
        return std::nullopt;
      return "conclusion must be the premise plus " + render(phi) + " on the left";
    case Rule::kRightWeakening:
      if (prem(0).antecedent() == c.antecedent() && with(prem(0).succedent(), {phi}) == c.succedent())
        return std::nullopt;
      return "conclusion must be the premise plus " + render(phi) + " on the right";
    case Rule::kCut:
      if (prem(0) != Sequent(c.antecedent(), with(c.succedent(), {phi})))
        return "first premise must be the conclusion with " + render(phi) + " added on the right";
      if (prem(1) != Sequent(with(c.antecedent(), {phi}), c.succedent()))
        return "second premise must be the conclusion with " + render(phi) + " added on the left";
      return std::nullopt;
    case Rule::kAndLeft:
      if (!phi.is(C::kAnd)) return "principal must be a conjunction";
      return first_error({shared_context({{prem(0).antecedent(), {phi.left(), phi.right()}}, {c.antecedent(), {phi}}},
                                         "antecedent"),
                          same(prem(0).succedent(), c.succedent(), "succedent")});
    case Rule::kAndRight:
      if (!phi.is(C::kAnd)) return "principal must be a conjunction";
      return first_error({shared_context({{prem(0).succedent(), {phi.left()}},
                                          {prem(1).succedent(), {phi.right()}},
                                          {c.succedent(), {phi}}},
                                         "succedent"),
                          same(prem(0).antecedent(), c.antecedent(), "antecedent"),
                          same(prem(1).antecedent(), c.antecedent(), "antecedent")});
    case Rule::kOrLeft:
      if (!phi.is(C::kOr)) return "principal must be a disjunction";
      return first_error({shared_context({{prem(0).antecedent(), {phi.left()}},
                                          {prem(1).antecedent(), {phi.right()}},
                                          {c.antecedent(), {phi}}},
                                         "antecedent"),
                          same(prem(0).succedent(), c.succedent(), "succedent"),
                          same(prem(1).succedent(), c.succedent(), "succedent")});
    case Rule::kOrRight:
      if (!phi.is(C::kOr)) return "principal must be a disjunction";
      return first_error({shared_context({{prem(0).succedent(), {phi.left(), phi.right()}}, {c.succedent(), {phi}}},
                                         "succedent"),
                          same(prem(0).antecedent(), c.antecedent(), "antecedent")});
    case Rule::kNegContraposition: {
      const Sequent& p = prem(0);
      if (p.antecedent().size() > 1 || p.succedent().size() > 1)
        return "premise of (~) must have at most one formula on each side";
      Side ant, suc;
      if (!p.succedent().empty()) ant.push_back(Formula::neg(p.succedent()[0]));
      if (!p.antecedent().empty()) suc.push_back(Formula::neg(p.antecedent()[0]));
      if (c != Sequent(ant, suc)) return "conclusion of (~) must be " + Sequent(ant, suc).to_string();
      return std::nullopt;
    }
    case Rule::kNegNegLeft:
      if (!phi.is(C::kNeg) || !phi.arg().is(C::kNeg)) return "principal must be a double negation";
      return first_error({shared_context({{prem(0).antecedent(), {phi.arg().arg()}}, {c.antecedent(), {phi}}},
                                         "antecedent"),
                          same(prem(0).succedent(), c.succedent(), "succedent")});
    case Rule::kNegNegRight:
      if (!phi.is(C::kNeg) || !phi.arg().is(C::kNeg)) return "principal must be a double negation";
      return first_error({shared_context({{prem(0).succedent(), {phi.arg().arg()}}, {c.succedent(), {phi}}},
                                         "succedent"),
                          same(prem(0).antecedent(), c.antecedent(), "antecedent")});
    case Rule::kNablaLeft:
      if (!phi.is(C::kNabla)) return "principal must start with #";
      for (const auto& s : c.succedent())
        if (!s.is(C::kNabla)) return "every succedent formula of (#) must start with #, not " + render(s);
      return first_error({shared_context({{prem(0).antecedent(), {phi.arg()}}, {c.antecedent(), {phi}}}, "antecedent"),
                          same(prem(0).succedent(), c.succedent(), "succedent")});
    case Rule::kNegNablaLeft:
      if (!phi.is(C::kNabla) || !phi.arg().is(C::kNeg) || !phi.arg().arg().is(C::kNabla))
        return "principal must have the shape #~#a";
      return first_error({shared_context({{prem(0).antecedent(), {phi.arg()}}, {c.antecedent(), {phi}}}, "antecedent"),
                          same(prem(0).succedent(), c.succedent(), "succedent")});
    case Rule::kMacro: break;
  }
  return "unexpected rule";
}

std::vector<Formula> candidates(const ProofTree& t) {
  const Sequent& c = t.conclusion;
  switch (t.rule) {
    case Rule::kStructuralAxiom:
    case Rule::kBottomAxiom:
    case Rule::kFirstModalAxiom:
    case Rule::kAndLeft:
    case Rule::kOrLeft:
    case Rule::kNegNegLeft:
    case Rule::kNablaLeft:
    case Rule::kNegNablaLeft:
    case Rule::kLeftWeakening: return c.antecedent();
    case Rule::kTopAxiom:
    case Rule::kAndRight:
    case Rule::kOrRight:
    case Rule::kNegNegRight:
    case Rule::kRightWeakening: return c.succedent();
    case Rule::kSecondModalAxiom: {
      std::vector<Formula> out;
      for (const auto& f : c.succedent())
        if (f.is(Connective::kOr) && f.left().is(Connective::kNabla)) out.push_back(f.left().arg());
      return out;
    }
    case Rule::kCut: return t.premises[0].conclusion.succedent();
    case Rule::kNegContraposition: return {Formula::top()};
    case Rule::kMacro: break;
  }
  return {};
}

Error check_node(const ProofTree& t) {
  if (t.rule == Rule::kMacro) return "macro '" + t.macro + "' must be expanded before checking";
  const int arity = rule_arity(t.rule);
  if (static_cast<int>(t.premises.size()) != arity)
    return std::string(rule_name(t.rule)) + " takes " + std::to_string(arity) + " premise(s), got " +
           std::to_string(t.premises.size());
  if (t.principal && t.rule != Rule::kNegContraposition) return check_with(t, *t.principal);
  Error first;
  for (const auto& phi : candidates(t)) {
    Error e = check_with(t, phi);
    if (!e) return std::nullopt;
    if (!first) first = e;
  }
  return first ? first : Error{"no formula makes this a legal instance of " + std::string(rule_name(t.rule))};
}

bool check_rec(const ProofTree& t, ProofCheck& out) {
  if (Error e = check_node(t)) {
    out.ok = false;
    out.reason = *e;
    return false;
  }
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    out.path.push_back(static_cast<int>(i));
    if (!check_rec(t.premises[i], out)) return false;
    out.path.pop_back();
  }
  return true;
}

}  // namespace

ProofCheck check_proof(const ProofTree& t) {
  ProofCheck out;
  check_rec(t, out);
  return out;
}

Validity valid(const Sequent& s, SearchLimits limits) {
  auto r = entails_multi(s.antecedent(), s.succedent(), s6(), limits);
  return {r.holds, r.countermodel};
}

namespace {

Formula pick_principal(const Side& side, const std::optional<Formula>& given, bool (*fits)(const Formula&),
                       const char* what) {
  if (given) {
    if (!has(side, *given)) throw std::invalid_argument(render(*given) + " is not in the conclusion");
    if (!fits(*given)) throw std::invalid_argument(render(*given) + " is not " + what);
    return *given;
  }
  for (const auto& f : side)
    if (fits(f)) return f;
  throw std::invalid_argument(std::string("the conclusion has no ") + what);
}

bool is_and(const Formula& f) { return f.is(Connective::kAnd); }
bool is_or(const Formula& f) { return f.is(Connective::kOr); }
bool is_negneg(const Formula& f) { return f.is(Connective::kNeg) && f.arg().is(Connective::kNeg); }
bool is_nabla(const Formula& f) { return f.is(Connective::kNabla); }
bool is_nabla_neg_nabla(const Formula& f) {
  return f.is(Connective::kNabla) && f.arg().is(Connective::kNeg) && f.arg().arg().is(Connective::kNabla);
}

}  // namespace

std::vector<Sequent> inversion_premises(Rule rule, const Sequent& c, const std::optional<Formula>& principal) {
  const Side& ant = c.antecedent();
  const Side& suc = c.succedent();
  switch (rule) {
    case Rule::kLeftWeakening:
    case Rule::kRightWeakening: throw std::invalid_argument("the inversion principle excludes weakening");
    case Rule::kMacro: throw std::invalid_argument("macros have no fixed premises");
    case Rule::kStructuralAxiom:
    case Rule::kBottomAxiom:
    case Rule::kTopAxiom:
    case Rule::kFirstModalAxiom:
    case Rule::kSecondModalAxiom: return {};
    case Rule::kCut:
      if (!principal) throw std::invalid_argument("cut needs a cut formula");
      return {Sequent(ant, with(suc, {*principal})), Sequent(with(ant, {*principal}), suc)};
    case Rule::kAndLeft: {
      Formula f = pick_principal(ant, principal, is_and, "a conjunction");
      return {Sequent(with(without(ant, f), {f.left(), f.right()}), suc)};
    }
    case Rule::kAndRight: {
      Formula f = pick_principal(suc, principal, is_and, "a conjunction");
      return {Sequent(ant, with(without(suc, f), {f.left()})), Sequent(ant, with(without(suc, f), {f.right()}))};
    }
    case Rule::kOrLeft: {
      Formula f = pick_principal(ant, principal, is_or, "a disjunction");
      return {Sequent(with(without(ant, f), {f.left()}), suc), Sequent(with(without(ant, f), {f.right()}), suc)};
    }
    case Rule::kOrRight: {
      Formula f = pick_principal(suc, principal, is_or, "a disjunction");
      return {Sequent(ant, with(without(suc, f), {f.left(), f.right()}))};
    }
    case Rule::kNegContraposition: {
      if (ant.size() > 1 || suc.size() > 1) throw std::invalid_argument("(~) conclusions have at most one formula per side");
      Side pa, ps;
      for (const auto& f : suc) {
        if (!f.is(Connective::kNeg)) throw std::invalid_argument("(~) conclusions consist of negations");
        pa.push_back(f.arg());
      }
      for (const auto& f : ant) {
        if (!f.is(Connective::kNeg)) throw std::invalid_argument("(~) conclusions consist of negations");
        ps.push_back(f.arg());
      }
      return {Sequent(pa, ps)};
    }
    case Rule::kNegNegLeft: {
      Formula f = pick_principal(ant, principal, is_negneg, "a double negation");
      return {Sequent(with(without(ant, f), {f.arg().arg()}), suc)};
    }
    case Rule::kNegNegRight: {
      Formula f = pick_principal(suc, principal, is_negneg, "a double negation");
      return {Sequent(ant, with(without(suc, f), {f.arg().arg()}))};
    }
    case Rule::kNablaLeft: {
      Formula f = pick_principal(ant, principal, is_nabla, "a #-formula");
      for (const auto& s : suc)
        if (!s.is(Connective::kNabla)) throw std::invalid_argument("(#) needs a succedent of #-formulas");
      return {Sequent(with(without(ant, f), {f.arg()}), suc)};
    }
    case Rule::kNegNablaLeft: {
      Formula f = pick_principal(ant, principal, is_nabla_neg_nabla, "of the shape #~#a");
      return {Sequent(with(without(ant, f), {f.arg()}), suc)};
    }
  }
  return {};
}

bool check_inversion(Rule rule, const Sequent& conclusion, const std::optional<Formula>& principal,
                     SearchLimits limits) {
  auto premises = inversion_premises(rule, conclusion, principal);
  if (!valid(conclusion, limits).valid) return true;
  return std::all_of(premises.begin(), premises.end(), [&](const Sequent& s) { return valid(s, limits).valid; });
}

}  // namespace six
