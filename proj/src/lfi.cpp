#include "six/lfi.hpp"

#include <algorithm>
#include <unordered_map>

namespace six {

namespace {

Formula p() { return Formula::var("p"); }
Formula q() { return Formula::var("q"); }

LawCheck check(std::string name, std::vector<Formula> premises, const Formula& goal, bool expected) {
  LawCheck c;
  c.name = std::move(name);
  c.statement = render_list(premises) + (premises.empty() ? "|= " : " |= ") + render(goal);
  c.expected = expected;
  auto r = entails_six(premises, goal);
  c.holds = r.holds;
  c.witness = r.countermodel;
  return c;
}

}  // namespace

bool LfiReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.ok(); });
}

std::vector<ConsistencyRow> consistency_truth_table() {
  const auto& a = s6();
  const Formula circ = Formula::circ(p());
  const Formula bullet = Formula::bullet(p());
  std::vector<ConsistencyRow> rows;
  for (auto x : a.carrier()) {
    Valuation v(a);
    v.set("p", x);
    rows.push_back({x, eval(circ, v), eval(bullet, v)});
  }
  return rows;
}

LfiReport check_propagation(int max_n) {
  using F = Formula;
  LfiReport r;
  r.checks.push_back(check("propagation bottom", {}, F::circ(F::bottom()), true));
  r.checks.push_back(check("propagation nabla", {F::circ(p())}, F::circ(F::nabla(p())), true));
  r.checks.push_back(check("propagation negation", {F::circ(p())}, F::circ(F::neg(p())), true));
  r.checks.push_back(check("propagation meet", {F::circ(p()), F::circ(q())}, F::circ(F::conj(p(), q())), true));
  r.checks.push_back(check("propagation join", {F::circ(p()), F::circ(q())}, F::circ(F::disj(p(), q())), true));
  for (int n = 0; n <= max_n; ++n) {
    F inner = F::circ(p());
    for (int i = 0; i < n; ++i) inner = F::neg(inner);
    r.checks.push_back(check("cc" + std::to_string(n), {}, F::circ(inner), true));
  }
  return r;
}

LfiReport check_bullet_laws() {
  using F = Formula;
  LfiReport r;
  const F contradiction = F::conj(p(), F::neg(p()));
  r.checks.push_back(check("bullet from contradiction", {contradiction}, F::bullet(p()), true));
  r.checks.push_back(check("contradiction from bullet", {F::bullet(p())}, contradiction, false));
  r.checks.push_back(check("bullet to negated bullet", {F::bullet(p())}, F::bullet(F::neg(p())), true));
  r.checks.push_back(check("negated bullet to bullet", {F::bullet(F::neg(p()))}, F::bullet(p()), true));
  const F either = F::disj(F::bullet(p()), F::bullet(q()));
  r.checks.push_back(check("bullet of meet", {F::bullet(F::conj(p(), q()))}, either, true));
  r.checks.push_back(check("bullet of meet converse", {either}, F::bullet(F::conj(p(), q())), false));
  r.checks.push_back(check("bullet of join", {F::bullet(F::disj(p(), q()))}, either, true));
  r.checks.push_back(check("bullet of join converse", {either}, F::bullet(F::disj(p(), q())), false));
  return r;
}

LfiReport check_gentle_explosion() {
  using F = Formula;
  LfiReport r;
  const F consistent = F::circ(p());
  r.checks.push_back(check("consistent affirmation", {consistent, p()}, q(), false));
  r.checks.push_back(check("consistent negation", {consistent, F::neg(p())}, q(), false));
  r.checks.push_back(check("gentle explosion", {consistent, p(), F::neg(p())}, F::bottom(), true));
  return r;
}

LfiReport check_paraconsistency() {
  using F = Formula;
  LfiReport r;
  r.checks.push_back(check("non-explosive", {p(), F::neg(p())}, q(), false));
  r.checks.push_back(check("paracomplete", {}, F::disj(q(), F::neg(q())), false));
  return r;
}

LfiReport lfi_audit(int max_n) {
  using F = Formula;
  LfiReport r;
  const auto& a = s6();
  // Expected rows: o is 1 exactly on 0 and 1.
  bool table_ok = true;
  for (const auto& row : consistency_truth_table()) {
    const bool classical = row.value == a.bottom() || row.value == a.top();
    table_ok = table_ok && row.circ == (classical ? a.top() : a.bottom()) &&
               row.bullet == (classical ? a.bottom() : a.top());
  }
  r.checks.push_back({"consistency table", "o x = 1 iff x in {0, 1}; * x = ~o x", true, table_ok, std::nullopt});
  r.checks.push_back(check("excluded inconsistency", {}, F::disj(F::circ(p()), F::bullet(p())), true));
  r.checks.push_back(check("no consistent inconsistency", {F::conj(F::circ(p()), F::bullet(p()))}, F::bottom(), true));
  for (auto* part : {&check_paraconsistency, &check_gentle_explosion, &check_bullet_laws}) {
    auto sub = (*part)();
    r.checks.insert(r.checks.end(), sub.checks.begin(), sub.checks.end());
  }
  auto prop = check_propagation(max_n);
  r.checks.insert(r.checks.end(), prop.checks.begin(), prop.checks.end());
  return r;
}

namespace {

bool classical_value(const Formula& f, const std::unordered_map<std::string, bool>& v, bool strict) {
  switch (f.kind()) {
    case Connective::kVar: return v.at(f.name());
    case Connective::kBottom: return false;
    case Connective::kTop: return true;
    case Connective::kNeg: return !classical_value(f.arg(), v, strict);
    case Connective::kNabla:
      if (strict) throw LanguageError("'#' is not a classical connective: " + render(f));
      return classical_value(f.arg(), v, strict);
    case Connective::kAnd: return classical_value(f.left(), v, strict) && classical_value(f.right(), v, strict);
    case Connective::kOr: return classical_value(f.left(), v, strict) || classical_value(f.right(), v, strict);
  }
  return false;
}

}  // namespace

bool cpl_entails(std::span<const Formula> premises, const Formula& goal, CplOptions options) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(goal);
  if (options.strict)
    for (const auto& f : all)
      if (contains_nabla(f)) throw LanguageError("'#' is not a classical connective: " + render(f));
  const auto names = vars(all);
  if (static_cast<int>(names.size()) > options.max_vars)
    throw BudgetError("classical check has " + std::to_string(names.size()) + " variables; the limit is " +
                      std::to_string(options.max_vars));
  std::unordered_map<std::string, bool> v;
  const std::uint64_t rows = std::uint64_t{1} << names.size();
  for (std::uint64_t bits = 0; bits < rows; ++bits) {
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (bits >> i) & 1U;
    const bool premises_true = std::all_of(premises.begin(), premises.end(),
                                           [&](const Formula& f) { return classical_value(f, v, options.strict); });
    if (premises_true && !classical_value(goal, v, options.strict)) return false;
  }
  return true;
}

DatResult dat_check(std::span<const Formula> premises, const Formula& goal, SearchLimits limits) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(goal);
  for (const auto& f : all)
    if (contains_nabla(f)) throw LanguageError("input must be written with ~, &, | only: " + render(f));
  DatResult r;
  r.cpl = cpl_entails(premises, goal, {.strict = true, .max_vars = limits.max_vars});
  r.augmented_premises.assign(premises.begin(), premises.end());
  for (const auto& name : vars(all)) r.augmented_premises.push_back(Formula::circ(Formula::var(name)));
  r.six_with_circ = entails_six(r.augmented_premises, goal, limits).holds;
  r.agree = r.cpl == r.six_with_circ;
  return r;
}

}  // namespace six
