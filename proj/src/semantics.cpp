#include "six/semantics.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace six {

void Valuation::set(const std::string& var, TruthValue value) {
  if (!algebra_->owns(value)) throw EvaluationError("value for '" + var + "' belongs to a different algebra");
  values_[var] = value;
}

std::optional<TruthValue> Valuation::get(const std::string& var) const {
  auto it = values_.find(var);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

TruthValue Valuation::at(const std::string& var) const {
  auto it = values_.find(var);
  if (it == values_.end()) throw EvaluationError("variable '" + var + "' is not assigned");
  return it->second;
}

std::string Valuation::to_string() const {
  std::string out;
  for (const auto& [name, value] : values_) {
    if (!out.empty()) out += ", ";
    out += name + "=" + algebra_->name_of(value);
  }
  return out;
}

TruthValue eval(const Formula& f, const Valuation& v) {
  const auto& a = v.algebra();
  switch (f.kind()) {
    case Connective::kVar: return v.at(f.name());
    case Connective::kBottom: return a.bottom();
    case Connective::kTop: return a.top();
    case Connective::kNeg: return a.neg(eval(f.arg(), v));
    case Connective::kNabla: return a.nabla(eval(f.arg(), v));
    case Connective::kAnd: return a.meet(eval(f.left(), v), eval(f.right(), v));
    case Connective::kOr: return a.join(eval(f.left(), v), eval(f.right(), v));
  }
  throw EvaluationError("unknown connective");
}

CompiledFormula::CompiledFormula(const Formula& f, std::span<const std::string> var_order) {
  std::unordered_map<std::string, int> slot;
  for (std::size_t i = 0; i < var_order.size(); ++i) slot.emplace(var_order[i], static_cast<int>(i));
  auto emit = [&](auto& self, const Formula& g) -> int {
    Instr ins{Op::kBottom, 0, 0};
    switch (g.kind()) {
      case Connective::kVar: {
        auto it = slot.find(g.name());
        if (it == slot.end()) throw EvaluationError("variable '" + g.name() + "' is not assigned");
        ins = {Op::kVar, it->second, 0};
        break;
      }
      case Connective::kBottom: ins = {Op::kBottom, 0, 0}; break;
      case Connective::kTop: ins = {Op::kTop, 0, 0}; break;
      case Connective::kNeg: ins = {Op::kNeg, self(self, g.arg()), 0}; break;
      case Connective::kNabla: ins = {Op::kNabla, self(self, g.arg()), 0}; break;
      case Connective::kAnd: {
        int l = self(self, g.left());
        ins = {Op::kAnd, l, self(self, g.right())};
        break;
      }
      case Connective::kOr: {
        int l = self(self, g.left());
        ins = {Op::kOr, l, self(self, g.right())};
        break;
      }
    }
    code_.push_back(ins);
    return static_cast<int>(code_.size()) - 1;
  };
  emit(emit, f);
  regs_.resize(code_.size());
}

int CompiledFormula::eval(const FiniteAlgebra& a, std::span<const int> values) const {
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& in = code_[i];
    int r = 0;
    switch (in.op) {
      case Op::kVar: r = values[static_cast<std::size_t>(in.a)]; break;
      case Op::kBottom: r = a.bottom_index(); break;
      case Op::kTop: r = a.top_index(); break;
      case Op::kNeg: r = a.neg_at(regs_[static_cast<std::size_t>(in.a)]); break;
      case Op::kNabla: r = a.nabla_at(regs_[static_cast<std::size_t>(in.a)]); break;
      case Op::kAnd: r = a.meet_at(regs_[static_cast<std::size_t>(in.a)], regs_[static_cast<std::size_t>(in.b)]); break;
      case Op::kOr: r = a.join_at(regs_[static_cast<std::size_t>(in.a)], regs_[static_cast<std::size_t>(in.b)]); break;
    }
    regs_[i] = r;
  }
  return regs_.back();
}

void for_each_valuation(const FiniteAlgebra& a, int num_vars, const std::function<bool(std::span<const int>)>& visit) {
  std::vector<int> values(static_cast<std::size_t>(num_vars), 0);
  const int n = a.size();
  while (true) {
    if (!visit(values)) return;
    int i = num_vars - 1;
    while (i >= 0 && ++values[static_cast<std::size_t>(i)] == n) values[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

std::string Countermodel::to_string() const {
  std::string vals = valuation.to_string();
  return (vals.empty() ? "" : vals + " ") + "@ bound=" + valuation.algebra().name_of(bound);
}

std::vector<Formula> dedup_formulas(std::span<const Formula> fs) {
  std::vector<Formula> out(fs.begin(), fs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<std::string> checked_vars(std::span<const Formula> a, std::span<const Formula> b, SearchLimits limits) {
  std::vector<Formula> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  auto names = vars(all);
  if (static_cast<int>(names.size()) > limits.max_vars)
    throw BudgetError("query has " + std::to_string(names.size()) + " variables; the limit is " +
                      std::to_string(limits.max_vars) + " (raise it with --max-vars)");
  return names;
}

std::vector<CompiledFormula> compile_all(std::span<const Formula> fs, const std::vector<std::string>& names) {
  std::vector<CompiledFormula> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.emplace_back(f, names);
  return out;
}

Valuation make_valuation(const FiniteAlgebra& a, const std::vector<std::string>& names, std::span<const int> values) {
  Valuation v(a);
  for (std::size_t i = 0; i < names.size(); ++i) v.set(names[i], a.value(values[i]));
  return v;
}

}  // namespace

EntailmentResult entails_multi(std::span<const Formula> lhs_in, std::span<const Formula> rhs_in,
                               const FiniteAlgebra& a, SearchLimits limits) {
  const auto lhs_list = dedup_formulas(lhs_in);
  const auto rhs_list = dedup_formulas(rhs_in);
  const auto names = checked_vars(lhs_list, rhs_list, limits);
  const auto lhs = compile_all(lhs_list, names);
  const auto rhs = compile_all(rhs_list, names);
  EntailmentResult result;
  for_each_valuation(a, static_cast<int>(names.size()), [&](std::span<const int> values) {
    int m = a.top_index();
    for (const auto& f : lhs) m = a.meet_at(m, f.eval(a, values));
    int j = a.bottom_index();
    for (const auto& f : rhs) j = a.join_at(j, f.eval(a, values));
    if (a.leq_at(m, j)) return true;
    result.holds = false;
    result.countermodel = Countermodel{make_valuation(a, names, values), a.value(m)};
    return false;
  });
  return result;
}

EntailmentResult entails_degree(std::span<const Formula> premises, const Formula& goal, const FiniteAlgebra& a,
                                SearchLimits limits) {
  return entails_multi(premises, std::span<const Formula>(&goal, 1), a, limits);
}

EntailmentResult entails_six(std::span<const Formula> premises, const Formula& goal, SearchLimits limits) {
  return entails_degree(premises, goal, s6(), limits);
}

bool refutes(const Countermodel& cm, std::span<const Formula> lhs, std::span<const Formula> rhs) {
  const auto& a = cm.valuation.algebra();
  if (!a.owns(cm.bound)) return false;
  try {
    for (const auto& f : lhs)
      if (!a.leq(cm.bound, eval(f, cm.valuation))) return false;
    TruthValue j = a.bottom();
    for (const auto& f : rhs) j = a.join(j, eval(f, cm.valuation));
    return !a.leq(cm.bound, j);
  } catch (const EvaluationError&) {
    return false;
  }
}

bool gmatrix_entails(std::span<const Filter> family, std::span<const Formula> premises_in, const Formula& goal,
                     SearchLimits limits) {
  if (family.empty()) return true;
  const FiniteAlgebra& a = family.front().algebra();
  for (const auto& f : family)
    if (f.algebra().id() != a.id()) throw AlgebraError("filters of a g-matrix must share one algebra");
  const auto premises_list = dedup_formulas(premises_in);
  const auto names = checked_vars(premises_list, std::span<const Formula>(&goal, 1), limits);
  const auto premises = compile_all(premises_list, names);
  const CompiledFormula target(goal, names);
  bool holds = true;
  std::vector<int> prem_values(premises.size());
  for_each_valuation(a, static_cast<int>(names.size()), [&](std::span<const int> values) {
    for (std::size_t i = 0; i < premises.size(); ++i) prem_values[i] = premises[i].eval(a, values);
    const int g = target.eval(a, values);
    for (const auto& filter : family) {
      if (filter.contains_index(g)) continue;
      if (std::all_of(prem_values.begin(), prem_values.end(), [&](int x) { return filter.contains_index(x); })) {
        holds = false;
        return false;
      }
    }
    return true;
  });
  return holds;
}

bool matrix_entails(const Matrix& m, std::span<const Formula> premises, const Formula& goal, SearchLimits limits) {
  return gmatrix_entails(std::span<const Filter>(&m.designated(), 1), premises, goal, limits);
}

bool gmatrix_entails(const FiniteAlgebra& a, std::span<const Formula> premises, const Formula& goal,
                     SearchLimits limits) {
  const auto family = all_lattice_filters(a);
  return gmatrix_entails(family, premises, goal, limits);
}

bool four_matrix_entails(std::span<const Formula> premises, const Formula& goal, SearchLimits limits) {
  const auto& a = s6();
  const std::vector<Filter> family = {principal_filter(a, a.value("1/3")), principal_filter(a, a.value("N")),
                                      principal_filter(a, a.value("2/3")), principal_filter(a, a.value("1"))};
  return gmatrix_entails(family, premises, goal, limits);
}

std::optional<Valuation> distinguishing_valuation(const Formula& x, const Formula& y, const FiniteAlgebra& a,
                                                  SearchLimits limits) {
  const auto names = checked_vars(std::span<const Formula>(&x, 1), std::span<const Formula>(&y, 1), limits);
  const CompiledFormula cx(x, names), cy(y, names);
  std::optional<Valuation> witness;
  for_each_valuation(a, static_cast<int>(names.size()), [&](std::span<const int> values) {
    if (cx.eval(a, values) == cy.eval(a, values)) return true;
    witness = make_valuation(a, names, values);
    return false;
  });
  return witness;
}

bool equivalent(const Formula& x, const Formula& y, SearchLimits limits) {
  return !distinguishing_valuation(x, y, s6(), limits).has_value();
}

TruthTable truth_table(const Formula& f, const FiniteAlgebra& a, SearchLimits limits) {
  TruthTable table;
  table.vars = checked_vars(std::span<const Formula>(&f, 1), {}, limits);
  const CompiledFormula cf(f, table.vars);
  for_each_valuation(a, static_cast<int>(table.vars.size()), [&](std::span<const int> values) {
    std::vector<TruthValue> row;
    for (int x : values) row.push_back(a.value(x));
    table.inputs.push_back(std::move(row));
    table.outputs.push_back(a.value(cf.eval(a, values)));
    return true;
  });
  return table;
}

}  // namespace six
