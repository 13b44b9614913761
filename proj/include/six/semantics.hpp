#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "six/algebra.hpp"
#include "six/formula.hpp"

namespace six {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a query exceeds the configured variable or size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchLimits {
  int max_vars = 8;
};

/// Assignment of carrier values to variable names.
class Valuation {
 public:
  explicit Valuation(const FiniteAlgebra& algebra) : algebra_(&algebra) {}

  const FiniteAlgebra& algebra() const { return *algebra_; }
  void set(const std::string& var, TruthValue value);
  std::optional<TruthValue> get(const std::string& var) const;
  /// Throws EvaluationError for unmapped variables.
  TruthValue at(const std::string& var) const;
  const std::map<std::string, TruthValue>& assignments() const { return values_; }

  /// "p=N, q=B"; variables in name order.
  std::string to_string() const;

 private:
  const FiniteAlgebra* algebra_;
  std::map<std::string, TruthValue> values_;
};

TruthValue eval(const Formula& f, const Valuation& v);

/// A formula flattened into a register program over a fixed variable order.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, std::span<const std::string> var_order);

  /// `values[i]` is the carrier index of var_order[i].
  int eval(const FiniteAlgebra& a, std::span<const int> values) const;

 private:
  enum class Op : std::uint8_t { kVar, kBottom, kTop, kNeg, kNabla, kAnd, kOr };
  struct Instr {
    Op op;
    int a;
    int b;
  };
  std::vector<Instr> code_;
  mutable std::vector<int> regs_;
};

/// Calls `visit(values)` for every valuation of `num_vars` variables in
/// lexicographic carrier order, first variable most significant.  Stops
/// early when `visit` returns false.
void for_each_valuation(const FiniteAlgebra& a, int num_vars, const std::function<bool(std::span<const int>)>& visit);

/// The witness of Definition-style failure: every premise is >= bound but the
/// goal is not.
struct Countermodel {
  Valuation valuation;
  TruthValue bound;

  /// "p=N, q=B @ bound=N"
  std::string to_string() const;
};

struct EntailmentResult {
  bool holds = true;
  std::optional<Countermodel> countermodel;
};

/// Degrees-of-truth entailment over a finite algebra.  With premises it holds
/// iff meet(premises) <= goal under every valuation; with none, iff the goal
/// is always top.  The countermodel is the first failing valuation in
/// lexicographic order, with bound = meet(premises) (top when empty).
EntailmentResult entails_degree(std::span<const Formula> premises, const Formula& goal, const FiniteAlgebra& a,
                                SearchLimits limits = {});
EntailmentResult entails_six(std::span<const Formula> premises, const Formula& goal, SearchLimits limits = {});

/// meet(lhs) <= join(rhs) under every valuation, with meet() = top and
/// join() = bottom.  Same countermodel convention as entails_degree.
EntailmentResult entails_multi(std::span<const Formula> lhs, std::span<const Formula> rhs, const FiniteAlgebra& a,
                               SearchLimits limits = {});

/// True when the countermodel really refutes lhs => rhs.
bool refutes(const Countermodel& cm, std::span<const Formula> lhs, std::span<const Formula> rhs);

class Matrix {
 public:
  explicit Matrix(Filter designated) : designated_(designated) {}
  const FiniteAlgebra& algebra() const { return designated_.algebra(); }
  const Filter& designated() const { return designated_; }

 private:
  Filter designated_;
};

/// Truth preservation: every valuation designating all premises designates
/// the goal.
bool matrix_entails(const Matrix& m, std::span<const Formula> premises, const Formula& goal, SearchLimits limits = {});

/// Conjunction over the matrices of S6 with designated sets [1/3), [N), [2/3), [1).
bool four_matrix_entails(std::span<const Formula> premises, const Formula& goal, SearchLimits limits = {});

/// Conjunction over a family of filters of one algebra.
bool gmatrix_entails(std::span<const Filter> family, std::span<const Formula> premises, const Formula& goal,
                     SearchLimits limits = {});
/// Family = every lattice filter of the algebra.
bool gmatrix_entails(const FiniteAlgebra& a, std::span<const Formula> premises, const Formula& goal,
                     SearchLimits limits = {});

/// Same value under every S6 valuation.
bool equivalent(const Formula& a, const Formula& b, SearchLimits limits = {});
/// First valuation separating a and b, if any.
std::optional<Valuation> distinguishing_valuation(const Formula& a, const Formula& b, const FiniteAlgebra& alg,
                                                  SearchLimits limits = {});

struct TruthTable {
  std::vector<std::string> vars;
  std::vector<std::vector<TruthValue>> inputs;
  std::vector<TruthValue> outputs;
};

TruthTable truth_table(const Formula& f, const FiniteAlgebra& a, SearchLimits limits = {});

/// Deduplicated copy of a formula list, in structural order.
std::vector<Formula> dedup_formulas(std::span<const Formula> fs);

}  // namespace six
