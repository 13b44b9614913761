#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace six {

class FiniteAlgebra;

/// An element of a finite algebra's carrier.
///
/// Values remember which algebra they were drawn from; every operation on
/// FiniteAlgebra rejects values that belong to a different algebra.
class TruthValue {
 public:
  TruthValue() = default;

  std::uint8_t index() const { return index_; }
  std::uint32_t algebra_id() const { return algebra_id_; }

  friend bool operator==(const TruthValue&, const TruthValue&) = default;
  friend auto operator<=>(const TruthValue&, const TruthValue&) = default;

 private:
  friend class FiniteAlgebra;
  TruthValue(std::uint32_t algebra, std::uint8_t index) : algebra_id_(algebra), index_(index) {}

  std::uint32_t algebra_id_ = 0;
  std::uint8_t index_ = 0;
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How much of the axiom set the constructor enforces.
enum class AlgebraKind {
  kInvolutiveStone,  // bounded distributive lattice + DM1/DM2 + IS1-IS4
  kDeMorgan,         // lattice + DM1/DM2; the nabla table is carried but not audited
  kUnchecked,        // only table shapes are checked (negative tests)
};

/// Raw operation tables, indexed by carrier ordinal.  Binary tables are
/// row-major: table[x * n + y].
struct AlgebraTables {
  std::string name;
  std::vector<std::string> elements;
  std::vector<bool> leq;
  std::vector<int> meet;
  std::vector<int> join;
  std::vector<int> neg;
  std::vector<int> nabla;
};

enum class BuiltinAlgebra { kS6, kL2, kL3, kL4, kL5, kB4DeMorgan };

std::optional<BuiltinAlgebra> builtin_from_name(std::string_view name);

class Filter;

/// A finite algebra of the signature (meet, join, neg, nabla, 0, 1) stored as
/// dense tables.  Immutable after construction.
class FiniteAlgebra {
 public:
  static constexpr int kMaxElements = 64;

  FiniteAlgebra(AlgebraTables tables, AlgebraKind kind);

  const std::string& name() const { return tables_.name; }
  AlgebraKind kind() const { return kind_; }
  bool is_s_algebra() const { return kind_ == AlgebraKind::kInvolutiveStone; }
  std::uint32_t id() const { return id_; }
  int size() const { return static_cast<int>(tables_.elements.size()); }

  TruthValue value(int index) const;
  TruthValue value(std::string_view name) const;
  std::optional<TruthValue> find(std::string_view name) const;
  const std::string& name_of(TruthValue v) const;
  std::vector<TruthValue> carrier() const;
  bool owns(TruthValue v) const { return v.algebra_id() == id_ && v.index() < tables_.elements.size(); }

  TruthValue bottom() const { return value(bottom_); }
  TruthValue top() const { return value(top_); }

  bool leq(TruthValue a, TruthValue b) const;
  TruthValue meet(TruthValue a, TruthValue b) const;
  TruthValue join(TruthValue a, TruthValue b) const;
  TruthValue neg(TruthValue a) const;
  TruthValue nabla(TruthValue a) const;
  /// Derived: neg(nabla(neg(a))).
  TruthValue delta(TruthValue a) const;

  // Index-level access for the evaluators; no ownership checks.
  int bottom_index() const { return bottom_; }
  int top_index() const { return top_; }
  bool leq_at(int a, int b) const { return tables_.leq[static_cast<std::size_t>(a * size() + b)]; }
  int meet_at(int a, int b) const { return tables_.meet[static_cast<std::size_t>(a * size() + b)]; }
  int join_at(int a, int b) const { return tables_.join[static_cast<std::size_t>(a * size() + b)]; }
  int neg_at(int a) const { return tables_.neg[static_cast<std::size_t>(a)]; }
  int nabla_at(int a) const { return tables_.nabla[static_cast<std::size_t>(a)]; }
  int delta_at(int a) const { return neg_at(nabla_at(neg_at(a))); }

  const AlgebraTables& tables() const { return tables_; }

 private:
  void check_owned(TruthValue v) const;
  void validate_shapes() const;
  void validate_lattice();
  void validate_de_morgan() const;
  void validate_stone() const;

  AlgebraTables tables_;
  AlgebraKind kind_;
  std::uint32_t id_;
  int bottom_ = 0;
  int top_ = 0;
};

/// The shared instances of the named algebras.  S6 carrier order is
/// 0, 1/3, N, B, 2/3, 1.
const FiniteAlgebra& builtin_algebra(BuiltinAlgebra which);
const FiniteAlgebra& builtin_algebra(std::string_view name);
const FiniteAlgebra& s6();

/// Lattice filter, stored as a bit set over the carrier.
class Filter {
 public:
  Filter(const FiniteAlgebra& algebra, std::uint64_t members);

  const FiniteAlgebra& algebra() const { return *algebra_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(TruthValue v) const;
  bool contains_index(int i) const { return (bits_ >> i) & 1U; }
  std::vector<TruthValue> members() const;
  int size() const;

  /// Renders as "[x)" when principal, otherwise as a set.
  std::string to_string() const;

  friend bool operator==(const Filter& a, const Filter& b) {
    return a.algebra_->id() == b.algebra_->id() && a.bits_ == b.bits_;
  }

 private:
  const FiniteAlgebra* algebra_;
  std::uint64_t bits_;
};

/// Smallest filter containing the generators: the up-set of their meet.
/// An empty generator set yields {top}.
Filter generated_filter(const FiniteAlgebra& a, std::span<const TruthValue> gens);
Filter principal_filter(const FiniteAlgebra& a, TruthValue x);

/// Every lattice filter of a finite lattice is principal; returned in
/// carrier order of the generating element.
std::vector<Filter> all_lattice_filters(const FiniteAlgebra& a);

/// Complemented elements whose lattice complement is their De Morgan negation.
std::vector<TruthValue> k_elements(const FiniteAlgebra& a);

/// Exchanges N and B in S6, fixing everything else.
TruthValue swap_nb(const FiniteAlgebra& s6_algebra, TruthValue x);

struct IdentityResult {
  std::string name;
  std::string statement;
  bool holds = true;
  std::size_t tuples_checked = 0;
  std::optional<std::vector<TruthValue>> witness;
};

/// Checks DM1, DM2 and IS1-IS17 over every tuple of the carrier.
std::vector<IdentityResult> audit_identities(const FiniteAlgebra& a);

/// True when `map` (by carrier index) preserves every operation and constant.
bool is_homomorphism(const FiniteAlgebra& from, const FiniteAlgebra& to, std::span<const int> map);

/// Embedding of the n-element chain into S6 (2 <= n <= 5), by carrier index.
std::vector<int> lukasiewicz_embedding(int n);

}  // namespace six
