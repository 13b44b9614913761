#include "six/algebra.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace six {

namespace {

std::uint32_t next_algebra_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1);
}

std::string fail_message(const std::string& algebra, const std::string& what) {
  return "algebra '" + algebra + "': " + what;
}

// Builds meet/join tables as glb/lub of a partial order given by `below`.
AlgebraTables tables_from_order(std::string name, std::vector<std::string> elements,
                                const std::function<bool(int, int)>& below,
                                std::vector<int> neg, std::vector<int> nabla) {
  const int n = static_cast<int>(elements.size());
  AlgebraTables t;
  t.name = std::move(name);
  t.elements = std::move(elements);
  t.leq.assign(static_cast<std::size_t>(n * n), false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.leq[static_cast<std::size_t>(x * n + y)] = below(x, y);
  auto leq = [&](int x, int y) { return t.leq[static_cast<std::size_t>(x * n + y)]; };
  t.meet.assign(static_cast<std::size_t>(n * n), -1);
  t.join.assign(static_cast<std::size_t>(n * n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (leq(z, x) && leq(z, y)) {
          int& m = t.meet[static_cast<std::size_t>(x * n + y)];
          if (m < 0 || leq(m, z)) m = z;
        }
        if (leq(x, z) && leq(y, z)) {
          int& j = t.join[static_cast<std::size_t>(x * n + y)];
          if (j < 0 || leq(z, j)) j = z;
        }
      }
    }
  }
  t.neg = std::move(neg);
  t.nabla = std::move(nabla);
  return t;
}

AlgebraTables chain_tables(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      names.emplace_back("0");
    } else if (i == n - 1) {
      names.emplace_back("1");
    } else {
      int num = i, den = n - 1;
      int g = std::gcd(num, den);
      names.push_back(std::to_string(num / g) + "/" + std::to_string(den / g));
    }
  }
  std::vector<int> neg(static_cast<std::size_t>(n)), nabla(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    neg[static_cast<std::size_t>(i)] = n - 1 - i;
    nabla[static_cast<std::size_t>(i)] = i == 0 ? 0 : n - 1;
  }
  return tables_from_order("L" + std::to_string(n), std::move(names),
                           [](int x, int y) { return x <= y; }, std::move(neg), std::move(nabla));
}

AlgebraTables s6_tables() {
  // 0 < 1/3 < {N, B} < 2/3 < 1, N and B incomparable.
  enum { kZero, kThird, kN, kB, kTwoThirds, kOne };
  constexpr std::array<int, 6> rank = {0, 1, 2, 2, 3, 4};
  auto below = [&](int x, int y) {
    if (x == y) return true;
    if ((x == kN && y == kB) || (x == kB && y == kN)) return false;
    return rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)];
  };
  return tables_from_order("S6", {"0", "1/3", "N", "B", "2/3", "1"}, below,
                           {kOne, kTwoThirds, kN, kB, kThird, kZero},
                           {kZero, kOne, kOne, kOne, kOne, kOne});
}

AlgebraTables b4_tables() {
  // Belnap lattice 0 < N, B < 1 with the identity standing in for nabla.
  auto below = [](int x, int y) { return x == y || x == 0 || y == 3; };
  return tables_from_order("B4", {"0", "N", "B", "1"}, below, {3, 1, 2, 0}, {0, 1, 2, 3});
}

}  // namespace

std::optional<BuiltinAlgebra> builtin_from_name(std::string_view name) {
  if (name == "S6") return BuiltinAlgebra::kS6;
  if (name == "L2") return BuiltinAlgebra::kL2;
  if (name == "L3") return BuiltinAlgebra::kL3;
  if (name == "L4") return BuiltinAlgebra::kL4;
  if (name == "L5") return BuiltinAlgebra::kL5;
  if (name == "B4" || name == "B4_demorgan") return BuiltinAlgebra::kB4DeMorgan;
  return std::nullopt;
}

FiniteAlgebra::FiniteAlgebra(AlgebraTables tables, AlgebraKind kind)
    : tables_(std::move(tables)), kind_(kind), id_(next_algebra_id()) {
  validate_shapes();
  if (kind_ == AlgebraKind::kUnchecked) {
    // Bounds are still needed by the evaluators; take them from the order
    // table when it has them, otherwise fall back to the first and last rows.
    bottom_ = 0;
    top_ = size() - 1;
    for (int x = 0; x < size(); ++x) {
      bool is_bottom = true, is_top = true;
      for (int y = 0; y < size(); ++y) {
        is_bottom = is_bottom && leq_at(x, y);
        is_top = is_top && leq_at(y, x);
      }
      if (is_bottom) bottom_ = x;
      if (is_top) top_ = x;
    }
    return;
  }
  validate_lattice();
  validate_de_morgan();
  if (kind_ == AlgebraKind::kInvolutiveStone) validate_stone();
}

void FiniteAlgebra::validate_shapes() const {
  const auto n = tables_.elements.size();
  if (n == 0) throw AlgebraError(fail_message(name(), "empty carrier"));
  if (n > static_cast<std::size_t>(kMaxElements))
    throw AlgebraError(fail_message(name(), "carrier larger than 64 elements"));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (tables_.elements[i] == tables_.elements[j])
        throw AlgebraError(fail_message(name(), "duplicate element '" + tables_.elements[i] + "'"));
  auto in_range = [n](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [n](int x) { return x >= 0 && static_cast<std::size_t>(x) < n; });
  };
  if (tables_.leq.size() != n * n || tables_.meet.size() != n * n || tables_.join.size() != n * n ||
      tables_.neg.size() != n || tables_.nabla.size() != n)
    throw AlgebraError(fail_message(name(), "table dimensions do not match the carrier"));
  if (!in_range(tables_.meet) || !in_range(tables_.join) || !in_range(tables_.neg) || !in_range(tables_.nabla))
    throw AlgebraError(fail_message(name(), "table entry outside the carrier"));
}

void FiniteAlgebra::validate_lattice() {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    if (!leq_at(x, x)) throw AlgebraError(fail_message(name(), "order is not reflexive at " + tables_.elements[x]));
    for (int y = 0; y < n; ++y) {
      if (x != y && leq_at(x, y) && leq_at(y, x))
        throw AlgebraError(fail_message(name(), "order is not antisymmetric"));
      for (int z = 0; z < n; ++z)
        if (leq_at(x, y) && leq_at(y, z) && !leq_at(x, z))
          throw AlgebraError(fail_message(name(), "order is not transitive"));
    }
  }
  // meet/join must be the glb/lub of the order.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int m = meet_at(x, y), j = join_at(x, y);
      if (!leq_at(m, x) || !leq_at(m, y) || !leq_at(x, j) || !leq_at(y, j))
        throw AlgebraError(fail_message(name(), "meet/join are not bounds of the order"));
      for (int z = 0; z < n; ++z) {
        if (leq_at(z, x) && leq_at(z, y) && !leq_at(z, m))
          throw AlgebraError(fail_message(name(), "meet is not the greatest lower bound"));
        if (leq_at(x, z) && leq_at(y, z) && !leq_at(j, z))
          throw AlgebraError(fail_message(name(), "join is not the least upper bound"));
      }
    }
  }
  int bottom = -1, top = -1;
  for (int x = 0; x < n; ++x) {
    bool is_bottom = true, is_top = true;
    for (int y = 0; y < n; ++y) {
      is_bottom = is_bottom && leq_at(x, y);
      is_top = is_top && leq_at(y, x);
    }
    if (is_bottom) bottom = x;
    if (is_top) top = x;
  }
  if (bottom < 0 || top < 0) throw AlgebraError(fail_message(name(), "lattice is not bounded"));
  bottom_ = bottom;
  top_ = top;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (meet_at(x, join_at(y, z)) != join_at(meet_at(x, y), meet_at(x, z)))
          throw AlgebraError(fail_message(name(), "lattice is not distributive"));
}

void FiniteAlgebra::validate_de_morgan() const {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    if (neg_at(neg_at(x)) != x) throw AlgebraError(fail_message(name(), "DM1 fails: ~~x != x"));
    for (int y = 0; y < n; ++y)
      if (neg_at(meet_at(x, y)) != join_at(neg_at(x), neg_at(y)))
        throw AlgebraError(fail_message(name(), "DM2 fails: ~(x & y) != ~x | ~y"));
  }
}

void FiniteAlgebra::validate_stone() const {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    if (meet_at(x, nabla_at(x)) != x) throw AlgebraError(fail_message(name(), "IS2 fails: x & #x != x"));
    if (meet_at(neg_at(nabla_at(x)), nabla_at(x)) != bottom_)
      throw AlgebraError(fail_message(name(), "IS4 fails: ~#x & #x != 0"));
    for (int y = 0; y < n; ++y)
      if (nabla_at(meet_at(x, y)) != meet_at(nabla_at(x), nabla_at(y)))
        throw AlgebraError(fail_message(name(), "IS3 fails: #(x & y) != #x & #y"));
  }
  if (nabla_at(bottom_) != bottom_) throw AlgebraError(fail_message(name(), "IS1 fails: #0 != 0"));
}

TruthValue FiniteAlgebra::value(int index) const {
  if (index < 0 || index >= size())
    throw AlgebraError(fail_message(name(), "index " + std::to_string(index) + " outside the carrier"));
  return TruthValue(id_, static_cast<std::uint8_t>(index));
}

std::optional<TruthValue> FiniteAlgebra::find(std::string_view element) const {
  for (int i = 0; i < size(); ++i)
    if (tables_.elements[static_cast<std::size_t>(i)] == element) return value(i);
  return std::nullopt;
}

TruthValue FiniteAlgebra::value(std::string_view element) const {
  if (auto v = find(element)) return *v;
  throw AlgebraError(fail_message(name(), "no element named '" + std::string(element) + "'"));
}

const std::string& FiniteAlgebra::name_of(TruthValue v) const {
  check_owned(v);
  return tables_.elements[v.index()];
}

std::vector<TruthValue> FiniteAlgebra::carrier() const {
  std::vector<TruthValue> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out.push_back(value(i));
  return out;
}

void FiniteAlgebra::check_owned(TruthValue v) const {
  if (!owns(v)) throw AlgebraError(fail_message(name(), "value belongs to a different algebra"));
}

bool FiniteAlgebra::leq(TruthValue a, TruthValue b) const {
  check_owned(a);
  check_owned(b);
  return leq_at(a.index(), b.index());
}

TruthValue FiniteAlgebra::meet(TruthValue a, TruthValue b) const {
  check_owned(a);
  check_owned(b);
  return value(meet_at(a.index(), b.index()));
}

TruthValue FiniteAlgebra::join(TruthValue a, TruthValue b) const {
  check_owned(a);
  check_owned(b);
  return value(join_at(a.index(), b.index()));
}

TruthValue FiniteAlgebra::neg(TruthValue a) const {
  check_owned(a);
  return value(neg_at(a.index()));
}

TruthValue FiniteAlgebra::nabla(TruthValue a) const {
  check_owned(a);
  return value(nabla_at(a.index()));
}

TruthValue FiniteAlgebra::delta(TruthValue a) const { return neg(nabla(neg(a))); }

const FiniteAlgebra& builtin_algebra(BuiltinAlgebra which) {
  static const FiniteAlgebra s6_algebra(s6_tables(), AlgebraKind::kInvolutiveStone);
  static const FiniteAlgebra l2(chain_tables(2), AlgebraKind::kInvolutiveStone);
  static const FiniteAlgebra l3(chain_tables(3), AlgebraKind::kInvolutiveStone);
  static const FiniteAlgebra l4(chain_tables(4), AlgebraKind::kInvolutiveStone);
  static const FiniteAlgebra l5(chain_tables(5), AlgebraKind::kInvolutiveStone);
  static const FiniteAlgebra b4(b4_tables(), AlgebraKind::kDeMorgan);
  switch (which) {
    case BuiltinAlgebra::kS6: return s6_algebra;
    case BuiltinAlgebra::kL2: return l2;
    case BuiltinAlgebra::kL3: return l3;
    case BuiltinAlgebra::kL4: return l4;
    case BuiltinAlgebra::kL5: return l5;
    case BuiltinAlgebra::kB4DeMorgan: return b4;
  }
  throw AlgebraError("unknown builtin algebra");
}

const FiniteAlgebra& builtin_algebra(std::string_view name) {
  if (auto which = builtin_from_name(name)) return builtin_algebra(*which);
  throw AlgebraError("unknown builtin algebra '" + std::string(name) + "' (expected S6, L2, L3, L4, L5 or B4)");
}

const FiniteAlgebra& s6() { return builtin_algebra(BuiltinAlgebra::kS6); }

Filter::Filter(const FiniteAlgebra& algebra, std::uint64_t members) : algebra_(&algebra), bits_(members) {
  const int n = algebra.size();
  if (n < 64 && (members >> n) != 0) throw AlgebraError("filter member outside the carrier");
  if (!contains_index(algebra.top_index())) throw AlgebraError("filter must contain top");
  for (int x = 0; x < n; ++x) {
    if (!contains_index(x)) continue;
    for (int y = 0; y < n; ++y) {
      if (algebra.leq_at(x, y) && !contains_index(y)) throw AlgebraError("filter is not upward closed");
      if (contains_index(y) && !contains_index(algebra.meet_at(x, y)))
        throw AlgebraError("filter is not closed under meet");
    }
  }
}

bool Filter::contains(TruthValue v) const {
  if (!algebra_->owns(v)) throw AlgebraError("value belongs to a different algebra");
  return contains_index(v.index());
}

std::vector<TruthValue> Filter::members() const {
  std::vector<TruthValue> out;
  for (int i = 0; i < algebra_->size(); ++i)
    if (contains_index(i)) out.push_back(algebra_->value(i));
  return out;
}

int Filter::size() const { return std::popcount(bits_); }

std::string Filter::to_string() const {
  // In a finite lattice the least member generates the filter.
  for (int g = 0; g < algebra_->size(); ++g) {
    if (!contains_index(g)) continue;
    bool least = true;
    for (int y = 0; y < algebra_->size(); ++y)
      if (contains_index(y) && !algebra_->leq_at(g, y)) least = false;
    if (least) return "[" + algebra_->tables().elements[static_cast<std::size_t>(g)] + ")";
  }
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto v : members()) {
    out << (first ? "" : ", ") << algebra_->name_of(v);
    first = false;
  }
  out << '}';
  return out.str();
}

Filter principal_filter(const FiniteAlgebra& a, TruthValue x) {
  if (!a.owns(x)) throw AlgebraError("value belongs to a different algebra");
  std::uint64_t bits = 0;
  for (int y = 0; y < a.size(); ++y)
    if (a.leq_at(x.index(), y)) bits |= std::uint64_t{1} << y;
  return Filter(a, bits);
}

Filter generated_filter(const FiniteAlgebra& a, std::span<const TruthValue> gens) {
  TruthValue m = a.top();
  for (auto g : gens) m = a.meet(m, g);
  return principal_filter(a, m);
}

std::vector<Filter> all_lattice_filters(const FiniteAlgebra& a) {
  std::vector<Filter> out;
  for (auto x : a.carrier()) out.push_back(principal_filter(a, x));
  return out;
}

std::vector<TruthValue> k_elements(const FiniteAlgebra& a) {
  std::vector<TruthValue> out;
  const int n = a.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (a.join_at(x, y) == a.top_index() && a.meet_at(x, y) == a.bottom_index()) {
        // Complements are unique in a distributive lattice.
        if (a.neg_at(x) == y) out.push_back(a.value(x));
        break;
      }
    }
  }
  return out;
}

TruthValue swap_nb(const FiniteAlgebra& s6_algebra, TruthValue x) {
  auto n = s6_algebra.find("N");
  auto b = s6_algebra.find("B");
  if (s6_algebra.name() != "S6" || !n || !b) throw AlgebraError("swap_nb is defined on S6 only");
  if (!s6_algebra.owns(x)) throw AlgebraError("value belongs to a different algebra");
  if (x == *n) return *b;
  if (x == *b) return *n;
  return x;
}

namespace {

struct Identity {
  const char* name;
  const char* statement;
  int arity;
  std::function<bool(const FiniteAlgebra&, const int*)> holds;
};

const std::vector<Identity>& identities() {
  using A = const FiniteAlgebra&;
  static const std::vector<Identity> all = {
      {"DM1", "~~x = x", 1, [](A a, const int* v) { return a.neg_at(a.neg_at(v[0])) == v[0]; }},
      {"DM2", "~(x & y) = ~x | ~y", 2,
       [](A a, const int* v) { return a.neg_at(a.meet_at(v[0], v[1])) == a.join_at(a.neg_at(v[0]), a.neg_at(v[1])); }},
      {"IS1", "#0 = 0", 0, [](A a, const int*) { return a.nabla_at(a.bottom_index()) == a.bottom_index(); }},
      {"IS2", "x & #x = x", 1, [](A a, const int* v) { return a.meet_at(v[0], a.nabla_at(v[0])) == v[0]; }},
      {"IS3", "#(x & y) = #x & #y", 2,
       [](A a, const int* v) {
         return a.nabla_at(a.meet_at(v[0], v[1])) == a.meet_at(a.nabla_at(v[0]), a.nabla_at(v[1]));
       }},
      {"IS4", "~#x & #x = 0", 1,
       [](A a, const int* v) { return a.meet_at(a.neg_at(a.nabla_at(v[0])), a.nabla_at(v[0])) == a.bottom_index(); }},
      {"IS5", "#1 = 1", 0, [](A a, const int*) { return a.nabla_at(a.top_index()) == a.top_index(); }},
      {"IS6", "~x | #x = 1", 1,
       [](A a, const int* v) { return a.join_at(a.neg_at(v[0]), a.nabla_at(v[0])) == a.top_index(); }},
      {"IS7", "##x = #x", 1, [](A a, const int* v) { return a.nabla_at(a.nabla_at(v[0])) == a.nabla_at(v[0]); }},
      {"IS8", "#~#x = ~#x", 1,
       [](A a, const int* v) { return a.nabla_at(a.neg_at(a.nabla_at(v[0]))) == a.neg_at(a.nabla_at(v[0])); }},
      {"IS9", "#(x | ~x) = 1", 1,
       [](A a, const int* v) { return a.nabla_at(a.join_at(v[0], a.neg_at(v[0]))) == a.top_index(); }},
      {"IS10", "x & ~#x = 0", 1,
       [](A a, const int* v) { return a.meet_at(v[0], a.neg_at(a.nabla_at(v[0]))) == a.bottom_index(); }},
      {"IS11", "#(x | #y) = #x | #y", 2,
       [](A a, const int* v) {
         return a.nabla_at(a.join_at(v[0], a.nabla_at(v[1]))) == a.join_at(a.nabla_at(v[0]), a.nabla_at(v[1]));
       }},
      {"IS12", "Dx & x = Dx", 1, [](A a, const int* v) { return a.meet_at(a.delta_at(v[0]), v[0]) == a.delta_at(v[0]); }},
      {"IS13", "D#x = #x", 1, [](A a, const int* v) { return a.delta_at(a.nabla_at(v[0])) == a.nabla_at(v[0]); }},
      {"IS14", "#Dx = Dx", 1, [](A a, const int* v) { return a.nabla_at(a.delta_at(v[0])) == a.delta_at(v[0]); }},
      {"IS15", "D(x & ~x) = 0", 1,
       [](A a, const int* v) { return a.delta_at(a.meet_at(v[0], a.neg_at(v[0]))) == a.bottom_index(); }},
      {"IS16", "D(x | y) = Dx | Dy", 2,
       [](A a, const int* v) {
         return a.delta_at(a.join_at(v[0], v[1])) == a.join_at(a.delta_at(v[0]), a.delta_at(v[1]));
       }},
      {"IS17", "D(x & y) = Dx & Dy", 2,
       [](A a, const int* v) {
         return a.delta_at(a.meet_at(v[0], v[1])) == a.meet_at(a.delta_at(v[0]), a.delta_at(v[1]));
       }},
  };
  return all;
}

}  // namespace

std::vector<IdentityResult> audit_identities(const FiniteAlgebra& a) {
  std::vector<IdentityResult> report;
  const int n = a.size();
  for (const auto& id : identities()) {
    IdentityResult r{id.name, id.statement, true, 0, std::nullopt};
    std::array<int, 2> tuple{0, 0};
    std::size_t total = 1;
    for (int i = 0; i < id.arity; ++i) total *= static_cast<std::size_t>(n);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (int i = id.arity - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(n));
        c /= static_cast<std::size_t>(n);
      }
      ++r.tuples_checked;
      if (!id.holds(a, tuple.data())) {
        r.holds = false;
        std::vector<TruthValue> w;
        for (int i = 0; i < id.arity; ++i) w.push_back(a.value(tuple[static_cast<std::size_t>(i)]));
        r.witness = std::move(w);
        break;
      }
    }
    report.push_back(std::move(r));
  }
  return report;
}

bool is_homomorphism(const FiniteAlgebra& from, const FiniteAlgebra& to, std::span<const int> map) {
  const int n = from.size();
  if (static_cast<int>(map.size()) != n) return false;
  auto f = [&](int x) { return map[static_cast<std::size_t>(x)]; };
  if (std::any_of(map.begin(), map.end(), [&](int y) { return y < 0 || y >= to.size(); })) return false;
  if (f(from.bottom_index()) != to.bottom_index() || f(from.top_index()) != to.top_index()) return false;
  for (int x = 0; x < n; ++x) {
    if (f(from.neg_at(x)) != to.neg_at(f(x)) || f(from.nabla_at(x)) != to.nabla_at(f(x))) return false;
    for (int y = 0; y < n; ++y)
      if (f(from.meet_at(x, y)) != to.meet_at(f(x), f(y)) || f(from.join_at(x, y)) != to.join_at(f(x), f(y)))
        return false;
  }
  return true;
}

std::vector<int> lukasiewicz_embedding(int n) {
  // Indices into S6: 0, 1/3, N, B, 2/3, 1.
  switch (n) {
    case 2: return {0, 5};
    case 3: return {0, 2, 5};
    case 4: return {0, 1, 4, 5};
    case 5: return {0, 1, 2, 4, 5};
    default: throw AlgebraError("no embedding of L" + std::to_string(n) + " into S6 (need 2 <= n <= 5)");
  }
}

}  // namespace six
