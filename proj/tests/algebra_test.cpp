#include <algorithm>
#include <set>

#include "doctest.h"
#include "six/algebra.hpp"

using namespace six;

namespace {

TruthValue v(const char* name) { return s6().value(name); }

// Brute-force filter enumeration over every subset of the carrier.
std::set<std::uint64_t> filters_by_subset_scan(const FiniteAlgebra& a) {
  std::set<std::uint64_t> out;
  const int n = a.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto in = [&](int x) { return (bits >> x) & 1U; };
    if (!in(a.top_index())) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (int y = 0; y < n && ok; ++y) {
        if (a.leq_at(x, y) && !in(y)) ok = false;
        if (in(y) && !in(a.meet_at(x, y))) ok = false;
      }
    }
    if (ok) out.insert(bits);
  }
  return out;
}

}  // namespace

TEST_CASE("S6 tables") {
  const auto& a = s6();
  CHECK(a.size() == 6);
  CHECK(a.name_of(a.neg(v("2/3"))) == "1/3");
  CHECK(a.name_of(a.neg(v("1/3"))) == "2/3");
  CHECK(a.neg(v("N")) == v("N"));
  CHECK(a.neg(v("B")) == v("B"));
  CHECK(a.meet(v("N"), v("B")) == v("1/3"));
  CHECK(a.join(v("N"), v("B")) == v("2/3"));
  CHECK(a.nabla(v("0")) == v("0"));
  for (const char* x : {"1/3", "N", "B", "2/3", "1"}) CHECK(a.nabla(v(x)) == v("1"));
  CHECK_FALSE(a.leq(v("N"), v("B")));
  CHECK_FALSE(a.leq(v("B"), v("N")));
  CHECK(a.leq(v("1/3"), v("N")));
  CHECK(a.leq(v("B"), v("2/3")));
  CHECK(a.bottom() == v("0"));
  CHECK(a.top() == v("1"));
}

TEST_CASE("delta") {
  const auto& a = s6();
  CHECK(a.delta(v("1")) == v("1"));
  CHECK(a.delta(v("N")) == v("0"));
  CHECK(a.delta(v("1/3")) == v("0"));
  CHECK(a.delta(v("2/3")) == v("0"));
}

TEST_CASE("chains") {
  for (int n = 2; n <= 5; ++n) {
    const auto& l = builtin_algebra("L" + std::to_string(n));
    CHECK(l.size() == n);
    for (int i = 0; i < n; ++i) {
      CHECK(l.neg_at(i) == n - 1 - i);
      CHECK(l.nabla_at(i) == (i == 0 ? 0 : n - 1));
    }
  }
  CHECK(builtin_algebra("L4").name_of(builtin_algebra("L4").value(1)) == "1/3");
  CHECK(builtin_algebra("L5").name_of(builtin_algebra("L5").value(2)) == "1/2");
}

TEST_CASE("unknown builtin name") { CHECK_THROWS_AS(builtin_algebra("S7"), AlgebraError); }

TEST_CASE("cross-algebra values are rejected") {
  const auto& l3 = builtin_algebra("L3");
  CHECK_THROWS_AS(s6().neg(l3.top()), AlgebraError);
  CHECK_THROWS_AS(s6().meet(v("1"), l3.top()), AlgebraError);
  CHECK_THROWS_AS(swap_nb(s6(), l3.top()), AlgebraError);
}

TEST_CASE("identity audit") {
  SUBCASE("S6 passes everything") {
    auto report = audit_identities(s6());
    CHECK(report.size() == 19);
    for (const auto& r : report) {
      INFO(r.name);
      CHECK(r.holds);
      CHECK_FALSE(r.witness.has_value());
    }
    auto it = std::find_if(report.begin(), report.end(), [](const auto& r) { return r.name == "IS3"; });
    CHECK(it->tuples_checked == 36);
  }
  SUBCASE("chains pass everything") {
    for (const char* name : {"L2", "L3", "L4", "L5"})
      for (const auto& r : audit_identities(builtin_algebra(name))) CHECK(r.holds);
  }
  SUBCASE("B4 with identity nabla fails IS4 at N") {
    const auto& b4 = builtin_algebra(BuiltinAlgebra::kB4DeMorgan);
    CHECK_FALSE(b4.is_s_algebra());
    auto report = audit_identities(b4);
    auto it = std::find_if(report.begin(), report.end(), [](const auto& r) { return r.name == "IS4"; });
    REQUIRE(it != report.end());
    CHECK_FALSE(it->holds);
    REQUIRE(it->witness.has_value());
    REQUIRE(it->witness->size() == 1);
    CHECK(b4.name_of(it->witness->front()) == "N");
    for (const auto& r : report)
      if (r.name == "DM1" || r.name == "DM2") CHECK(r.holds);
  }
}

TEST_CASE("constructor refuses ill-formed algebras") {
  AlgebraTables t = builtin_algebra(BuiltinAlgebra::kB4DeMorgan).tables();
  CHECK_THROWS_AS(FiniteAlgebra(t, AlgebraKind::kInvolutiveStone), AlgebraError);
  CHECK_NOTHROW(FiniteAlgebra(t, AlgebraKind::kUnchecked));

  AlgebraTables bad_neg = s6().tables();
  bad_neg.neg[2] = 3;  // ~N = B breaks involution together with ~B = B
  CHECK_THROWS_AS(FiniteAlgebra(bad_neg, AlgebraKind::kDeMorgan), AlgebraError);

  AlgebraTables bad_meet = s6().tables();
  bad_meet.meet[2 * 6 + 3] = 0;
  CHECK_THROWS_AS(FiniteAlgebra(bad_meet, AlgebraKind::kInvolutiveStone), AlgebraError);

  AlgebraTables short_table = s6().tables();
  short_table.nabla.pop_back();
  CHECK_THROWS_AS(FiniteAlgebra(short_table, AlgebraKind::kUnchecked), AlgebraError);
}

TEST_CASE("generated filters") {
  const auto& a = s6();
  auto names = [&](const Filter& f) {
    std::vector<std::string> out;
    for (auto m : f.members()) out.push_back(a.name_of(m));
    return out;
  };
  std::vector<TruthValue> n{v("N")};
  CHECK(names(generated_filter(a, n)) == std::vector<std::string>{"N", "2/3", "1"});
  CHECK(names(generated_filter(a, std::vector<TruthValue>{})) == std::vector<std::string>{"1"});
  std::vector<TruthValue> nb{v("N"), v("B")};
  CHECK(names(generated_filter(a, nb)) == std::vector<std::string>{"1/3", "N", "B", "2/3", "1"});
  CHECK(generated_filter(a, n).to_string() == "[N)");
}

TEST_CASE("all lattice filters agree with subset scan") {
  for (const char* name : {"S6", "L2", "L3", "L4", "L5", "B4"}) {
    const auto& a = builtin_algebra(name);
    auto listed = all_lattice_filters(a);
    std::set<std::uint64_t> bits;
    for (const auto& f : listed) bits.insert(f.bits());
    CHECK(bits.size() == listed.size());
    CHECK(bits == filters_by_subset_scan(a));
  }
  CHECK(all_lattice_filters(s6()).size() == 6);
  auto l2 = all_lattice_filters(builtin_algebra("L2"));
  REQUIRE(l2.size() == 2);
  CHECK(l2[0].to_string() == "[0)");
  CHECK(l2[1].to_string() == "[1)");
  CHECK(all_lattice_filters(builtin_algebra("L4")).size() == 4);
  std::vector<std::string> s6_names;
  for (const auto& f : all_lattice_filters(s6())) s6_names.push_back(f.to_string());
  CHECK(s6_names == std::vector<std::string>{"[0)", "[1/3)", "[N)", "[B)", "[2/3)", "[1)"});
}

TEST_CASE("filter validation") {
  CHECK_THROWS_AS(Filter(s6(), 0b000100), AlgebraError);  // {N}: no top
  CHECK_THROWS_AS(Filter(s6(), 0b101100), AlgebraError);  // {N,B,1}: meet 1/3 missing
  CHECK_NOTHROW(Filter(s6(), 0b111110));
  CHECK(Filter(s6(), 0b111110) == principal_filter(s6(), v("1/3")));
}

TEST_CASE("K elements") {
  auto names = [](const FiniteAlgebra& a) {
    std::vector<std::string> out;
    for (auto k : k_elements(a)) out.push_back(a.name_of(k));
    return out;
  };
  const std::vector<std::string> bounds{"0", "1"};
  CHECK(names(s6()) == bounds);
  CHECK(names(builtin_algebra("L2")) == bounds);
  CHECK(names(builtin_algebra("B4")) == bounds);
}

TEST_CASE("nabla is the least K element above") {
  const auto& a = s6();
  auto ks = k_elements(a);
  for (auto x : a.carrier()) {
    std::optional<TruthValue> least;
    for (auto k : ks) {
      if (!a.leq(x, k)) continue;
      if (!least || a.leq(k, *least)) least = k;
    }
    REQUIRE(least.has_value());
    CHECK(a.nabla(x) == *least);
  }
}

TEST_CASE("swap of N and B") {
  const auto& a = s6();
  CHECK(swap_nb(a, v("N")) == v("B"));
  CHECK(swap_nb(a, v("B")) == v("N"));
  for (const char* x : {"0", "1/3", "2/3", "1"}) CHECK(swap_nb(a, v(x)) == v(x));
  std::vector<int> map;
  for (auto x : a.carrier()) map.push_back(swap_nb(a, x).index());
  CHECK(is_homomorphism(a, a, map));
  CHECK_THROWS_AS(swap_nb(builtin_algebra("B4"), builtin_algebra("B4").top()), AlgebraError);
}

TEST_CASE("S6 subalgebras are closed") {
  const auto& a = s6();
  const std::vector<std::vector<const char*>> subsets = {
      {"0", "1/3", "2/3", "1"}, {"0", "1/3", "N", "2/3", "1"}, {"0", "1/3", "B", "2/3", "1"}};
  for (const auto& names : subsets) {
    std::set<TruthValue> s;
    for (auto n : names) s.insert(v(n));
    for (auto x : s) {
      CHECK(s.count(a.neg(x)));
      CHECK(s.count(a.nabla(x)));
      for (auto y : s) {
        CHECK(s.count(a.meet(x, y)));
        CHECK(s.count(a.join(x, y)));
      }
    }
  }
}

TEST_CASE("chains embed into S6") {
  for (int n = 2; n <= 5; ++n) {
    auto map = lukasiewicz_embedding(n);
    CHECK(is_homomorphism(builtin_algebra("L" + std::to_string(n)), s6(), map));
    CHECK(std::set<int>(map.begin(), map.end()).size() == map.size());
  }
  CHECK_FALSE(is_homomorphism(builtin_algebra("L3"), s6(), std::vector<int>{0, 1, 5}));
  CHECK_THROWS_AS(lukasiewicz_embedding(6), AlgebraError);
}

TEST_CASE("Stone property") {
  for (const char* name : {"S6", "L2", "L3", "L4", "L5"}) {
    const auto& a = builtin_algebra(name);
    for (int x = 0; x < a.size(); ++x) {
      int star = a.neg_at(a.nabla_at(x));
      CHECK(a.join_at(star, a.neg_at(a.nabla_at(star))) == a.top_index());
    }
  }
}
