#include <map>

#include "doctest.h"
#include "six/lfi.hpp"
#include "support/random_formulas.hpp"

using namespace six;

namespace {

Formula f(const char* text) { return parse_formula(text); }
std::vector<Formula> fs(const char* text) { return parse_formula_list(text); }

const LawCheck& find(const LfiReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("consistency table") {
  const std::map<std::string, std::pair<std::string, std::string>> expected = {
      {"0", {"1", "0"}}, {"1/3", {"0", "1"}}, {"N", {"0", "1"}},
      {"B", {"0", "1"}}, {"2/3", {"0", "1"}}, {"1", {"1", "0"}}};
  auto rows = consistency_truth_table();
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    const auto& want = expected.at(s6().name_of(row.value));
    CHECK(s6().name_of(row.circ) == want.first);
    CHECK(s6().name_of(row.bullet) == want.second);
  }
}

TEST_CASE("propagation") {
  auto r = check_propagation();
  CHECK(r.all_ok());
  CHECK(find(r, "propagation nabla").holds);
  CHECK(find(r, "propagation meet").holds);
  CHECK(find(r, "cc0").holds);
  CHECK(find(r, "cc3").holds);
  CHECK(check_propagation(6).checks.size() == 12);
}

TEST_CASE("bullet laws") {
  auto r = check_bullet_laws();
  CHECK(r.all_ok());
  CHECK(find(r, "bullet from contradiction").holds);
  const auto& converse = find(r, "contradiction from bullet");
  CHECK_FALSE(converse.holds);
  REQUIRE(converse.witness.has_value());
  CHECK(converse.witness->to_string() == "p=1/3 @ bound=1");
  CHECK(find(r, "bullet to negated bullet").holds);
  CHECK(find(r, "negated bullet to bullet").holds);
  for (const char* name : {"bullet of meet converse", "bullet of join converse"}) {
    const auto& c = find(r, name);
    CHECK_FALSE(c.holds);
    REQUIRE(c.witness.has_value());
    CHECK(refutes(*c.witness, fs("*p | *q"), std::vector<Formula>{c.name == "bullet of meet converse"
                                                                      ? f("*(p & q)")
                                                                      : f("*(p | q)")}));
  }
}

TEST_CASE("gentle explosion and paraconsistency") {
  auto g = check_gentle_explosion();
  CHECK(g.all_ok());
  CHECK_FALSE(find(g, "consistent affirmation").holds);
  CHECK_FALSE(find(g, "consistent negation").holds);
  CHECK(find(g, "gentle explosion").holds);
  auto p = check_paraconsistency();
  CHECK(p.all_ok());
  CHECK(lfi_audit().all_ok());
}

TEST_CASE("consistency identities") {
  CHECK(entails_six({}, f("o p | *p")).holds);
  Valuation v(s6());
  for (auto x : s6().carrier()) {
    v.set("p", x);
    CHECK(eval(f("o p & *p"), v) == s6().bottom());
  }
}

TEST_CASE("classical entailment") {
  CHECK(cpl_entails(fs("p"), f("p | q")));
  CHECK(cpl_entails({}, f("p | ~p")));
  CHECK(cpl_entails(fs("p | q, ~p"), f("q")));
  CHECK_FALSE(cpl_entails(fs("p"), f("q")));
  CHECK(cpl_entails(fs("#p"), f("p")));
  CHECK_THROWS_AS(cpl_entails(fs("#p"), f("p"), {.strict = true}), LanguageError);
  CHECK_THROWS_AS(cpl_entails({}, f("a | b | c"), {.max_vars = 2}), BudgetError);
}

TEST_CASE("derivability adjustment") {
  auto lem = dat_check({}, f("p | ~p"));
  CHECK(lem.cpl);
  CHECK(lem.six_with_circ);
  CHECK(lem.agree);
  CHECK(lem.augmented_premises.size() == 1);
  auto expl = dat_check(fs("p, ~p"), f("q"));
  CHECK(expl.cpl);
  CHECK(expl.six_with_circ);
  auto indep = dat_check(fs("p"), f("q"));
  CHECK_FALSE(indep.cpl);
  CHECK_FALSE(indep.six_with_circ);
  CHECK_THROWS_AS(dat_check({}, f("#p")), LanguageError);
}

TEST_CASE("derivability adjustment on random classical queries") {
  testing::FormulaGenerator gen(17, {.num_vars = 3, .max_depth = 4, .allow_nabla = false});
  for (int i = 0; i < 100; ++i) {
    auto premises = gen.list(2);
    Formula goal = gen();
    CHECK(dat_check(premises, goal).agree);
  }
}
