#include "doctest.h"
#include "six/derived.hpp"
#include "six/prover.hpp"
#include "support/random_formulas.hpp"

using namespace six;
namespace b = six::build;

namespace {

Formula f(const char* text) { return parse_formula(text); }
Sequent s(const char* text) { return parse_sequent(text); }

void require_sound(const ProofTree& t, const Sequent& expected) {
  auto check = check_proof(t);
  INFO(expected.to_string() << ": " << check.to_string());
  CHECK(check.ok);
  CHECK(t.conclusion == expected);
  CHECK(valid(t.conclusion).valid);
}

}  // namespace

TEST_CASE("derived sequents at schematic instances") {
  testing::FormulaGenerator gen(3, {.num_vars = 2, .max_depth = 2});
  for (const auto& d : derived_sequents()) {
    for (int i = 0; i < 6; ++i) {
      std::vector<Formula> params;
      for (int k = 0; k < d.arity; ++k) params.push_back(i == 0 ? Formula::var(std::string(1, char('p' + k))) : gen());
      const Sequent inst = d.instance(params);
      INFO(d.name << " at " << inst.to_string());
      require_sound(d.derive(params), inst);
    }
  }
}

TEST_CASE("base patterns are minimal") {
  const Formula p = f("p");
  const Formula params[] = {p};
  CHECK(base_patterns().size() == 22);
  for (const auto& pattern : base_patterns()) {
    const Sequent inst = pattern.instance(params);
    INFO(pattern.name);
    CHECK(valid(inst).valid);
    for (const auto& g : inst.antecedent()) CHECK_FALSE(valid(inst.remove_left(g)).valid);
    for (const auto& g : inst.succedent()) CHECK_FALSE(valid(inst.remove_right(g)).valid);
  }
  CHECK(derived_sequent("delta-elim").instance(params) == s("~#~p => p"));
  CHECK_THROWS_AS(derived_sequent("nonsense"), MacroError);
}

TEST_CASE("laws as macros") {
  auto t = expand_macros(b::macro("nabla-join", s("#(p | q) => #p | #q")));
  require_sound(t, s("#(p | q) => #p | #q"));
  auto back = expand_macros(b::macro("nabla-join", s("#p | #q => #(p | q)")));
  require_sound(back, s("#p | #q => #(p | q)"));
  auto dm = expand_macros(b::macro("dm-neg-join", s("~(p | q) => ~p & ~q")));
  require_sound(dm, s("~(p | q) => ~p & ~q"));
  CHECK(count_rule(dm, Rule::kAndRight) == 1);
  CHECK(count_rule(dm, Rule::kNegContraposition) == 2);
  CHECK_THROWS_AS(expand_macros(b::macro("nabla-join", s("#(p & q) => #p | #q"))), MacroError);
  CHECK_THROWS_AS(expand_macros(b::macro("no-such-law", s("p => p"))), MacroError);
  const ProofTree plain = b::axiom(f("p"));
  CHECK(expand_macros(plain).conclusion == plain.conclusion);
  CHECK(proof_size(expand_macros(plain)) == 1);
}

TEST_CASE("conjunctive form macro") {
  const Formula source = f("#((p & ~#q) | #q)");
  const Formula target = f("(#p | #q) & (~#q | #q)");
  require_sound(expand_macros(b::macro("conjunctive-form", Sequent({source}, {target}))), Sequent({source}, {target}));
  require_sound(expand_macros(b::macro("conjunctive-form", Sequent({target}, {source}))), Sequent({target}, {source}));
  testing::FormulaGenerator gen(11, {.num_vars = 2, .max_depth = 4});
  for (int i = 0; i < 60; ++i) {
    const Formula g = gen();
    const Formula h = to_conjunctive_form(g).as_formula();
    require_sound(expand_macros(conjunctive_form_proof(g, true)), Sequent({g}, {h}));
    require_sound(expand_macros(conjunctive_form_proof(g, false)), Sequent({h}, {g}));
  }
}

TEST_CASE("block lattice core") {
  require_sound(prove_block_lattice(s("p & (q | r) => (p & q) | (p & r)")), s("p & (q | r) => (p & q) | (p & r)"));
  require_sound(prove_block_lattice(s("#p, ~#p =>")), s("#p, ~#p =>"));
  require_sound(prove_block_lattice(s("~#~p & q => p & (q | r)")), s("~#~p & q => p & (q | r)"));
  CHECK_THROWS_AS(prove_block_lattice(s("p => q")), MacroError);
  CHECK_THROWS_AS(prove_block_lattice(s("~~p => p")), MacroError);
}

TEST_CASE("prover examples") {
  auto delta = prove(s("~#~p => p"));
  REQUIRE(delta.proved());
  require_sound(expand_macros(*delta.proof), s("~#~p => p"));

  auto indep = prove(s("p => q"));
  CHECK_FALSE(indep.proved());
  REQUIRE(indep.countermodel.has_value());
  Valuation v(s6());
  v.set("p", s6().top());
  v.set("q", s6().bottom());
  std::vector<Formula> lhs = {f("p")}, rhs = {f("q")};
  CHECK(refutes({v, s6().top()}, lhs, rhs));
  CHECK(refutes(*indep.countermodel, lhs, rhs));

  const Sequent example = s("#((p & ~#q) | #q) => (#p | #q) & (~#q | #q)");
  auto ex = prove(example);
  REQUIRE(ex.proved());
  CHECK(count_rule(*ex.proof, Rule::kMacro) == 1);
  require_sound(expand_macros(*ex.proof), example);

  auto bot = prove(s("=> ~#bot"));
  REQUIRE(bot.proved());
  require_sound(expand_macros(*bot.proof), s("=> ~#bot"));
}

TEST_CASE("prover on random sequents") {
  testing::FormulaGenerator gen(29, {.num_vars = 2, .max_depth = 3});
  int proved = 0;
  for (int i = 0; i < 150; ++i) {
    Sequent q(gen.list(2), gen.list(2));
    auto r = prove(q);
    CHECK(r.proved() == valid(q).valid);
    if (r.proved()) {
      ++proved;
      require_sound(expand_macros(*r.proof), q);
    } else {
      REQUIRE(r.countermodel.has_value());
      CHECK(refutes(*r.countermodel, q.antecedent(), q.succedent()));
    }
  }
  CHECK(proved > 10);
}

TEST_CASE("packaged variants are provable together") {
  testing::FormulaGenerator gen(31, {.num_vars = 2, .max_depth = 2});
  for (int i = 0; i < 40; ++i) {
    auto ant = gen.list(2), suc = gen.list(2);
    if (ant.empty() || suc.empty()) continue;
    const bool base = prove(Sequent(ant, suc)).proved();
    CHECK(prove(Sequent({Formula::conj_all(ant)}, suc)).proved() == base);
    CHECK(prove(Sequent(ant, {Formula::disj_all(suc)})).proved() == base);
    CHECK(prove(Sequent({Formula::conj_all(ant)}, {Formula::disj_all(suc)})).proved() == base);
  }
}

TEST_CASE("random legal trees are sound") {
  testing::FormulaGenerator gen(41, {.num_vars = 2, .max_depth = 2});
  std::mt19937 rng(7);
  std::vector<ProofTree> pool;
  for (int i = 0; i < 400; ++i) {
    const Formula x = gen(), y = gen();
    ProofTree t = [&]() -> ProofTree {
      switch (rng() % 12) {
        case 0: return b::axiom(x);
        case 1: return b::first_modal(x);
        case 2: return b::second_modal(x);
        case 3: return b::top_axiom();
        case 4: return b::bottom_axiom();
        default: break;
      }
      if (pool.empty()) return b::axiom(x);
      const ProofTree& u = pool[rng() % pool.size()];
      const ProofTree& w = pool[rng() % pool.size()];
      try {
        switch (rng() % 10) {
          case 0: return b::weaken_left(u, x);
          case 1: return b::and_right(u, w, Formula::conj(x, y));
          case 2: return b::or_left(u, w, Formula::disj(x, y));
          case 3: return b::and_left(u, Formula::conj(x, y));
          case 4: return b::or_right(u, Formula::disj(x, y));
          case 5: return b::neg(u);
          case 6: return b::nabla_left(u, Formula::nabla(x));
          case 7: return b::cut(u, w, x);
          case 8: return b::negneg_right(u, Formula::neg(Formula::neg(x)));
          default: return b::weaken_right(u, y);
        }
      } catch (const std::logic_error&) {
        return b::axiom(x);
      }
    }();
    if (proof_size(t) > 200) continue;
    REQUIRE(check_proof(t).ok);
    CHECK(valid(t.conclusion).valid);
    pool.push_back(std::move(t));
  }
}
