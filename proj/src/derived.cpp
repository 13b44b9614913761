#include "six/derived.hpp"

#include <algorithm>
#include <map>

namespace six {

namespace b = build;

namespace {

using F = Formula;
using C = Connective;

ProofTree exact(ProofTree t, const Sequent& target) {
  if (t.conclusion == target) return t;
  if (!target.contains(t.conclusion))
    throw std::logic_error("derivation of " + target.to_string() + " ended in " + t.conclusion.to_string());
  return b::weaken_to(std::move(t), target);
}

Sequent seq(std::vector<F> ant, std::vector<F> suc) { return Sequent(std::move(ant), std::move(suc)); }

// ~~a => a and a => ~~a
ProofTree dn_elim(const F& a) { return b::negneg_left(b::axiom(a), F::neg(F::neg(a))); }
ProofTree dn_intro(const F& a) { return b::negneg_right(b::axiom(a), F::neg(F::neg(a))); }

// a | b => ~~a | ~~b
ProofTree dn_join_intro(const F& a, const F& c) {
  const F target = F::disj(F::neg(F::neg(a)), F::neg(F::neg(c)));
  return b::or_left(b::or_right(dn_intro(a), target), b::or_right(dn_intro(c), target), F::disj(a, c));
}

// ~~a & ~~b => a & b
ProofTree dn_meet_elim(const F& a, const F& c) {
  const F source = F::conj(F::neg(F::neg(a)), F::neg(F::neg(c)));
  return b::and_right(b::and_left(dn_elim(a), source), b::and_left(dn_elim(c), source), F::conj(a, c));
}

// ~(a | b) => ~a & ~b
ProofTree dm_join_out(const F& a, const F& c) {
  const F j = F::disj(a, c);
  return b::and_right(b::neg(b::or_right(b::axiom(a), j)), b::neg(b::or_right(b::axiom(c), j)),
                      F::conj(F::neg(a), F::neg(c)));
}

// ~a | ~b => ~(a & b)
ProofTree dm_meet_in(const F& a, const F& c) {
  const F m = F::conj(a, c);
  return b::or_left(b::neg(b::and_left(b::axiom(a), m)), b::neg(b::and_left(b::axiom(c), m)),
                    F::disj(F::neg(a), F::neg(c)));
}

// ~a & ~b => ~(a | b), through ~~(~a & ~b).
ProofTree dm_join_in(const F& a, const F& c) {
  const F m = F::conj(F::neg(a), F::neg(c));
  const F dd = F::disj(F::neg(F::neg(a)), F::neg(F::neg(c)));
  ProofTree to_neg = b::cut(dn_join_intro(a, c), dm_meet_in(F::neg(a), F::neg(c)), dd);
  ProofTree flipped = b::neg(std::move(to_neg));
  return b::cut(dn_intro(m), std::move(flipped), F::neg(F::neg(m)));
}

// ~(a & b) => ~a | ~b, through ~~(~a | ~b).
ProofTree dm_meet_out(const F& a, const F& c) {
  const F d = F::disj(F::neg(a), F::neg(c));
  const F nn = F::conj(F::neg(F::neg(a)), F::neg(F::neg(c)));
  ProofTree to_meet = b::cut(dm_join_out(F::neg(a), F::neg(c)), dn_meet_elim(a, c), nn);
  ProofTree flipped = b::neg(std::move(to_meet));
  return b::cut(std::move(flipped), dn_elim(d), F::neg(F::neg(d)));
}

// #(a | b) => #a | #b
ProofTree nabla_join_out(const F& a, const F& c) {
  const F j = F::disj(a, c);
  ProofTree inner = b::or_left(b::first_modal(a), b::first_modal(c), j);
  return b::or_right(b::nabla_left(std::move(inner), F::nabla(j)), F::disj(F::nabla(a), F::nabla(c)));
}

// #a | #b => #(a | b)
ProofTree nabla_join_in(const F& a, const F& c) {
  const F j = F::disj(a, c);
  auto side = [&](const F& x) {
    return b::nabla_left(b::cut(b::or_right(b::axiom(x), j), b::first_modal(j), j), F::nabla(x));
  };
  return b::or_left(side(a), side(c), F::disj(F::nabla(a), F::nabla(c)));
}

// #(a & b) => #a & #b
ProofTree nabla_meet_out(const F& a, const F& c) {
  const F m = F::conj(a, c);
  auto side = [&](const F& x) { return b::nabla_left(b::and_left(b::first_modal(x), m), F::nabla(m)); };
  return b::and_right(side(a), side(c), F::conj(F::nabla(a), F::nabla(c)));
}

// #a & #b => #(a & b)
ProofTree nabla_meet_in(const F& a, const F& c) {
  const F m = F::conj(a, c);
  ProofTree t = b::cut(b::and_right(b::axiom(a), b::axiom(c), m), b::first_modal(m), m);
  t = b::nabla_left(std::move(t), F::nabla(a));
  if (c != a) t = b::nabla_left(std::move(t), F::nabla(c));
  return b::and_left(std::move(t), F::conj(F::nabla(a), F::nabla(c)));
}

// => ~#bot
ProofTree neg_nabla_bottom() { return b::neg(b::nabla_left(b::bottom_axiom(), F::nabla(F::bottom()))); }

ProofTree lattice_core(const Sequent& s, bool blocks, SearchLimits limits);

ProofTree opaque_lattice(const F& s, const F& t) { return lattice_core(seq({s}, {t}), false, {}); }

struct LawSchema {
  int arity;
  std::function<F(std::span<const F>)> lhs;
  std::function<ProofTree(std::span<const F>)> forward;
  std::function<ProofTree(std::span<const F>)> backward;
};

const std::map<std::string, LawSchema>& law_schemas() {
  using P = std::span<const F>;
  static const std::map<std::string, LawSchema> schemas = [] {
    std::map<std::string, LawSchema> m;
    auto unit = [&](const char* name, auto lhs, auto fwd, auto bwd) { m[name] = {1, lhs, fwd, bwd}; };
    unit(
        "and-top", [](P p) { return F::conj(p[0], F::top()); },
        [](P p) { return b::and_left(b::axiom(p[0]), F::conj(p[0], F::top())); },
        [](P p) { return b::and_right(b::axiom(p[0]), b::top_axiom(), F::conj(p[0], F::top())); });
    unit(
        "top-and", [](P p) { return F::conj(F::top(), p[0]); },
        [](P p) { return b::and_left(b::axiom(p[0]), F::conj(F::top(), p[0])); },
        [](P p) { return b::and_right(b::top_axiom(), b::axiom(p[0]), F::conj(F::top(), p[0])); });
    unit(
        "and-bot", [](P p) { return F::conj(p[0], F::bottom()); },
        [](P p) { return b::and_left(b::axiom(F::bottom()), F::conj(p[0], F::bottom())); },
        [](P p) { return b::weaken_right(b::bottom_axiom(), F::conj(p[0], F::bottom())); });
    unit(
        "bot-and", [](P p) { return F::conj(F::bottom(), p[0]); },
        [](P p) { return b::and_left(b::axiom(F::bottom()), F::conj(F::bottom(), p[0])); },
        [](P p) { return b::weaken_right(b::bottom_axiom(), F::conj(F::bottom(), p[0])); });
    unit(
        "or-bot", [](P p) { return F::disj(p[0], F::bottom()); },
        [](P p) { return b::or_left(b::axiom(p[0]), b::bottom_axiom(), F::disj(p[0], F::bottom())); },
        [](P p) { return b::or_right(b::axiom(p[0]), F::disj(p[0], F::bottom())); });
    unit(
        "bot-or", [](P p) { return F::disj(F::bottom(), p[0]); },
        [](P p) { return b::or_left(b::bottom_axiom(), b::axiom(p[0]), F::disj(F::bottom(), p[0])); },
        [](P p) { return b::or_right(b::axiom(p[0]), F::disj(F::bottom(), p[0])); });
    unit(
        "or-top", [](P p) { return F::disj(p[0], F::top()); },
        [](P p) { return b::weaken_left(b::top_axiom(), F::disj(p[0], F::top())); },
        [](P p) { return b::weaken_left(b::or_right(b::top_axiom(), F::disj(p[0], F::top())), F::top()); });
    unit(
        "top-or", [](P p) { return F::disj(F::top(), p[0]); },
        [](P p) { return b::weaken_left(b::top_axiom(), F::disj(F::top(), p[0])); },
        [](P p) { return b::weaken_left(b::or_right(b::top_axiom(), F::disj(F::top(), p[0])), F::top()); });
    m["neg-top"] = {0, [](P) { return F::neg(F::top()); },
                    [](P) { return b::weaken_right(b::neg(b::top_axiom()), F::bottom()); },
                    [](P) { return b::weaken_right(b::bottom_axiom(), F::neg(F::top())); }};
    m["neg-bot"] = {0, [](P) { return F::neg(F::bottom()); },
                    [](P) { return b::weaken_left(b::top_axiom(), F::neg(F::bottom())); },
                    [](P) { return b::weaken_left(b::neg(b::bottom_axiom()), F::top()); }};
    m["nabla-top"] = {0, [](P) { return F::nabla(F::top()); },
                      [](P) { return b::weaken_left(b::top_axiom(), F::nabla(F::top())); },
                      [](P) { return b::first_modal(F::top()); }};
    m["nabla-bot"] = {0, [](P) { return F::nabla(F::bottom()); },
                      [](P) {
                        return b::weaken_right(b::nabla_left(b::bottom_axiom(), F::nabla(F::bottom())), F::bottom());
                      },
                      [](P) { return b::weaken_right(b::bottom_axiom(), F::nabla(F::bottom())); }};
    m["double-neg"] = {1, [](P p) { return F::neg(F::neg(p[0])); }, [](P p) { return dn_elim(p[0]); },
                       [](P p) { return dn_intro(p[0]); }};
    m["dm-neg-join"] = {2, [](P p) { return F::neg(F::disj(p[0], p[1])); },
                        [](P p) { return dm_join_out(p[0], p[1]); }, [](P p) { return dm_join_in(p[0], p[1]); }};
    m["dm-neg-meet"] = {2, [](P p) { return F::neg(F::conj(p[0], p[1])); },
                        [](P p) { return dm_meet_out(p[0], p[1]); }, [](P p) { return dm_meet_in(p[0], p[1]); }};
    m["nabla-join"] = {2, [](P p) { return F::nabla(F::disj(p[0], p[1])); },
                       [](P p) { return nabla_join_out(p[0], p[1]); }, [](P p) { return nabla_join_in(p[0], p[1]); }};
    m["nabla-meet"] = {2, [](P p) { return F::nabla(F::conj(p[0], p[1])); },
                       [](P p) { return nabla_meet_out(p[0], p[1]); }, [](P p) { return nabla_meet_in(p[0], p[1]); }};
    m["nabla-nabla"] = {1, [](P p) { return F::nabla(F::nabla(p[0])); },
                        [](P p) { return b::nabla_left(b::axiom(F::nabla(p[0])), F::nabla(F::nabla(p[0]))); },
                        [](P p) { return b::first_modal(F::nabla(p[0])); }};
    m["nabla-neg-nabla"] = {1, [](P p) { return F::nabla(F::neg(F::nabla(p[0]))); },
                            [](P p) {
                              const F nn = F::neg(F::nabla(p[0]));
                              return b::negnabla_left(b::axiom(nn), F::nabla(nn));
                            },
                            [](P p) { return b::first_modal(F::neg(F::nabla(p[0]))); }};
    auto distrib_right = [](P p) { return F::disj(F::conj(p[0], p[1]), p[2]); };
    auto distrib = [](P p) { return F::disj(p[0], F::conj(p[1], p[2])); };
    m["distrib-right"] = {3, distrib_right,
                          [=](P p) { return opaque_lattice(distrib_right(p), *apply_law("distrib-right", distrib_right(p))); },
                          [=](P p) { return opaque_lattice(*apply_law("distrib-right", distrib_right(p)), distrib_right(p)); }};
    m["distrib"] = {3, distrib, [=](P p) { return opaque_lattice(distrib(p), *apply_law("distrib", distrib(p))); },
                    [=](P p) { return opaque_lattice(*apply_law("distrib", distrib(p)), distrib(p)); }};
    return m;
  }();
  return schemas;
}

// Schematic parameters of a law instance, read off its left-hand side.
std::vector<F> law_parameters(const std::string& law, const F& lhs) {
  const int arity = law_schemas().at(law).arity;
  if (arity == 0) return {};
  if (law == "distrib-right") return {lhs.left().left(), lhs.left().right(), lhs.right()};
  if (law == "distrib") return {lhs.left(), lhs.right().left(), lhs.right().right()};
  if (law == "and-top" || law == "and-bot" || law == "or-bot" || law == "or-top") return {lhs.left()};
  if (lhs.is_binary()) return {lhs.right()};
  const F& inner = lhs.arg();
  if (law == "double-neg") return {inner.arg()};
  if (law == "nabla-nabla") return {inner.arg()};
  if (law == "nabla-neg-nabla") return {inner.arg().arg()};
  return {inner.left(), inner.right()};
}

// ---- base patterns ------------------------------------------------------

ProofTree nabla_excluded_middle(const F& a) {
  const F na = F::nabla(a);
  const F nna = F::neg(na);
  ProofTree split = b::or_left(b::axiom(na), b::axiom(nna), F::disj(na, nna));
  return b::cut(b::second_modal(a), std::move(split), F::disj(na, nna));
}

ProofTree neg_nabla_to_neg(const F& a) { return b::neg(b::first_modal(a)); }

ProofTree neg_or_nabla(const F& a) {
  return b::cut(nabla_excluded_middle(a), neg_nabla_to_neg(a), F::neg(F::nabla(a)));
}

ProofTree delta_elim(const F& a) {
  return b::cut(b::neg(b::first_modal(F::neg(a))), dn_elim(a), F::neg(F::neg(a)));
}

ProofTree nabla_contradiction(const F& a) {
  const F x = F::nabla(a);
  const F nx = F::neg(x);
  const F excluded = F::disj(x, nx);
  ProofTree refute = b::neg(b::second_modal(a));
  ProofTree both = b::and_right(b::weaken_left(b::axiom(nx), x), b::weaken_left(dn_intro(x), nx),
                                F::conj(nx, F::neg(nx)));
  ProofTree packed = b::cut(std::move(both), dm_join_in(x, nx), F::conj(nx, F::neg(nx)));
  return b::cut(std::move(packed), std::move(refute), F::neg(excluded));
}

ProofTree neg_nabla_contradiction(const F& a) {
  return b::cut(b::first_modal(a), nabla_contradiction(a), F::nabla(a));
}

std::vector<DerivedSequent> make_base_patterns() {
  using P = std::span<const F>;
  auto entry = [](std::string name, std::function<Sequent(const F&)> shape, std::function<ProofTree(const F&)> derive) {
    return DerivedSequent{std::move(name), 1, [shape](P p) { return shape(p[0]); },
                          [derive](P p) { return derive(p[0]); }};
  };
  auto N = [](const F& a) { return F::nabla(a); };
  auto Ng = [](const F& a) { return F::neg(a); };
  std::vector<DerivedSequent> out;
  out.push_back(entry(
      "nabla-excluded-middle", [=](const F& a) { return seq({}, {N(a), Ng(N(a))}); }, nabla_excluded_middle));
  out.push_back(entry("identity", [](const F& a) { return seq({a}, {a}); }, [](const F& a) { return b::axiom(a); }));
  out.push_back(entry(
      "first-modal", [=](const F& a) { return seq({a}, {N(a)}); }, [](const F& a) { return b::first_modal(a); }));
  out.push_back(entry(
      "identity-neg", [=](const F& a) { return seq({Ng(a)}, {Ng(a)}); }, [=](const F& a) { return b::axiom(Ng(a)); }));
  out.push_back(entry(
      "first-modal-neg", [=](const F& a) { return seq({Ng(a)}, {N(Ng(a))}); },
      [=](const F& a) { return b::first_modal(Ng(a)); }));
  out.push_back(entry(
      "identity-nabla", [=](const F& a) { return seq({N(a)}, {N(a)}); }, [=](const F& a) { return b::axiom(N(a)); }));
  out.push_back(entry(
      "identity-nabla-neg", [=](const F& a) { return seq({N(Ng(a))}, {N(Ng(a))}); },
      [=](const F& a) { return b::axiom(N(Ng(a))); }));
  out.push_back(entry(
      "identity-delta", [=](const F& a) { return seq({Ng(N(Ng(a)))}, {Ng(N(Ng(a)))}); },
      [=](const F& a) { return b::axiom(Ng(N(Ng(a)))); }));
  out.push_back(entry("delta-elim", [=](const F& a) { return seq({Ng(N(Ng(a)))}, {a}); }, delta_elim));
  out.push_back(entry("neg-or-nabla", [=](const F& a) { return seq({}, {Ng(a), N(a)}); }, neg_or_nabla));
  out.push_back(entry(
      "or-nabla-neg", [=](const F& a) { return seq({}, {a, N(Ng(a))}); },
      [=](const F& a) { return b::cut(neg_or_nabla(Ng(a)), dn_elim(a), Ng(Ng(a))); }));
  out.push_back(entry(
      "nabla-or-nabla-neg", [=](const F& a) { return seq({}, {N(a), N(Ng(a))}); },
      [=](const F& a) { return b::cut(neg_or_nabla(a), b::first_modal(Ng(a)), Ng(a)); }));
  out.push_back(entry(
      "nabla-neg-excluded-middle", [=](const F& a) { return seq({}, {N(Ng(a)), Ng(N(Ng(a)))}); },
      [=](const F& a) { return nabla_excluded_middle(Ng(a)); }));
  out.push_back(entry("neg-nabla-to-neg", [=](const F& a) { return seq({Ng(N(a))}, {Ng(a)}); }, neg_nabla_to_neg));
  out.push_back(entry(
      "neg-nabla-to-nabla-neg", [=](const F& a) { return seq({Ng(N(a))}, {N(Ng(a))}); },
      [=](const F& a) { return b::cut(neg_nabla_to_neg(a), b::first_modal(Ng(a)), Ng(a)); }));
  out.push_back(entry(
      "identity-neg-nabla", [=](const F& a) { return seq({Ng(N(a))}, {Ng(N(a))}); },
      [=](const F& a) { return b::axiom(Ng(N(a))); }));
  out.push_back(entry("nabla-contradiction", [=](const F& a) { return seq({N(a), Ng(N(a))}, {}); }, nabla_contradiction));
  out.push_back(entry(
      "neg-nabla-contradiction", [=](const F& a) { return seq({a, Ng(N(a))}, {}); }, neg_nabla_contradiction));
  out.push_back(entry(
      "delta-to-nabla", [=](const F& a) { return seq({Ng(N(Ng(a)))}, {N(a)}); },
      [=](const F& a) { return b::cut(delta_elim(a), b::first_modal(a), a); }));
  out.push_back(entry(
      "neg-delta-contradiction", [=](const F& a) { return seq({Ng(a), Ng(N(Ng(a)))}, {}); },
      [=](const F& a) { return neg_nabla_contradiction(Ng(a)); }));
  out.push_back(entry(
      "nabla-neg-contradiction", [=](const F& a) { return seq({N(Ng(a)), Ng(N(Ng(a)))}, {}); },
      [=](const F& a) { return nabla_contradiction(Ng(a)); }));
  out.push_back(entry(
      "neg-nabla-delta-contradiction", [=](const F& a) { return seq({Ng(N(a)), Ng(N(Ng(a)))}, {}); },
      [=](const F& a) { return b::cut(delta_elim(a), neg_nabla_contradiction(a), a); }));
  return out;
}

// ---- lattice decomposition ----------------------------------------------

std::optional<ProofTree> close_atomic(const Sequent& s, bool blocks) {
  if (s.in_antecedent(F::bottom())) return exact(b::bottom_axiom(), s);
  if (s.in_succedent(F::top())) return exact(b::top_axiom(), s);
  if (blocks) {
    std::vector<std::string> names = vars(s.antecedent());
    for (const auto& n : vars(s.succedent())) names.push_back(n);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    for (const auto& pattern : base_patterns()) {
      for (const auto& n : names) {
        const F p = F::var(n);
        const F params[] = {p};
        if (s.contains(pattern.instance(params))) return exact(pattern.derive(params), s);
      }
    }
  }
  for (const auto& f : s.antecedent())
    if (s.in_succedent(f)) return exact(b::axiom(f), s);
  return std::nullopt;
}

// Drops formulas whose removal keeps the sequent valid.
Sequent minimize(const Sequent& s, SearchLimits limits) {
  Sequent cur = s;
  for (const auto& f : s.antecedent()) {
    Sequent next = cur.remove_left(f);
    if (valid(next, limits).valid) cur = next;
  }
  for (const auto& f : s.succedent()) {
    Sequent next = cur.remove_right(f);
    if (valid(next, limits).valid) cur = next;
  }
  return cur;
}

constexpr int kMinimizeVars = 4;

std::optional<ProofTree> decompose(const Sequent& s, bool blocks, SearchLimits limits) {
  if (blocks) {
    std::vector<F> all = s.antecedent();
    all.insert(all.end(), s.succedent().begin(), s.succedent().end());
    if (static_cast<int>(vars(all).size()) <= std::min(kMinimizeVars, limits.max_vars)) {
      Sequent small = minimize(s, limits);
      if (small != s) {
        auto t = decompose(small, blocks, limits);
        if (!t) return std::nullopt;
        return exact(std::move(*t), s);
      }
    }
  }
  if (auto t = close_atomic(s, blocks)) return t;
  auto find = [](const std::vector<F>& side, C kind) -> std::optional<F> {
    for (const auto& f : side)
      if (f.is(kind)) return f;
    return std::nullopt;
  };
  if (auto f = find(s.antecedent(), C::kAnd)) {
    auto t = decompose(s.remove_left(*f).add_left(f->left()).add_left(f->right()), blocks, limits);
    if (!t) return std::nullopt;
    return exact(b::and_left(std::move(*t), *f), s);
  }
  if (auto f = find(s.succedent(), C::kOr)) {
    auto t = decompose(s.remove_right(*f).add_right(f->left()).add_right(f->right()), blocks, limits);
    if (!t) return std::nullopt;
    return exact(b::or_right(std::move(*t), *f), s);
  }
  if (auto f = find(s.succedent(), C::kAnd)) {
    const Sequent rest = s.remove_right(*f);
    auto l = decompose(rest.add_right(f->left()), blocks, limits);
    if (!l) return std::nullopt;
    auto r = decompose(rest.add_right(f->right()), blocks, limits);
    if (!r) return std::nullopt;
    return exact(b::and_right(std::move(*l), std::move(*r), *f), s);
  }
  if (auto f = find(s.antecedent(), C::kOr)) {
    const Sequent rest = s.remove_left(*f);
    auto l = decompose(rest.add_left(f->left()), blocks, limits);
    if (!l) return std::nullopt;
    auto r = decompose(rest.add_left(f->right()), blocks, limits);
    if (!r) return std::nullopt;
    return exact(b::or_left(std::move(*l), std::move(*r), *f), s);
  }
  return std::nullopt;
}

ProofTree lattice_core(const Sequent& s, bool blocks, SearchLimits limits) {
  auto t = decompose(s, blocks, limits);
  if (!t) throw MacroError("no lattice derivation of " + s.to_string());
  return std::move(*t);
}

// ---- macros -------------------------------------------------------------

const std::vector<std::string>& structural_macros() {
  static const std::vector<std::string> names = {"lattice-rearrange", "tautology",  "contradiction", "cong-nabla",
                                                 "mono-and",          "mono-or",    "conjunctive-form"};
  return names;
}

std::pair<F, F> single(const Sequent& s, const std::string& what) {
  if (s.antecedent().size() != 1 || s.succedent().size() != 1)
    throw MacroError(what + " needs one formula on each side, got " + s.to_string());
  return {s.antecedent()[0], s.succedent()[0]};
}

ProofTree lift(const NfStep& step, std::size_t depth, bool forward) {
  FormulaPath prefix(step.path.begin(), step.path.begin() + static_cast<std::ptrdiff_t>(depth));
  const F& before = subformula_at(step.before, prefix);
  const F& after = subformula_at(step.after, prefix);
  const F& from = forward ? before : after;
  const F& to = forward ? after : before;
  if (depth == step.path.size()) return b::macro(step.law, seq({from}, {to}));
  const int child = step.path[depth];
  switch (before.kind()) {
    case C::kNeg: return b::neg(lift(step, depth + 1, !forward));
    case C::kNabla: return b::macro("cong-nabla", seq({from}, {to}), {lift(step, depth + 1, forward)});
    case C::kAnd:
    case C::kOr: {
      ProofTree inner = lift(step, depth + 1, forward);
      ProofTree same = b::axiom(child == 0 ? before.right() : before.left());
      std::vector<ProofTree> premises;
      if (child == 0) premises = {std::move(inner), std::move(same)};
      else premises = {std::move(same), std::move(inner)};
      return b::macro(before.is(C::kAnd) ? "mono-and" : "mono-or", seq({from}, {to}), std::move(premises));
    }
    default: break;
  }
  throw std::logic_error("rewrite path leaves the formula");
}

ProofTree expand_one(const ProofTree& node, NormalFormOptions options) {
  const std::string& name = node.macro;
  const Sequent& c = node.conclusion;
  auto need_premises = [&](std::size_t n) {
    if (node.premises.size() != n)
      throw MacroError("macro '" + name + "' takes " + std::to_string(n) + " premise(s)");
  };
  if (name == "cong-nabla") {
    need_premises(1);
    auto [from, to] = single(node.premises[0].conclusion, name);
    ProofTree t = b::cut(node.premises[0], b::first_modal(to), to);
    return b::nabla_left(std::move(t), F::nabla(from));
  }
  if (name == "mono-and" || name == "mono-or") {
    need_premises(2);
    auto [a, a2] = single(node.premises[0].conclusion, name);
    auto [c1, c2] = single(node.premises[1].conclusion, name);
    if (name == "mono-and") {
      const F source = F::conj(a, c1);
      return b::and_right(b::and_left(node.premises[0], source), b::and_left(node.premises[1], source),
                          F::conj(a2, c2));
    }
    const F target = F::disj(a2, c2);
    return b::or_left(b::or_right(node.premises[0], target), b::or_right(node.premises[1], target), F::disj(a, c1));
  }
  need_premises(0);
  auto [s, t] = single(c, name);
  if (name == "conjunctive-form") {
    const NfDerivation fwd = nf_derivation(s, options);
    if (fwd.result == t) return conjunctive_form_proof(s, true, options);
    const NfDerivation bwd = nf_derivation(t, options);
    if (bwd.result == s) return conjunctive_form_proof(t, false, options);
    throw MacroError("neither side of " + c.to_string() + " is the conjunctive form of the other");
  }
  if (auto d = derive_law(name, s, t)) return std::move(*d);
  throw MacroError(c.to_string() + " is not an instance of '" + name + "'");
}

}  // namespace

const std::vector<DerivedSequent>& base_patterns() {
  static const std::vector<DerivedSequent> patterns = make_base_patterns();
  return patterns;
}

const std::vector<DerivedSequent>& derived_sequents() {
  static const std::vector<DerivedSequent> all = [] {
    using P = std::span<const F>;
    std::vector<DerivedSequent> out;
    for (const auto& [name, schema] : law_schemas()) {
      const std::string law = name;
      auto lhs = schema.lhs;
      auto rhs = [law, lhs](P p) { return *apply_law(law, lhs(p)); };
      out.push_back({law, schema.arity, [lhs, rhs](P p) { return seq({lhs(p)}, {rhs(p)}); }, schema.forward});
      out.push_back({law + " converse", schema.arity, [lhs, rhs](P p) { return seq({rhs(p)}, {lhs(p)}); },
                     schema.backward});
    }
    out.push_back({"dn-join-intro", 2,
                   [](P p) {
                     return seq({F::disj(p[0], p[1])}, {F::disj(F::neg(F::neg(p[0])), F::neg(F::neg(p[1])))});
                   },
                   [](P p) { return dn_join_intro(p[0], p[1]); }});
    out.push_back({"dn-meet-elim", 2,
                   [](P p) {
                     return seq({F::conj(F::neg(F::neg(p[0])), F::neg(F::neg(p[1])))}, {F::conj(p[0], p[1])});
                   },
                   [](P p) { return dn_meet_elim(p[0], p[1]); }});
    out.push_back({"neg-nabla-bot", 0, [](P) { return seq({}, {F::neg(F::nabla(F::bottom()))}); },
                   [](P) { return neg_nabla_bottom(); }});
    for (const auto& p : base_patterns()) out.push_back(p);
    return out;
  }();
  return all;
}

const DerivedSequent& derived_sequent(const std::string& name) {
  for (const auto& d : derived_sequents())
    if (d.name == name) return d;
  throw MacroError("unknown derived sequent '" + name + "'");
}

std::optional<ProofTree> derive_law(const std::string& law, const Formula& s, const Formula& t) {
  const Sequent target = seq({s}, {t});
  auto it = law_schemas().find(law);
  if (it != law_schemas().end()) {
    if (apply_law(law, s) == t) {
      auto params = law_parameters(law, s);
      return exact(it->second.forward(params), target);
    }
    if (apply_law(law, t) == s) {
      auto params = law_parameters(law, t);
      return exact(it->second.backward(params), target);
    }
    return std::nullopt;
  }
  if (!is_lattice_of_blocks(s) || !is_lattice_of_blocks(t) || !equivalent(s, t)) return std::nullopt;
  if (law == "lattice-rearrange") return prove_block_lattice(target);
  if (law == "tautology" || law == "contradiction") {
    const F constant = law == "tautology" ? F::top() : F::bottom();
    if (s != constant && t != constant) return std::nullopt;
    return prove_block_lattice(target);
  }
  return std::nullopt;
}

ProofTree prove_block_lattice(const Sequent& s, SearchLimits limits) {
  for (const auto* side : {&s.antecedent(), &s.succedent()})
    for (const auto& f : *side)
      if (!is_lattice_of_blocks(f)) throw MacroError(render(f) + " is not built from blocks by & and |");
  if (!valid(s, limits).valid) throw MacroError(s.to_string() + " is not valid");
  return lattice_core(s, true, limits);
}

ProofTree conjunctive_form_proof(const Formula& f, bool forward, NormalFormOptions options) {
  const NfDerivation d = nf_derivation(f, options);
  if (d.steps.empty()) return b::axiom(f);
  if (forward) {
    ProofTree acc = lift(d.steps.front(), 0, true);
    for (std::size_t i = 1; i < d.steps.size(); ++i)
      acc = b::cut(std::move(acc), lift(d.steps[i], 0, true), d.steps[i].before);
    return acc;
  }
  ProofTree acc = lift(d.steps.back(), 0, false);
  for (std::size_t i = d.steps.size() - 1; i-- > 0;)
    acc = b::cut(std::move(acc), lift(d.steps[i], 0, false), d.steps[i].after);
  return acc;
}

std::vector<std::string> macro_names() {
  std::vector<std::string> out = rewrite_law_names();
  out.insert(out.end(), structural_macros().begin(), structural_macros().end());
  return out;
}

ProofTree expand_macros(const ProofTree& t, NormalFormOptions options) {
  ProofTree out{t.conclusion, t.rule, t.principal, t.macro, {}};
  for (const auto& p : t.premises) out.premises.push_back(expand_macros(p, options));
  if (t.rule != Rule::kMacro) return out;
  ProofTree expanded = expand_macros(expand_one(out, options), options);
  if (expanded.conclusion == t.conclusion) return expanded;
  if (!t.conclusion.contains(expanded.conclusion))
    throw MacroError("macro '" + t.macro + "' derives " + expanded.conclusion.to_string() + ", not " +
                     t.conclusion.to_string());
  return b::weaken_to(std::move(expanded), t.conclusion);
}

}  // namespace six
