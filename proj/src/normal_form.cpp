#include "six/normal_form.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace six {

Formula Block::to_formula() const {
  const Formula p = Formula::var(var);
  switch (shape) {
    case BlockShape::kP: return p;
    case BlockShape::kNegP: return Formula::neg(p);
    case BlockShape::kNablaP: return Formula::nabla(p);
    case BlockShape::kNablaNegP: return Formula::nabla(Formula::neg(p));
    case BlockShape::kNegNablaP: return Formula::neg(Formula::nabla(p));
    case BlockShape::kNegNablaNegP: return Formula::neg(Formula::nabla(Formula::neg(p)));
  }
  return p;
}

std::optional<Block> as_block(const Formula& f) {
  auto literal = [](const Formula& g) -> std::optional<std::pair<std::string, bool>> {
    if (g.is(Connective::kVar)) return std::pair{g.name(), false};
    if (g.is(Connective::kNeg) && g.arg().is(Connective::kVar)) return std::pair{g.arg().name(), true};
    return std::nullopt;
  };
  if (auto lit = literal(f)) return Block{lit->first, lit->second ? BlockShape::kNegP : BlockShape::kP};
  if (f.is(Connective::kNabla)) {
    if (auto lit = literal(f.arg())) return Block{lit->first, lit->second ? BlockShape::kNablaNegP : BlockShape::kNablaP};
  }
  if (f.is(Connective::kNeg) && f.arg().is(Connective::kNabla)) {
    if (auto lit = literal(f.arg().arg()))
      return Block{lit->first, lit->second ? BlockShape::kNegNablaNegP : BlockShape::kNegNablaP};
  }
  return std::nullopt;
}

ConjunctiveForm ConjunctiveForm::top() { return {Tag::kTop, {}}; }
ConjunctiveForm ConjunctiveForm::bottom() { return {Tag::kBottom, {}}; }

ConjunctiveForm ConjunctiveForm::cnf(std::vector<Clause> clauses) {
  if (clauses.empty()) throw std::invalid_argument("a conjunctive form needs at least one clause");
  for (const auto& c : clauses) {
    if (c.empty()) throw std::invalid_argument("a clause needs at least one block");
    std::set<Block> seen(c.begin(), c.end());
    if (seen.size() != c.size()) throw std::invalid_argument("duplicate block in a clause");
  }
  return {Tag::kCnf, std::move(clauses)};
}

Formula ConjunctiveForm::as_formula() const {
  switch (tag_) {
    case Tag::kTop: return Formula::top();
    case Tag::kBottom: return Formula::bottom();
    case Tag::kCnf: break;
  }
  std::vector<Formula> conjuncts;
  for (const auto& clause : clauses_) {
    std::vector<Formula> disjuncts;
    for (const auto& b : clause) disjuncts.push_back(b.to_formula());
    conjuncts.push_back(Formula::disj_all(disjuncts));
  }
  return Formula::conj_all(conjuncts);
}

std::string ConjunctiveForm::to_string() const { return render(as_formula()); }

std::vector<std::vector<Block>> ConjunctiveForm::canonical() const {
  std::vector<std::vector<Block>> out;
  for (auto c : clauses_) {
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const ConjunctiveForm& a, const ConjunctiveForm& b) {
  return a.tag_ == b.tag_ && a.canonical() == b.canonical();
}

std::size_t block_count(const ConjunctiveForm& cf) {
  std::size_t n = 0;
  for (const auto& c : cf.clauses()) n += c.size();
  return n;
}

namespace {

// S6 value of a block as a function of its variable's value.
int block_value(BlockShape shape, int x) {
  const auto& a = s6();
  switch (shape) {
    case BlockShape::kP: return x;
    case BlockShape::kNegP: return a.neg_at(x);
    case BlockShape::kNablaP: return a.nabla_at(x);
    case BlockShape::kNablaNegP: return a.nabla_at(a.neg_at(x));
    case BlockShape::kNegNablaP: return a.neg_at(a.nabla_at(x));
    case BlockShape::kNegNablaNegP: return a.delta_at(x);
  }
  return x;
}

// Whether a block is 0 when its variable sits in class 0 (value 0),
// 1 (strictly between) or 2 (value 1).
bool block_zero_in_class(BlockShape shape, int cls) {
  switch (shape) {
    case BlockShape::kP:
    case BlockShape::kNablaP: return cls == 0;
    case BlockShape::kNegP:
    case BlockShape::kNablaNegP: return cls == 2;
    case BlockShape::kNegNablaP: return cls != 0;
    case BlockShape::kNegNablaNegP: return cls != 2;
  }
  return false;
}

bool clauses_unsatisfiable(const std::vector<Clause>& clauses) {
  // A meet of nonzero S6 values is nonzero, so the form is 0 under a
  // valuation iff some clause has every block 0; only the class of each
  // variable's value matters.
  std::vector<std::string> names;
  for (const auto& c : clauses)
    for (const auto& b : c) names.push_back(b.var);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);

  std::vector<std::vector<std::pair<int, BlockShape>>> cs;
  std::vector<int> last_var;
  for (const auto& c : clauses) {
    std::vector<std::pair<int, BlockShape>> row;
    int hi = -1;
    for (const auto& b : c) {
      row.emplace_back(index[b.var], b.shape);
      hi = std::max(hi, index[b.var]);
    }
    cs.push_back(std::move(row));
    last_var.push_back(hi);
  }
  std::vector<int> cls(names.size(), 0);
  std::function<bool(int)> satisfiable = [&](int k) -> bool {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (last_var[i] != k - 1) continue;
      bool all_zero = std::all_of(cs[i].begin(), cs[i].end(), [&](const auto& vb) {
        return block_zero_in_class(vb.second, cls[static_cast<std::size_t>(vb.first)]);
      });
      if (all_zero) return false;
    }
    if (k == static_cast<int>(names.size())) return true;
    for (int c = 0; c < 3; ++c) {
      cls[static_cast<std::size_t>(k)] = c;
      if (satisfiable(k + 1)) return true;
    }
    return false;
  };
  return !satisfiable(0);
}

// Working representation: no clauses = top; `bottom` set = bottom.
struct Cnf {
  std::vector<Clause> clauses;
  bool bottom = false;
  bool is_top() const { return !bottom && clauses.empty(); }
};

class Normalizer {
 public:
  explicit Normalizer(NormalFormOptions options) : options_(options) {}

  Cnf run(const Formula& f) {
    switch (f.kind()) {
      case Connective::kVar: return unit(Block{f.name(), BlockShape::kP});
      case Connective::kTop: return Cnf{};
      case Connective::kBottom: return Cnf{{}, true};
      case Connective::kAnd: return conj(run(f.left()), run(f.right()));
      case Connective::kOr: return disj(run(f.left()), run(f.right()));
      case Connective::kNeg: return neg(run(f.arg()));
      case Connective::kNabla: return nabla(run(f.arg()));
    }
    return Cnf{};
  }

 private:
  static Cnf unit(Block b) { return Cnf{{{std::move(b)}}, false}; }

  void check_size(const Cnf& c) const {
    std::size_t n = 0;
    for (const auto& cl : c.clauses) n += cl.size();
    if (n > options_.max_blocks)
      throw BudgetError("conjunctive form exceeds " + std::to_string(options_.max_blocks) +
                        " blocks (raise it with --max-blocks)");
  }

  static void append_unique(Clause& into, const Clause& from) {
    for (const auto& b : from)
      if (std::find(into.begin(), into.end(), b) == into.end()) into.push_back(b);
  }

  Cnf conj(Cnf a, Cnf b) const {
    if (a.bottom || b.bottom) return Cnf{{}, true};
    a.clauses.insert(a.clauses.end(), b.clauses.begin(), b.clauses.end());
    check_size(a);
    return a;
  }

  Cnf disj(Cnf a, Cnf b) const {
    if (a.is_top() || b.is_top()) return Cnf{};
    if (a.bottom) return b;
    if (b.bottom) return a;
    Cnf out;
    for (const auto& ca : a.clauses) {
      for (const auto& cb : b.clauses) {
        Clause merged = ca;
        append_unique(merged, cb);
        out.clauses.push_back(std::move(merged));
      }
      check_size(out);
    }
    return out;
  }

  static Block negate(const Block& b) {
    switch (b.shape) {
      case BlockShape::kP: return {b.var, BlockShape::kNegP};
      case BlockShape::kNegP: return {b.var, BlockShape::kP};
      case BlockShape::kNablaP: return {b.var, BlockShape::kNegNablaP};
      case BlockShape::kNablaNegP: return {b.var, BlockShape::kNegNablaNegP};
      case BlockShape::kNegNablaP: return {b.var, BlockShape::kNablaP};
      case BlockShape::kNegNablaNegP: return {b.var, BlockShape::kNablaNegP};
    }
    return b;
  }

  static Block apply_nabla(const Block& b) {
    switch (b.shape) {
      case BlockShape::kP:
      case BlockShape::kNablaP: return {b.var, BlockShape::kNablaP};
      case BlockShape::kNegP:
      case BlockShape::kNablaNegP: return {b.var, BlockShape::kNablaNegP};
      case BlockShape::kNegNablaP: return b;
      case BlockShape::kNegNablaNegP: return b;
    }
    return b;
  }

  Cnf neg(const Cnf& a) const {
    if (a.bottom) return Cnf{};
    if (a.is_top()) return Cnf{{}, true};
    // ~(C1 & ... & Cn) = ~C1 | ... | ~Cn, and each ~Ci is a conjunction of
    // negated blocks.
    std::optional<Cnf> acc;
    for (const auto& clause : a.clauses) {
      Cnf term;
      for (const auto& b : clause) term.clauses.push_back({negate(b)});
      acc = acc ? disj(std::move(*acc), std::move(term)) : std::move(term);
    }
    return *acc;
  }

  Cnf nabla(Cnf a) const {
    for (auto& clause : a.clauses) {
      Clause mapped;
      append_unique(mapped, [&] {
        Clause tmp;
        for (const auto& b : clause) tmp.push_back(apply_nabla(b));
        return tmp;
      }());
      clause = std::move(mapped);
    }
    return a;
  }

  NormalFormOptions options_;
};

std::vector<Clause> simplify_clauses(const std::vector<Clause>& clauses) {
  std::vector<std::set<Block>> kept_sets;
  std::vector<Clause> kept;
  for (const auto& c : clauses) {
    if (clause_is_tautology(c)) continue;
    std::set<Block> s(c.begin(), c.end());
    bool subsumed = std::any_of(kept_sets.begin(), kept_sets.end(), [&](const std::set<Block>& k) {
      return std::includes(s.begin(), s.end(), k.begin(), k.end());
    });
    if (subsumed) continue;
    for (std::size_t i = kept_sets.size(); i-- > 0;) {
      if (std::includes(kept_sets[i].begin(), kept_sets[i].end(), s.begin(), s.end())) {
        kept_sets.erase(kept_sets.begin() + static_cast<std::ptrdiff_t>(i));
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    kept_sets.push_back(std::move(s));
    kept.push_back(c);
  }
  return kept;
}

}  // namespace

bool clause_is_tautology(const Clause& clause) {
  // The top of S6 is join-irreducible, so a disjunction is always 1 iff the
  // blocks of a single variable already force it.
  std::map<std::string, std::vector<BlockShape>> by_var;
  for (const auto& b : clause) by_var[b.var].push_back(b.shape);
  const int top = s6().top_index();
  for (const auto& [var, shapes] : by_var) {
    bool covers = true;
    for (int x = 0; x < s6().size() && covers; ++x)
      covers = std::any_of(shapes.begin(), shapes.end(), [&](BlockShape s) { return block_value(s, x) == top; });
    if (covers) return true;
  }
  return false;
}

ConjunctiveForm to_conjunctive_form(const Formula& f, NormalFormOptions options) {
  Cnf c = Normalizer(options).run(f);
  if (c.bottom) return ConjunctiveForm::bottom();
  if (c.is_top()) return ConjunctiveForm::top();
  if (std::all_of(c.clauses.begin(), c.clauses.end(), clause_is_tautology)) return ConjunctiveForm::top();
  if (clauses_unsatisfiable(c.clauses)) return ConjunctiveForm::bottom();
  if (options.simplify) c.clauses = simplify_clauses(c.clauses);
  return ConjunctiveForm::cnf(std::move(c.clauses));
}

bool is_lattice_of_blocks(const Formula& f) {
  if (f.is_constant() || as_block(f)) return true;
  if (f.is_binary()) return is_lattice_of_blocks(f.left()) && is_lattice_of_blocks(f.right());
  return false;
}

bool is_conjunctive_form_shape(const Formula& f) {
  if (f.is_constant()) return true;
  auto is_clause = [](auto& self, const Formula& g) -> bool {
    if (as_block(g)) return true;
    return g.is(Connective::kOr) && self(self, g.left()) && self(self, g.right());
  };
  auto is_cnf = [&](auto& self, const Formula& g) -> bool {
    if (is_clause(is_clause, g)) return true;
    return g.is(Connective::kAnd) && self(self, g.left()) && self(self, g.right());
  };
  return is_cnf(is_cnf, f);
}

const Formula& subformula_at(const Formula& f, const FormulaPath& path) {
  const Formula* cur = &f;
  for (int step : path) {
    if (cur->is_unary() && step == 0) cur = &cur->arg();
    else if (cur->is_binary() && (step == 0 || step == 1)) cur = step == 0 ? &cur->left() : &cur->right();
    else throw std::out_of_range("formula path leaves the syntax tree");
  }
  return *cur;
}

namespace {

Formula replace_from(const Formula& f, const FormulaPath& path, std::size_t i, const Formula& replacement) {
  if (i == path.size()) return replacement;
  const int step = path[i];
  switch (f.kind()) {
    case Connective::kNeg:
      if (step == 0) return Formula::neg(replace_from(f.arg(), path, i + 1, replacement));
      break;
    case Connective::kNabla:
      if (step == 0) return Formula::nabla(replace_from(f.arg(), path, i + 1, replacement));
      break;
    case Connective::kAnd:
      if (step == 0) return Formula::conj(replace_from(f.left(), path, i + 1, replacement), f.right());
      if (step == 1) return Formula::conj(f.left(), replace_from(f.right(), path, i + 1, replacement));
      break;
    case Connective::kOr:
      if (step == 0) return Formula::disj(replace_from(f.left(), path, i + 1, replacement), f.right());
      if (step == 1) return Formula::disj(f.left(), replace_from(f.right(), path, i + 1, replacement));
      break;
    default: break;
  }
  throw std::out_of_range("formula path leaves the syntax tree");
}

struct Redex {
  FormulaPath path;
  Formula replacement;
  std::string law;
};

using Rewrite = std::optional<Formula> (*)(const Formula&);

struct LawDef {
  const char* name;
  Rewrite rewrite;
};

#define SIX_LAW(name, body) \
  LawDef { name, [](const Formula& f) -> std::optional<Formula> { body return std::nullopt; } }

using F = Formula;
using C = Connective;

// Constant elimination, double negation, De Morgan and the # laws, in the
// order the rewriting tries them at each node.
const std::vector<LawDef>& push_laws() {
  static const std::vector<LawDef> laws = {
      SIX_LAW("and-top", if (f.is(C::kAnd) && f.right().is(C::kTop)) return f.left();),
      SIX_LAW("top-and", if (f.is(C::kAnd) && f.left().is(C::kTop)) return f.right();),
      SIX_LAW("and-bot", if (f.is(C::kAnd) && f.right().is(C::kBottom)) return F::bottom();),
      SIX_LAW("bot-and", if (f.is(C::kAnd) && f.left().is(C::kBottom)) return F::bottom();),
      SIX_LAW("or-bot", if (f.is(C::kOr) && f.right().is(C::kBottom)) return f.left();),
      SIX_LAW("bot-or", if (f.is(C::kOr) && f.left().is(C::kBottom)) return f.right();),
      SIX_LAW("or-top", if (f.is(C::kOr) && f.right().is(C::kTop)) return F::top();),
      SIX_LAW("top-or", if (f.is(C::kOr) && f.left().is(C::kTop)) return F::top();),
      SIX_LAW("neg-top", if (f.is(C::kNeg) && f.arg().is(C::kTop)) return F::bottom();),
      SIX_LAW("neg-bot", if (f.is(C::kNeg) && f.arg().is(C::kBottom)) return F::top();),
      SIX_LAW("double-neg", if (f.is(C::kNeg) && f.arg().is(C::kNeg)) return f.arg().arg();),
      SIX_LAW("dm-neg-join",
              if (f.is(C::kNeg) && f.arg().is(C::kOr)) return F::conj(F::neg(f.arg().left()), F::neg(f.arg().right()));),
      SIX_LAW("dm-neg-meet",
              if (f.is(C::kNeg) && f.arg().is(C::kAnd)) return F::disj(F::neg(f.arg().left()), F::neg(f.arg().right()));),
      SIX_LAW("nabla-top", if (f.is(C::kNabla) && f.arg().is(C::kTop)) return F::top();),
      SIX_LAW("nabla-bot", if (f.is(C::kNabla) && f.arg().is(C::kBottom)) return F::bottom();),
      SIX_LAW("nabla-join",
              if (f.is(C::kNabla) && f.arg().is(C::kOr)) return F::disj(F::nabla(f.arg().left()), F::nabla(f.arg().right()));),
      SIX_LAW("nabla-meet",
              if (f.is(C::kNabla) && f.arg().is(C::kAnd)) return F::conj(F::nabla(f.arg().left()), F::nabla(f.arg().right()));),
      SIX_LAW("nabla-nabla", if (f.is(C::kNabla) && f.arg().is(C::kNabla)) return f.arg();),
      SIX_LAW("nabla-neg-nabla",
              if (f.is(C::kNabla) && f.arg().is(C::kNeg) && f.arg().arg().is(C::kNabla)) return f.arg();),
  };
  return laws;
}

const std::vector<LawDef>& distribution_laws() {
  static const std::vector<LawDef> laws = {
      SIX_LAW("distrib-right", if (f.is(C::kOr) && f.left().is(C::kAnd)) {
        const F& l = f.left();
        return F::conj(F::disj(l.left(), f.right()), F::disj(l.right(), f.right()));
      }),
      SIX_LAW("distrib", if (f.is(C::kOr) && f.right().is(C::kAnd)) {
        const F& r = f.right();
        return F::conj(F::disj(f.left(), r.left()), F::disj(f.left(), r.right()));
      }),
  };
  return laws;
}

#undef SIX_LAW

std::optional<std::pair<Formula, std::string>> first_law(const std::vector<LawDef>& laws, const Formula& f) {
  for (const auto& law : laws)
    if (auto g = law.rewrite(f)) return std::pair{*g, std::string(law.name)};
  return std::nullopt;
}

std::optional<std::pair<Formula, std::string>> push_law(const Formula& f) { return first_law(push_laws(), f); }
std::optional<std::pair<Formula, std::string>> distribution_law(const Formula& f) {
  return first_law(distribution_laws(), f);
}

using LawFinder = std::optional<std::pair<Formula, std::string>> (*)(const Formula&);

std::optional<Redex> first_redex(const Formula& f, LawFinder find, FormulaPath& path) {
  if (auto hit = find(f)) return Redex{path, hit->first, hit->second};
  auto visit = [&](int step, const Formula& child) -> std::optional<Redex> {
    path.push_back(step);
    auto r = first_redex(child, find, path);
    path.pop_back();
    return r;
  };
  if (f.is_unary()) return visit(0, f.arg());
  if (f.is_binary()) {
    if (auto r = visit(0, f.left())) return r;
    return visit(1, f.right());
  }
  return std::nullopt;
}

std::size_t leaf_count(const Formula& f) {
  if (f.is_unary()) return leaf_count(f.arg());
  if (f.is_binary()) return leaf_count(f.left()) + leaf_count(f.right());
  return 1;
}

}  // namespace

Formula replace_at(const Formula& f, const FormulaPath& path, const Formula& replacement) {
  return replace_from(f, path, 0, replacement);
}

NfDerivation nf_derivation(const Formula& f, NormalFormOptions options) {
  const ConjunctiveForm target_form = to_conjunctive_form(f, options);
  const Formula target = target_form.as_formula();
  NfDerivation d{f, f, {}};
  Formula cur = f;
  auto record = [&](const FormulaPath& path, const Formula& replacement, const std::string& law) {
    Formula next = replace_at(cur, path, replacement);
    if (leaf_count(next) > options.max_blocks)
      throw BudgetError("normal-form derivation exceeds " + std::to_string(options.max_blocks) + " blocks");
    d.steps.push_back({cur, next, path, law, subformula_at(cur, path), replacement});
    cur = std::move(next);
  };
  for (LawFinder phase : {LawFinder{&push_law}, LawFinder{&distribution_law}}) {
    while (true) {
      FormulaPath path;
      auto redex = first_redex(cur, phase, path);
      if (!redex) break;
      record(redex->path, redex->replacement, redex->law);
    }
  }
  if (cur != target) {
    const char* law = target_form.tag() == ConjunctiveForm::Tag::kTop      ? "tautology"
                      : target_form.tag() == ConjunctiveForm::Tag::kBottom ? "contradiction"
                                                                           : "lattice-rearrange";
    record({}, target, law);
  }
  d.result = cur;
  return d;
}

std::optional<Formula> apply_law(std::string_view law, const Formula& f) {
  for (const auto* laws : {&push_laws(), &distribution_laws()})
    for (const auto& def : *laws)
      if (law == def.name) return def.rewrite(f);
  return std::nullopt;
}

std::vector<std::string> rewrite_law_names() {
  std::vector<std::string> out;
  for (const auto* laws : {&push_laws(), &distribution_laws()})
    for (const auto& def : *laws) out.emplace_back(def.name);
  return out;
}

std::string law_statement(const std::string& law) {
  static const std::map<std::string, std::string> statements = {
      {"and-top", "a & top <=> a"},
      {"top-and", "top & a <=> a"},
      {"and-bot", "a & bot <=> bot"},
      {"bot-and", "bot & a <=> bot"},
      {"or-bot", "a | bot <=> a"},
      {"bot-or", "bot | a <=> a"},
      {"or-top", "a | top <=> top"},
      {"top-or", "top | a <=> top"},
      {"neg-top", "~top <=> bot"},
      {"neg-bot", "~bot <=> top"},
      {"nabla-top", "#top <=> top"},
      {"nabla-bot", "#bot <=> bot"},
      {"double-neg", "~~a <=> a"},
      {"dm-neg-join", "~(a | b) <=> ~a & ~b"},
      {"dm-neg-meet", "~(a & b) <=> ~a | ~b"},
      {"nabla-join", "#(a | b) <=> #a | #b"},
      {"nabla-meet", "#(a & b) <=> #a & #b"},
      {"nabla-nabla", "##a <=> #a"},
      {"nabla-neg-nabla", "#~#a <=> ~#a"},
      {"distrib", "a | (b & c) <=> (a | b) & (a | c)"},
      {"distrib-right", "(a & b) | c <=> (a | c) & (b | c)"},
      {"lattice-rearrange", "reassociate, reorder and deduplicate blocks"},
      {"tautology", "a <=> top for a valid a"},
      {"contradiction", "a <=> bot for an unsatisfiable a"},
  };
  auto it = statements.find(law);
  return it == statements.end() ? law : it->second;
}

}  // namespace six
