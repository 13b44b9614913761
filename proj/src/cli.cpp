#include "six/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "six/algebra_io.hpp"
#include "six/derived.hpp"
#include "six/lfi.hpp"
#include "six/normal_form.hpp"
#include "six/proof_io.hpp"
#include "six/prover.hpp"

namespace six {

namespace {

using nlohmann::json;

struct Settings {
  std::string algebra = "S6";
  int max_vars = 8;
  std::size_t max_blocks = 10000;
  std::string format = "text";
  bool expand = false;
  bool steps = false;
  int max_n = 3;
  std::string input;
};

// Raised when an internal re-verification fails; never expected.
class SelfCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json countermodel_json(const Countermodel& cm) {
  json v = json::object();
  const auto& a = cm.valuation.algebra();
  for (const auto& [name, value] : cm.valuation.assignments()) v[name] = a.name_of(value);
  return {{"valuation", v}, {"bound", a.name_of(cm.bound)}};
}

void require_refutes(const Countermodel& cm, std::span<const Formula> lhs, std::span<const Formula> rhs) {
  if (!refutes(cm, lhs, rhs)) throw SelfCheckError("countermodel " + cm.to_string() + " does not re-verify");
}

int cmd_check(const Settings& st, std::ostream& out) {
  const FiniteAlgebra algebra = load_algebra(st.algebra);
  const auto q = parse_entailment(st.input);
  const auto r = entails_degree(q.premises, q.goal, algebra, {st.max_vars});
  const std::string text = render_list(q.premises) + (q.premises.empty() ? "|= " : " |= ") + render(q.goal);
  if (!r.holds) {
    const Formula goal[] = {q.goal};
    require_refutes(*r.countermodel, q.premises, goal);
  }
  if (st.format == "structured") {
    json j = {{"query", text}, {"algebra", algebra.name()}, {"holds", r.holds}};
    if (r.countermodel) j["countermodel"] = countermodel_json(*r.countermodel);
    out << j.dump(2) << "\n";
  } else if (r.holds) {
    out << "VALID: " << text << "\n";
  } else {
    out << "INVALID: " << text << "\n  countermodel: " << r.countermodel->to_string() << "\n";
  }
  return r.holds ? 0 : 1;
}

int cmd_table(const Settings& st, std::ostream& out) {
  const FiniteAlgebra algebra = load_algebra(st.algebra);
  const Formula f = parse_formula(st.input);
  const TruthTable t = truth_table(f, algebra, {st.max_vars});
  if (st.format == "structured") {
    json rows = json::array();
    for (std::size_t i = 0; i < t.outputs.size(); ++i) {
      json in = json::array();
      for (auto v : t.inputs[i]) in.push_back(algebra.name_of(v));
      rows.push_back({{"inputs", in}, {"value", algebra.name_of(t.outputs[i])}});
    }
    out << json{{"formula", render(f)}, {"algebra", algebra.name()}, {"vars", t.vars}, {"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 1;
  for (auto v : algebra.carrier()) width = std::max(width, algebra.name_of(v).size());
  for (const auto& v : t.vars) width = std::max(width, v.size());
  auto cell = [&](const std::string& s) {
    std::ostringstream o;
    o << std::left << std::setw(static_cast<int>(width)) << s;
    return o.str();
  };
  for (const auto& v : t.vars) out << cell(v) << " ";
  out << "| " << render(f) << "\n";
  for (std::size_t i = 0; i < t.outputs.size(); ++i) {
    for (auto v : t.inputs[i]) out << cell(algebra.name_of(v)) << " ";
    out << "| " << algebra.name_of(t.outputs[i]) << "\n";
  }
  return 0;
}

std::string path_string(const FormulaPath& p) {
  std::string s;
  for (int i : p) s += std::to_string(i);
  return s.empty() ? "root" : s;
}

int cmd_nf(const Settings& st, std::ostream& out) {
  const Formula f = parse_formula(st.input);
  const NormalFormOptions options{st.max_blocks, false};
  const ConjunctiveForm cf = to_conjunctive_form(f, options);
  if (!equivalent(f, cf.as_formula(), {std::max(st.max_vars, static_cast<int>(vars(f).size()))}))
    throw SelfCheckError("conjunctive form is not equivalent to the input");
  std::optional<NfDerivation> d;
  if (st.steps) d = nf_derivation(f, options);
  if (st.format == "structured") {
    const char* tag = cf.tag() == ConjunctiveForm::Tag::kTop      ? "top"
                      : cf.tag() == ConjunctiveForm::Tag::kBottom ? "bottom"
                                                                  : "cnf";
    json clauses = json::array();
    for (const auto& c : cf.clauses()) {
      json row = json::array();
      for (const auto& b : c) row.push_back(render(b.to_formula()));
      clauses.push_back(row);
    }
    json j = {{"formula", render(f)}, {"form", cf.to_string()}, {"tag", tag}, {"blocks", block_count(cf)},
              {"clauses", clauses}};
    if (d) {
      json steps = json::array();
      for (const auto& s : d->steps)
        steps.push_back({{"law", s.law}, {"path", path_string(s.path)}, {"before", render(s.before)},
                         {"after", render(s.after)}});
      j["steps"] = steps;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << cf.to_string() << "  blocks=" << block_count(cf) << "\n";
  if (d)
    for (const auto& s : d->steps) out << "  " << std::left << std::setw(18) << s.law << render(s.after) << "\n";
  return 0;
}

ProofTree verified_expansion(const ProofTree& proof, const Sequent& goal, const NormalFormOptions& options) {
  ProofTree expanded = expand_macros(proof, options);
  const ProofCheck check = check_proof(expanded);
  if (!check.ok) throw SelfCheckError("generated proof fails to check: " + check.to_string());
  if (expanded.conclusion != goal) throw SelfCheckError("generated proof ends in the wrong sequent");
  return expanded;
}

int cmd_prove(const Settings& st, std::ostream& out) {
  const Sequent s = parse_sequent(st.input);
  ProverOptions options{{st.max_vars}, {st.max_blocks, false}};
  const ProofResult r = prove(s, options);
  if (!r.proved()) {
    require_refutes(*r.countermodel, s.antecedent(), s.succedent());
    if (st.format == "structured") {
      out << json{{"result", "invalid"}, {"sequent", s.to_string()}, {"countermodel", countermodel_json(*r.countermodel)}}
                 .dump(2)
          << "\n";
    } else {
      out << "INVALID: " << s.to_string() << "\n  countermodel: " << r.countermodel->to_string() << "\n";
    }
    return 1;
  }
  const ProofTree expanded = verified_expansion(*r.proof, s, options.normal_form);
  const ProofTree& shown = st.expand ? expanded : *r.proof;
  if (st.format == "structured") {
    out << proof_to_json(shown) << "\n";
  } else {
    out << "PROVED: " << s.to_string() << "\n"
        << proof_to_text(shown) << "(" << proof_size(expanded) << " primitive inferences, checked)\n";
  }
  return 0;
}

int cmd_verify(const Settings& st, std::ostream& out) {
  std::ifstream in(st.input);
  if (!in) throw std::invalid_argument("cannot read " + st.input);
  std::stringstream buf;
  buf << in.rdbuf();
  ProofTree t = proof_from_json(buf.str());
  if (st.expand) t = expand_macros(t, {st.max_blocks, false});
  const ProofCheck check = check_proof(t);
  if (!check.ok) {
    out << "REJECTED: " << check.to_string() << "\n";
    return 1;
  }
  if (!valid(t.conclusion, {st.max_vars}).valid) throw SelfCheckError("checked proof has an invalid conclusion");
  out << "OK: " << t.conclusion.to_string() << " (" << proof_size(t) << " inferences)\n";
  return 0;
}

int cmd_lfi(const Settings& st, std::ostream& out) {
  const LfiReport r = lfi_audit(st.max_n);
  if (st.format == "structured") {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json j = {{"name", c.name}, {"statement", c.statement}, {"expected", c.expected}, {"holds", c.holds}};
      if (c.witness) j["witness"] = countermodel_json(*c.witness);
      checks.push_back(j);
    }
    out << json{{"ok", r.all_ok()}, {"checks", checks}}.dump(2) << "\n";
    return r.all_ok() ? 0 : 1;
  }
  out << "value  o  *\n";
  for (const auto& row : consistency_truth_table())
    out << std::left << std::setw(7) << s6().name_of(row.value) << std::setw(3) << s6().name_of(row.circ)
        << s6().name_of(row.bullet) << "\n";
  for (const auto& c : r.checks) {
    out << (c.ok() ? "ok    " : "FAIL  ") << c.name << ": " << c.statement << (c.holds ? "" : "  (fails");
    if (!c.holds) out << (c.witness ? " at " + c.witness->to_string() : std::string()) << ")";
    out << "\n";
  }
  out << (r.all_ok() ? "all " : "mismatches among ") << r.checks.size() << " checks\n";
  return r.all_ok() ? 0 : 1;
}

int cmd_dat(const Settings& st, std::ostream& out) {
  const auto q = parse_entailment(st.input);
  const DatResult r = dat_check(q.premises, q.goal, {st.max_vars});
  if (st.format == "structured") {
    out << json{{"cpl", r.cpl}, {"six_with_circ", r.six_with_circ}, {"agree", r.agree},
                {"augmented_premises", render_list(r.augmented_premises)}}
               .dump(2)
        << "\n";
  } else {
    out << "classical:           " << (r.cpl ? "valid" : "invalid") << "\n"
        << "six with o-premises: " << (r.six_with_circ ? "valid" : "invalid") << "\n"
        << "premises used:       " << render_list(r.augmented_premises) << "\n"
        << (r.agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return r.agree ? 0 : 1;
}

int cmd_algebra_audit(const Settings& st, std::ostream& out) {
  const FiniteAlgebra algebra = load_algebra(st.algebra);
  const auto results = audit_identities(algebra);
  const bool all = std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.holds; });
  if (st.format == "structured") {
    json rows = json::array();
    for (const auto& r : results) {
      json j = {{"name", r.name}, {"statement", r.statement}, {"holds", r.holds}, {"tuples_checked", r.tuples_checked}};
      if (r.witness) {
        json w = json::array();
        for (auto v : *r.witness) w.push_back(algebra.name_of(v));
        j["witness"] = w;
      }
      rows.push_back(j);
    }
    out << json{{"algebra", algebra.name()}, {"ok", all}, {"identities", rows}}.dump(2) << "\n";
    return all ? 0 : 1;
  }
  out << "algebra " << algebra.name() << " (" << algebra.size() << " elements)\n";
  for (const auto& r : results) {
    out << (r.holds ? "ok    " : "FAIL  ") << std::left << std::setw(6) << r.name << r.statement;
    if (r.witness) {
      out << "  witness:";
      for (auto v : *r.witness) out << " " << algebra.name_of(v);
    }
    out << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures and proofs for the six-valued logic of involutive Stone algebras", "six"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  Settings st;
  app.add_option("--algebra", st.algebra, "builtin algebra (S6, L2..L5, B4) or JSON file")->capture_default_str();
  app.add_option("--max-vars", st.max_vars, "largest number of variables to enumerate")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  app.add_option("--max-blocks", st.max_blocks, "block cap for conjunctive forms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", st.format, "text or structured (JSON)")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_flag("--expand-macros", st.expand, "show or check proofs in primitive rules only");

  auto* check = app.add_subcommand("check", "decide \"premises |= goal\" by degrees of truth");
  check->add_option("query", st.input)->required();
  auto* table = app.add_subcommand("table", "truth table of a formula");
  table->add_option("formula", st.input)->required();
  auto* nf = app.add_subcommand("nf", "conjunctive form and block count");
  nf->add_option("formula", st.input)->required();
  nf->add_flag("--steps", st.steps, "list the rewriting steps");
  auto* prove_cmd = app.add_subcommand("prove", "derive \"antecedent => succedent\" or give a countermodel");
  prove_cmd->add_option("sequent", st.input)->required();
  auto* verify = app.add_subcommand("verify", "check a proof file written by prove --format structured");
  verify->add_option("proof-file", st.input)->required();
  auto* lfi = app.add_subcommand("lfi-audit", "consistency-operator laws");
  lfi->add_option("--max-n", st.max_n, "largest n in |= o ~^n o p")->check(CLI::Range(0, 12))->capture_default_str();
  auto* dat = app.add_subcommand("dat", "classical entailment against Six with o-premises");
  dat->add_option("query", st.input)->required();
  auto* audit = app.add_subcommand("algebra-audit", "check DM1, DM2 and IS1-IS17 on an algebra");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(st, out);
    if (table->parsed()) return cmd_table(st, out);
    if (nf->parsed()) return cmd_nf(st, out);
    if (prove_cmd->parsed()) return cmd_prove(st, out);
    if (verify->parsed()) return cmd_verify(st, out);
    if (lfi->parsed()) return cmd_lfi(st, out);
    if (dat->parsed()) return cmd_dat(st, out);
    if (audit->parsed()) return cmd_algebra_audit(st, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const LanguageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ProofFormatError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const MacroError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SelfCheckError& e) {
    err << "internal error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace six
