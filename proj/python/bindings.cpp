#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "six/algebra_io.hpp"
#include "six/cli.hpp"
#include "six/lfi.hpp"
#include "six/normal_form.hpp"
#include "six/proof_io.hpp"
#include "six/prover.hpp"

namespace py = pybind11;
using namespace six;

namespace {

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse_formula(t));
  return out;
}

py::dict countermodel_dict(const Countermodel& cm) {
  py::dict valuation;
  const auto& a = cm.valuation.algebra();
  for (const auto& [name, v] : cm.valuation.assignments()) valuation[py::str(name)] = a.name_of(v);
  py::dict d;
  d["valuation"] = valuation;
  d["bound"] = a.name_of(cm.bound);
  d["text"] = cm.to_string();
  return d;
}

py::object entails(const std::vector<std::string>& premises, const std::string& goal, const std::string& algebra,
                   int max_vars) {
  const FiniteAlgebra a = load_algebra(algebra);
  const auto r = entails_degree(parse_all(premises), parse_formula(goal), a, {max_vars});
  py::dict d;
  d["holds"] = r.holds;
  d["countermodel"] = r.countermodel ? py::object(countermodel_dict(*r.countermodel)) : py::none();
  return d;
}

py::dict prove_sequent(const std::string& text, bool expand, int max_vars, std::size_t max_blocks) {
  const Sequent s = parse_sequent(text);
  ProverOptions options{{max_vars}, {max_blocks, false}};
  const ProofResult r = prove(s, options);
  py::dict d;
  d["sequent"] = s.to_string();
  d["proved"] = r.proved();
  if (!r.proved()) {
    d["countermodel"] = countermodel_dict(*r.countermodel);
    return d;
  }
  const ProofTree expanded = expand_macros(*r.proof, options.normal_form);
  const ProofCheck check = check_proof(expanded);
  if (!check.ok) throw std::runtime_error("generated proof fails to check: " + check.to_string());
  const ProofTree& shown = expand ? expanded : *r.proof;
  d["proof"] = proof_to_json(shown);
  d["text"] = proof_to_text(shown);
  d["primitive_inferences"] = proof_size(expanded);
  return d;
}

py::dict verify_proof(const std::string& json, bool expand) {
  ProofTree t = proof_from_json(json);
  if (expand) t = expand_macros(t);
  const ProofCheck c = check_proof(t);
  py::dict d;
  d["ok"] = c.ok;
  d["sequent"] = t.conclusion.to_string();
  d["error"] = c.ok ? py::object(py::none()) : py::object(py::str(c.to_string()));
  return d;
}

py::dict normal_form(const std::string& text, std::size_t max_blocks, bool simplify) {
  const ConjunctiveForm cf = to_conjunctive_form(parse_formula(text), {max_blocks, simplify});
  py::list clauses;
  for (const auto& c : cf.clauses()) {
    py::list row;
    for (const auto& b : c) row.append(render(b.to_formula()));
    clauses.append(row);
  }
  py::dict d;
  d["form"] = cf.to_string();
  d["blocks"] = block_count(cf);
  d["clauses"] = clauses;
  d["tag"] = cf.tag() == ConjunctiveForm::Tag::kTop ? "top" : cf.tag() == ConjunctiveForm::Tag::kBottom ? "bottom" : "cnf";
  return d;
}

py::dict table(const std::string& text, const std::string& algebra) {
  const FiniteAlgebra a = load_algebra(algebra);
  const TruthTable t = truth_table(parse_formula(text), a);
  py::list rows;
  for (std::size_t i = 0; i < t.outputs.size(); ++i) {
    py::list in;
    for (auto v : t.inputs[i]) in.append(a.name_of(v));
    rows.append(py::make_tuple(py::tuple(in), a.name_of(t.outputs[i])));
  }
  py::dict d;
  d["vars"] = t.vars;
  d["rows"] = rows;
  return d;
}

py::list identity_audit(const std::string& algebra) {
  const FiniteAlgebra a = load_algebra(algebra);
  py::list out;
  for (const auto& r : audit_identities(a)) {
    py::dict d;
    d["name"] = r.name;
    d["statement"] = r.statement;
    d["holds"] = r.holds;
    d["tuples_checked"] = r.tuples_checked;
    out.append(d);
  }
  return out;
}

py::list lfi(int max_n) {
  py::list out;
  for (const auto& c : lfi_audit(max_n).checks) {
    py::dict d;
    d["name"] = c.name;
    d["statement"] = c.statement;
    d["expected"] = c.expected;
    d["holds"] = c.holds;
    out.append(d);
  }
  return out;
}

py::dict dat(const std::vector<std::string>& premises, const std::string& goal) {
  const DatResult r = dat_check(parse_all(premises), parse_formula(goal));
  py::dict d;
  d["cpl"] = r.cpl;
  d["six_with_circ"] = r.six_with_circ;
  d["agree"] = r.agree;
  return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Six-valued logic of involutive Stone algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ValueError);
  py::register_exception<LanguageError>(m, "LanguageError", PyExc_ValueError);
  py::register_exception<ProofFormatError>(m, "ProofFormatError", PyExc_ValueError);

  m.def("normalize", [](const std::string& text) { return render(parse_formula(text)); }, py::arg("formula"),
        "Parses a formula and prints it back in canonical syntax.");
  m.def("entails", &entails, py::arg("premises"), py::arg("goal"), py::arg("algebra") = "S6", py::arg("max_vars") = 8,
        "Degrees-of-truth entailment; returns {'holds', 'countermodel'}.");
  m.def("equivalent", [](const std::string& a, const std::string& b) { return equivalent(parse_formula(a), parse_formula(b)); },
        py::arg("a"), py::arg("b"));
  m.def("truth_table", &table, py::arg("formula"), py::arg("algebra") = "S6");
  m.def("conjunctive_form", &normal_form, py::arg("formula"), py::arg("max_blocks") = 10000, py::arg("simplify") = false);
  m.def("prove", &prove_sequent, py::arg("sequent"), py::arg("expand_macros") = false, py::arg("max_vars") = 8,
        py::arg("max_blocks") = 10000,
        "Proof of a sequent as JSON, or a countermodel.  Proofs are always checked after macro expansion.");
  m.def("verify", &verify_proof, py::arg("proof_json"), py::arg("expand_macros") = false);
  m.def("audit_identities", &identity_audit, py::arg("algebra") = "S6");
  m.def("lfi_audit", &lfi, py::arg("max_n") = 3);
  m.def("dat_check", &dat, py::arg("premises"), py::arg("goal"));
  m.def("run_cli", &run_cli, py::arg("args"), "Runs the command-line tool; returns (exit code, stdout, stderr).");
}
