#include "six/proof_io.hpp"

#include "json.hpp"

namespace six {

namespace {

using nlohmann::json;

json tree_to_json(const ProofTree& t) {
  json j;
  j["rule"] = std::string(rule_name(t.rule));
  j["sequent"] = t.conclusion.to_string();
  if (t.principal) j["principal"] = render(*t.principal);
  if (t.rule == Rule::kMacro) j["macro"] = t.macro;
  j["premises"] = json::array();
  for (const auto& p : t.premises) j["premises"].push_back(tree_to_json(p));
  return j;
}

ProofTree tree_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ProofFormatError(where + ": expected an object");
  auto field = [&](const char* key) -> const json& {
    auto it = j.find(key);
    if (it == j.end()) throw ProofFormatError(where + ": missing field '" + key + "'");
    return *it;
  };
  const json& rule = field("rule");
  const json& sequent = field("sequent");
  if (!rule.is_string() || !sequent.is_string()) throw ProofFormatError(where + ": rule and sequent must be strings");
  ProofTree t;
  auto r = rule_from_name(rule.get<std::string>());
  if (!r) throw ProofFormatError(where + ": unknown rule '" + rule.get<std::string>() + "'");
  t.rule = *r;
  try {
    t.conclusion = parse_sequent(sequent.get<std::string>());
    if (auto it = j.find("principal"); it != j.end() && !it->is_null()) {
      if (!it->is_string()) throw ProofFormatError(where + ": principal must be a string");
      t.principal = parse_formula(it->get<std::string>());
    }
  } catch (const ParseError& e) {
    throw ProofFormatError(where + ": " + e.what());
  }
  if (t.rule == Rule::kMacro) {
    const json& m = field("macro");
    if (!m.is_string()) throw ProofFormatError(where + ": macro must be a string");
    t.macro = m.get<std::string>();
  }
  if (auto it = j.find("premises"); it != j.end()) {
    if (!it->is_array()) throw ProofFormatError(where + ": premises must be an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      t.premises.push_back(tree_from_json((*it)[i], where + "." + std::to_string(i)));
  }
  return t;
}

void text_rec(const ProofTree& t, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += t.conclusion.to_string();
  out += "   [";
  out += t.rule == Rule::kMacro ? "macro " + t.macro : std::string(rule_name(t.rule));
  if (t.principal) out += ": " + render(*t.principal);
  out += "]\n";
  for (const auto& p : t.premises) text_rec(p, depth + 1, out);
}

}  // namespace

std::string proof_to_json(const ProofTree& t, int indent) { return tree_to_json(t).dump(indent); }

ProofTree proof_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProofFormatError(std::string("malformed JSON: ") + e.what());
  }
  return tree_from_json(j, "root");
}

std::string proof_to_text(const ProofTree& t) {
  std::string out;
  text_rec(t, 0, out);
  return out;
}

}  // namespace six
