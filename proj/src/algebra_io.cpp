#include "six/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace six {

namespace {

using nlohmann::json;

int element_index(const std::vector<std::string>& elements, const json& v, const std::string& where) {
  if (!v.is_string()) throw AlgebraError(where + ": table entries must be element names");
  const auto name = v.get<std::string>();
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == name) return static_cast<int>(i);
  throw AlgebraError(where + ": unknown element '" + name + "'");
}

std::vector<int> unary(const json& j, const char* key, const std::vector<std::string>& elements) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != elements.size())
    throw AlgebraError(std::string("'") + key + "' must list one element per carrier element");
  std::vector<int> out;
  for (const auto& v : j[key]) out.push_back(element_index(elements, v, key));
  return out;
}

std::vector<int> binary(const json& j, const char* key, const std::vector<std::string>& elements) {
  const std::size_t n = elements.size();
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != n)
    throw AlgebraError(std::string("'") + key + "' must be an n x n table");
  std::vector<int> out;
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != n) throw AlgebraError(std::string("'") + key + "' must be an n x n table");
    for (const auto& v : row) out.push_back(element_index(elements, v, key));
  }
  return out;
}

}  // namespace

FiniteAlgebra algebra_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw AlgebraError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw AlgebraError("an algebra description is a JSON object");
  AlgebraTables t;
  t.name = j.value("name", std::string("custom"));
  if (!j.contains("elements") || !j["elements"].is_array()) throw AlgebraError("'elements' must be an array of names");
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw AlgebraError("element names must be strings");
    t.elements.push_back(e.get<std::string>());
  }
  t.meet = binary(j, "meet", t.elements);
  t.join = binary(j, "join", t.elements);
  t.neg = unary(j, "neg", t.elements);
  t.nabla = unary(j, "nabla", t.elements);
  const std::size_t n = t.elements.size();
  t.leq.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t.leq[x * n + y] = t.meet[x * n + y] == static_cast<int>(x);
  const std::string kind = j.value("kind", std::string("involutive-stone"));
  AlgebraKind k;
  if (kind == "involutive-stone") k = AlgebraKind::kInvolutiveStone;
  else if (kind == "de-morgan") k = AlgebraKind::kDeMorgan;
  else throw AlgebraError("unknown kind '" + kind + "'");
  return FiniteAlgebra(std::move(t), k);
}

std::string algebra_to_json(const FiniteAlgebra& a, int indent) {
  const auto& t = a.tables();
  const std::size_t n = t.elements.size();
  json j;
  j["name"] = t.name;
  j["kind"] = a.kind() == AlgebraKind::kInvolutiveStone ? "involutive-stone" : "de-morgan";
  j["elements"] = t.elements;
  auto table = [&](const std::vector<int>& v) {
    json rows = json::array();
    for (std::size_t x = 0; x < n; ++x) {
      json row = json::array();
      for (std::size_t y = 0; y < n; ++y) row.push_back(t.elements[static_cast<std::size_t>(v[x * n + y])]);
      rows.push_back(row);
    }
    return rows;
  };
  auto list = [&](const std::vector<int>& v) {
    json out = json::array();
    for (int i : v) out.push_back(t.elements[static_cast<std::size_t>(i)]);
    return out;
  };
  j["meet"] = table(t.meet);
  j["join"] = table(t.join);
  j["neg"] = list(t.neg);
  j["nabla"] = list(t.nabla);
  return j.dump(indent);
}

FiniteAlgebra load_algebra(const std::string& name_or_path) {
  if (builtin_from_name(name_or_path)) return builtin_algebra(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw AlgebraError("'" + name_or_path + "' is neither a builtin algebra nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  return algebra_from_json(buf.str());
}

}  // namespace six
