#include "six/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace six {

struct Formula::Node {
  Connective kind;
  std::string name;
  std::vector<Formula> kids;
  std::size_t size;
};

Formula Formula::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  return Formula(std::make_shared<const Node>(Node{Connective::kVar, std::move(name), {}, 1}));
}

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::kBottom, {}, {}, 1}));
  return f;
}

Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::kTop, {}, {}, 1}));
  return f;
}

Formula Formula::neg(Formula a) {
  const auto size = a.size() + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::kNeg, {}, {std::move(a)}, size}));
}

Formula Formula::nabla(Formula a) {
  const auto size = a.size() + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::kNabla, {}, {std::move(a)}, size}));
}

Formula Formula::conj(Formula a, Formula b) {
  const auto size = a.size() + b.size() + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::kAnd, {}, {std::move(a), std::move(b)}, size}));
}

Formula Formula::disj(Formula a, Formula b) {
  const auto size = a.size() + b.size() + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::kOr, {}, {std::move(a), std::move(b)}, size}));
}

Formula Formula::delta(Formula a) { return neg(nabla(neg(std::move(a)))); }

Formula Formula::circ(Formula a) { return disj(delta(a), delta(neg(a))); }

Formula Formula::bullet(Formula a) { return neg(circ(std::move(a))); }

Formula Formula::conj_all(std::span<const Formula> parts) {
  if (parts.empty()) return top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Formula Formula::disj_all(std::span<const Formula> parts) {
  if (parts.empty()) return bottom();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

Connective Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Connective::kVar) throw std::logic_error("name() on a non-variable formula");
  return node_->name;
}

const Formula& Formula::arg() const {
  if (!is_unary()) throw std::logic_error("arg() on a formula that is not ~ or #");
  return node_->kids[0];
}

const Formula& Formula::left() const {
  if (!is_binary()) throw std::logic_error("left() on a formula that is not & or |");
  return node_->kids[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) throw std::logic_error("right() on a formula that is not & or |");
  return node_->kids[1];
}

std::size_t Formula::size() const { return node_->size; }

std::strong_ordering Formula::compare(const Node* x, const Node* y) {
  if (x == y) return std::strong_ordering::equal;
  if (auto c = x->kind <=> y->kind; c != 0) return c;
  switch (x->kind) {
    case Connective::kVar: return x->name <=> y->name;
    case Connective::kBottom:
    case Connective::kTop: return std::strong_ordering::equal;
    case Connective::kNeg:
    case Connective::kNabla: return compare(x->kids[0].node_.get(), y->kids[0].node_.get());
    case Connective::kAnd:
    case Connective::kOr:
      if (auto c = compare(x->kids[0].node_.get(), y->kids[0].node_.get()); c != 0) return c;
      return compare(x->kids[1].node_.get(), y->kids[1].node_.get());
  }
  return std::strong_ordering::equal;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->size != b.node_->size) return false;
  return Formula::compare(a.node_.get(), b.node_.get()) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  return Formula::compare(a.node_.get(), b.node_.get());
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

enum class Tok {
  kIdent, kBot, kTop, kNot, kNabla, kDelta, kCirc, kBullet, kAnd, kOr,
  kLParen, kRParen, kComma, kArrow, kEntails, kEnd
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kIdent: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), start});
      ++i;
    };
    switch (c) {
      case '~': single(Tok::kNot); continue;
      case '#': single(Tok::kNabla); continue;
      case 'D': single(Tok::kDelta); continue;
      case '*': single(Tok::kBullet); continue;
      case '&': single(Tok::kAnd); continue;
      case '(': single(Tok::kLParen); continue;
      case ')': single(Tok::kRParen); continue;
      case ',': single(Tok::kComma); continue;
      case '|':
        if (i + 1 < s.size() && s[i + 1] == '=') {
          out.push_back({Tok::kEntails, "|=", start});
          i += 2;
        } else {
          single(Tok::kOr);
        }
        continue;
      case '=':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::kArrow, "=>", start});
          i += 2;
          continue;
        }
        throw ParseError("unexpected '='", start);
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      Tok kind = Tok::kIdent;
      if (word == "bot") kind = Tok::kBot;
      else if (word == "top") kind = Tok::kTop;
      else if (word == "o") kind = Tok::kCirc;
      out.push_back({kind, std::move(word), start});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula formula() { return disjunction(); }

  std::vector<Formula> list(Tok stop) {
    std::vector<Formula> out;
    if (peek().kind == stop) return out;
    out.push_back(formula());
    while (peek().kind == Tok::kComma) {
      advance();
      out.push_back(formula());
    }
    return out;
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().pos);
    advance();
  }

 private:
  Formula disjunction() {
    Formula acc = conjunction();
    while (peek().kind == Tok::kOr) {
      advance();
      acc = Formula::disj(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (peek().kind == Tok::kAnd) {
      advance();
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::kNot: advance(); return Formula::neg(unary());
      case Tok::kNabla: advance(); return Formula::nabla(unary());
      case Tok::kDelta: advance(); return Formula::delta(unary());
      case Tok::kCirc: advance(); return Formula::circ(unary());
      case Tok::kBullet: advance(); return Formula::bullet(unary());
      default: return atom();
    }
  }

  Formula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIdent: advance(); return Formula::var(t.text);
      case Tok::kBot: advance(); return Formula::bottom();
      case Tok::kTop: advance(); return Formula::top();
      case Tok::kLParen: {
        advance();
        Formula inner = disjunction();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      default: throw ParseError("expected a formula, found " + describe(t), t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect(Tok::kEnd, "end of input");
  return f;
}

std::vector<Formula> parse_formula_list(std::string_view text) {
  Parser p(text);
  auto out = p.list(Tok::kEnd);
  p.expect(Tok::kEnd, "',' or end of input");
  return out;
}

EntailmentQuery parse_entailment(std::string_view text) {
  Parser p(text);
  auto premises = p.list(Tok::kEntails);
  p.expect(Tok::kEntails, "'|='");
  Formula goal = p.formula();
  p.expect(Tok::kEnd, "end of input");
  return {std::move(premises), std::move(goal)};
}

SequentText parse_sequent_text(std::string_view text) {
  Parser p(text);
  auto ant = p.list(Tok::kArrow);
  p.expect(Tok::kArrow, "'=>'");
  auto suc = p.list(Tok::kEnd);
  p.expect(Tok::kEnd, "',' or end of input");
  return {std::move(ant), std::move(suc)};
}

namespace {

// Binding strength: | = 1, & = 2, prefix = 3, atoms = 4.
int strength(const Formula& f) {
  switch (f.kind()) {
    case Connective::kOr: return 1;
    case Connective::kAnd: return 2;
    case Connective::kNeg:
    case Connective::kNabla: return 3;
    default: return 4;
  }
}

void render_into(const Formula& f, int min_strength, std::string& out) {
  const bool parens = strength(f) < min_strength;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::kVar: out += f.name(); break;
    case Connective::kBottom: out += "bot"; break;
    case Connective::kTop: out += "top"; break;
    case Connective::kNeg:
      out += '~';
      render_into(f.arg(), 3, out);
      break;
    case Connective::kNabla:
      out += '#';
      render_into(f.arg(), 3, out);
      break;
    case Connective::kAnd:
      render_into(f.left(), 2, out);
      out += " & ";
      render_into(f.right(), 3, out);
      break;
    case Connective::kOr:
      render_into(f.left(), 1, out);
      out += " | ";
      render_into(f.right(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, 0, out);
  return out;
}

std::string render_list(std::span<const Formula> fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += render(fs[i]);
  }
  return out;
}

std::size_t complexity(const Formula& f) {
  switch (f.kind()) {
    case Connective::kNeg:
    case Connective::kNabla: return 1 + complexity(f.arg());
    case Connective::kAnd:
    case Connective::kOr: return 1 + complexity(f.left()) + complexity(f.right());
    default: return 0;
  }
}

int depth(const Formula& f) {
  switch (f.kind()) {
    case Connective::kNeg:
    case Connective::kNabla: return 1 + depth(f.arg());
    case Connective::kAnd:
    case Connective::kOr: return 1 + std::max(depth(f.left()), depth(f.right()));
    default: return 0;
  }
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::kVar: out.insert(f.name()); break;
    case Connective::kNeg:
    case Connective::kNabla: collect_vars(f.arg(), out); break;
    case Connective::kAnd:
    case Connective::kOr:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      break;
    default: break;
  }
}

}  // namespace

std::vector<std::string> vars(const Formula& f) {
  std::set<std::string> names;
  collect_vars(f, names);
  return {names.begin(), names.end()};
}

std::vector<std::string> vars(std::span<const Formula> fs) {
  std::set<std::string> names;
  for (const auto& f : fs) collect_vars(f, names);
  return {names.begin(), names.end()};
}

bool contains_nabla(const Formula& f) {
  switch (f.kind()) {
    case Connective::kNabla: return true;
    case Connective::kNeg: return contains_nabla(f.arg());
    case Connective::kAnd:
    case Connective::kOr: return contains_nabla(f.left()) || contains_nabla(f.right());
    default: return false;
  }
}

}  // namespace six
