#include "thompsonf/word.hpp"

#include <cctype>
#include <limits>

#include "thompsonf/error.hpp"
#include "thompsonf/thompson.hpp"

namespace thompsonf {

namespace {

enum class Tok { Name, Integer, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

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
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i - start == 1 && !std::isdigit(static_cast<unsigned char>(c)))
        throw SyntaxError(start, std::string("sign '") + c + "' without digits");
      out.push_back({Tok::Integer, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      default: throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  WordExpr parse() {
    WordExpr e = expr();
    if (peek().kind != Tok::End) throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      throw SyntaxError(peek().pos, std::string("expected ") + what +
                                        (peek().kind == Tok::End ? " before end of input" : ""));
    ++i_;
  }

  static bool starts_factor(Tok k) { return k == Tok::Name || k == Tok::LParen || k == Tok::LBracket; }

  WordExpr expr() {
    const std::size_t pos = peek().pos;
    std::vector<WordExpr> terms;
    terms.push_back(term());
    while (starts_factor(peek().kind)) terms.push_back(term());
    if (terms.size() == 1) return std::move(terms.front());
    WordExpr e;
    e.kind = WordExpr::Kind::Product;
    e.children = std::move(terms);
    e.position = pos;
    return e;
  }

  WordExpr term() {
    WordExpr base = factor();
    if (peek().kind != Tok::Caret) return base;
    const std::size_t caret = next().pos;
    WordExpr e;
    e.position = base.position;
    if (peek().kind == Tok::Integer) {
      const Token& t = next();
      e.kind = WordExpr::Kind::Power;
      try {
        e.exponent = std::stoll(t.text);
      } catch (const std::out_of_range&) {
        throw SyntaxError(t.pos, "exponent out of range");
      }
      e.children.push_back(std::move(base));
      return e;
    }
    if (!starts_factor(peek().kind)) throw SyntaxError(peek().pos, "expected exponent after '^' at " + std::to_string(caret));
    e.kind = WordExpr::Kind::Conjugate;
    e.children.push_back(std::move(base));
    e.children.push_back(factor());
    return e;
  }

  WordExpr factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Name: {
        WordExpr e;
        e.kind = WordExpr::Kind::Generator;
        e.name = t.text;
        e.position = t.pos;
        ++i_;
        return e;
      }
      case Tok::LParen: {
        ++i_;
        WordExpr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket: {
        const std::size_t pos = next().pos;
        WordExpr e;
        e.kind = WordExpr::Kind::Commutator;
        e.position = pos;
        e.children.push_back(expr());
        expect(Tok::Comma, "','");
        e.children.push_back(expr());
        expect(Tok::RBracket, "']'");
        return e;
      }
      case Tok::End: throw SyntaxError(t.pos, "unexpected end of input");
      default: throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

std::string WordExpr::describe() const {
  auto join = [this] {
    std::string s;
    for (const auto& c : children) s += (s.empty() ? "" : ", ") + c.describe();
    return s;
  };
  switch (kind) {
    case Kind::Generator: return name;
    case Kind::Product: return "Product(" + join() + ")";
    case Kind::Power: return "Power(" + children[0].describe() + ", " + std::to_string(exponent) + ")";
    case Kind::Conjugate: return "Conjugate(" + join() + ")";
    case Kind::Commutator: return "Commutator(" + join() + ")";
  }
  return {};
}

WordExpr parse_word(std::string_view text) { return Parser(tokenize(text)).parse(); }

Environment standard_environment() {
  Environment env;
  auto [f0, f1] = standard_generators();
  auto [g0, g1] = g0_g1();
  env.emplace("f0", f0);
  env.emplace("f1", f1);
  env.emplace("g0", g0);
  env.emplace("g1", g1);
  for (int n = 0; n <= 9; ++n) env.emplace("x" + std::to_string(n), x_n(n));
  return env;
}

PLMap eval_word(const WordExpr& word, const Environment& env) {
  switch (word.kind) {
    case WordExpr::Kind::Generator: {
      auto it = env.find(word.name);
      if (it == env.end())
        fail(ErrorCode::UnboundName, "'" + word.name + "' at position " + std::to_string(word.position) +
                                         " is not bound");
      return it->second;
    }
    case WordExpr::Kind::Product: {
      PLMap acc;
      for (const auto& c : word.children) acc = compose(acc, eval_word(c, env));
      return acc;
    }
    case WordExpr::Kind::Power: return power(eval_word(word.children[0], env), word.exponent);
    case WordExpr::Kind::Conjugate:
      return conjugate(eval_word(word.children[0], env), eval_word(word.children[1], env));
    case WordExpr::Kind::Commutator:
      return commutator(eval_word(word.children[0], env), eval_word(word.children[1], env));
  }
  return {};
}

}  // namespace thompsonf
