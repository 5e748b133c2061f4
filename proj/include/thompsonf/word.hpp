#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "thompsonf/plmap.hpp"

namespace thompsonf {

/// Syntax tree of a group word such as "[x0 x1^-1, x1^(x0^2)]".
struct WordExpr {
  enum class Kind { Generator, Product, Power, Conjugate, Commutator };

  Kind kind = Kind::Generator;
  std::string name;           // Generator
  std::int64_t exponent = 0;  // Power
  // Product: the factors. Power: {base}. Conjugate: {base, by}.
  // Commutator: {left, right}.
  std::vector<WordExpr> children;
  std::size_t position = 0;

  /// E.g. "Product(x0, Power(x1, -1))".
  std::string describe() const;
};

/// Grammar:
///   expr   := term+
///   term   := factor ['^' (signed-integer | factor)]
///   factor := name | '(' expr ')' | '[' expr ',' expr ']'
/// An integer exponent is a power, any other exponent a conjugation
/// (a^b = b^-1 a b); [a,b] = a b a^-1 b^-1. Throws SyntaxError.
WordExpr parse_word(std::string_view text);

using Environment = std::map<std::string, PLMap, std::less<>>;

/// f0, f1, g0, g1 and x0 ... x9.
Environment standard_environment();

/// Word-order evaluation. Throws UnboundName for names missing from env.
PLMap eval_word(const WordExpr& word, const Environment& env);

}  // namespace thompsonf
