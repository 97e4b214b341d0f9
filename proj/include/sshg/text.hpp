#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sshg/expression.hpp"

namespace sshg {

// Parse tree of the expression text format (see README for the grammar).
struct ExprAST {
  enum class Kind { Number, Symbol, Add, Sub, Neg, Mul, Div, Pow, Call };
  Kind kind = Kind::Number;
  std::string text;      // number literal, symbol or function name
  Fraction exponent;     // Pow
  std::vector<std::unique_ptr<ExprAST>> args;
  int line = 1;
  int column = 1;
};

// Throws ParseError with 1-based line/column (offset by line0/column0 when the
// text is embedded in a larger file).
std::unique_ptr<ExprAST> parse_ast(std::string_view text, int line0 = 1, int column0 = 1);
Expression lower(const ExprAST& ast);
Expression parse_expression(std::string_view text, int line0 = 1, int column0 = 1);

// Deterministic, round-trip safe: parse_expression(render_expression(e)) == e.
std::string render_expression(const Expression& e);
std::string render_scalar(const CycloScalar& c);

}  // namespace sshg
