#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sp2brst/graded_poly.hpp"
#include "sp2brst/theory.hpp"

namespace sp2brst {

/// Syntax or range error in an expression, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/// Expression grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := integer ('/' integer)? | generator | name | '(' expr ')'
///   generator := xi[i] | xip[i] | P[i,a] | C[i,a] | lam[i] | pi[i]
/// `aliases` maps bare names (as declared in a theory file) to generators.
struct ExpressionContext {
  const TheorySpec* spec = nullptr;
  std::map<std::string, Variable, std::less<>> aliases;
  int line_offset = 0;    // added to reported line numbers
  int column_offset = 0;  // added to reported columns on the first line
};

GradedPoly parse_expression(std::string_view text,
                            const ExpressionContext& ctx);
GradedPoly parse_expression(std::string_view text, const TheorySpec& spec);

/// Canonical text form; parse_expression(serialize(x)) == x.
std::string serialize(const GradedPoly& x);

}  // namespace sp2brst
