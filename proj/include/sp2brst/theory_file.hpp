#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp2brst/expression.hpp"
#include "sp2brst/theory.hpp"

namespace sp2brst {

/// Malformed or inconsistent input (maps to CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedExpression {
  std::string name;
  std::string text;
  GradedPoly value;
};

/// Theory document:
///   {
///     "format": 1,
///     "constraints": [{"name": "J1", "parity": 0}, ...],
///     "physical":    [{"name": "x1", "parity": 0}, ...],
///     "U":     {"1,2,3": "1", ...},          // {xi_1, xi_2}' = U_{12}^3 xi_3
///     "mixed": {"xi[1],xip[2]": "xip[3]"},   // brackets involving xi'
///     "structure_may_depend_on_physical": false,
///     "observables": ["xi[1]^2", {"name": "casimir", "expr": "..."}],
///     "order": 6
///   }
/// Declared names may be used in expressions as aliases for xi[i] / xip[i].
struct TheoryFile {
  TheorySpec spec{std::vector<int>{}};
  std::vector<std::string> constraint_names;
  std::vector<std::string> physical_names;
  std::vector<NamedExpression> observables;
  std::optional<int> order;

  ExpressionContext context() const;
  const NamedExpression* find_observable(const std::string& name) const;
};

TheoryFile parse_theory(const std::string& text);
TheoryFile read_theory_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

struct JacobiViolation {
  Variable a, b, c;
  GradedPoly value;  // cyclic graded Jacobiator, terms of xi-degree <= k
};

struct JacobiReport {
  int triples_checked = 0;
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Graded Jacobi identity of the matter bracket on every generator triple,
///   (-1)^{e_a e_c}{a,{b,c}} + (-1)^{e_b e_a}{b,{c,a}} + (-1)^{e_c e_b}{c,{a,b}},
/// keeping Jacobiator terms of xi-degree <= k.
JacobiReport validate_jacobi(const TheorySpec& spec, int k);

}  // namespace sp2brst
