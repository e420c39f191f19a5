#include "sp2brst/omega_file.hpp"

#include <sstream>

namespace sp2brst {

std::string write_omega(const SymTensor& omega, int order) {
  std::string out = "order = " + std::to_string(order) + "\n";
  for (int a = 1; a <= 2; ++a) {
    out += "Omega[" + std::to_string(a) + "] = " + serialize(omega({a})) +
           "\n";
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

OmegaFile parse_omega(const std::string& text, const TheoryFile& theory) {
  OmegaFile out;
  bool seen[2] = {false, false};
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  ExpressionContext ctx = theory.context();
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError(std::to_string(lineno) + ":1: expected 'name = value'");
    }
    const std::string lhs = trim(line.substr(0, eq));
    const std::string rhs = line.substr(eq + 1);
    if (lhs == "order") {
      const std::string v = trim(rhs);
      if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos ||
          v.size() > 4) {
        throw InputError(std::to_string(lineno) + ":" +
                         std::to_string(eq + 2) + ": bad order '" + v + "'");
      }
      out.order = std::stoi(v);
      continue;
    }
    int a = 0;
    if (lhs == "Omega[1]") a = 1;
    if (lhs == "Omega[2]") a = 2;
    if (a == 0) {
      throw InputError(std::to_string(lineno) + ":1: unknown entry '" + lhs +
                       "'");
    }
    if (seen[a - 1]) {
      throw InputError(std::to_string(lineno) + ":1: duplicate " + lhs);
    }
    seen[a - 1] = true;
    ctx.line_offset = lineno - 1;
    ctx.column_offset = static_cast<int>(eq) + 1;
    try {
      out.omega.at({a}) = parse_expression(rhs, ctx);
    } catch (const ParseError& e) {
      throw InputError(std::to_string(e.line()) + ":" +
                       std::to_string(e.column()) + ": " + e.message());
    }
  }
  if (!seen[0] || !seen[1]) {
    throw InputError("Omega file must define Omega[1] and Omega[2]");
  }
  return out;
}

}  // namespace sp2brst
