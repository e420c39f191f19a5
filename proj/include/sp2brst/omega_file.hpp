#pragma once

#include <optional>
#include <string>

#include "sp2brst/sym_tensor.hpp"
#include "sp2brst/theory_file.hpp"

namespace sp2brst {

/// Text form of a solved charge:
///   # comment lines and blank lines are ignored
///   order = 6
///   Omega[1] = <expression>
///   Omega[2] = <expression>
struct OmegaFile {
  std::optional<int> order;
  SymTensor omega{1};
};

std::string write_omega(const SymTensor& omega, int order);
/// Throws InputError (with line:column) on malformed text.
OmegaFile parse_omega(const std::string& text, const TheoryFile& theory);

}  // namespace sp2brst
