#pragma once

#include <string>

#include "sp2brst/expression.hpp"
#include "sp2brst/random_elements.hpp"
#include "sp2brst/theory_file.hpp"

#ifndef SP2BRST_THEORY_DIR
#define SP2BRST_THEORY_DIR "theories"
#endif

namespace testutil {

inline std::string theory_path(const std::string& file) {
  return std::string(SP2BRST_THEORY_DIR) + "/" + file;
}

inline sp2brst::TheoryFile load(const std::string& file) {
  return sp2brst::read_theory_file(theory_path(file));
}

inline sp2brst::GradedPoly parse(const std::string& text,
                                 const sp2brst::TheorySpec& spec) {
  return sp2brst::parse_expression(text, spec);
}

inline int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace testutil
