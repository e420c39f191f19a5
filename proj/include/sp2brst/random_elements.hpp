#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sp2brst/graded_poly.hpp"
#include "sp2brst/sym_tensor.hpp"
#include "sp2brst/theory.hpp"

namespace sp2brst {

struct RandomOptions {
  int terms = 4;
  int min_n = 1;   // N-degree range; min_n >= 1 keeps samples inside V
  int max_n = 4;
  int min_cp = 0;
  int max_cp = 4;
  int max_coefficient = 5;  // numerators in [-c, c], denominators in [1, 3]
  bool physical = false;    // allow xi' factors
  std::optional<int> parity;
  std::optional<int> ngh;
};

/// Seeded source of random polynomials and tensors. Draws use the raw
/// mt19937_64 stream reduced modulo the range, so a seed gives the same
/// elements on every platform.
class RandomElements {
 public:
  RandomElements(const TheorySpec& spec, std::uint64_t seed);

  int uniform(int lo, int hi);  // inclusive
  Rational coefficient(int max_abs);
  /// Nonzero monomial honouring the degree ranges; nullopt if the parity or
  /// ngh filter could not be met after many attempts.
  std::optional<Monomial> monomial(const RandomOptions& opt);
  GradedPoly poly(const RandomOptions& opt);
  /// Random symmetric tensor; each component drawn independently.
  SymTensor tensor(int rank, const RandomOptions& opt);

 private:
  std::mt19937_64 engine_;
  std::vector<Variable> n_vars_;
  std::vector<Variable> cp_vars_;
  std::vector<Variable> physical_;
};

}  // namespace sp2brst
