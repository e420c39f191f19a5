#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sp2brst/variable.hpp"

namespace sp2brst {

struct Factor {
  Variable var;
  std::uint16_t exp = 1;

  friend bool operator==(const Factor& a, const Factor& b) {
    return a.var == b.var && a.exp == b.exp;
  }
  friend std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
    if (auto c = a.var <=> b.var; c != 0) return c;
    return a.exp <=> b.exp;
  }
};

/// A signed monomial: the result of reordering a product into normal form.
/// A zero sign means the product vanished (an odd generator repeated).
struct SignedMonomial;

/// Normal-ordered product of generators.
///
/// Factors are strictly increasing in canonical variable order and odd
/// generators appear with exponent 1. The coefficient lives in GradedPoly.
class Monomial {
 public:
  Monomial() = default;

  /// Single generator.
  explicit Monomial(const Variable& v)
      : factors_{Factor{v, 1}}, parity_(v.odd ? 1 : 0) {}

  /// Reorders an arbitrary word of generators into normal form.
  static SignedMonomial normal_form(std::span<const Variable> word);

  /// Builds from already-ordered factors; throws std::invalid_argument if
  /// the ordering or odd-exponent invariant is broken.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int parity() const { return parity_; }
  int ngh() const;
  /// Total number of xi_alpha, P and lambda factors (eigenvalue of N).
  int n_degree() const;
  /// Total number of C and pi factors.
  int cp_degree() const;
  /// Total degree in the matter coordinates xi_alpha and xi_alpha'.
  int xi_degree() const;
  int degree_in(Sector s) const;
  bool contains_sector(Sector s) const;
  std::uint16_t exponent(const Variable& v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    return std::lexicographical_compare_three_way(
        a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
        b.factors_.end());
  }

  std::size_t hash() const;

 private:
  friend SignedMonomial multiply(const Monomial&, const Monomial&);
  friend std::optional<std::pair<int, Monomial>> derivative_impl(
      const Monomial&, const Variable&, bool);

  void recompute_parity();

  std::vector<Factor> factors_;
  int parity_ = 0;
};

struct SignedMonomial {
  int sign = 1;  // -1, 0 or +1
  Monomial monomial;
};

/// Graded product a*b brought to normal form.
SignedMonomial multiply(const Monomial& a, const Monomial& b);

/// d_l/dv and d_r/dv of a monomial: returns (integer coefficient, rest), or
/// nullopt if v does not occur. The coefficient carries the exponent and the
/// Koszul sign of moving v to the left (resp. right) end.
std::optional<std::pair<int, Monomial>> left_derivative(const Monomial& m,
                                                        const Variable& v);
std::optional<std::pair<int, Monomial>> right_derivative(const Monomial& m,
                                                         const Variable& v);

std::string to_string(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace sp2brst
