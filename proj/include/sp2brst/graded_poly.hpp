#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sp2brst/monomial.hpp"
#include "sp2brst/variable.hpp"

namespace sp2brst {

using Rational = mpq_class;

/// Raised when a polynomial grows past the process-wide term cap.
class TermLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Process-wide cap on the number of terms in one polynomial (default 10^6).
void set_term_limit(std::size_t limit);
std::size_t term_limit();

class SectorSet {
 public:
  constexpr SectorSet() = default;
  constexpr SectorSet(std::initializer_list<Sector> sectors) {
    for (Sector s : sectors) bits_ |= bit(s);
  }
  constexpr bool contains(Sector s) const { return (bits_ & bit(s)) != 0; }
  constexpr SectorSet& insert(Sector s) {
    bits_ |= bit(s);
    return *this;
  }

 private:
  static constexpr unsigned bit(Sector s) {
    return 1u << static_cast<unsigned>(s);
  }
  unsigned bits_ = 0;
};

/// Bidegree (N-degree, cp-degree) of a homogeneous piece.
using Bidegree = std::pair<int, int>;

/// Exact-rational linear combination of normal-ordered monomials.
///
/// The term map never stores zero coefficients, so structural equality is
/// polynomial equality.
class GradedPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  GradedPoly() = default;
  explicit GradedPoly(const Rational& c);
  explicit GradedPoly(const Variable& v);
  GradedPoly(const Monomial& m, const Rational& c);

  static GradedPoly constant(long c) { return GradedPoly(Rational(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  /// Adds c*m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Rational& c);
  void add_term(const SignedMonomial& m, const Rational& c);

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const Rational& c);
  GradedPoly operator-() const;

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) {
    return a += b;
  }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) {
    return a -= b;
  }
  friend GradedPoly operator*(GradedPoly a, const Rational& c) {
    return a *= c;
  }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) {
    return a *= c;
  }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    return multiply(a, b);
  }
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.terms_ == b.terms_;
  }

  static GradedPoly multiply(const GradedPoly& a, const GradedPoly& b);
  /// Product with every term of cp-degree above max_cp dropped.
  static GradedPoly multiply(const GradedPoly& a, const GradedPoly& b,
                             int max_cp);

  /// Parity shared by every term; nullopt for zero or mixed parity.
  std::optional<int> parity() const;
  /// New ghost number shared by every term; nullopt for zero or mixed.
  std::optional<int> ngh() const;
  /// Smallest cp-degree among the terms; nullopt for zero.
  std::optional<int> min_cp_degree() const;
  std::optional<int> max_cp_degree() const;
  std::optional<int> min_n_degree() const;

  /// Drops every term of cp-degree above k.
  GradedPoly truncate_cp(int k) const;
  /// Keeps only the terms of cp-degree exactly d.
  GradedPoly cp_part(int d) const;
  std::map<Bidegree, GradedPoly> grade_decompose() const;
  /// Drops every term containing a generator from one of `sectors`.
  GradedPoly substitute_zero(SectorSet sectors) const;
  /// True when every generator occurring belongs to `sectors`.
  bool only_sectors(SectorSet sectors) const;

  GradedPoly left_derivative(const Variable& v) const;
  GradedPoly right_derivative(const Variable& v) const;

  /// v * x, the generator multiplied from the left.
  friend GradedPoly operator*(const Variable& v, const GradedPoly& x);

 private:
  void check_limit() const;

  Terms terms_;
};

/// Human-readable form, identical to the serialized expression grammar.
std::string to_string(const GradedPoly& p);
std::string to_string(const Rational& q);

}  // namespace sp2brst
