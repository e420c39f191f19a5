#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sp2brst/graded_poly.hpp"

namespace sp2brst {

/// Rank-n Sp(2)-symmetric tensor with GradedPoly components.
///
/// Symmetry is structural: only one component per multiset of indices is
/// stored, addressed by how many indices equal 2 (0..rank).
class SymTensor {
 public:
  explicit SymTensor(int rank = 0);

  static SymTensor scalar(GradedPoly x);
  static SymTensor vector(GradedPoly first, GradedPoly second);

  int rank() const { return rank_; }

  /// Component for an arbitrary index tuple with entries in {1, 2}.
  const GradedPoly& operator()(std::span<const int> indices) const;
  const GradedPoly& operator()(std::initializer_list<int> indices) const {
    return (*this)(std::span<const int>(indices.begin(), indices.size()));
  }
  GradedPoly& at(std::span<const int> indices);
  GradedPoly& at(std::initializer_list<int> indices) {
    return at(std::span<const int>(indices.begin(), indices.size()));
  }

  /// Component with `twos` indices equal to 2.
  const GradedPoly& by_count(int twos) const { return components_.at(twos); }
  GradedPoly& by_count(int twos) { return components_.at(twos); }
  const std::vector<GradedPoly>& components() const { return components_; }

  bool is_zero() const;
  std::size_t term_count() const;
  std::optional<int> min_cp_degree() const;
  std::optional<int> max_cp_degree() const;
  std::optional<int> parity() const;
  std::optional<int> ngh() const;

  SymTensor truncate_cp(int k) const;
  SymTensor cp_part(int d) const;

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  SymTensor& operator*=(const Rational& c);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(SymTensor a, const Rational& c) { return a *= c; }
  friend SymTensor operator*(const Rational& c, SymTensor a) { return a *= c; }
  friend bool operator==(const SymTensor& a, const SymTensor& b) {
    return a.rank_ == b.rank_ && a.components_ == b.components_;
  }

 private:
  void check_rank(const SymTensor& o) const;

  int rank_;
  std::vector<GradedPoly> components_;
};

/// Sorted index tuple (1s then 2s) for a component count.
std::vector<int> canonical_indices(int rank, int twos);

/// One line per component: `name[1,2] = expr`.
std::string to_string(const SymTensor& t, const std::string& name);

}  // namespace sp2brst
