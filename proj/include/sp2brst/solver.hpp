#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp2brst/bracket_tree.hpp"
#include "sp2brst/sym_tensor.hpp"
#include "sp2brst/theory.hpp"

namespace sp2brst {

/// An internal degree invariant failed (a series did not raise the C,pi
/// degree, or an iteration did not stabilize). Always a sign or
/// normalization bug, never bad input.
class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SolveMethod { FixedPoint, Descendants, Both };

struct SolverConfig {
  int order = 6;                     // truncation cp-degree k >= 2
  std::optional<SymTensor> upsilon;  // W-closed rank-1 shift, default 0
  SolveMethod method = SolveMethod::Both;
};

/// Per cp-degree term counts of the two residual forms.
struct ResidualDegree {
  int degree = 0;
  std::size_t direct_terms = 0;
  std::size_t structured_terms = 0;
  bool agree = true;
};

struct MasterResidual {
  SymTensor direct{2};      // {Omega^a, Omega^b}' through cp-degree k
  SymTensor structured{2};  // W Pi + F + A Pi + {Pi^a, Pi^b}' through k
  std::vector<ResidualDegree> degrees;

  bool vanishes() const { return direct.is_zero(); }
  bool forms_agree() const { return direct == structured; }
};

struct BoundaryReport {
  bool ghost_condition = true;     // dOmega^a/dC^{al b} at 0 = xi_al delta^a_b
  bool momentum_condition = true;  // dOmega^a/dpi^al at 0 = eps^{ab} P_{al b}
  std::vector<std::string> violations;
  bool ok() const { return ghost_condition && momentum_condition; }
};

struct SolverResult {
  int order = 0;
  SolveMethod method = SolveMethod::Both;
  bool upsilon_supplied = false;
  SymTensor omega1{1};
  SymTensor pi0{1};
  SymTensor pi{1};
  SymTensor omega{1};
  std::optional<SymTensor> pi_fixed_point;
  std::optional<SymTensor> pi_descendants;
  int fixed_point_iterations = 0;
  bool methods_agree = true;
  int symmetry_defects = 0;
  MasterResidual residual;
  BoundaryReport boundary;

  bool ok() const {
    return residual.vanishes() && residual.forms_agree() && methods_agree &&
           symmetry_defects == 0 && boundary.ok();
  }
};

/// Linear map between tensor spaces used inside Neumann series.
using TensorMap = std::function<SymTensor(const SymTensor&)>;

/// Builds Omega^a = Omega_1^a + Pi^a for one theory at truncation order k.
///
/// All results are truncated at cp-degree k. Every step of the construction
/// raises the cp-degree, so the truncation is exact.
class MasterSolver {
 public:
  MasterSolver(const TheorySpec& spec, int order);

  const TheorySpec& spec() const { return spec_; }
  int order() const { return order_; }

  /// Omega_1^a = xi_al C^{al a} + eps^{ab} P_{al b} pi^al.
  SymTensor omega1() const;
  /// F^{ab} = C^{al a} {xi_al, xi_be}' C^{be b}.
  SymTensor F() const;

  /// A^a x = C^{al a} {xi_al, x}'.
  GradedPoly apply_A_component(int a, const GradedPoly& x) const;
  /// (A X)^{a a_1..a_n} = A^{a} X^{a_1..a_n} + cyclic permutations.
  SymTensor apply_A(const SymTensor& x) const;
  /// [X, Y]^{a a_1..a_n} = {X^{a}, Y^{a_1..a_n}}' + cyclic permutations,
  /// for X of rank 1.
  SymTensor bracket_tensor(const SymTensor& x, const SymTensor& y) const;

  /// sum_m (-1)^m (W+ op)^m x, truncated at cp-degree k. Throws
  /// ConventionError if some W+ op application fails to raise the degree.
  SymTensor neumann_apply(const TensorMap& op, const SymTensor& x) const;

  /// Pi_0 = (I + W+ A)^{-1} (Upsilon - W+ F).
  SymTensor pi0(const SymTensor& upsilon) const;
  SymTensor pi0() const { return pi0(SymTensor(1)); }

  /// <X1, X2> = -1/2 (I + W+ A)^{-1} W+ ([X1, X2] + [X2, X1]).
  SymTensor bracket_pair(const SymTensor& x, const SymTensor& y) const;
  /// <X1, ..., Xm> by the subset recursion.
  SymTensor multi_bracket(std::span<const SymTensor> xs) const;
  /// Sum over deduplicated descendant trees of (X1..Xm).
  SymTensor descendant_sum(std::span<const SymTensor> xs) const;
  SymTensor evaluate_tree(const BracketTree& tree,
                          std::span<const SymTensor> xs) const;
  /// Entry m holds <X^m> = <X, ..., X> (m copies) for 1 <= m <= max_m;
  /// entry 0 is zero.
  std::vector<SymTensor> power_brackets(const SymTensor& x, int max_m) const;

  /// Iterates Pi <- Pi_0 + 1/2 <Pi, Pi> until the truncated iterate is stable.
  SymTensor solve_pi_fixed_point(const SymTensor& pi0,
                                 int* iterations = nullptr) const;
  /// Pi = sum_{m>=1} <Pi_0^m> / m!.
  SymTensor solve_pi_descendants(const SymTensor& pi0) const;

  /// Direct bracket {Omega^a, Omega^b}' and the structured residual.
  MasterResidual verify_master(const SymTensor& omega) const;
  BoundaryReport check_boundary(const SymTensor& omega) const;

  /// Validates a user-supplied Upsilon: W Upsilon = 0, odd, ngh 1,
  /// cp-degree >= 2. Throws std::invalid_argument with the reason.
  void validate_upsilon(const SymTensor& upsilon) const;

  SolverResult solve(const SolverConfig& config) const;

 private:
  SymTensor trunc(const SymTensor& x) const { return x.truncate_cp(order_); }

  TheorySpec spec_;
  int order_;
};

}  // namespace sp2brst
