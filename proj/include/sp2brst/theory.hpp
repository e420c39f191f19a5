#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sp2brst/graded_poly.hpp"
#include "sp2brst/variable.hpp"

namespace sp2brst {

/// Invalid theory data: bad indices, antisymmetry or parity violations.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Constraint system in xi coordinates.
///
/// The matter bracket is {xi_i, xi_j}' = omega_ij(xi). Constraint-constraint
/// entries are always presented as U_{ab}^c xi_c, which is what makes the
/// constraints first class. Entries involving a physical coordinate come
/// from the optional mixed table. Setting an entry also sets its graded
/// mirror omega_ji = -(-1)^{e_i e_j} omega_ij.
class TheorySpec {
 public:
  struct Partner {
    Variable var;
    GradedPoly omega;
  };

  TheorySpec() = default;
  explicit TheorySpec(std::vector<int> constraint_parities,
                      std::vector<int> physical_parities = {});

  int m() const { return static_cast<int>(constraint_parities_.size()); }
  int n_physical() const {
    return static_cast<int>(physical_parities_.size());
  }
  int parity(int alpha) const;
  int physical_parity(int alpha) const;

  Variable xi(int alpha) const;
  Variable xip(int alpha) const;
  Variable P(int alpha, int a) const;
  Variable C(int alpha, int a) const;
  Variable lam(int alpha) const;
  Variable pi(int alpha) const;

  /// Every generator of the extended phase space, in canonical order.
  std::vector<Variable> variables() const;
  std::vector<Variable> matter_variables() const;

  /// Sets U_{alpha beta}^gamma (and the mirrored U_{beta alpha}^gamma).
  void set_structure(int alpha, int beta, int gamma, const GradedPoly& u);
  /// Sets {a, b}' for matter generators where at least one is physical.
  void set_mixed(const Variable& a, const Variable& b, const GradedPoly& w);

  GradedPoly structure(int alpha, int beta, int gamma) const;
  /// {a, b}' for two matter generators.
  GradedPoly omega(const Variable& a, const Variable& b) const;
  /// Matter generators with a nonzero bracket against `a`.
  const std::vector<Partner>& partners(const Variable& a) const;

  const std::map<std::tuple<int, int, int>, GradedPoly>& structure_table()
      const {
    return structure_;
  }
  const std::map<std::pair<Variable, Variable>, GradedPoly>& mixed_table()
      const {
    return mixed_;
  }

  /// Allow structure functions U to depend on the physical coordinates.
  bool structure_may_depend_on_physical = false;

 private:
  void check_constraint_index(int alpha) const;
  void check_matter(const Variable& v) const;
  void rebuild_omega();

  std::vector<int> constraint_parities_;
  std::vector<int> physical_parities_;
  std::map<std::tuple<int, int, int>, GradedPoly> structure_;
  std::map<std::pair<Variable, Variable>, GradedPoly> mixed_;
  std::map<Variable, std::vector<Partner>> partners_;
};

/// The abelian theory with `m` constraints of the given parities (U = 0).
TheorySpec abelian_theory(std::vector<int> parities);
/// so(3): three bosonic constraints with U_{ij}^k = epsilon_{ijk}.
TheorySpec so3_theory();

/// Graded Poisson bracket {x, y}' on the extended phase space.
///
/// Computed as sum over generator pairs (A, B) of
///   (x d_r/dA) omega^{AB} (d_l/dB y),
/// with omega^{C P} = 1, omega^{pi lambda} = 1 and their graded mirrors in
/// the ghost sector and the theory's matter bracket in the xi sector.
GradedPoly poisson_bracket(const GradedPoly& x, const GradedPoly& y,
                           const TheorySpec& spec);
/// Same, dropping result terms of cp-degree above max_cp.
GradedPoly poisson_bracket(const GradedPoly& x, const GradedPoly& y,
                           const TheorySpec& spec, int max_cp);

}  // namespace sp2brst
