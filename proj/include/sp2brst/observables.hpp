#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "sp2brst/graded_poly.hpp"
#include "sp2brst/solver.hpp"
#include "sp2brst/theory.hpp"

namespace sp2brst {

/// f = sum_beta xi_beta q_beta + r, where no term of r contains a
/// constraint xi. Each term goes to the first constraint it contains in the
/// canonical order.
struct IdealDivision {
  std::map<int, GradedPoly> quotients;
  GradedPoly remainder;
};

IdealDivision divide_by_constraints(const GradedPoly& f,
                                    const TheorySpec& spec);

struct FirstClassWitness {
  int alpha = 0;
  GradedPoly bracket;    // {phi0, xi_alpha}'
  GradedPoly remainder;  // part of the bracket outside the constraint ideal
};

struct FirstClassCheck {
  bool first_class = true;
  std::optional<FirstClassWitness> witness;
};

/// phi0 must depend on xi only; throws std::invalid_argument otherwise.
FirstClassCheck check_first_class(const GradedPoly& phi0,
                                  const TheorySpec& spec);

class NotFirstClass : public std::invalid_argument {
 public:
  explicit NotFirstClass(FirstClassWitness w);
  const FirstClassWitness& witness() const { return witness_; }

 private:
  FirstClassWitness witness_;
};

struct LiftReport {
  SymTensor residual{1};        // {Omega^a, Phi'}' through cp-degree k
  bool ngh_zero = true;
  bool restricts = true;        // Phi'|_{C=pi=0} = Phi0
  bool bar_gamma_k_zero = true;
  bool k_equation = true;       // K + W+([Omega,Phi0] + A K + [Pi,K]) = 0
  bool ok() const {
    return residual.is_zero() && ngh_zero && restricts && bar_gamma_k_zero &&
           k_equation;
  }
};

struct ObservableLift {
  GradedPoly phi0;
  GradedPoly k_part;
  GradedPoly phi_prime;
  LiftReport report;
};

/// Lifts first-class functions with a solved Omega at its truncation order.
class ObservableLifter {
 public:
  ObservableLifter(const TheorySpec& spec, const SolverResult& solved);

  int order() const { return solver_.order(); }

  /// Phi' = Phi0 + K, K = -(I + W+(A + ad Pi))^{-1} W+ [Omega, Phi0].
  /// Throws NotFirstClass with a witness, or std::invalid_argument when
  /// `order` differs from the order Omega was solved at.
  ObservableLift lift(const GradedPoly& phi0, int order) const;
  ObservableLift lift(const GradedPoly& phi0) const {
    return lift(phi0, order());
  }

  /// [Omega, y]^a = {Omega^a, y}'.
  SymTensor bracket_omega(const GradedPoly& y) const;
  /// A y + [Pi, y] for y in S^0.
  SymTensor apply_A_ad_pi(const SymTensor& y) const;
  /// Direct {Omega^a, Phi'}' through cp-degree k.
  SymTensor commutator_residual(const GradedPoly& phi_prime) const;

 private:
  MasterSolver solver_;
  SymTensor omega_;
  SymTensor pi_;
};

/// L^{-1}: Phi' at C = pi = 0.
GradedPoly restrict_observable(const GradedPoly& phi_prime);

struct RealizationReport {
  GradedPoly bracket_lifted;    // {Phi'_1, Phi'_2}' at C = pi = 0
  GradedPoly bracket_direct;    // {phi_1, phi_2}'
  GradedPoly product_lifted;    // (Phi'_1 Phi'_2) at C = pi = 0
  GradedPoly product_direct;    // phi_1 phi_2
  bool bracket_law() const { return bracket_lifted == bracket_direct; }
  bool product_law() const { return product_lifted == product_direct; }
  bool ok() const { return bracket_law() && product_law(); }
};

RealizationReport verify_realization(const ObservableLift& first,
                                     const ObservableLift& second,
                                     const TheorySpec& spec, int order);

}  // namespace sp2brst
