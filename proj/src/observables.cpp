#include "sp2brst/observables.hpp"

#include "sp2brst/operators.hpp"

namespace sp2brst {

namespace {

const SectorSet kGhostCoordinates{Sector::Ghost, Sector::LagrangeMomentum};

}  // namespace

IdealDivision divide_by_constraints(const GradedPoly& f,
                                    const TheorySpec& spec) {
  IdealDivision out;
  for (const auto& [mono, c] : f.terms()) {
    const Factor* lead = nullptr;
    for (const auto& fac : mono.factors()) {
      if (fac.var.sector == Sector::XiConstraint) {
        lead = &fac;
        break;
      }
    }
    if (!lead) {
      out.remainder.add_term(mono, c);
      continue;
    }
    // The lead generator sorts first, so xi_beta * rest needs no sign and
    // d_l/dxi_beta returns (exponent, rest).
    const Variable v = spec.xi(lead->var.alpha);
    const auto d = left_derivative(mono, v);
    out.quotients[v.alpha].add_term(d->second, Rational(c) / d->first);
  }
  return out;
}

FirstClassCheck check_first_class(const GradedPoly& phi0,
                                  const TheorySpec& spec) {
  if (!phi0.only_sectors({Sector::XiConstraint, Sector::XiPhysical})) {
    throw std::invalid_argument("observable must depend on xi only");
  }
  FirstClassCheck out;
  for (int al = 1; al <= spec.m(); ++al) {
    const GradedPoly b = poisson_bracket(phi0, GradedPoly(spec.xi(al)), spec);
    IdealDivision div = divide_by_constraints(b, spec);
    if (!div.remainder.is_zero()) {
      out.first_class = false;
      out.witness = FirstClassWitness{al, b, std::move(div.remainder)};
      return out;
    }
  }
  return out;
}

NotFirstClass::NotFirstClass(FirstClassWitness w)
    : std::invalid_argument("observable is not first class: {phi0, xi[" +
                            std::to_string(w.alpha) + "]} leaves remainder " +
                            to_string(w.remainder)),
      witness_(std::move(w)) {}

ObservableLifter::ObservableLifter(const TheorySpec& spec,
                                   const SolverResult& solved)
    : solver_(spec, solved.order), omega_(solved.omega), pi_(solved.pi) {}

SymTensor ObservableLifter::bracket_omega(const GradedPoly& y) const {
  SymTensor out(1);
  for (int a = 1; a <= 2; ++a) {
    out.at({a}) = poisson_bracket(omega_({a}), y, solver_.spec(), order());
  }
  return out;
}

SymTensor ObservableLifter::apply_A_ad_pi(const SymTensor& y) const {
  return solver_.apply_A(y) + solver_.bracket_tensor(pi_, y);
}

SymTensor ObservableLifter::commutator_residual(
    const GradedPoly& phi_prime) const {
  return bracket_omega(phi_prime);
}

ObservableLift ObservableLifter::lift(const GradedPoly& phi0,
                                     int order) const {
  if (order != this->order()) {
    throw std::invalid_argument(
        "lift order " + std::to_string(order) +
        " differs from the order Omega was solved at (" +
        std::to_string(this->order()) + ")");
  }
  FirstClassCheck fc = check_first_class(phi0, solver_.spec());
  if (!fc.first_class) throw NotFirstClass(std::move(*fc.witness));

  ObservableLift out;
  out.phi0 = phi0;
  const SymTensor source = bracket_omega(phi0);
  SymTensor k(0);
  if (!source.is_zero()) {
    k = solver_.neumann_apply(
            [this](const SymTensor& t) { return apply_A_ad_pi(t); },
            apply_W_plus(source).truncate_cp(order)) *
        Rational(-1);
  }
  out.k_part = k({});
  out.phi_prime = phi0 + out.k_part;

  LiftReport& rep = out.report;
  rep.residual = commutator_residual(out.phi_prime);
  rep.ngh_zero = out.phi_prime.is_zero() || out.phi_prime.ngh() == 0;
  rep.restricts = restrict_observable(out.phi_prime) == phi0;
  rep.bar_gamma_k_zero = apply_bar_Gamma(out.k_part).is_zero();
  const SymTensor eq =
      k + apply_W_plus(source + apply_A_ad_pi(k)).truncate_cp(order);
  rep.k_equation = eq.truncate_cp(order).is_zero();
  return out;
}

GradedPoly restrict_observable(const GradedPoly& phi_prime) {
  return phi_prime.substitute_zero(kGhostCoordinates);
}

RealizationReport verify_realization(const ObservableLift& first,
                                     const ObservableLift& second,
                                     const TheorySpec& spec, int order) {
  RealizationReport rep;
  rep.bracket_lifted = restrict_observable(
      poisson_bracket(first.phi_prime, second.phi_prime, spec, order));
  rep.bracket_direct = poisson_bracket(first.phi0, second.phi0, spec);
  rep.product_lifted = restrict_observable(
      GradedPoly::multiply(first.phi_prime, second.phi_prime, order));
  rep.product_direct = first.phi0 * second.phi0;
  return rep;
}

}  // namespace sp2brst
