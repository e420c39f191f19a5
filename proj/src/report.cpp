#include "sp2brst/report.hpp"

#include <cstdio>
#include <map>

namespace sp2brst {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "pass" : "FAIL"; }

std::string method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::FixedPoint:
      return "fixed-point";
    case SolveMethod::Descendants:
      return "descendants";
    case SolveMethod::Both:
      return "both";
  }
  return "?";
}

std::string parities(const std::vector<int>& p) {
  std::string out;
  for (int v : p) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out.empty() ? "-" : out;
}

}  // namespace

std::string format_theory_header(const TheoryFile& theory, int order) {
  const TheorySpec& s = theory.spec;
  std::vector<int> cp, pp;
  for (int a = 1; a <= s.m(); ++a) cp.push_back(s.parity(a));
  for (int a = 1; a <= s.n_physical(); ++a) pp.push_back(s.physical_parity(a));
  std::string out;
  out += "constraints: " + std::to_string(s.m()) + " (parities " +
         parities(cp) + ")\n";
  out += "physical: " + std::to_string(s.n_physical()) + " (parities " +
         parities(pp) + ")\n";
  out += "order: " + std::to_string(order) + "\n";
  return out;
}

std::string format_jacobi(const JacobiReport& report) {
  std::string out = "jacobi: " + std::string(pass_fail(report.ok())) + " (" +
                    std::to_string(report.triples_checked) + " triples)\n";
  for (const auto& v : report.violations) {
    out += "  {" + to_string(v.a) + ", " + to_string(v.b) + ", " +
           to_string(v.c) + "}: " + serialize(v.value) + "\n";
  }
  return out;
}

std::string format_degree_counts(const SymTensor& x) {
  std::map<int, std::size_t> counts;
  for (const auto& comp : x.components()) {
    for (const auto& [m, c] : comp.terms()) ++counts[m.cp_degree()];
  }
  std::string out;
  for (const auto& [d, n] : counts) {
    out += "  cp " + std::to_string(d) + ": " + std::to_string(n) + "\n";
  }
  if (out.empty()) out = "  (none)\n";
  return out;
}

std::string format_residual(const MasterResidual& residual) {
  std::string out = "residual {Omega^a, Omega^b}' by cp-degree "
                    "(direct / structured terms):\n";
  for (const auto& d : residual.degrees) {
    out += "  cp " + std::to_string(d.degree) + ": " +
           std::to_string(d.direct_terms) + " / " +
           std::to_string(d.structured_terms) +
           (d.agree ? "" : "  forms differ") + "\n";
  }
  out += "residual vanishes: " + std::string(yes_no(residual.vanishes())) +
         "\n";
  out += "direct and structured forms agree: " +
         std::string(yes_no(residual.forms_agree())) + "\n";
  return out;
}

std::string format_boundary(const BoundaryReport& boundary) {
  std::string out = "boundary conditions: " +
                    std::string(pass_fail(boundary.ok())) + "\n";
  for (const auto& v : boundary.violations) out += "  " + v + "\n";
  return out;
}

std::string format_solve_report(const TheoryFile& theory,
                                const SolverResult& r,
                                const JacobiReport& jacobi) {
  std::string out = format_theory_header(theory, r.order);
  out += "method: " + method_name(r.method) + "\n";
  out += "upsilon: " + std::string(r.upsilon_supplied ? "supplied" : "0") +
         "\n";
  out += format_jacobi(jacobi);
  out += "Omega terms by cp-degree:\n" + format_degree_counts(r.omega);
  out += "Pi terms: " + std::to_string(r.pi.term_count()) + "\n";
  if (r.pi_fixed_point) {
    out += "fixed-point iterations: " +
           std::to_string(r.fixed_point_iterations) + "\n";
  }
  if (r.pi_fixed_point && r.pi_descendants) {
    out += "methods agree: " + std::string(yes_no(r.methods_agree)) + "\n";
  }
  out += "symmetry defects: " + std::to_string(r.symmetry_defects) + "\n";
  out += format_boundary(r.boundary);
  out += format_residual(r.residual);
  out += "status: " + std::string(r.ok() && jacobi.ok() ? "PASS" : "FAIL") +
         "\n";
  out += "\n[Omega]\n" + to_string(r.omega, "Omega");
  out += "\n[Pi]\n";
  out += r.pi.is_zero() ? "(empty)\n" : to_string(r.pi, "Pi");
  return out;
}

std::string format_lift_report(const std::string& name,
                               const ObservableLift& lift) {
  const LiftReport& rep = lift.report;
  std::string out = "observable: " + name + "\n";
  out += "phi0 = " + serialize(lift.phi0) + "\n";
  out += "first class: yes\n";
  out += "K terms: " + std::to_string(lift.k_part.size()) + "\n";
  out += "{Omega^a, Phi'}' vanishes: " +
         std::string(yes_no(rep.residual.is_zero())) + " (" +
         std::to_string(rep.residual.term_count()) + " residual terms)\n";
  out += "ngh(Phi') = 0: " + std::string(yes_no(rep.ngh_zero)) + "\n";
  out += "Phi' at C = pi = 0 equals phi0: " +
         std::string(yes_no(rep.restricts)) + "\n";
  out += "barGamma K = 0: " + std::string(yes_no(rep.bar_gamma_k_zero)) +
         "\n";
  out += "K + W+([Omega,phi0] + A K + [Pi,K]) = 0: " +
         std::string(yes_no(rep.k_equation)) + "\n";
  out += "Phi' = " + serialize(lift.phi_prime) + "\n";
  return out;
}

std::string format_realization(const std::string& first,
                               const std::string& second,
                               const RealizationReport& report) {
  return "realization (" + first + ", " + second + "): bracket " +
         pass_fail(report.bracket_law()) + ", product " +
         pass_fail(report.product_law()) + "\n";
}

std::string format_timings(const Timings& timings) {
  std::string out = "timing:\n";
  for (const auto& [name, sec] : timings.phases) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s", sec);
    out += "  " + name + ": " + buf + "\n";
  }
  return out;
}

}  // namespace sp2brst
