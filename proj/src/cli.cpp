#include "sp2brst/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "sp2brst/identities.hpp"
#include "sp2brst/observables.hpp"
#include "sp2brst/omega_file.hpp"
#include "sp2brst/operators.hpp"
#include "sp2brst/report.hpp"
#include "sp2brst/solver.hpp"
#include "sp2brst/theory_file.hpp"

namespace sp2brst {

namespace {

constexpr int kDefaultOrder = 6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

void apply_term_limit_env() {
  const char* env = std::getenv("SP2_BRST_MAX_TERMS");
  if (!env) return;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    throw InputError("SP2_BRST_MAX_TERMS must be a positive integer");
  }
  set_term_limit(static_cast<std::size_t>(v));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("error writing " + path);
}

int resolve_order(std::optional<int> flag, const TheoryFile& theory) {
  const int k = flag ? *flag : theory.order.value_or(kDefaultOrder);
  if (k < 2) throw InputError("order must be >= 2");
  return k;
}

SolveMethod parse_method(const std::string& m) {
  if (m == "fixed-point") return SolveMethod::FixedPoint;
  if (m == "descendants") return SolveMethod::Descendants;
  if (m == "both") return SolveMethod::Both;
  throw InputError("unknown method '" + m + "'");
}

struct SolveArgs {
  std::string theory;
  std::optional<int> order;
  std::string method = "both";
  std::string out;
  bool timing = false;
};

struct LiftArgs {
  std::string theory;
  std::string observable;
  std::optional<int> order;
  std::string out;
  bool timing = false;
};

struct IdentityArgs {
  int degree = 4;
  int samples = 100;
  std::uint64_t seed = 7;
};

struct VerifyArgs {
  std::string theory;
  std::string omega;
  std::optional<int> order;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  Timings t;
  auto t0 = Clock::now();
  const TheoryFile theory = read_theory_file(a.theory);
  const int k = resolve_order(a.order, theory);
  const JacobiReport jac = validate_jacobi(theory.spec, k);
  t.add("parse+jacobi", seconds_since(t0));
  if (!jac.ok()) {
    out << format_theory_header(theory, k) << format_jacobi(jac);
    throw InputError("structure functions violate the Jacobi identity");
  }
  t0 = Clock::now();
  MasterSolver solver(theory.spec, k);
  SolverConfig cfg;
  cfg.order = k;
  cfg.method = parse_method(a.method);
  const SolverResult r = solver.solve(cfg);
  t.add("solve", seconds_since(t0));
  out << format_solve_report(theory, r, jac);
  if (!a.out.empty()) write_file(a.out, write_omega(r.omega, k));
  if (a.timing) out << format_timings(t);
  return r.ok() ? kExitPass : kExitVerificationFailure;
}

int cmd_lift(const LiftArgs& a, std::ostream& out) {
  Timings t;
  auto t0 = Clock::now();
  const TheoryFile theory = read_theory_file(a.theory);
  const int k = resolve_order(a.order, theory);
  const NamedExpression* target = theory.find_observable(a.observable);
  if (!target) {
    throw InputError("no observable named '" + a.observable + "'");
  }
  const JacobiReport jac = validate_jacobi(theory.spec, k);
  if (!jac.ok()) {
    out << format_jacobi(jac);
    throw InputError("structure functions violate the Jacobi identity");
  }
  MasterSolver solver(theory.spec, k);
  SolverConfig cfg;
  cfg.order = k;
  cfg.method = SolveMethod::FixedPoint;
  const SolverResult r = solver.solve(cfg);
  t.add("solve", seconds_since(t0));
  out << format_theory_header(theory, k);
  out << "Omega solve: " << (r.ok() ? "pass" : "FAIL") << "\n";
  if (!r.ok()) return kExitVerificationFailure;

  t0 = Clock::now();
  ObservableLifter lifter(theory.spec, r);
  ObservableLift lift;
  try {
    lift = lifter.lift(target->value, k);
  } catch (const NotFirstClass& e) {
    const auto& w = e.witness();
    out << "observable: " << target->name << "\n";
    out << "phi0 = " << serialize(target->value) << "\n";
    out << "first class: no\n";
    out << "witness: {phi0, xi[" << w.alpha << "]}' = " << serialize(w.bracket)
        << "\n";
    out << "remainder outside the constraint ideal: "
        << serialize(w.remainder) << "\n";
    out << "status: FAIL\n";
    return kExitVerificationFailure;
  }
  out << format_lift_report(target->name, lift);
  bool ok = lift.report.ok();
  for (const auto& other : theory.observables) {
    if (!check_first_class(other.value, theory.spec).first_class) {
      out << "realization (" << target->name << ", " << other.name
          << "): skipped, not first class\n";
      continue;
    }
    const ObservableLift second =
        other.name == target->name ? lift : lifter.lift(other.value, k);
    const RealizationReport rr =
        verify_realization(lift, second, theory.spec, k);
    out << format_realization(target->name, other.name, rr);
    ok = ok && rr.ok() && second.report.ok();
  }
  t.add("lift", seconds_since(t0));
  out << "status: " << (ok ? "PASS" : "FAIL") << "\n";
  if (!a.out.empty()) {
    write_file(a.out, "order = " + std::to_string(k) + "\nPhi = " +
                          serialize(lift.phi_prime) + "\n");
  }
  if (a.timing) out << format_timings(t);
  return ok ? kExitPass : kExitVerificationFailure;
}

int cmd_identities(const IdentityArgs& a, std::ostream& out) {
  if (a.degree < 1) throw InputError("degree must be >= 1");
  if (a.samples < 1) throw InputError("samples must be >= 1");
  IdentityConfig cfg;
  cfg.degree = a.degree;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  const IdentityReport rep = run_identity_suite(identity_test_theory(), cfg);
  out << "theory: 2 constraints (parities 0 1)\n";
  out << "degree: " << a.degree << ", samples: " << a.samples
      << ", seed: " << a.seed << "\n";
  out << format_identity_report(rep);
  out << "status: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return rep.ok() ? kExitPass : kExitVerificationFailure;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const TheoryFile theory = read_theory_file(a.theory);
  OmegaFile of;
  try {
    of = parse_omega(read_text_file(a.omega), theory);
  } catch (const InputError& e) {
    throw InputError(a.omega + ": " + e.what());
  }
  int k = a.order ? *a.order
                  : of.order.value_or(theory.order.value_or(kDefaultOrder));
  if (k < 1) throw InputError("order must be >= 1");
  const SymTensor& omega = of.omega;
  for (const auto& comp : omega.components()) {
    if (!comp.is_zero() && (comp.parity() != 1 || comp.ngh() != 1)) {
      out << format_theory_header(theory, k);
      out << "gradings: FAIL (Omega must be odd with ngh 1)\n";
      out << "status: FAIL\n";
      return kExitVerificationFailure;
    }
  }
  MasterSolver solver(theory.spec, k);
  const MasterResidual res = solver.verify_master(omega);
  const BoundaryReport bnd = solver.check_boundary(omega);
  out << format_theory_header(theory, k);
  out << format_boundary(bnd);
  out << format_residual(res);
  const bool ok = res.vanishes() && res.forms_agree() && bnd.ok();
  out << "status: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sp(2) BRST charges and observables with exact arithmetic",
               "sp2brst"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "solve the master equations");
  s->add_option("theory", solve.theory, "theory JSON file")->required();
  s->add_option("--order,-k", solve.order, "truncation cp-degree");
  s->add_option("--method", solve.method,
                "fixed-point, descendants or both");
  s->add_option("--out,-o", solve.out, "write Omega to this file");
  s->add_flag("--timing", solve.timing, "print phase timings");

  LiftArgs lift;
  auto* l = app.add_subcommand("lift", "lift an observable");
  l->add_option("theory", lift.theory, "theory JSON file")->required();
  l->add_option("--observable", lift.observable, "observable name")
      ->required();
  l->add_option("--order,-k", lift.order, "truncation cp-degree");
  l->add_option("--out,-o", lift.out, "write Phi' to this file");
  l->add_flag("--timing", lift.timing, "print phase timings");

  IdentityArgs ids;
  auto* c = app.add_subcommand("check-identities",
                               "run the operator identity suite");
  c->add_option("--degree", ids.degree, "max cp- and N-degree of samples");
  c->add_option("--samples", ids.samples, "samples per tensor rank");
  c->add_option("--seed", ids.seed, "random seed");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "re-verify an emitted Omega");
  v->add_option("theory", ver.theory, "theory JSON file")->required();
  v->add_option("omega", ver.omega, "Omega file")->required();
  v->add_option("--order,-k", ver.order, "truncation cp-degree");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    apply_term_limit_env();
    if (s->parsed()) return cmd_solve(solve, out);
    if (l->parsed()) return cmd_lift(lift, out);
    if (c->parsed()) return cmd_identities(ids, out);
    if (v->parsed()) return cmd_verify(ver, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const TermLimitExceeded& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SpecError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ConventionError& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitInputError;
}

}  // namespace sp2brst
