#include "sp2brst/solver.hpp"

#include <map>

#include "sp2brst/operators.hpp"

namespace sp2brst {

namespace {

// Scale of the symmetrized pair bracket <X1,X2>. With [Pi,Pi] counting
// {Pi^a,Pi^b}' twice, 1/2 makes Pi = Pi_0 + 1/2 <Pi,Pi> equivalent to the
// vanishing of {Omega^a, Omega^b}'.
const Rational kPairBracketScale(-1, 2);

Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

MasterSolver::MasterSolver(const TheorySpec& spec, int order)
    : spec_(spec), order_(order) {
  if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
}

SymTensor MasterSolver::omega1() const {
  SymTensor out(1);
  for (int a = 1; a <= 2; ++a) {
    GradedPoly comp;
    for (int al = 1; al <= spec_.m(); ++al) {
      comp += GradedPoly(spec_.xi(al)) * GradedPoly(spec_.C(al, a));
      for (int b = 1; b <= 2; ++b) {
        const int e = eps_upper(a, b);
        if (e == 0) continue;
        comp += GradedPoly(spec_.P(al, b)) * GradedPoly(spec_.pi(al)) *
                Rational(e);
      }
    }
    out.at({a}) = std::move(comp);
  }
  return trunc(out);
}

SymTensor MasterSolver::F() const {
  SymTensor out(2);
  for (int twos = 0; twos <= 2; ++twos) {
    const auto idx = canonical_indices(2, twos);
    GradedPoly comp;
    for (int al = 1; al <= spec_.m(); ++al) {
      for (int be = 1; be <= spec_.m(); ++be) {
        const GradedPoly w = spec_.omega(spec_.xi(al), spec_.xi(be));
        if (w.is_zero()) continue;
        comp += GradedPoly(spec_.C(al, idx[0])) * w *
                GradedPoly(spec_.C(be, idx[1]));
      }
    }
    out.by_count(twos) = std::move(comp);
  }
  return trunc(out);
}

GradedPoly MasterSolver::apply_A_component(int a,
                                           const GradedPoly& x) const {
  GradedPoly out;
  for (int al = 1; al <= spec_.m(); ++al) {
    const GradedPoly b =
        poisson_bracket(GradedPoly(spec_.xi(al)), x, spec_, order_ - 1);
    if (b.is_zero()) continue;
    out += GradedPoly(spec_.C(al, a)) * b;
  }
  return out.truncate_cp(order_);
}

SymTensor MasterSolver::apply_A(const SymTensor& x) const {
  return cyclic_raise(x, [this](int a, const GradedPoly& p) {
    return apply_A_component(a, p);
  });
}

SymTensor MasterSolver::bracket_tensor(const SymTensor& x,
                                       const SymTensor& y) const {
  if (x.rank() != 1) {
    throw std::invalid_argument("[X, Y] requires X of rank 1");
  }
  return trunc(cyclic_raise(y, [this, &x](int a, const GradedPoly& p) {
    return poisson_bracket(x(std::initializer_list<int>{a}), p, spec_,
                           order_);
  }));
}

SymTensor MasterSolver::neumann_apply(const TensorMap& op,
                                      const SymTensor& x) const {
  SymTensor sum = trunc(x);
  SymTensor term = sum;
  for (int m = 1; !term.is_zero(); ++m) {
    const auto before = term.min_cp_degree();
    term = trunc(apply_W_plus(op(term))) * Rational(-1);
    if (term.is_zero()) break;
    if (*term.min_cp_degree() <= *before) {
      throw ConventionError("Neumann series term " + std::to_string(m) +
                            " did not raise the C,pi degree");
    }
    sum += term;
  }
  return sum;
}

SymTensor MasterSolver::pi0(const SymTensor& upsilon) const {
  const SymTensor seed = trunc(upsilon) - trunc(apply_W_plus(F()));
  return neumann_apply([this](const SymTensor& t) { return apply_A(t); },
                       seed);
}

SymTensor MasterSolver::bracket_pair(const SymTensor& x,
                                     const SymTensor& y) const {
  if (x.is_zero() || y.is_zero()) return SymTensor(1);
  const SymTensor sym = bracket_tensor(x, y) + bracket_tensor(y, x);
  if (sym.is_zero()) return SymTensor(1);
  const SymTensor seed = trunc(apply_W_plus(sym));
  return neumann_apply([this](const SymTensor& t) { return apply_A(t); },
                       seed) *
         kPairBracketScale;
}

SymTensor MasterSolver::multi_bracket(std::span<const SymTensor> xs) const {
  const int m = static_cast<int>(xs.size());
  if (m == 0) return SymTensor(1);
  if (m > 20) throw std::invalid_argument("multi-bracket arity too large");
  std::map<unsigned, SymTensor> memo;
  std::function<SymTensor(unsigned)> eval = [&](unsigned set) -> SymTensor {
    if (auto it = memo.find(set); it != memo.end()) return it->second;
    SymTensor result(1);
    const int size = __builtin_popcount(set);
    if (size == 1) {
      result = xs[static_cast<std::size_t>(__builtin_ctz(set))];
    } else if (size == 2) {
      const int i = __builtin_ctz(set);
      const int j = __builtin_ctz(set & (set - 1));
      result = bracket_pair(xs[static_cast<std::size_t>(i)],
                            xs[static_cast<std::size_t>(j)]);
    } else {
      // 1/2 sum over proper nonempty subsets T of <<X_T>, <X_{S\T}>>.
      for (unsigned t = (set - 1) & set; t != 0; t = (t - 1) & set) {
        result += bracket_pair(eval(t), eval(set & ~t));
      }
      result *= Rational(1, 2);
    }
    memo.emplace(set, result);
    return result;
  };
  return eval((1u << m) - 1);
}

SymTensor MasterSolver::evaluate_tree(const BracketTree& tree,
                                      std::span<const SymTensor> xs) const {
  if (tree.is_leaf()) return trunc(xs[static_cast<std::size_t>(tree.label())]);
  return bracket_pair(evaluate_tree(tree.left(), xs),
                      evaluate_tree(tree.right(), xs));
}

SymTensor MasterSolver::descendant_sum(std::span<const SymTensor> xs) const {
  const int m = static_cast<int>(xs.size());
  if (m == 0) return SymTensor(1);
  SymTensor sum(1);
  for (const auto& tree : enumerate_descendants(m)) {
    sum += evaluate_tree(tree, xs);
  }
  return sum;
}

std::vector<SymTensor> MasterSolver::power_brackets(const SymTensor& x,
                                                    int max_m) const {
  // out[m] = <x^m>; uses the recursion with all arguments equal, pairing the
  // split sizes r and m - r.
  std::vector<SymTensor> out(static_cast<std::size_t>(max_m) + 1,
                             SymTensor(1));
  if (max_m >= 1) out[1] = trunc(x);
  for (int m = 2; m <= max_m; ++m) {
    SymTensor acc(1);
    for (int r = 1; 2 * r <= m; ++r) {
      const SymTensor b = bracket_pair(out[static_cast<std::size_t>(r)],
                                       out[static_cast<std::size_t>(m - r)]);
      if (2 * r == m) {
        acc += b * (binomial(m, r) / 2);
      } else {
        acc += b * binomial(m, r);
      }
    }
    out[static_cast<std::size_t>(m)] = acc;
  }
  return out;
}

SymTensor MasterSolver::solve_pi_fixed_point(const SymTensor& pi0,
                                             int* iterations) const {
  const SymTensor base = trunc(pi0);
  SymTensor pi = base;
  for (int it = 1; it <= order_ + 1; ++it) {
    SymTensor next = base + bracket_pair(pi, pi) * Rational(1, 2);
    if (next == pi) {
      if (iterations) *iterations = it;
      return pi;
    }
    pi = std::move(next);
  }
  throw ConventionError("fixed-point iteration did not stabilize within " +
                        std::to_string(order_ + 1) + " iterations");
}

SymTensor MasterSolver::solve_pi_descendants(const SymTensor& pi0) const {
  const auto min_cp = pi0.min_cp_degree();
  if (!min_cp) return SymTensor(1);
  // <Pi_0^m> has cp-degree >= m (d - 1) + 1 with d the lowest degree of Pi_0.
  int max_m = 1;
  while ((max_m + 1) * (*min_cp - 1) + 1 <= order_) ++max_m;
  const auto powers = power_brackets(pi0, max_m);
  SymTensor pi(1);
  for (int m = 1; m <= max_m; ++m) {
    pi += powers[static_cast<std::size_t>(m)] * (Rational(1) / factorial(m));
  }
  return pi;
}

MasterResidual MasterSolver::verify_master(const SymTensor& omega) const {
  MasterResidual r;
  for (int twos = 0; twos <= 2; ++twos) {
    const auto idx = canonical_indices(2, twos);
    r.direct.by_count(twos) =
        poisson_bracket(omega({idx[0]}), omega({idx[1]}), spec_, order_);
  }
  const SymTensor pi = trunc(omega) - omega1();
  SymTensor quad(2);
  for (int twos = 0; twos <= 2; ++twos) {
    const auto idx = canonical_indices(2, twos);
    quad.by_count(twos) =
        poisson_bracket(pi({idx[0]}), pi({idx[1]}), spec_, order_);
  }
  r.structured = trunc(apply_W(pi) + F() + apply_A(pi) + quad);
  for (int d = 0; d <= order_; ++d) {
    ResidualDegree rd;
    rd.degree = d;
    const SymTensor a = r.direct.cp_part(d);
    const SymTensor b = r.structured.cp_part(d);
    rd.direct_terms = a.term_count();
    rd.structured_terms = b.term_count();
    rd.agree = a == b;
    r.degrees.push_back(rd);
  }
  return r;
}

BoundaryReport MasterSolver::check_boundary(const SymTensor& omega) const {
  BoundaryReport rep;
  const SectorSet all_ghosts{Sector::Ghost, Sector::LagrangeMomentum,
                             Sector::GhostMomentum, Sector::Lagrange};
  const SectorSet no_p{Sector::Ghost, Sector::LagrangeMomentum,
                       Sector::Lagrange};
  for (int a = 1; a <= 2; ++a) {
    const GradedPoly& comp = omega({a});
    for (int al = 1; al <= spec_.m(); ++al) {
      for (int b = 1; b <= 2; ++b) {
        const GradedPoly got =
            comp.right_derivative(spec_.C(al, b)).substitute_zero(all_ghosts);
        const GradedPoly want =
            a == b ? GradedPoly(spec_.xi(al)) : GradedPoly{};
        if (!(got == want)) {
          rep.ghost_condition = false;
          rep.violations.push_back("dOmega^" + std::to_string(a) + "/d" +
                                   to_string(spec_.C(al, b)) + " = " +
                                   to_string(got));
        }
      }
      const GradedPoly got =
          comp.right_derivative(spec_.pi(al)).substitute_zero(no_p);
      GradedPoly want;
      for (int b = 1; b <= 2; ++b) {
        if (const int e = eps_upper(a, b); e != 0) {
          want += GradedPoly(spec_.P(al, b)) * Rational(e);
        }
      }
      if (!(got == want)) {
        rep.momentum_condition = false;
        rep.violations.push_back("dOmega^" + std::to_string(a) + "/d" +
                                 to_string(spec_.pi(al)) + " = " +
                                 to_string(got));
      }
    }
  }
  return rep;
}

void MasterSolver::validate_upsilon(const SymTensor& upsilon) const {
  if (upsilon.rank() != 1) {
    throw std::invalid_argument("Upsilon must have rank 1");
  }
  if (upsilon.is_zero()) return;
  if (upsilon.parity() != 1) {
    throw std::invalid_argument("Upsilon must be Grassmann odd");
  }
  if (upsilon.ngh() != 1) {
    throw std::invalid_argument("Upsilon must have new ghost number 1");
  }
  if (*upsilon.min_cp_degree() < 2) {
    throw std::invalid_argument("Upsilon must have cp-degree >= 2");
  }
  if (!trunc(apply_W(upsilon)).is_zero()) {
    throw std::invalid_argument("Upsilon is not W-closed");
  }
}

SolverResult MasterSolver::solve(const SolverConfig& config) const {
  if (config.order != order_) {
    throw std::invalid_argument("solver config order differs from solver");
  }
  SolverResult res;
  res.order = order_;
  res.method = config.method;
  res.upsilon_supplied = config.upsilon.has_value();
  res.omega1 = omega1();
  SymTensor upsilon(1);
  if (config.upsilon) {
    validate_upsilon(*config.upsilon);
    upsilon = trunc(*config.upsilon);
  }
  res.pi0 = pi0(upsilon);
  if (config.method != SolveMethod::Descendants) {
    res.pi_fixed_point =
        solve_pi_fixed_point(res.pi0, &res.fixed_point_iterations);
  }
  if (config.method != SolveMethod::FixedPoint) {
    res.pi_descendants = solve_pi_descendants(res.pi0);
  }
  if (res.pi_fixed_point && res.pi_descendants) {
    res.methods_agree = *res.pi_fixed_point == *res.pi_descendants;
  }
  res.pi = res.pi_fixed_point ? *res.pi_fixed_point : *res.pi_descendants;
  res.omega = res.omega1 + res.pi;
  res.residual = verify_master(res.omega);
  res.boundary = check_boundary(res.omega);
  res.symmetry_defects =
      cyclic_symmetry_defects(res.pi, [](int a, const GradedPoly& p) {
        return apply_W_component(a, p);
      }) +
      cyclic_symmetry_defects(res.pi, [this](int a, const GradedPoly& p) {
        return apply_A_component(a, p);
      });
  return res;
}

}  // namespace sp2brst
