#include "sp2brst/operators.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace sp2brst {

int eps_upper(int a, int b) {
  if (a == b) return 0;
  return a == 1 ? 1 : -1;
}

int eps_lower(int a, int b) { return -eps_upper(a, b); }

namespace {

/// Appends c * (v * d_l/du m) to out.
void add_replacement(GradedPoly& out, const Monomial& m, const Variable& u,
                     const Variable& v, const Rational& c, int factor) {
  auto d = left_derivative(m, u);
  if (!d) return;
  auto prod = multiply(Monomial(v), d->second);
  if (prod.sign == 0) return;
  out.add_term(prod, Rational(c * (factor * d->first)));
}

}  // namespace

GradedPoly apply_N_power(const GradedPoly& x, int p) {
  if (p == 0) return x;
  GradedPoly out;
  for (const auto& [m, c] : x.terms()) {
    const int n = m.n_degree();
    if (n == 0) {
      if (p < 0) {
        throw DomainError("N^-1 applied to " + to_string(m) +
                          ": term outside V (N-degree 0)");
      }
      continue;
    }
    Rational scale(1);
    for (int i = 0; i < (p < 0 ? -p : p); ++i) scale *= n;
    if (p < 0) scale = 1 / scale;
    out.add_term(m, Rational(c * scale));
  }
  return out;
}

GradedPoly apply_W_component(int a, const GradedPoly& x) {
  GradedPoly out;
  const int b = 3 - a;  // the only nonzero eps^{ab}
  const int e_ab = eps_upper(a, b);
  for (const auto& [m, c] : x.terms()) {
    for (const auto& f : m.factors()) {
      const Variable& u = f.var;
      const int eps = constraint_parity(u);
      switch (u.sector) {
        case Sector::GhostMomentum:
          if (u.sp2 == a) add_replacement(out, m, u, xi(u.alpha, eps), c, 1);
          break;
        case Sector::Lagrange:
          add_replacement(out, m, u, ghost_momentum(u.alpha, b, eps), c, e_ab);
          break;
        case Sector::Ghost:
          if (u.sp2 == b) {
            add_replacement(out, m, u, lagrange_momentum(u.alpha, eps), c,
                            (eps == 0 ? 1 : -1) * e_ab);
          }
          break;
        default:
          break;
      }
    }
  }
  return out;
}

GradedPoly apply_Gamma_component(int a, const GradedPoly& x) {
  GradedPoly out;
  const int b = 3 - a;
  const int e_ab = eps_lower(a, b);
  for (const auto& [m, c] : x.terms()) {
    for (const auto& f : m.factors()) {
      const Variable& u = f.var;
      const int eps = constraint_parity(u);
      switch (u.sector) {
        case Sector::XiConstraint:
          add_replacement(out, m, u, ghost_momentum(u.alpha, a, eps), c, 1);
          break;
        case Sector::GhostMomentum:
          if (u.sp2 == b) {
            add_replacement(out, m, u, lagrange(u.alpha, eps), c, -e_ab);
          }
          break;
        default:
          break;
      }
    }
  }
  return out;
}

GradedPoly apply_M(const GradedPoly& x) {
  GradedPoly out = apply_Gamma_component(1, apply_W_component(1, x));
  out += apply_Gamma_component(2, apply_W_component(2, x));
  return out;
}

SymTensor cyclic_raise(const SymTensor& x, const IndexedAction& op) {
  const int n = x.rank();
  SymTensor out(n + 1);
  for (int twos = 0; twos <= n + 1; ++twos) {
    const auto idx = canonical_indices(n + 1, twos);
    GradedPoly sum;
    for (int k = 0; k <= n; ++k) {
      std::vector<int> rest;
      for (int j = 1; j <= n; ++j) rest.push_back(idx[(k + j) % (n + 1)]);
      sum += op(idx[k], x(rest));
    }
    out.by_count(twos) = std::move(sum);
  }
  return out;
}

int cyclic_symmetry_defects(const SymTensor& x, const IndexedAction& op) {
  const int n = x.rank();
  const SymTensor sorted = cyclic_raise(x, op);
  int defects = 0;
  const int total = n + 1;
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    std::vector<int> idx(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) idx[i] = (mask >> i) & 1u ? 2 : 1;
    GradedPoly sum;
    for (int k = 0; k < total; ++k) {
      std::vector<int> rest;
      for (int j = 1; j < total; ++j) rest.push_back(idx[(k + j) % total]);
      sum += op(idx[k], x(rest));
    }
    if (!(sum == sorted(idx))) ++defects;
  }
  return defects;
}

SymTensor apply_N_power(const SymTensor& x, int p) {
  SymTensor out(x.rank());
  for (int i = 0; i <= x.rank(); ++i) {
    out.by_count(i) = apply_N_power(x.by_count(i), p);
  }
  return out;
}

SymTensor apply_N(const SymTensor& x) { return apply_N_power(x, 1); }
SymTensor apply_N_inverse(const SymTensor& x) { return apply_N_power(x, -1); }

SymTensor apply_M(const SymTensor& x) {
  SymTensor out(x.rank());
  for (int i = 0; i <= x.rank(); ++i) out.by_count(i) = apply_M(x.by_count(i));
  return out;
}

SymTensor apply_W(const SymTensor& x) {
  return cyclic_raise(x, [](int a, const GradedPoly& p) {
    return apply_W_component(a, p);
  });
}

SymTensor apply_Gamma(const SymTensor& x) {
  if (x.rank() == 0) return SymTensor(0);
  const int n = x.rank() - 1;
  SymTensor out(n);
  for (int twos = 0; twos <= n; ++twos) {
    auto idx = canonical_indices(n, twos);
    idx.push_back(1);
    GradedPoly sum = apply_Gamma_component(1, x(idx));
    idx.back() = 2;
    sum += apply_Gamma_component(2, x(idx));
    out.by_count(twos) = std::move(sum);
  }
  return out;
}

namespace {

/// c0 N^{-1} x + c1 N M N^{-3} x + c2 M^2 N^{-3} x, i.e. the operator
/// c0 N^-1 + c1 M N^-2 + c2 M^2 N^-3 with N and M commuting.
SymTensor inverse_polynomial(const SymTensor& x, const Rational& c0,
                             const Rational& c1, const Rational& c2) {
  const SymTensor a = apply_N_power(x, -3);
  const SymTensor ma = apply_M(a);
  SymTensor out = apply_N_power(a, 2) * c0;
  out += apply_N(ma) * c1;
  out += apply_M(ma) * c2;
  return out;
}

}  // namespace

SymTensor apply_Q(const SymTensor& x) {
  const int n = x.rank();
  if (n == 0) {
    return inverse_polynomial(x, Rational(11, 6), Rational(-1),
                              Rational(1, 6));
  }
  const Rational denom(n * (n + 1) * (n + 2));
  return inverse_polynomial(x, Rational(1, n), Rational(-(n + 3)) / denom,
                            Rational(1) / denom);
}

SymTensor apply_W_plus(const SymTensor& x) {
  if (x.rank() == 0) {
    throw std::invalid_argument("W+ is defined on S^n for n >= 1");
  }
  return apply_Q(apply_Gamma(x));
}

SymTensor apply_V(const SymTensor& x, int n) {
  if (n < 1) throw std::invalid_argument("V requires n >= 1");
  const Rational denom(n * (n + 1) * (n + 2));
  const SymTensor b = apply_N_power(x, -2);
  const SymTensor mb = apply_M(b);
  SymTensor out = x * (Rational(n * (n * n + 4 * n + 6)) / denom);
  out += apply_N(mb) * (Rational(-(n - 4)) / denom);
  out += apply_M(mb) * (Rational(-2) / denom);
  return out;
}

Decomposition apply_decompose(const SymTensor& x) {
  if (x.rank() == 0) {
    throw std::invalid_argument("decomposition is defined on S^n for n >= 1");
  }
  // W+ W + W W+ = I on S^n for n >= 1, so the middle operator is the
  // identity on the image of W+.
  return Decomposition{apply_W_plus(apply_W(x)), apply_W(apply_W_plus(x))};
}

GradedPoly apply_bar_W(const GradedPoly& x) {
  // eps_{12} W^1 W^2 + eps_{21} W^2 W^1
  GradedPoly out = apply_W_component(2, apply_W_component(1, x));
  out -= apply_W_component(1, apply_W_component(2, x));
  return out;
}

GradedPoly apply_bar_Gamma(const GradedPoly& x) {
  GradedPoly out = apply_Gamma_component(1, apply_Gamma_component(2, x));
  out -= apply_Gamma_component(2, apply_Gamma_component(1, x));
  return out;
}

BarParts apply_bar_ops(const GradedPoly& x) {
  BarParts parts;
  parts.bar_w = apply_bar_W(x);
  parts.bar_gamma = apply_bar_Gamma(x);
  parts.m_part = apply_M(apply_N_power(x, -1));
  const GradedPoly y = apply_N_power(x, -2);
  GradedPoly comm = apply_bar_W(apply_bar_Gamma(y));
  comm -= apply_bar_Gamma(apply_bar_W(y));
  parts.commutator_part = comm * Rational(1, 4);
  return parts;
}

}  // namespace sp2brst
