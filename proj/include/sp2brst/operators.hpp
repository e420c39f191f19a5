#pragma once

#include <functional>
#include <stdexcept>

#include "sp2brst/graded_poly.hpp"
#include "sp2brst/sym_tensor.hpp"

namespace sp2brst {

/// Thrown when N^{-1} meets a term of N-degree 0 (a term outside V).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- Scalar derivations --------------------------------------------------

/// Counting operator N^p for integer p (negative powers require every term
/// to have N-degree >= 1).
GradedPoly apply_N_power(const GradedPoly& x, int p);

/// W^a = xi_al d/dP_{al a} + eps^{ab} P_{al b} d/dlambda_al
///       + (-1)^{e_al} eps^{ab} pi^al d_l/dC^{al b}.
GradedPoly apply_W_component(int a, const GradedPoly& x);

/// Gamma_a = P_{al a} d_l/dxi_al - eps_{ab} lambda_al d/dP_{al b}.
GradedPoly apply_Gamma_component(int a, const GradedPoly& x);

/// M = Gamma_a W^a.
GradedPoly apply_M(const GradedPoly& x);

/// eps^{ab} and eps_{ab}: eps^{12} = 1, eps_{12} = -1.
int eps_upper(int a, int b);
int eps_lower(int a, int b);

// ---- Tensor operators ----------------------------------------------------

/// Per-index action used for cyclic raising: (a, component) -> result.
using IndexedAction = std::function<GradedPoly(int, const GradedPoly&)>;

/// (Op X)^{a_1..a_{n+1}} = Op^{a_1} X^{a_2..a_{n+1}} + cyclic permutations.
SymTensor cyclic_raise(const SymTensor& x, const IndexedAction& op);

/// Evaluates the literal cyclic sum for every ordering of every output
/// multi-index and counts orderings whose result differs from the sorted
/// one. Zero means the raised tensor is fully symmetric.
int cyclic_symmetry_defects(const SymTensor& x, const IndexedAction& op);

SymTensor apply_N(const SymTensor& x);
SymTensor apply_N_inverse(const SymTensor& x);
SymTensor apply_N_power(const SymTensor& x, int p);
SymTensor apply_M(const SymTensor& x);
/// S^n -> S^{n+1}.
SymTensor apply_W(const SymTensor& x);
/// S^{n+1} -> S^n, contracting the last index; zero on S^0.
SymTensor apply_Gamma(const SymTensor& x);

/// Q on S^0: (11 N^-1 - 6 M N^-2 + M^2 N^-3) / 6;
/// Q on S^n: (nN + M)^{-1} in closed form.
SymTensor apply_Q(const SymTensor& x);
/// W+ = Q Gamma, a generalized inverse of W (S^n -> S^{n-1}, n >= 1).
SymTensor apply_W_plus(const SymTensor& x);

/// Rational closed form
///   V_n = (n(n^2+4n+6) I - (n-4) M N^-1 - 2 M^2 N^-2) / (n(n+1)(n+2)).
/// V_n reduces to (M + nN)(M + (n-1)N)^{-1} on the spectrum of M, which is
/// not the identity on the image of W+, so W V_n W+ differs from W W+;
/// apply_decompose does not use it.
SymTensor apply_V(const SymTensor& x, int n);

struct Decomposition {
  SymTensor cocycle_part;   // W+ W x
  SymTensor exact_part;     // W W+ x
};

/// Splits x in S^n (n >= 1) as x = W+ W x + W W+ x.
Decomposition apply_decompose(const SymTensor& x);

struct BarParts {
  GradedPoly bar_w;        // eps_{ab} W^a W^b x
  GradedPoly bar_gamma;    // eps^{ab} Gamma_a Gamma_b x
  GradedPoly m_part;       // M N^-1 x
  GradedPoly commutator_part;  // (1/4)(barW barGamma - barGamma barW) N^-2 x
};

GradedPoly apply_bar_W(const GradedPoly& x);
GradedPoly apply_bar_Gamma(const GradedPoly& x);
/// Bar operators on a scalar and the projector split of x; the last two
/// members sum to x for x in V. The split follows from
///   barW barGamma - barGamma barW = 4N^2 - 4MN,
/// which is forced by W^a Gamma_b + Gamma_b W^a = delta^a_b N and the
/// nilpotency of W and Gamma.
BarParts apply_bar_ops(const GradedPoly& x);

}  // namespace sp2brst
