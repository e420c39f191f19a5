#include <map>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "sp2brst/identities.hpp"
#include "sp2brst/operators.hpp"

using namespace sp2brst;
using testutil::parse;

namespace {

using oracle::Matrix;
using oracle::Poly;
using oracle::Word;

struct Block {
  std::vector<Word> basis;
  std::map<Word, std::size_t> index;

  std::vector<Rational> vec(const Poly& p) const {
    std::vector<Rational> v(basis.size());
    for (const auto& [w, c] : p) v.at(index.at(w)) = c;
    return v;
  }
  std::vector<Rational> column(const Matrix& m, std::size_t c) const {
    std::vector<Rational> v(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) v[r] = m.at(r, c);
    return v;
  }
};

Block make_block(const oracle::Algebra& alg, int n, int cp) {
  Block b;
  b.basis = oracle::basis(alg, n, cp);
  for (std::size_t i = 0; i < b.basis.size(); ++i) b.index[b.basis[i]] = i;
  return b;
}

RandomOptions in_v(int max_deg = 3) {
  RandomOptions o;
  o.terms = 3;
  o.max_n = max_deg;
  o.max_cp = max_deg;
  return o;
}

// Checks every operator of the calculus on the full monomial basis of one
// bidegree block against dense matrices assembled from the naive oracle.
void check_block(const oracle::Algebra& alg, int n, int cp) {
  const Block blk = make_block(alg, n, cp);
  const std::size_t dim = blk.basis.size();
  if (dim == 0) return;
  CAPTURE(n);
  CAPTURE(cp);
  CAPTURE(dim);

  Matrix W[2] = {Matrix(0), Matrix(0)}, G[2] = {Matrix(0), Matrix(0)};
  for (int a = 1; a <= 2; ++a) {
    REQUIRE(oracle::matrix_of(alg, blk.basis,
                              [&](const Poly& p) { return alg.W(a, p); },
                              W[a - 1]));
    REQUIRE(oracle::matrix_of(alg, blk.basis,
                              [&](const Poly& p) { return alg.Gamma(a, p); },
                              G[a - 1]));
  }
  const Matrix M = G[0] * W[0] + G[1] * W[1];
  const Matrix I = Matrix::identity(dim);
  const Rational nn(n);
  const Matrix Q0 =
      (I * Rational(11, 1) * Rational(1 / nn) + M * Rational(-6 / (nn * nn)) +
       (M * M) * Rational(1 / (nn * nn * nn))) *
      Rational(1, 6);
  const Matrix WP1 = Q0 * G[0];
  const Matrix WP2 = Q0 * G[1];
  Matrix Q1(dim), Q2(dim);

  for (std::size_t c = 0; c < dim; ++c) {
    const GradedPoly x = alg.to_lib(blk.basis[c]);
    REQUIRE(alg.from(x) == alg.var_word(blk.basis[c]));
    for (int a = 1; a <= 2; ++a) {
      CHECK(blk.vec(alg.from(apply_W_component(a, x))) ==
            blk.column(W[a - 1], c));
      CHECK(blk.vec(alg.from(apply_Gamma_component(a, x))) ==
            blk.column(G[a - 1], c));
    }
    CHECK(blk.vec(alg.from(apply_N_power(x, 1))) ==
          blk.column(I * nn, c));
    CHECK(blk.vec(alg.from(apply_M(x))) == blk.column(M, c));
    CHECK(blk.vec(alg.from(apply_Q(SymTensor::scalar(x)).by_count(0))) ==
          blk.column(Q0, c));

    const SymTensor wx = apply_W(SymTensor::scalar(x));
    CHECK(blk.vec(alg.from(wx.by_count(0))) == blk.column(W[0], c));
    CHECK(blk.vec(alg.from(wx.by_count(1))) == blk.column(W[1], c));

    const SymTensor first = SymTensor::vector(x, GradedPoly());
    const SymTensor second = SymTensor::vector(GradedPoly(), x);
    CHECK(blk.vec(alg.from(apply_Gamma(first).by_count(0))) ==
          blk.column(G[0], c));
    CHECK(blk.vec(alg.from(apply_W_plus(first).by_count(0))) ==
          blk.column(WP1, c));
    CHECK(blk.vec(alg.from(apply_W_plus(second).by_count(0))) ==
          blk.column(WP2, c));

    // (W X)^{ab} = W^a X^b + W^b X^a on rank 1.
    const SymTensor w1 = apply_W(first);
    CHECK(blk.vec(alg.from(w1.by_count(0))) == blk.column(W[0] * Rational(2), c));
    CHECK(blk.vec(alg.from(w1.by_count(1))) == blk.column(W[1], c));
    CHECK(alg.from(w1.by_count(2)).empty());

    const SymTensor q1 = apply_Q(first);
    CHECK(q1.by_count(1).is_zero());
    const auto q1v = blk.vec(alg.from(q1.by_count(0)));
    SymTensor rank2(2);
    rank2.by_count(1) = x;
    const SymTensor q2 = apply_Q(rank2);
    CHECK(q2.by_count(0).is_zero());
    CHECK(q2.by_count(2).is_zero());
    const auto q2v = blk.vec(alg.from(q2.by_count(1)));
    for (std::size_t r = 0; r < dim; ++r) {
      Q1.at(r, c) = q1v[r];
      Q2.at(r, c) = q2v[r];
    }
  }
  // Q on S^n inverts nN + M.
  const Matrix check1 = (I * nn + M) * Q1;
  const Matrix check2 = (I * Rational(2 * n) + M) * Q2;
  for (std::size_t c = 0; c < dim; ++c) {
    CHECK(blk.column(check1, c) == blk.column(I, c));
    CHECK(blk.column(check2, c) == blk.column(I, c));
  }
}

// Same cross-check with the oracle operators applied column by column
// instead of through dense products; used where the blocks are large.
void check_block_sparse(const oracle::Algebra& alg, int n, int cp) {
  const auto basis = oracle::basis(alg, n, cp);
  CAPTURE(n);
  CAPTURE(cp);
  const Rational nn(n);
  auto M = [&](const Poly& p) {
    return oracle::Algebra::plus(alg.Gamma(1, alg.W(1, p)),
                                 alg.Gamma(2, alg.W(2, p)));
  };
  auto Q0 = [&](const Poly& p) {
    Poly out;
    out = oracle::Algebra::plus(out, p, Rational(11) / (6 * nn));
    out = oracle::Algebra::plus(out, M(p), Rational(-1) / (nn * nn));
    out = oracle::Algebra::plus(out, M(M(p)), Rational(1) / (6 * nn * nn * nn));
    return out;
  };
  for (const Word& w : basis) {
    const Poly b = alg.var_word(w);
    const GradedPoly x = alg.to_lib(w);
    REQUIRE(alg.from(x) == b);
    for (int a = 1; a <= 2; ++a) {
      CHECK(alg.from(apply_W_component(a, x)) == alg.W(a, b));
      CHECK(alg.from(apply_Gamma_component(a, x)) == alg.Gamma(a, b));
    }
    CHECK(alg.from(apply_M(x)) == M(b));
    CHECK(alg.from(apply_Q(SymTensor::scalar(x)).by_count(0)) == Q0(b));
    const SymTensor first = SymTensor::vector(x, GradedPoly());
    const SymTensor second = SymTensor::vector(GradedPoly(), x);
    CHECK(alg.from(apply_W_plus(first).by_count(0)) == Q0(alg.Gamma(1, b)));
    CHECK(alg.from(apply_W_plus(second).by_count(0)) == Q0(alg.Gamma(2, b)));
    const Poly q1 = alg.from(apply_Q(first).by_count(0));
    CHECK(oracle::Algebra::plus(M(q1), q1, nn) == b);
  }
}

}  // namespace

TEST_SUITE("operator_calculus") {

TEST_CASE("dense matrix oracle, one bosonic constraint") {
  const oracle::Algebra alg(TheorySpec({0}));
  for (int n = 1; n <= 3; ++n) {
    for (int cp = 0; cp <= 3; ++cp) check_block(alg, n, cp);
  }
}

TEST_CASE("dense matrix oracle, one fermionic constraint") {
  const oracle::Algebra alg(TheorySpec({1}));
  for (int n = 1; n <= 3; ++n) {
    for (int cp = 0; cp <= 3; ++cp) check_block(alg, n, cp);
  }
}

TEST_CASE("dense matrix oracle, mixed parities") {
  const oracle::Algebra alg(identity_test_theory());
  for (int n = 1; n <= 3; ++n) {
    for (int cp = 0; cp <= 3; ++cp) {
      check_block_sparse(alg, n, cp);
    }
  }
}

TEST_CASE("N examples") {
  const TheorySpec s({0, 0});
  const GradedPoly x = parse("xi[1]*P[2,1]*C[2,1]", s);
  CHECK(apply_N_power(x, 1) == x * Rational(2));
  CHECK(apply_N_power(parse("C[1,1]", s), 1).is_zero());
  CHECK_THROWS_AS(apply_N_power(parse("C[1,1]", s), -1), DomainError);
  CHECK(apply_N_power(parse("lam[1]", s), -1) == parse("lam[1]", s));
  CHECK(apply_N_inverse(SymTensor::scalar(x)) ==
        SymTensor::scalar(x * Rational(1, 2)));
}

TEST_CASE("W examples") {
  for (int eps : {0, 1}) {
    CAPTURE(eps);
    const TheorySpec s({eps});
    CHECK(apply_W(SymTensor::scalar(parse("P[1,1]", s))) ==
          SymTensor::vector(parse("xi[1]", s), GradedPoly()));
    CHECK(apply_W(SymTensor::scalar(parse("lam[1]", s))) ==
          SymTensor::vector(parse("P[1,2]", s), -parse("P[1,1]", s)));
    const Rational sign(eps == 0 ? 1 : -1);
    for (int c = 1; c <= 2; ++c) {
      const SymTensor w = apply_W(SymTensor::scalar(GradedPoly(s.C(1, c))));
      for (int a = 1; a <= 2; ++a) {
        CHECK(w({a}) == GradedPoly(s.pi(1)) * (sign * eps_upper(a, c)));
      }
    }
  }
}

TEST_CASE("Gamma examples") {
  const TheorySpec s({0});
  CHECK(apply_Gamma(SymTensor::vector(parse("xi[1]", s), GradedPoly())) ==
        SymTensor::scalar(parse("P[1,1]", s)));
  CHECK(apply_Gamma(SymTensor::vector(parse("P[1,2]", s),
                                      -parse("P[1,1]", s))) ==
        SymTensor::scalar(parse("2*lam[1]", s)));
  CHECK(apply_Gamma(SymTensor::scalar(parse("xi[1]", s))).is_zero());
  CHECK(apply_Gamma(SymTensor::scalar(parse("xi[1]", s))).rank() == 0);
}

TEST_CASE("M examples") {
  const TheorySpec s({0, 1});
  CHECK(apply_M(parse("xi[1]", s)).is_zero());
  CHECK(apply_M(GradedPoly::constant(1)).is_zero());
  CHECK(apply_M(parse("P[1,1]", s)) ==
        apply_Gamma_component(1, apply_W_component(1, parse("P[1,1]", s))) +
            apply_Gamma_component(2, apply_W_component(2, parse("P[1,1]", s))));
  RandomElements rng(s, 41);
  for (int i = 0; i < 30; ++i) {
    const GradedPoly x = rng.poly(in_v());
    const GradedPoly m1 = apply_M(x), m2 = apply_M(m1), m3 = apply_M(m2);
    CHECK(m3 == apply_N_power(m2, 1) * Rational(3) -
                    apply_N_power(m1, 2) * Rational(2));
  }
}

TEST_CASE("Q examples") {
  const TheorySpec s({0});
  const GradedPoly xi = parse("xi[1]", s);
  CHECK(apply_Q(SymTensor::vector(xi, xi)) == SymTensor::vector(xi, xi));
  const GradedPoly xi2 = parse("xi[1]^2", s);
  CHECK(apply_Q(SymTensor::vector(xi2, GradedPoly())) ==
        SymTensor::vector(xi2 * Rational(1, 2), GradedPoly()));
  CHECK(apply_Q(SymTensor::scalar(xi)) ==
        SymTensor::scalar(xi * Rational(11, 6)));
  RandomElements rng(identity_test_theory(), 43);
  for (int i = 0; i < 30; ++i) {
    const SymTensor x = rng.tensor(1, in_v(4));
    CHECK(apply_N(apply_Q(x)) + apply_M(apply_Q(x)) == x);
  }
}

TEST_CASE("W+ examples") {
  const TheorySpec s = identity_test_theory();
  RandomElements rng(s, 47);
  for (int i = 0; i < 100; ++i) {
    const SymTensor x0 = rng.tensor(0, in_v(4));
    const SymTensor x1 = rng.tensor(1, in_v(4));
    const SymTensor x2 = rng.tensor(2, in_v(4));
    CHECK(apply_W(apply_W_plus(apply_W(x0))) == apply_W(x0));
    CHECK(apply_W(apply_W_plus(apply_W(x1))) == apply_W(x1));
    CHECK(apply_W_plus(apply_W_plus(x2)).is_zero());
  }
  const SymTensor wp = apply_W(SymTensor::scalar(parse("P[1,1]", s)));
  const Decomposition d = apply_decompose(wp);
  CHECK(d.cocycle_part.is_zero());
  CHECK(d.exact_part == wp);
  CHECK(apply_W_plus(wp) ==
        apply_W_plus(apply_W(apply_W_plus(wp))));
}

TEST_CASE("decomposition") {
  const TheorySpec s = identity_test_theory();
  RandomElements rng(s, 53);
  for (int i = 0; i < 40; ++i) {
    const SymTensor y = rng.tensor(0, in_v(4));
    const SymTensor x = apply_W(y);
    const Decomposition d = apply_decompose(x);
    CHECK(d.exact_part == x - apply_W_plus(apply_W(x)));
    CHECK(d.cocycle_part + d.exact_part == x);
    const SymTensor r = rng.tensor(1, in_v(4));
    const Decomposition dr = apply_decompose(r);
    CHECK(dr.cocycle_part + dr.exact_part == r);
  }
  const Decomposition zero = apply_decompose(SymTensor(1));
  CHECK(zero.cocycle_part.is_zero());
  CHECK(zero.exact_part.is_zero());
}

TEST_CASE("printed V closed form does not reconstruct") {
  const TheorySpec s = identity_test_theory();
  RandomElements rng(s, 59);
  int failures = 0;
  for (int i = 0; i < 20; ++i) {
    for (int n = 1; n <= 2; ++n) {
      const SymTensor x = rng.tensor(n, in_v(3));
      const SymTensor via_v = apply_W_plus(apply_W(x)) +
                              apply_W(apply_V(apply_W_plus(x), n));
      if (via_v != x) ++failures;
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("bar operators") {
  const TheorySpec s = identity_test_theory();
  RandomElements rng(s, 61);
  int printed_commutator_failures = 0;
  int printed_split_failures = 0;
  for (int i = 0; i < 50; ++i) {
    const GradedPoly x = rng.poly(in_v(4));
    const GradedPoly comm = apply_bar_W(apply_bar_Gamma(x)) -
                            apply_bar_Gamma(apply_bar_W(x));
    const GradedPoly n2 = apply_N_power(x, 2);
    const GradedPoly mn = apply_M(apply_N_power(x, 1));
    CHECK(comm == n2 * Rational(4) - mn * Rational(4));
    if (comm != n2 * Rational(4) - mn * Rational(2)) {
      ++printed_commutator_failures;
    }

    const BarParts p = apply_bar_ops(x);
    CHECK(p.bar_w == apply_bar_W(x));
    CHECK(p.bar_gamma == apply_bar_Gamma(x));
    CHECK(p.m_part + p.commutator_part == x);
    const GradedPoly printed_m = apply_M(apply_N_power(x, -1)) * Rational(1, 2);
    if (printed_m + p.commutator_part != x) ++printed_split_failures;

    const SymTensor y = rng.tensor(1, in_v(4));
    CHECK(apply_bar_Gamma(apply_W_plus(y).by_count(0)).is_zero());
  }
  CHECK(printed_commutator_failures > 0);
  CHECK(printed_split_failures > 0);
}

TEST_CASE("bar operators by definition") {
  const TheorySpec s = identity_test_theory();
  RandomElements rng(s, 67);
  for (int i = 0; i < 20; ++i) {
    const GradedPoly x = rng.poly(in_v(3));
    GradedPoly bw, bg;
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        bw += apply_W_component(a, apply_W_component(b, x)) *
              Rational(eps_lower(a, b));
        bg += apply_Gamma_component(a, apply_Gamma_component(b, x)) *
              Rational(eps_upper(a, b));
      }
    }
    CHECK(apply_bar_W(x) == bw);
    CHECK(apply_bar_Gamma(x) == bg);
  }
}

TEST_CASE("epsilon conventions") {
  CHECK(eps_upper(1, 2) == 1);
  CHECK(eps_upper(2, 1) == -1);
  CHECK(eps_lower(1, 2) == -1);
  CHECK(eps_lower(2, 1) == 1);
  for (int a = 1; a <= 2; ++a) {
    for (int c = 1; c <= 2; ++c) {
      int sum = 0;
      for (int b = 1; b <= 2; ++b) sum += eps_upper(a, b) * eps_lower(b, c);
      CHECK(sum == (a == c ? 1 : 0));
    }
  }
}

TEST_CASE("grading shifts") {
  const TheorySpec s = identity_test_theory();
  RandomElements rng(s, 71);
  for (int i = 0; i < 40; ++i) {
    RandomOptions o = in_v(3);
    o.terms = 2;
    o.parity = i % 2;
    o.ngh = (i % 5) - 2;
    const SymTensor x = rng.tensor(1, o);
    if (x.is_zero()) continue;
    const SymTensor w = apply_W(x);
    if (!w.is_zero()) {
      CHECK(w.ngh() == *o.ngh + 1);
      CHECK(w.parity() == (*o.parity + 1) % 2);
    }
    const SymTensor g = apply_Gamma(x);
    if (!g.is_zero()) {
      CHECK(g.ngh() == *o.ngh - 1);
      CHECK(g.parity() == (*o.parity + 1) % 2);
    }
    for (const SymTensor& y : {apply_N(x), apply_M(x), apply_Q(x)}) {
      if (y.is_zero()) continue;
      CHECK(y.ngh() == *o.ngh);
      CHECK(y.parity() == *o.parity);
    }
  }
}

TEST_CASE("cyclic raising of symmetric inputs is symmetric") {
  const TheorySpec s = identity_test_theory();
  RandomElements rng(s, 73);
  for (int rank = 0; rank <= 3; ++rank) {
    for (int i = 0; i < 10; ++i) {
      const SymTensor x = rng.tensor(rank, in_v(3));
      CHECK(cyclic_symmetry_defects(x, apply_W_component) == 0);
    }
  }
}

TEST_CASE("identity suite") {
  IdentityConfig cfg;
  cfg.samples = 30;
  cfg.seed = 3;
  const IdentityReport rep = run_identity_suite(identity_test_theory(), cfg);
  CHECK(rep.results.size() == 22);
  for (const auto& r : rep.results) {
    CAPTURE(r.name);
    CHECK(r.checked > 0);
    CHECK(r.failures == 0);
  }
}

}  // TEST_SUITE
