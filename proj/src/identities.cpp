#include "sp2brst/identities.hpp"

#include <functional>
#include <map>

#include "sp2brst/operators.hpp"
#include "sp2brst/random_elements.hpp"

namespace sp2brst {

TheorySpec identity_test_theory() { return TheorySpec({0, 1}); }

namespace {

GradedPoly N1(const GradedPoly& x) { return apply_N_power(x, 1); }

GradedPoly M_pow(const GradedPoly& x, int n) {
  GradedPoly y = x;
  for (int i = 0; i < n; ++i) y = apply_M(y);
  return y;
}

GradedPoly N_pow(const GradedPoly& x, int n) { return apply_N_power(x, n); }

class Suite {
 public:
  void check(const std::string& name, int sample, int rank, bool holds) {
    IdentityResult& r = slot(name);
    ++r.checked;
    if (!holds) {
      if (r.failures == 0) {
        r.first_failure =
            "sample " + std::to_string(sample) + ", rank " +
            std::to_string(rank);
      }
      ++r.failures;
    }
  }

  IdentityReport report() && { return IdentityReport{std::move(results_)}; }

 private:
  IdentityResult& slot(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, results_.size()).first;
      results_.push_back(IdentityResult{name, 0, 0, {}});
    }
    return results_[it->second];
  }

  std::map<std::string, std::size_t> index_;
  std::vector<IdentityResult> results_;
};

}  // namespace

IdentityReport run_identity_suite(const TheorySpec& spec,
                                  const IdentityConfig& config) {
  RandomElements gen(spec, config.seed);
  RandomOptions opt;
  opt.terms = config.terms;
  opt.max_n = config.degree;
  opt.max_cp = config.degree;
  Suite s;

  for (int i = 0; i < config.samples; ++i) {
    const SymTensor x0 = gen.tensor(0, opt);
    const SymTensor x1 = gen.tensor(1, opt);
    const SymTensor x2 = gen.tensor(2, opt);
    const GradedPoly& p = x0({});
    const SymTensor xs[3] = {x0, x1, x2};

    s.check("W W = 0", i, 0, apply_W(apply_W(x0)).is_zero());
    s.check("W W = 0", i, 1, apply_W(apply_W(x1)).is_zero());
    s.check("Gamma Gamma = 0", i, 2, apply_Gamma(apply_Gamma(x2)).is_zero());
    for (int a = 1; a <= 2; ++a) {
      for (int b = a; b <= 2; ++b) {
        s.check("W^{a} W^{b} = 0", i, 0,
                (apply_W_component(a, apply_W_component(b, p)) +
                 apply_W_component(b, apply_W_component(a, p)))
                    .is_zero());
        s.check("Gamma_{a} Gamma_{b} = 0", i, 0,
                (apply_Gamma_component(a, apply_Gamma_component(b, p)) +
                 apply_Gamma_component(b, apply_Gamma_component(a, p)))
                    .is_zero());
      }
    }
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        const GradedPoly lhs =
            apply_W_component(a, apply_Gamma_component(b, p)) +
            apply_Gamma_component(b, apply_W_component(a, p));
        s.check("W^a Gamma_b + Gamma_b W^a = delta N", i, 0,
                lhs == (a == b ? N1(p) : GradedPoly{}));
      }
    }
    for (int r = 0; r < 3; ++r) {
      s.check("N W = W N", i, r,
              apply_N(apply_W(xs[r])) == apply_W(apply_N(xs[r])));
      s.check("N Gamma = Gamma N", i, r,
              apply_N(apply_Gamma(xs[r])) == apply_Gamma(apply_N(xs[r])));
    }
    for (int a = 1; a <= 2; ++a) {
      const GradedPoly w = apply_W_component(a, p);
      s.check("M^2 W^a = N M W^a", i, 0, M_pow(w, 2) == N1(apply_M(w)));
      s.check("Gamma_a M^2 = N Gamma_a M", i, 0,
              apply_Gamma_component(a, M_pow(p, 2)) ==
                  N1(apply_Gamma_component(a, apply_M(p))));
    }
    const GradedPoly m2 = M_pow(p, 2);
    const GradedPoly m1 = apply_M(p);
    for (int n = 3; n <= 5; ++n) {
      const Rational c2((1 << (n - 1)) - 1), c1((1 << (n - 1)) - 2);
      const GradedPoly rhs = N_pow(m2, n - 2) * c2 - N_pow(m1, n - 1) * c1;
      s.check("M^" + std::to_string(n) + " reduction", i, 0,
              M_pow(p, n) == rhs);
    }
    for (int r = 0; r < 2; ++r) {
      s.check("W M = (M + N) W", i, r,
              apply_W(apply_M(xs[r])) ==
                  apply_M(apply_W(xs[r])) + apply_N(apply_W(xs[r])));
    }
    for (int r = 1; r < 3; ++r) {
      s.check("Gamma M = (M - N) Gamma", i, r,
              apply_Gamma(apply_M(xs[r])) ==
                  apply_M(apply_Gamma(xs[r])) - apply_N(apply_Gamma(xs[r])));
    }
    for (int r = 0; r < 3; ++r) {
      // Gamma is zero on S^0, so only Gamma W contributes there.
      SymTensor lhs = apply_Gamma(apply_W(xs[r]));
      if (r > 0) lhs += apply_W(apply_Gamma(xs[r]));
      s.check("Gamma W + W Gamma = nN + M", i, r,
              lhs == apply_N(xs[r]) * Rational(r) + apply_M(xs[r]));
    }
    for (int r = 1; r < 3; ++r) {
      const SymTensor q = apply_Q(xs[r]);
      s.check("(nN + M) Q = I", i, r,
              apply_N(q) * Rational(r) + apply_M(q) == xs[r]);
    }
    for (int r = 0; r < 2; ++r) {
      const SymTensor w = apply_W(xs[r]);
      s.check("W W+ W = W", i, r, apply_W(apply_W_plus(w)) == w);
    }
    s.check("W+ W+ = 0", i, 2,
            apply_W_plus(apply_W_plus(x2)).is_zero());
    for (int r = 1; r < 3; ++r) {
      const Decomposition d = apply_decompose(xs[r]);
      s.check("X = W+ W X + W W+ X", i, r,
              d.cocycle_part + d.exact_part == xs[r]);
    }
    const GradedPoly lhs = apply_bar_W(apply_bar_Gamma(p)) -
                           apply_bar_Gamma(apply_bar_W(p));
    s.check("barW barGamma - barGamma barW = 4N^2 - 4MN", i, 0,
            lhs == N_pow(p, 2) * Rational(4) - N1(apply_M(p)) * Rational(4));
    const BarParts bp = apply_bar_ops(p);
    s.check("X = M N^-1 X + 1/4 (barW barGamma - barGamma barW) N^-2 X",
            i, 0, bp.m_part + bp.commutator_part == p);
    s.check("barGamma W+ = 0", i, 1,
            apply_bar_Gamma(apply_W_plus(x1)({})).is_zero());
  }
  return std::move(s).report();
}

std::string format_identity_report(const IdentityReport& report) {
  std::string out;
  for (const auto& r : report.results) {
    out += (r.failures == 0 ? "PASS " : "FAIL ") + r.name + "  (" +
           std::to_string(r.checked) + " checks";
    if (r.failures != 0) {
      out += ", " + std::to_string(r.failures) + " failed, first at " +
             r.first_failure;
    }
    out += ")\n";
  }
  return out;
}

}  // namespace sp2brst
