#include "sp2brst/random_elements.hpp"

namespace sp2brst {

RandomElements::RandomElements(const TheorySpec& spec, std::uint64_t seed)
    : engine_(seed) {
  for (const Variable& v : spec.variables()) {
    if (v.sector == Sector::XiPhysical) {
      physical_.push_back(v);
    } else if (counts_toward_n(v.sector)) {
      n_vars_.push_back(v);
    } else if (counts_toward_cp(v.sector)) {
      cp_vars_.push_back(v);
    }
  }
}

int RandomElements::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Rational RandomElements::coefficient(int max_abs) {
  int num = 0;
  while (num == 0) num = uniform(-max_abs, max_abs);
  Rational q(num, uniform(1, 3));
  q.canonicalize();
  return q;
}

std::optional<Monomial> RandomElements::monomial(const RandomOptions& opt) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<Variable> word;
    const int n = n_vars_.empty() ? 0 : uniform(opt.min_n, opt.max_n);
    const int d = cp_vars_.empty() ? 0 : uniform(opt.min_cp, opt.max_cp);
    for (int i = 0; i < n; ++i) {
      word.push_back(n_vars_[static_cast<std::size_t>(
          uniform(0, static_cast<int>(n_vars_.size()) - 1))]);
    }
    for (int i = 0; i < d; ++i) {
      word.push_back(cp_vars_[static_cast<std::size_t>(
          uniform(0, static_cast<int>(cp_vars_.size()) - 1))]);
    }
    if (opt.physical && !physical_.empty()) {
      const int extra = uniform(0, 2);
      for (int i = 0; i < extra; ++i) {
        word.push_back(physical_[static_cast<std::size_t>(
            uniform(0, static_cast<int>(physical_.size()) - 1))]);
      }
    }
    const SignedMonomial sm = Monomial::normal_form(word);
    if (sm.sign == 0) continue;
    if (opt.parity && sm.monomial.parity() != *opt.parity) continue;
    if (opt.ngh && sm.monomial.ngh() != *opt.ngh) continue;
    return sm.monomial;
  }
  return std::nullopt;
}

GradedPoly RandomElements::poly(const RandomOptions& opt) {
  GradedPoly out;
  for (int t = 0; t < opt.terms; ++t) {
    if (auto m = monomial(opt)) {
      out.add_term(*m, coefficient(opt.max_coefficient));
    }
  }
  return out;
}

SymTensor RandomElements::tensor(int rank, const RandomOptions& opt) {
  SymTensor out(rank);
  for (int twos = 0; twos <= rank; ++twos) out.by_count(twos) = poly(opt);
  return out;
}

}  // namespace sp2brst
