#include "sp2brst/monomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sp2brst {

void Monomial::recompute_parity() {
  int p = 0;
  for (const auto& f : factors_) {
    if (f.var.odd) p ^= 1;
  }
  parity_ = p;
}

SignedMonomial Monomial::normal_form(std::span<const Variable> word) {
  // Insertion sort that tracks the sign of every odd-odd transposition.
  std::vector<Variable> w(word.begin(), word.end());
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
      if (w[j].odd && w[j - 1].odd) sign = -sign;
      std::swap(w[j], w[j - 1]);
    }
  }
  Monomial out;
  for (const auto& v : w) {
    if (!out.factors_.empty() && out.factors_.back().var == v) {
      if (v.odd) return {0, Monomial{}};
      ++out.factors_.back().exp;
    } else {
      out.factors_.push_back(Factor{v, 1});
    }
  }
  out.recompute_parity();
  return {sign, std::move(out)};
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].exp == 0) {
      throw std::invalid_argument("monomial factor with zero exponent");
    }
    if (factors[i].var.odd && factors[i].exp > 1) {
      throw std::invalid_argument("odd generator raised to a power > 1");
    }
    if (i > 0 && !(factors[i - 1].var < factors[i].var)) {
      throw std::invalid_argument("monomial factors not in canonical order");
    }
  }
  Monomial m;
  m.factors_ = std::move(factors);
  m.recompute_parity();
  return m;
}

int Monomial::ngh() const {
  int g = 0;
  for (const auto& f : factors_) g += f.var.ngh() * f.exp;
  return g;
}

int Monomial::n_degree() const {
  int d = 0;
  for (const auto& f : factors_) {
    if (counts_toward_n(f.var.sector)) d += f.exp;
  }
  return d;
}

int Monomial::cp_degree() const {
  int d = 0;
  for (const auto& f : factors_) {
    if (counts_toward_cp(f.var.sector)) d += f.exp;
  }
  return d;
}

int Monomial::xi_degree() const {
  return degree_in(Sector::XiConstraint) + degree_in(Sector::XiPhysical);
}

int Monomial::degree_in(Sector s) const {
  int d = 0;
  for (const auto& f : factors_) {
    if (f.var.sector == s) d += f.exp;
  }
  return d;
}

bool Monomial::contains_sector(Sector s) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [s](const Factor& f) { return f.var.sector == s; });
}

std::uint16_t Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), v,
      [](const Factor& f, const Variable& x) { return f.var < x; });
  if (it != factors_.end() && it->var == v) return it->exp;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var.key()) << 8) ^ f.exp;
    h *= 0x100000001b3ull;
  }
  return h;
}

SignedMonomial multiply(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  SignedMonomial out;
  out.monomial.factors_.reserve(fa.size() + fb.size());
  int odd_left_in_a = 0;
  for (const auto& f : fa) {
    if (f.var.odd) ++odd_left_in_a;
  }
  int swaps = 0;
  std::size_t i = 0, j = 0;
  auto& dst = out.monomial.factors_;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].var < fb[j].var)) {
      if (fa[i].var.odd) --odd_left_in_a;
      dst.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].var < fa[i].var) {
      if (fb[j].var.odd) swaps += odd_left_in_a;
      dst.push_back(fb[j++]);
    } else {
      if (fa[i].var.odd) return {0, Monomial{}};
      Factor f = fa[i++];
      f.exp = static_cast<std::uint16_t>(f.exp + fb[j++].exp);
      dst.push_back(f);
    }
  }
  out.sign = (swaps % 2 == 0) ? 1 : -1;
  out.monomial.parity_ = a.parity_ ^ b.parity_;
  return out;
}

std::optional<std::pair<int, Monomial>> derivative_impl(const Monomial& m,
                                                        const Variable& v,
                                                        bool left) {
  const auto factors = m.factors();
  auto it = std::lower_bound(
      factors.begin(), factors.end(), v,
      [](const Factor& f, const Variable& x) { return f.var < x; });
  if (it == factors.end() || !(it->var == v)) return std::nullopt;
  const auto pos = static_cast<std::size_t>(it - factors.begin());
  int coeff = it->exp;
  if (v.odd) {
    int passed = 0;
    if (left) {
      for (std::size_t k = 0; k < pos; ++k) passed += factors[k].var.odd;
    } else {
      for (std::size_t k = pos + 1; k < factors.size(); ++k)
        passed += factors[k].var.odd;
    }
    if (passed % 2 != 0) coeff = -coeff;
  }
  Monomial rest = m;
  if (rest.factors_[pos].exp > 1) {
    --rest.factors_[pos].exp;
  } else {
    rest.factors_.erase(rest.factors_.begin() +
                        static_cast<std::ptrdiff_t>(pos));
    if (v.odd) rest.parity_ ^= 1;
  }
  return std::make_pair(coeff, std::move(rest));
}

std::optional<std::pair<int, Monomial>> left_derivative(const Monomial& m,
                                                        const Variable& v) {
  return derivative_impl(m, v, true);
}

std::optional<std::pair<int, Monomial>> right_derivative(const Monomial& m,
                                                         const Variable& v) {
  return derivative_impl(m, v, false);
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& f : m.factors()) {
    if (!s.empty()) s += '*';
    s += to_string(f.var);
    if (f.exp > 1) s += '^' + std::to_string(f.exp);
  }
  return s;
}

}  // namespace sp2brst
