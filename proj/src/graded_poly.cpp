#include "sp2brst/graded_poly.hpp"

#include <vector>

#include <algorithm>
#include <atomic>

namespace sp2brst {

namespace {
std::atomic<std::size_t> g_term_limit{1'000'000};
}  // namespace

void set_term_limit(std::size_t limit) { g_term_limit.store(limit); }
std::size_t term_limit() { return g_term_limit.load(); }

GradedPoly::GradedPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

GradedPoly::GradedPoly(const Variable& v) { terms_.emplace(Monomial(v), 1); }

GradedPoly::GradedPoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::check_limit() const {
  if (terms_.size() > g_term_limit.load(std::memory_order_relaxed)) {
    throw TermLimitExceeded("polynomial exceeds the term limit of " +
                            std::to_string(term_limit()) + " terms");
  }
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    check_limit();
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void GradedPoly::add_term(const SignedMonomial& m, const Rational& c) {
  if (m.sign == 0) return;
  if (m.sign > 0) {
    add_term(m.monomial, c);
  } else {
    add_term(m.monomial, Rational(-c));
  }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

GradedPoly GradedPoly::multiply(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = sp2brst::multiply(ma, mb);
      if (prod.sign == 0) continue;
      r.add_term(prod, Rational(ca * cb));
    }
  }
  return r;
}

GradedPoly GradedPoly::multiply(const GradedPoly& a, const GradedPoly& b,
                                int max_cp) {
  GradedPoly r;
  std::vector<int> b_cp;
  b_cp.reserve(b.terms_.size());
  for (const auto& [mb, cb] : b.terms_) b_cp.push_back(mb.cp_degree());
  for (const auto& [ma, ca] : a.terms_) {
    const int budget = max_cp - ma.cp_degree();
    if (budget < 0) continue;
    std::size_t j = 0;
    for (const auto& [mb, cb] : b.terms_) {
      if (b_cp[j++] > budget) continue;
      auto prod = sp2brst::multiply(ma, mb);
      if (prod.sign == 0) continue;
      r.add_term(prod, Rational(ca * cb));
    }
  }
  return r;
}

GradedPoly operator*(const Variable& v, const GradedPoly& x) {
  return GradedPoly::multiply(GradedPoly(v), x);
}

std::optional<int> GradedPoly::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    if (p && *p != m.parity()) return std::nullopt;
    p = m.parity();
  }
  return p;
}

std::optional<int> GradedPoly::ngh() const {
  std::optional<int> g;
  for (const auto& [m, c] : terms_) {
    const int t = m.ngh();
    if (g && *g != t) return std::nullopt;
    g = t;
  }
  return g;
}

std::optional<int> GradedPoly::min_cp_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int t = m.cp_degree();
    if (!d || t < *d) d = t;
  }
  return d;
}

std::optional<int> GradedPoly::max_cp_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int t = m.cp_degree();
    if (!d || t > *d) d = t;
  }
  return d;
}

std::optional<int> GradedPoly::min_n_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int t = m.n_degree();
    if (!d || t < *d) d = t;
  }
  return d;
}

GradedPoly GradedPoly::truncate_cp(int k) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.cp_degree() <= k) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

GradedPoly GradedPoly::cp_part(int d) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.cp_degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

std::map<Bidegree, GradedPoly> GradedPoly::grade_decompose() const {
  std::map<Bidegree, GradedPoly> parts;
  for (const auto& [m, c] : terms_) {
    auto& part = parts[{m.n_degree(), m.cp_degree()}];
    part.terms_.emplace_hint(part.terms_.end(), m, c);
  }
  return parts;
}

GradedPoly GradedPoly::substitute_zero(SectorSet sectors) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    const auto f = m.factors();
    const bool hit = std::any_of(f.begin(), f.end(), [&](const Factor& x) {
      return sectors.contains(x.var.sector);
    });
    if (!hit) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

bool GradedPoly::only_sectors(SectorSet sectors) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) {
      if (!sectors.contains(f.var.sector)) return false;
    }
  }
  return true;
}

GradedPoly GradedPoly::left_derivative(const Variable& v) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    if (auto d = sp2brst::left_derivative(m, v)) {
      r.add_term(d->second, Rational(c * d->first));
    }
  }
  return r;
}

GradedPoly GradedPoly::right_derivative(const Variable& v) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    if (auto d = sp2brst::right_derivative(m, v)) {
      r.add_term(d->second, Rational(c * d->first));
    }
  }
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const GradedPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(m);
    } else {
      out += to_string(mag) + "*" + to_string(m);
    }
  }
  return out;
}

}  // namespace sp2brst
