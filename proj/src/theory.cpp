#include "sp2brst/theory.hpp"

#include <limits>
#include <set>

namespace sp2brst {

namespace {

int mirror_sign(int pa, int pb) { return (pa * pb) % 2 == 0 ? -1 : 1; }

}  // namespace

TheorySpec::TheorySpec(std::vector<int> constraint_parities,
                       std::vector<int> physical_parities)
    : constraint_parities_(std::move(constraint_parities)),
      physical_parities_(std::move(physical_parities)) {
  for (int& p : constraint_parities_) {
    if (p != 0 && p != 1) throw SpecError("constraint parity must be 0 or 1");
  }
  for (int& p : physical_parities_) {
    if (p != 0 && p != 1) throw SpecError("physical parity must be 0 or 1");
  }
}

void TheorySpec::check_constraint_index(int alpha) const {
  if (alpha < 1 || alpha > m()) {
    throw SpecError("constraint index " + std::to_string(alpha) +
                    " out of range 1.." + std::to_string(m()));
  }
}

void TheorySpec::check_matter(const Variable& v) const {
  if (v.sector == Sector::XiConstraint) {
    check_constraint_index(v.alpha);
  } else if (v.sector == Sector::XiPhysical) {
    if (v.alpha < 1 || v.alpha > n_physical()) {
      throw SpecError("physical index " + std::to_string(v.alpha) +
                      " out of range 1.." + std::to_string(n_physical()));
    }
  } else {
    throw SpecError("matter bracket entry on non-matter generator " +
                    to_string(v));
  }
}

int TheorySpec::parity(int alpha) const {
  check_constraint_index(alpha);
  return constraint_parities_[alpha - 1];
}

int TheorySpec::physical_parity(int alpha) const {
  if (alpha < 1 || alpha > n_physical()) {
    throw SpecError("physical index " + std::to_string(alpha) +
                    " out of range");
  }
  return physical_parities_[alpha - 1];
}

Variable TheorySpec::xi(int alpha) const {
  return sp2brst::xi(alpha, parity(alpha));
}
Variable TheorySpec::xip(int alpha) const {
  return sp2brst::xi_phys(alpha, physical_parity(alpha));
}
Variable TheorySpec::P(int alpha, int a) const {
  return ghost_momentum(alpha, a, parity(alpha));
}
Variable TheorySpec::C(int alpha, int a) const {
  return ghost(alpha, a, parity(alpha));
}
Variable TheorySpec::lam(int alpha) const {
  return lagrange(alpha, parity(alpha));
}
Variable TheorySpec::pi(int alpha) const {
  return lagrange_momentum(alpha, parity(alpha));
}

std::vector<Variable> TheorySpec::matter_variables() const {
  std::vector<Variable> out;
  for (int a = 1; a <= m(); ++a) out.push_back(xi(a));
  for (int a = 1; a <= n_physical(); ++a) out.push_back(xip(a));
  return out;
}

std::vector<Variable> TheorySpec::variables() const {
  std::vector<Variable> out = matter_variables();
  for (int a = 1; a <= m(); ++a) {
    out.push_back(P(a, 1));
    out.push_back(P(a, 2));
  }
  for (int a = 1; a <= m(); ++a) {
    out.push_back(C(a, 1));
    out.push_back(C(a, 2));
  }
  for (int a = 1; a <= m(); ++a) out.push_back(lam(a));
  for (int a = 1; a <= m(); ++a) out.push_back(pi(a));
  return out;
}

void TheorySpec::set_structure(int alpha, int beta, int gamma,
                               const GradedPoly& u) {
  check_constraint_index(alpha);
  check_constraint_index(beta);
  check_constraint_index(gamma);
  SectorSet allowed{Sector::XiConstraint};
  if (structure_may_depend_on_physical) allowed.insert(Sector::XiPhysical);
  if (!u.only_sectors(allowed)) {
    throw SpecError("structure function U[" + std::to_string(alpha) + "," +
                    std::to_string(beta) + "," + std::to_string(gamma) +
                    "] must depend on xi only");
  }
  for (const auto& [mono, c] : u.terms()) {
    for (const auto& f : mono.factors()) check_matter(f.var);
  }
  const int ea = parity(alpha), eb = parity(beta), eg = parity(gamma);
  if (auto p = u.parity(); !u.is_zero() && (!p || *p != (ea + eb + eg) % 2)) {
    throw SpecError("structure function U[" + std::to_string(alpha) + "," +
                    std::to_string(beta) + "," + std::to_string(gamma) +
                    "] has the wrong Grassmann parity");
  }
  const GradedPoly mirror = u * Rational(mirror_sign(ea, eb));
  if (alpha == beta && !(mirror == u)) {
    throw SpecError("U[" + std::to_string(alpha) + "," + std::to_string(beta) +
                    "," + std::to_string(gamma) +
                    "] violates graded antisymmetry");
  }
  auto key = std::make_tuple(alpha, beta, gamma);
  auto mkey = std::make_tuple(beta, alpha, gamma);
  if (auto it = structure_.find(mkey);
      alpha != beta && it != structure_.end() && !(it->second == mirror)) {
    throw SpecError("U[" + std::to_string(alpha) + "," + std::to_string(beta) +
                    "," + std::to_string(gamma) +
                    "] inconsistent with its antisymmetric partner");
  }
  if (u.is_zero()) {
    structure_.erase(key);
    structure_.erase(mkey);
  } else {
    structure_[key] = u;
    structure_[mkey] = mirror;
  }
  rebuild_omega();
}

void TheorySpec::set_mixed(const Variable& a, const Variable& b,
                           const GradedPoly& w) {
  check_matter(a);
  check_matter(b);
  if (a.sector == Sector::XiConstraint && b.sector == Sector::XiConstraint) {
    throw SpecError(
        "constraint-constraint brackets must be given through U, not mixed");
  }
  if (!w.only_sectors({Sector::XiConstraint, Sector::XiPhysical})) {
    throw SpecError("mixed bracket {" + to_string(a) + "," + to_string(b) +
                    "} must depend on xi only");
  }
  for (const auto& [mono, c] : w.terms()) {
    for (const auto& f : mono.factors()) check_matter(f.var);
  }
  if (auto p = w.parity();
      !w.is_zero() && (!p || *p != (a.parity() + b.parity()) % 2)) {
    throw SpecError("mixed bracket {" + to_string(a) + "," + to_string(b) +
                    "} has the wrong Grassmann parity");
  }
  const GradedPoly mirror = w * Rational(mirror_sign(a.parity(), b.parity()));
  if (a == b && !(mirror == w)) {
    throw SpecError("mixed bracket {" + to_string(a) + "," + to_string(b) +
                    "} violates graded antisymmetry");
  }
  if (auto it = mixed_.find({b, a});
      !(a == b) && it != mixed_.end() && !(it->second == mirror)) {
    throw SpecError("mixed bracket {" + to_string(a) + "," + to_string(b) +
                    "} inconsistent with its antisymmetric partner");
  }
  if (w.is_zero()) {
    mixed_.erase({a, b});
    mixed_.erase({b, a});
  } else {
    mixed_[{a, b}] = w;
    mixed_[{b, a}] = mirror;
  }
  rebuild_omega();
}

GradedPoly TheorySpec::structure(int alpha, int beta, int gamma) const {
  auto it = structure_.find({alpha, beta, gamma});
  return it == structure_.end() ? GradedPoly{} : it->second;
}

GradedPoly TheorySpec::omega(const Variable& a, const Variable& b) const {
  auto it = partners_.find(a);
  if (it == partners_.end()) return {};
  for (const auto& p : it->second) {
    if (p.var == b) return p.omega;
  }
  return {};
}

const std::vector<TheorySpec::Partner>& TheorySpec::partners(
    const Variable& a) const {
  static const std::vector<Partner> none;
  auto it = partners_.find(a);
  return it == partners_.end() ? none : it->second;
}

void TheorySpec::rebuild_omega() {
  std::map<std::pair<Variable, Variable>, GradedPoly> table;
  for (const auto& [key, u] : structure_) {
    const auto [a, b, g] = key;
    table[{xi(a), xi(b)}] += u * GradedPoly(xi(g));
  }
  for (const auto& [key, w] : mixed_) table[key] += w;
  partners_.clear();
  for (auto& [key, w] : table) {
    if (w.is_zero()) continue;
    partners_[key.first].push_back(Partner{key.second, std::move(w)});
  }
}

TheorySpec abelian_theory(std::vector<int> parities) {
  return TheorySpec(std::move(parities));
}

TheorySpec so3_theory() {
  TheorySpec spec({0, 0, 0});
  spec.set_structure(1, 2, 3, GradedPoly::constant(1));
  spec.set_structure(2, 3, 1, GradedPoly::constant(1));
  spec.set_structure(3, 1, 2, GradedPoly::constant(1));
  return spec;
}

namespace {

/// omega^{AB} for the ghost sector: partner generator and constant entry.
std::optional<std::pair<Variable, int>> ghost_partner(const Variable& a) {
  const int eps = constraint_parity(a);
  switch (a.sector) {
    case Sector::Ghost:
      return std::make_pair(ghost_momentum(a.alpha, a.sp2, eps), 1);
    case Sector::GhostMomentum:
      // -(-1)^{e(C)} with e(C) = eps + 1
      return std::make_pair(ghost(a.alpha, a.sp2, eps), eps == 0 ? 1 : -1);
    case Sector::LagrangeMomentum:
      return std::make_pair(lagrange(a.alpha, eps), 1);
    case Sector::Lagrange:
      return std::make_pair(lagrange_momentum(a.alpha, eps),
                            eps == 0 ? -1 : 1);
    default:
      return std::nullopt;
  }
}

std::set<Variable> generators_of(const GradedPoly& p) {
  std::set<Variable> out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& f : m.factors()) out.insert(f.var);
  }
  return out;
}

}  // namespace

GradedPoly poisson_bracket(const GradedPoly& x, const GradedPoly& y,
                           const TheorySpec& spec) {
  return poisson_bracket(x, y, spec, std::numeric_limits<int>::max() / 2);
}

GradedPoly poisson_bracket(const GradedPoly& x, const GradedPoly& y,
                           const TheorySpec& spec, int max_cp) {
  GradedPoly result;
  if (x.is_zero() || y.is_zero()) return result;
  const auto y_vars = generators_of(y);
  std::map<Variable, GradedPoly> dy;
  auto left_of_y = [&](const Variable& b) -> const GradedPoly& {
    auto it = dy.find(b);
    if (it == dy.end()) it = dy.emplace(b, y.left_derivative(b)).first;
    return it->second;
  };
  for (const auto& a : generators_of(x)) {
    if (a.sector == Sector::XiConstraint || a.sector == Sector::XiPhysical) {
      const auto& partners = spec.partners(a);
      if (partners.empty()) continue;
      const GradedPoly dx = x.right_derivative(a);
      for (const auto& p : partners) {
        if (!y_vars.contains(p.var)) continue;
        const GradedPoly dxw = GradedPoly::multiply(dx, p.omega, max_cp);
        result += GradedPoly::multiply(dxw, left_of_y(p.var), max_cp);
      }
    } else if (auto g = ghost_partner(a)) {
      if (!y_vars.contains(g->first)) continue;
      GradedPoly term = GradedPoly::multiply(x.right_derivative(a),
                                             left_of_y(g->first), max_cp);
      if (g->second < 0) term *= Rational(-1);
      result += term;
    }
  }
  return result;
}

}  // namespace sp2brst
