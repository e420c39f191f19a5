#include "sp2brst/variable.hpp"

namespace sp2brst {

namespace {

Variable make(Sector s, int alpha, int a, bool odd) {
  Variable v;
  v.sector = s;
  v.alpha = static_cast<std::uint16_t>(alpha);
  v.sp2 = static_cast<std::uint8_t>(a);
  v.odd = odd;
  return v;
}

}  // namespace

Variable xi(int alpha, int eps) {
  return make(Sector::XiConstraint, alpha, 0, eps % 2 != 0);
}
Variable xi_phys(int alpha, int eps) {
  return make(Sector::XiPhysical, alpha, 0, eps % 2 != 0);
}
Variable ghost_momentum(int alpha, int a, int eps) {
  return make(Sector::GhostMomentum, alpha, a, eps % 2 == 0);
}
Variable ghost(int alpha, int a, int eps) {
  return make(Sector::Ghost, alpha, a, eps % 2 == 0);
}
Variable lagrange(int alpha, int eps) {
  return make(Sector::Lagrange, alpha, 0, eps % 2 != 0);
}
Variable lagrange_momentum(int alpha, int eps) {
  return make(Sector::LagrangeMomentum, alpha, 0, eps % 2 != 0);
}

int constraint_parity(const Variable& v) {
  return has_sp2_index(v.sector) ? 1 - v.parity() : v.parity();
}

std::string to_string(const Variable& v) {
  const std::string a = std::to_string(v.alpha);
  switch (v.sector) {
    case Sector::XiConstraint:
      return "xi[" + a + "]";
    case Sector::XiPhysical:
      return "xip[" + a + "]";
    case Sector::GhostMomentum:
      return "P[" + a + "," + std::to_string(v.sp2) + "]";
    case Sector::Ghost:
      return "C[" + a + "," + std::to_string(v.sp2) + "]";
    case Sector::Lagrange:
      return "lam[" + a + "]";
    case Sector::LagrangeMomentum:
      return "pi[" + a + "]";
  }
  return "?";
}

}  // namespace sp2brst
