#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sp2brst {

/// Sectors of the extended phase space, listed in canonical variable order.
enum class Sector : std::uint8_t {
  XiConstraint = 0,  // xi_alpha, the constraints themselves
  XiPhysical = 1,    // xi_alpha', complementary matter coordinates
  GhostMomentum = 2, // P_{alpha a}
  Ghost = 3,         // C^{alpha a}
  Lagrange = 4,      // lambda_alpha
  LagrangeMomentum = 5, // pi^alpha
};

inline constexpr int kSectorCount = 6;

constexpr bool has_sp2_index(Sector s) {
  return s == Sector::GhostMomentum || s == Sector::Ghost;
}

/// New ghost number of a single generator.
constexpr int sector_ngh(Sector s) {
  switch (s) {
    case Sector::XiConstraint:
    case Sector::XiPhysical:
      return 0;
    case Sector::GhostMomentum:
      return -1;
    case Sector::Ghost:
      return 1;
    case Sector::Lagrange:
      return -2;
    case Sector::LagrangeMomentum:
      return 2;
  }
  return 0;
}

/// Contributes to the counting operator N (xi_alpha, P, lambda).
constexpr bool counts_toward_n(Sector s) {
  return s == Sector::XiConstraint || s == Sector::GhostMomentum ||
         s == Sector::Lagrange;
}

/// Contributes to the C,pi filtration degree.
constexpr bool counts_toward_cp(Sector s) {
  return s == Sector::Ghost || s == Sector::LagrangeMomentum;
}

/// One generator of the extended phase space.
///
/// Identity and ordering are carried entirely by `key()`; the parity is
/// stored alongside so that sign computations never need the theory.
/// `alpha` is 1-based, `sp2` is 1 or 2 for P and C and 0 otherwise.
struct Variable {
  Sector sector = Sector::XiConstraint;
  std::uint16_t alpha = 1;
  std::uint8_t sp2 = 0;
  bool odd = false;

  constexpr std::uint32_t key() const {
    std::uint32_t sub = has_sp2_index(sector)
                            ? 2u * (alpha - 1u) + (sp2 - 1u)
                            : static_cast<std::uint32_t>(alpha - 1u);
    return (static_cast<std::uint32_t>(sector) << 24) | sub;
  }

  constexpr int ngh() const { return sector_ngh(sector); }
  constexpr int parity() const { return odd ? 1 : 0; }

  friend constexpr bool operator==(const Variable& a, const Variable& b) {
    return a.key() == b.key();
  }
  friend constexpr std::strong_ordering operator<=>(const Variable& a,
                                                    const Variable& b) {
    return a.key() <=> b.key();
  }
};

// Factories. `eps` is the Grassmann parity epsilon_alpha of constraint alpha
// (or of the physical coordinate for xi_phys); ghosts get the opposite parity.
Variable xi(int alpha, int eps);
Variable xi_phys(int alpha, int eps);
Variable ghost_momentum(int alpha, int a, int eps);
Variable ghost(int alpha, int a, int eps);
Variable lagrange(int alpha, int eps);
Variable lagrange_momentum(int alpha, int eps);

/// Parity epsilon_alpha of the constraint that `v` is attached to.
int constraint_parity(const Variable& v);

/// Serialized token, e.g. `xi[1]`, `xip[2]`, `P[1,2]`, `C[2,1]`, `lam[1]`, `pi[1]`.
std::string to_string(const Variable& v);

}  // namespace sp2brst
