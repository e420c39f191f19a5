#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sp2brst/theory.hpp"

namespace sp2brst {

struct IdentityConfig {
  int degree = 4;      // bound on both cp-degree and N-degree of samples
  int samples = 100;   // random elements per tensor rank
  std::uint64_t seed = 7;
  int terms = 3;       // terms per random component
};

struct IdentityResult {
  std::string name;
  int checked = 0;
  int failures = 0;
  std::string first_failure;  // sample number and rank of the first failure
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool ok() const {
    for (const auto& r : results) {
      if (r.failures != 0) return false;
    }
    return true;
  }
};

/// Two constraints, the first bosonic and the second fermionic, no brackets:
/// the operators only see the parities.
TheorySpec identity_test_theory();

/// Exact checks of the operator identities on seeded random elements of V.
IdentityReport run_identity_suite(const TheorySpec& spec,
                                  const IdentityConfig& config);

std::string format_identity_report(const IdentityReport& report);

}  // namespace sp2brst
