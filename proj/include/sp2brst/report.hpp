#pragma once

#include <string>
#include <vector>

#include "sp2brst/observables.hpp"
#include "sp2brst/solver.hpp"
#include "sp2brst/theory_file.hpp"

namespace sp2brst {

/// Phase timings, printed only on request so that reports stay
/// byte-identical between runs.
struct Timings {
  std::vector<std::pair<std::string, double>> phases;
  void add(std::string name, double seconds) {
    phases.emplace_back(std::move(name), seconds);
  }
};

std::string format_theory_header(const TheoryFile& theory, int order);
std::string format_jacobi(const JacobiReport& report);
std::string format_residual(const MasterResidual& residual);
std::string format_boundary(const BoundaryReport& boundary);
std::string format_solve_report(const TheoryFile& theory,
                                const SolverResult& result,
                                const JacobiReport& jacobi);
std::string format_lift_report(const std::string& name,
                               const ObservableLift& lift);
std::string format_realization(const std::string& first,
                               const std::string& second,
                               const RealizationReport& report);
std::string format_timings(const Timings& timings);

/// Term counts of a rank-1 tensor grouped by cp-degree.
std::string format_degree_counts(const SymTensor& x);

}  // namespace sp2brst
