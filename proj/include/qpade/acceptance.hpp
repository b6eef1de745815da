#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpade/generating.hpp"
#include "qpade/params.hpp"

namespace qpade {

struct AcceptanceConfig {
  std::optional<Surface> only;  ///< restrict every criterion to one surface
  /// Literal runs every check with the uncorrected literal forms; several criteria then fail.
  FormulaVariant variant = FormulaVariant::Canonical;
  std::uint64_t seed = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  long cases = 0;
  std::vector<std::string> notes;     ///< documented discrepancies and summary facts
  std::vector<std::string> failures;  ///< first few failing cases
  double seconds = 0;
};

/// Runs the nine acceptance criteria.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);

/// One line per criterion plus indented notes and failures. Timing is included only on request,
/// so reports without it are byte-identical across runs.
std::string format_acceptance(const std::vector<CriterionResult>& results, bool with_timing);

}  // namespace qpade
