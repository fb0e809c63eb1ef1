#pragma once

#include <iosfwd>
#include <string>

#include "systolic/simplicial.hpp"
#include "systolic/tristate.hpp"

namespace systolic {

/// Aggregate verdicts for one complex. Largeness keys are Unknown for
/// non-flag input (they are defined on flag complexes only).
struct ClassifyReport {
  bool flag = false;
  TriState locally_5_large = TriState::Unknown;
  TriState locally_6_large = TriState::Unknown;
  TriState sd2_star = TriState::Unknown;
  TriState sd2_star_links = TriState::Unknown;
  TriState simply_connected = TriState::Unknown;
  TriState systolic = TriState::Unknown;        // locally 6-large and s.c.
  TriState weakly_systolic = TriState::Unknown; // SD2* and s.c.
};

ClassifyReport classify(const Complex& x, int effort = 10000);

// Human-readable or stable machine-readable (`key=Y|N|Unknown` lines).
void print_report(std::ostream& out, const ClassifyReport& r, bool machine);
std::string report_to_string(const ClassifyReport& r, bool machine);

}  // namespace systolic
