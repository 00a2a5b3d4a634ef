#pragma once

#include <string>

namespace edgesums::tools {

/// Runs the brute-force cross-checks for one area ("stats", "sumprod",
/// "energy", "incidence", "ruzsa", "projection", "matching", "blowup",
/// "pencils") or "all". Prints one line per check; returns true when every
/// check passed. Throws std::invalid_argument for unknown names.
bool run_verify(const std::string& name);

}  // namespace edgesums::tools
