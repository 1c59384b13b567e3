#pragma once

#include <string>
#include <vector>

#include "relnet/config.hpp"

namespace relnet {

// Output directory precedence: config value, then $RELNET_OUT, then ".".
std::string resolveOutDir(const ScenarioConfig& cfg);

// Built-in axis points used when the config leaves sweep_values empty.
std::vector<double> defaultSweepValues(SweepAxis axis);

// Dispatch one experiment: run it, write results.csv and manifest.json under
// the output directory, print a one-line summary per file. Returns a process
// exit status.
int runExperiment(const ScenarioConfig& cfg);

}  // namespace relnet
