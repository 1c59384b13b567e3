#pragma once

#include <string>
#include <vector>

#include "relnet/config.hpp"
#include "relnet/scenario.hpp"

namespace relnet::report {

inline constexpr const char* kVersion = "1.0.0";

// Comma-separated table, header mandatory, 9 significant digits, "nan" for
// fields that do not apply to a row. Byte-stable for a given input.
std::string toCsv(const std::vector<scenario::ExperimentResult>& rows);

// Replay record: resolved config, seeds (master and every derived repetition
// seed), axis values, row count, code version. Deliberately no timestamps or
// host details so identical runs serialize identically.
std::string toManifest(const ScenarioConfig& cfg, const std::string& axisName,
                       const std::vector<double>& axisValues,
                       const std::vector<std::vector<std::uint64_t>>& repSeeds,
                       std::size_t rowCount);

void writeFile(const std::string& path, const std::string& text);

}  // namespace relnet::report
