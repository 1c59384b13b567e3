#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "relnet/baselines.hpp"
#include "relnet/model.hpp"

namespace relnet {

enum class ExperimentKind { Snapshot, Sweep, Mobility, Census };
enum class SweepAxis { NumMs, NumRs, Beta, Speed };
enum class MoverKind { Rs, Ms };

// Everything one experiment needs. Parsed from an INI-style file, echoed back
// into the run manifest, and printable in a form that parses to an equal
// config.
struct ScenarioConfig {
    RadioParams radio;
    TrafficParams traffic;
    double areaSideM{3000};
    int numRs{10};
    int numMs{30};

    ExperimentKind experiment{ExperimentKind::Snapshot};
    SweepAxis sweepAxis{SweepAxis::NumMs};
    std::vector<double> sweepValues;  // empty means a built-in default per axis
    int repetitions{200};
    std::uint64_t masterSeed{1};
    baselines::Objective objective{baselines::Objective::MeanMsUtility};

    double speedKmh{18};
    double durationS{300};
    MoverKind movers{MoverKind::Rs};
    std::vector<int> moverIds;  // empty means every node of the mover kind

    std::string outDir;  // empty falls back to $RELNET_OUT, then "."
    int jobs{1};
    int enumerationCap{8};
    int iterationCap{1000};

    void validate() const;
    bool operator==(const ScenarioConfig&) const = default;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// key = value lines, # or ; comments. Unknown keys and malformed values
// raise ConfigError naming the key. Noise accepts watts or "<x> dBm".
ScenarioConfig parseConfig(const std::string& text);

// Canonical text form; parseConfig(emitConfig(c)) == c exactly.
std::string emitConfig(const ScenarioConfig& cfg);

ScenarioConfig loadConfigFile(const std::string& path);

std::string toString(ExperimentKind k);
std::string toString(SweepAxis a);
std::string toString(MoverKind m);
std::string toString(baselines::Objective o);
std::string toString(DeltaMode d);

}  // namespace relnet
