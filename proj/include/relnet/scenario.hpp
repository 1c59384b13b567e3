#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relnet/config.hpp"
#include "relnet/game.hpp"

namespace relnet::scenario {

// Movement plan for one mobility run. Movers advance once per re-formation
// period; a random walk draws a fresh heading each period, otherwise the
// fixed heading is used. Positions reflect off the area border.
struct MobilitySpec {
    MoverKind movers{MoverKind::Rs};
    std::vector<int> moverIds;  // RS indices or MS slots; empty = all of the kind
    double speedMps{5.0};
    bool randomWalk{true};
    double headingX{1.0};
    double headingY{0.0};
    double durationS{300.0};
    double reformPeriodS{30.0};
};

struct SnapshotResult {
    NetworkState preMsState;    // tree formed under hello traffic, mobiles unassigned
    game::GameTrace preTrace;   // the hello-phase formation run
    NetworkState state;         // adapted tree with mobiles assigned
    game::GameTrace trace;      // the re-formation run under mobile load
};

// Deploy and let the relays converge on hello traffic alone, then associate
// mobiles, re-run the formation game under load, and let mobiles re-assess
// once under the adapted tree.
SnapshotResult runSnapshot(const ScenarioConfig& cfg, std::uint64_t seed);

struct MobilityRound {
    double timeS{0};
    int actions{0};  // uplink rewires executed by relays this round
    int iterations{0};
    double meanHops{0};
    double maxHops{0};
    double meanMsUtility{0};
    game::Verdict verdict{game::Verdict::Nash};
};

struct MobilityResult {
    SnapshotResult initial;
    std::vector<MobilityRound> rounds;
    NetworkState finalState;
    double actionsPerMinute{0};
};

// Converge once, then alternate movement and re-formation for the configured
// duration. Every round starts from the previous tree with a fresh history.
MobilityResult runMobility(const ScenarioConfig& cfg, const MobilitySpec& spec,
                           std::uint64_t seed);

struct Summary {
    int n{0};
    double mean{0};
    double se{0};  // standard error of the mean, 0 for n < 2
    double min{0};
    double max{0};
};

Summary summarize(const std::vector<double>& xs);

// One output row: a point on the sweep axis evaluated under one algorithm.
// Summaries aggregate over repetitions; fields that do not apply to the
// algorithm or experiment stay at n == 0.
struct ExperimentResult {
    double axisValue{0};
    std::string algorithm;
    Summary msUtility;
    Summary rsUtility;
    Summary hops;
    Summary maxHops;
    Summary iterations;
    Summary actionsPerMinute;
    Summary nashCount;
    Summary poa;
    int runs{0};
    int runsNash{0};
    int runsHistoryNash{0};
    int runsMixedTrigger{0};
    int runsCapped{0};
};

// Uplink hop count per connected relay.
std::vector<double> hopCounts(const NetworkState& state);

// Repetitions at every axis point, same placements across algorithms. The
// NumMs/NumRs/Beta axes report proposed, nearest_neighbor and direct rows;
// the Speed axis runs mobility and reports proposed only. Repetitions may run
// on cfg.jobs threads; results do not depend on the thread count.
std::vector<ExperimentResult> runSweep(const ScenarioConfig& cfg, SweepAxis axis,
                                       const std::vector<double>& values, int repetitions,
                                       std::uint64_t masterSeed);

// Exhaustive equilibrium census per placement: rows proposed / optimal /
// worst_nash per repetition, axisValue is the repetition index.
std::vector<ExperimentResult> runCensus(const ScenarioConfig& cfg, int repetitions,
                                        std::uint64_t masterSeed);

}  // namespace relnet::scenario
