#pragma once

#include <vector>

#include "relnet/model.hpp"
#include "relnet/queueing.hpp"

namespace relnet::utility {

// End-to-end figures for one node's uplink. For a mobile, ber is the access
// link bit error rate while psr and delay cover the whole route (access link
// and the serving relay's path combined).
struct PathMetrics {
    double ber{1.0};
    double psr{0.0};
    double delay{0.0};
    double utility{0.0};
};

// Throughput/delay tradeoff: (rate * success)^beta / delay^(1-beta).
// Zero when nothing gets through or the route is saturated.
double powerUtility(double ratePktS, double psrValue, double delayS, double beta);

PathMetrics rsUtility(const NetworkState& state, NodeId rs, const TrafficParams& traffic,
                      const RadioParams& radio);

// Same with a precomputed load table (hot path for the game loop).
PathMetrics rsUtilityWithLoads(const NetworkState& state, NodeId rs,
                               const std::vector<queueing::RsLoad>& loads,
                               const TrafficParams& traffic, const RadioParams& radio);

// Packet success rate an MS would see through `serving` (BS or a relay):
// access link success times the relay path success.
double msPsr(const NetworkState& state, NodeId ms, NodeId serving,
             const TrafficParams& traffic, const RadioParams& radio);

// What-if utility of attaching `ms` to `serving`. Evaluated on a copy with
// the MS actually assigned there, so its own traffic loads the candidate's
// path (a candidate is not allowed to look better by ignoring the load the
// MS itself would add).
PathMetrics msUtility(const NetworkState& state, NodeId ms, NodeId serving,
                      const TrafficParams& traffic, const RadioParams& radio);

// Best provider for the MS: argmax of msUtility over the BS and every relay
// that currently reaches the BS. Ties go to the lower node index.
NodeId assignMs(const NetworkState& state, NodeId ms, const TrafficParams& traffic,
                const RadioParams& radio);

// Assign every MS in index order, committing as it goes, so later MSs see the
// load the earlier ones placed.
void assignAllMs(NetworkState& state, const TrafficParams& traffic, const RadioParams& radio);

// Committed-assignment metrics, one entry per MS slot / relay index.
std::vector<double> msUtilityValues(const NetworkState& state, const TrafficParams& traffic,
                                    const RadioParams& radio);
std::vector<double> rsUtilityValues(const NetworkState& state, const TrafficParams& traffic,
                                    const RadioParams& radio);

}  // namespace relnet::utility
