#pragma once

#include <vector>

#include "relnet/model.hpp"

namespace relnet::queueing {

struct LinkLoad {
    double arrivalPktS{0};
    double servicePktS{0};
};

// Offered traffic of one relay: lambda is its own sourced rate (served MS
// arrivals, or the keep-alive rate when it serves nobody and has no children),
// delta is what it forwards for its children.
struct RsLoad {
    double lambda{0};
    double delta{0};
    int msCount{0};
    bool helloOnly{false};
};

double capacityBps(double snrValue, const RadioParams& radio);

// Packets per second a link can serve: Shannon capacity over the packet size.
double serviceRate(double snrValue, const RadioParams& radio, const TrafficParams& traffic);

// Per-relay traffic after aggregation over the current tree and MS
// assignment. Unassigned MSs contribute nothing. Throws on a cyclic parent
// structure.
std::vector<RsLoad> aggregateTraffic(const NetworkState& state, const TrafficParams& traffic);

// M/D/1 sojourn time (queue wait plus deterministic service). Infinite when
// the arrival rate reaches the service rate.
double linkDelay(const LinkLoad& load);

// Service rate of the tx->rx link, picking the transmit power by node kind.
double linkServiceRate(const NetworkState& state, NodeId tx, NodeId rx,
                       const RadioParams& radio, const TrafficParams& traffic);

// Total queueing delay along the relay's uplink path, infinite when the relay
// cannot reach the BS or any link on the way is saturated.
double pathDelay(const NetworkState& state, NodeId rs, const TrafficParams& traffic,
                 const RadioParams& radio);

// Same, over a precomputed path and load table (hot path for the game loop).
double pathDelayWithLoads(const NetworkState& state, const std::vector<NodeId>& path,
                          const std::vector<RsLoad>& loads, const TrafficParams& traffic,
                          const RadioParams& radio);

}  // namespace relnet::queueing
