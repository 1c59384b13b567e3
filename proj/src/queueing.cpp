#include "relnet/queueing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "relnet/channel.hpp"

namespace relnet::queueing {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double capacityBps(double snrValue, const RadioParams& radio) {
    if (!(snrValue >= 0)) throw std::invalid_argument("SNR must be nonnegative");
    return radio.bandwidthHz * std::log2(1.0 + snrValue);
}

double serviceRate(double snrValue, const RadioParams& radio, const TrafficParams& traffic) {
    return capacityBps(snrValue, radio) / traffic.packetBits;
}

std::vector<RsLoad> aggregateTraffic(const NetworkState& state, const TrafficParams& traffic) {
    int m = state.numRs();
    std::vector<RsLoad> loads(m);

    for (int slot = 0; slot < state.numMs(); ++slot) {
        int srv = state.serving[slot];
        if (srv > 0) {
            if (srv > m) throw std::out_of_range("serving relay out of range");
            ++loads[srv - 1].msCount;
        }
    }

    std::vector<std::vector<int>> children(m);
    for (int i = 1; i <= m; ++i) {
        int p = state.parent[i - 1];
        if (p > 0) {
            if (p > m) throw std::out_of_range("parent relay out of range");
            children[p - 1].push_back(i);
        }
    }

    for (int i = 0; i < m; ++i) {
        if (loads[i].msCount > 0) {
            loads[i].lambda = loads[i].msCount * traffic.msArrivalRate;
        } else if (children[i].empty()) {
            loads[i].lambda = traffic.helloRate;
            loads[i].helloOnly = true;
        }
    }

    // Forwarded traffic, children before parents. A relay is ready once all
    // its children are done; a cycle never drains the ready queue.
    std::vector<int> pendingKids(m);
    std::vector<int> ready;
    for (int i = 0; i < m; ++i) {
        pendingKids[i] = static_cast<int>(children[i].size());
        if (pendingKids[i] == 0) ready.push_back(i);
    }
    int done = 0;
    while (!ready.empty()) {
        int i = ready.back();
        ready.pop_back();
        ++done;
        for (int c : children[i]) {
            double up = (traffic.deltaMode == DeltaMode::Subtree)
                            ? loads[c - 1].lambda + loads[c - 1].delta
                            : loads[c - 1].lambda;
            loads[i].delta += up;
        }
        int p = state.parent[i];
        if (p > 0 && --pendingKids[p - 1] == 0) ready.push_back(p - 1);
    }
    if (done != m) throw std::invalid_argument("parent structure contains a cycle");
    return loads;
}

double linkDelay(const LinkLoad& load) {
    if (!(load.servicePktS > 0)) return kInf;
    if (load.arrivalPktS < 0) throw std::invalid_argument("negative arrival rate");
    if (load.arrivalPktS >= load.servicePktS) return kInf;
    double mu = load.servicePktS;
    double psi = load.arrivalPktS;
    return psi / (2.0 * mu * (mu - psi)) + 1.0 / mu;
}

double linkServiceRate(const NetworkState& state, NodeId tx, NodeId rx,
                       const RadioParams& radio, const TrafficParams& traffic) {
    double power = (tx.kind == NodeKind::Ms) ? radio.txPowerMsW : radio.txPowerRsW;
    double d = distance(state.positionOf(tx), state.positionOf(rx));
    return serviceRate(channel::snr(power, d, radio), radio, traffic);
}

double pathDelayWithLoads(const NetworkState& state, const std::vector<NodeId>& path,
                          const std::vector<RsLoad>& loads, const TrafficParams& traffic,
                          const RadioParams& radio) {
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const RsLoad& l = loads[path[k].index - 1];
        LinkLoad link;
        link.arrivalPktS = l.lambda + l.delta;
        link.servicePktS = linkServiceRate(state, path[k], path[k + 1], radio, traffic);
        double d = linkDelay(link);
        if (std::isinf(d)) return kInf;
        total += d;
    }
    return total;
}

double pathDelay(const NetworkState& state, NodeId rs, const TrafficParams& traffic,
                 const RadioParams& radio) {
    auto path = pathToBS(state, rs);
    if (!path) return kInf;
    return pathDelayWithLoads(state, *path, aggregateTraffic(state, traffic), traffic, radio);
}

}  // namespace relnet::queueing
