#include "relnet/utility.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "relnet/channel.hpp"

namespace relnet::utility {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double powerUtility(double ratePktS, double psrValue, double delayS, double beta) {
    if (!(beta > 0) || !(beta < 1)) throw std::invalid_argument("beta must lie in (0,1)");
    double goodput = ratePktS * psrValue;
    if (!(goodput > 0)) return 0.0;
    if (!std::isfinite(delayS) || !(delayS > 0)) return 0.0;
    return std::pow(goodput, beta) / std::pow(delayS, 1.0 - beta);
}

PathMetrics rsUtilityWithLoads(const NetworkState& state, NodeId rs,
                               const std::vector<queueing::RsLoad>& loads,
                               const TrafficParams& traffic, const RadioParams& radio) {
    if (rs.kind != NodeKind::Rs) throw std::invalid_argument("relay utility needs a relay");
    PathMetrics pm;
    pm.delay = kInf;
    auto path = pathToBS(state, rs);
    if (!path) return pm;  // detached relay gets nothing
    pm.ber = channel::berMultihop(channel::pathSnrMatrix(state, *path, radio));
    pm.psr = channel::psr(pm.ber, traffic.packetBits);
    pm.delay = queueing::pathDelayWithLoads(state, *path, loads, traffic, radio);
    const queueing::RsLoad& own = loads[rs.index - 1];
    // A relay with no subscribers still values its keep-alive stream, even
    // when it forwards for children, so the game never leaves it indifferent.
    double rate = own.msCount > 0 ? own.lambda : traffic.helloRate;
    pm.utility = powerUtility(rate, pm.psr, pm.delay, traffic.beta);
    return pm;
}

PathMetrics rsUtility(const NetworkState& state, NodeId rs, const TrafficParams& traffic,
                      const RadioParams& radio) {
    return rsUtilityWithLoads(state, rs, queueing::aggregateTraffic(state, traffic), traffic,
                              radio);
}

namespace {

// Access link figures shared by msPsr and msUtility. serving must be the BS
// or a relay.
struct AccessLink {
    double ber;
    double psrValue;
    double delay;
};

AccessLink accessLink(const NetworkState& state, NodeId ms, NodeId serving,
                      const TrafficParams& traffic, const RadioParams& radio) {
    if (ms.kind != NodeKind::Ms) throw std::invalid_argument("expected a mobile station");
    if (serving.kind == NodeKind::Ms)
        throw std::invalid_argument("a mobile cannot serve another mobile");
    double d = distance(state.positionOf(ms), state.positionOf(serving));
    double gamma = channel::snr(radio.txPowerMsW, d, radio);
    AccessLink a;
    a.ber = channel::berDirect(gamma);
    a.psrValue = channel::psr(a.ber, traffic.packetBits);
    queueing::LinkLoad load;
    load.arrivalPktS = traffic.msArrivalRate;
    load.servicePktS = queueing::serviceRate(gamma, radio, traffic);
    a.delay = queueing::linkDelay(load);
    return a;
}

}  // namespace

double msPsr(const NetworkState& state, NodeId ms, NodeId serving,
             const TrafficParams& traffic, const RadioParams& radio) {
    AccessLink a = accessLink(state, ms, serving, traffic, radio);
    if (serving.kind == NodeKind::Bs) return a.psrValue;
    auto path = pathToBS(state, serving);
    if (!path) return 0.0;
    double pathBer = channel::berMultihop(channel::pathSnrMatrix(state, *path, radio));
    return a.psrValue * channel::psr(pathBer, traffic.packetBits);
}

PathMetrics msUtility(const NetworkState& state, NodeId ms, NodeId serving,
                      const TrafficParams& traffic, const RadioParams& radio) {
    NetworkState whatIf = state;
    int slot = whatIf.msSlot(ms);
    if (slot < 0 || slot >= whatIf.numMs()) throw std::out_of_range("mobile index out of range");
    whatIf.serving[slot] = (serving.kind == NodeKind::Bs) ? kServingBs : serving.index;

    AccessLink a = accessLink(whatIf, ms, serving, traffic, radio);
    PathMetrics pm;
    pm.ber = a.ber;
    pm.psr = a.psrValue;
    pm.delay = a.delay;
    if (serving.kind == NodeKind::Rs) {
        auto path = pathToBS(whatIf, serving);
        if (!path) {
            pm.psr = 0.0;
            pm.delay = kInf;
            return pm;
        }
        double pathBer = channel::berMultihop(channel::pathSnrMatrix(whatIf, *path, radio));
        pm.psr *= channel::psr(pathBer, traffic.packetBits);
        pm.delay += queueing::pathDelayWithLoads(
            whatIf, *path, queueing::aggregateTraffic(whatIf, traffic), traffic, radio);
    }
    pm.utility = powerUtility(traffic.msArrivalRate, pm.psr, pm.delay, traffic.beta);
    return pm;
}

NodeId assignMs(const NetworkState& state, NodeId ms, const TrafficParams& traffic,
                const RadioParams& radio) {
    NodeId best = NodeId::bs();
    double bestU = msUtility(state, ms, best, traffic, radio).utility;
    for (int i = 1; i <= state.numRs(); ++i) {
        if (!pathToBS(state, NodeId::rs(i))) continue;
        double u = msUtility(state, ms, NodeId::rs(i), traffic, radio).utility;
        if (u > bestU) {
            bestU = u;
            best = NodeId::rs(i);
        }
    }
    return best;
}

void assignAllMs(NetworkState& state, const TrafficParams& traffic, const RadioParams& radio) {
    for (int slot = 0; slot < state.numMs(); ++slot) {
        NodeId pick = assignMs(state, state.msId(slot), traffic, radio);
        state.serving[slot] = (pick.kind == NodeKind::Bs) ? kServingBs : pick.index;
    }
}

std::vector<double> msUtilityValues(const NetworkState& state, const TrafficParams& traffic,
                                    const RadioParams& radio) {
    std::vector<double> vals(state.numMs(), 0.0);
    for (int slot = 0; slot < state.numMs(); ++slot) {
        int srv = state.serving[slot];
        if (srv == kServingNone) continue;  // unassigned carries no utility
        NodeId serving = (srv == kServingBs) ? NodeId::bs() : NodeId::rs(srv);
        vals[slot] = msUtility(state, state.msId(slot), serving, traffic, radio).utility;
    }
    return vals;
}

std::vector<double> rsUtilityValues(const NetworkState& state, const TrafficParams& traffic,
                                    const RadioParams& radio) {
    auto loads = queueing::aggregateTraffic(state, traffic);
    std::vector<double> vals(state.numRs(), 0.0);
    for (int i = 1; i <= state.numRs(); ++i)
        vals[i - 1] = rsUtilityWithLoads(state, NodeId::rs(i), loads, traffic, radio).utility;
    return vals;
}

}  // namespace relnet::utility
