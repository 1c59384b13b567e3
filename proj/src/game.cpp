#include "relnet/game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "relnet/rng.hpp"

namespace relnet::game {

NetworkState applyStrategy(const NetworkState& state, const Strategy& s) {
    if (s.actor < 1 || s.actor > state.numRs())
        throw std::out_of_range("strategy actor out of range");
    if (s.newParent == s.actor) throw std::invalid_argument("relay cannot parent itself");
    if (s.newParent != kParentBs && (s.newParent < 1 || s.newParent > state.numRs()))
        throw std::out_of_range("strategy target out of range");
    NetworkState next = state;
    next.parent[s.actor - 1] = s.newParent;
    return next;
}

std::vector<Strategy> feasibleStrategies(const NetworkState& state, NodeId rs,
                                         const TrafficParams& traffic,
                                         const RadioParams& radio) {
    if (rs.kind != NodeKind::Rs) throw std::invalid_argument("strategies belong to relays");
    int i = rs.index;
    if (i < 1 || i > state.numRs()) throw std::out_of_range("relay index out of range");

    auto loadsNow = queueing::aggregateTraffic(state, traffic);
    std::vector<Strategy> out;
    out.push_back({i, kParentBs});  // the BS admits anyone

    for (int j = 1; j <= state.numRs(); ++j) {
        if (j == i) continue;
        if (state.inSubtree(j, i)) continue;  // linking below itself would loop
        if (!pathToBS(state, NodeId::rs(j))) continue;
        double before =
            utility::rsUtilityWithLoads(state, NodeId::rs(j), loadsNow, traffic, radio).utility;
        NetworkState next = applyStrategy(state, {i, j});
        double after = utility::rsUtility(next, NodeId::rs(j), traffic, radio).utility;
        if (before - after > traffic.epsilonFraction * before) continue;  // j refuses
        out.push_back({i, j});
    }
    return out;
}

namespace {

struct TurnScan {
    std::optional<Strategy> move;
    bool critical{false};  // an improving deviation targets a network at the critical count
};

TurnScan scanTurn(const NetworkState& state, int actor, const HistoryLedger& history,
                  const TrafficParams& traffic, const RadioParams& radio) {
    TurnScan scan;
    bool triggerArmed = traffic.criticalThreshold <= traffic.historyThreshold;
    double uNow = utility::rsUtility(state, NodeId::rs(actor), traffic, radio).utility;
    double bestU = uNow;
    for (const Strategy& s : feasibleStrategies(state, NodeId::rs(actor), traffic, radio)) {
        if (s.newParent == state.parent[actor - 1]) continue;  // staying is never a move
        NetworkState next = applyStrategy(state, s);
        double u = utility::rsUtility(next, NodeId::rs(actor), traffic, radio).utility;
        if (!(u > uNow)) continue;
        int visits = history.count(next.canonical());
        if (triggerArmed && visits >= traffic.criticalThreshold) scan.critical = true;
        if (visits >= traffic.historyThreshold) continue;  // revisit allowance used up
        if (u > bestU) {  // strict keeps the lowest-index target on ties
            bestU = u;
            scan.move = s;
        }
    }
    return scan;
}

}  // namespace

std::optional<Strategy> bestResponse(const NetworkState& state, NodeId rs,
                                     const HistoryLedger& history, const TrafficParams& traffic,
                                     const RadioParams& radio) {
    if (rs.kind != NodeKind::Rs) throw std::invalid_argument("strategies belong to relays");
    return scanTurn(state, rs.index, history, traffic, radio).move;
}

std::pair<NetworkState, GameTrace> runFormation(const NetworkState& state,
                                                const TrafficParams& traffic,
                                                const RadioParams& radio, std::uint64_t seed,
                                                const FormationOptions& options) {
    traffic.validate();
    radio.validate();
    if (options.iterationCap < 1) throw std::invalid_argument("iteration cap must be >= 1");

    NetworkState cur = state;
    GameTrace trace;
    if (options.initialHistory) trace.history = *options.initialHistory;
    trace.history.record(cur.canonical());

    Rng rng(seed);
    std::vector<int> order(cur.numRs());
    std::iota(order.begin(), order.end(), 1);

    bool triggered = false;
    for (int iter = 1; iter <= options.iterationCap; ++iter) {
        rng.shuffle(order);
        bool moved = false;
        trace.iterations = iter;
        for (int actor : order) {
            TurnScan scan = scanTurn(cur, actor, trace.history, traffic, radio);
            if (scan.critical) {
                // A wanted network hit the critical revisit count. Faithful
                // play would go randomized here; we stop and report instead.
                triggered = true;
                break;
            }
            if (!scan.move) continue;
            MoveRecord rec;
            rec.iteration = iter;
            rec.actor = actor;
            rec.oldParent = cur.parent[actor - 1];
            rec.newParent = scan.move->newParent;
            rec.utilityBefore =
                utility::rsUtility(cur, NodeId::rs(actor), traffic, radio).utility;
            cur = applyStrategy(cur, *scan.move);
            rec.utilityAfter =
                utility::rsUtility(cur, NodeId::rs(actor), traffic, radio).utility;
            trace.moves.push_back(rec);
            moved = true;
        }
        trace.history.record(cur.canonical());
        if (triggered) {
            trace.verdict = Verdict::MixedTrigger;
            return {cur, trace};
        }
        if (!moved) {
            trace.verdict = verifyNash(cur, trace.history, traffic, radio);
            return {cur, trace};
        }
    }
    trace.hardCapHit = true;
    trace.verdict = Verdict::IterationCap;
    return {cur, trace};
}

Verdict verifyNash(const NetworkState& state, const HistoryLedger& history,
                   const TrafficParams& traffic, const RadioParams& radio) {
    bool triggerArmed = traffic.criticalThreshold <= traffic.historyThreshold;
    bool anyImproving = false;
    bool anyUnbarred = false;
    bool anyCritical = false;
    for (int i = 1; i <= state.numRs(); ++i) {
        double uNow = utility::rsUtility(state, NodeId::rs(i), traffic, radio).utility;
        for (const Strategy& s : feasibleStrategies(state, NodeId::rs(i), traffic, radio)) {
            if (s.newParent == state.parent[i - 1]) continue;
            NetworkState next = applyStrategy(state, s);
            double u = utility::rsUtility(next, NodeId::rs(i), traffic, radio).utility;
            if (!(u > uNow)) continue;
            anyImproving = true;
            int visits = history.count(next.canonical());
            if (visits < traffic.historyThreshold) anyUnbarred = true;
            if (triggerArmed && visits >= traffic.criticalThreshold) anyCritical = true;
        }
    }
    if (!anyImproving) return Verdict::Nash;
    if (anyUnbarred) return Verdict::NotEquilibrium;
    if (anyCritical) return Verdict::MixedTrigger;
    return Verdict::HistoryInducedNash;
}

}  // namespace relnet::game
