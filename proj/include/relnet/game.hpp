#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "relnet/model.hpp"
#include "relnet/utility.hpp"

namespace relnet::game {

// One unilateral deviation: relay `actor` replaces its uplink by a link to
// `newParent` (kParentBs or another relay index).
struct Strategy {
    int actor{0};
    int newParent{kParentBs};

    bool operator==(const Strategy&) const = default;
};

struct CanonicalTreeHash {
    std::size_t operator()(const CanonicalTree& t) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : t) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Visit counts per network, recorded at iteration boundaries. The trail keeps
// the boundary sequence for diagnostics.
class HistoryLedger {
public:
    int count(const CanonicalTree& t) const {
        auto it = counts_.find(t);
        return it == counts_.end() ? 0 : it->second;
    }
    void record(const CanonicalTree& t) {
        ++counts_[t];
        trail_.push_back(t);
    }
    std::size_t distinctNetworks() const { return counts_.size(); }
    const std::vector<CanonicalTree>& trail() const { return trail_; }

private:
    std::unordered_map<CanonicalTree, int, CanonicalTreeHash> counts_;
    std::vector<CanonicalTree> trail_;
};

// How a terminal network qualifies. HistoryInducedNash means some relay still
// has a nominally profitable admissible deviation but the target networks are
// all used up in the ledger. MixedTrigger flags the oscillation regime where
// a candidate network crossed the critical revisit count (only meaningful
// when criticalThreshold <= historyThreshold); such runs are reported, their
// randomized continuation is out of scope here. IterationCap marks a run cut
// off by the safety cap before settling.
enum class Verdict { Nash, HistoryInducedNash, NotEquilibrium, MixedTrigger, IterationCap };

struct MoveRecord {
    int iteration{0};
    int actor{0};
    int oldParent{0};
    int newParent{0};
    double utilityBefore{0};
    double utilityAfter{0};
};

struct GameTrace {
    std::vector<MoveRecord> moves;
    int iterations{0};
    Verdict verdict{Verdict::Nash};
    bool hardCapHit{false};
    HistoryLedger history;
};

NetworkState applyStrategy(const NetworkState& state, const Strategy& s);

// Deviations relay `rs` may execute right now: replace its uplink with a link
// to the BS (always admitted) or to another relay that is not in its own
// subtree and whose utility would drop by at most epsilonFraction of its
// current utility once it forwards for `rs`. The current parent stays in the
// list when it passes the same test. Sorted by target index, BS first.
std::vector<Strategy> feasibleStrategies(const NetworkState& state, NodeId rs,
                                         const TrafficParams& traffic,
                                         const RadioParams& radio);

// Myopic best response of `rs` against the current network: the feasible
// deviation with the highest own utility, provided it strictly beats staying
// put and the resulting network has not exhausted its revisit allowance in
// the ledger. nullopt when the relay prefers to stay. Ties go to the lower
// parent index.
std::optional<Strategy> bestResponse(const NetworkState& state, NodeId rs,
                                     const HistoryLedger& history, const TrafficParams& traffic,
                                     const RadioParams& radio);

struct FormationOptions {
    int iterationCap{1000};
    const HistoryLedger* initialHistory{nullptr};  // carried over when resuming play
};

// Round-based best-response dynamics. Each iteration visits every relay once
// in a seed-shuffled order and lets it execute its best response; the network
// reached at the end of each iteration is recorded in the ledger. Play stops
// after the first full iteration without a move (that confirming pass counts
// toward `iterations`), or at the cap.
std::pair<NetworkState, GameTrace> runFormation(const NetworkState& state,
                                                const TrafficParams& traffic,
                                                const RadioParams& radio, std::uint64_t seed,
                                                const FormationOptions& options = {});

// Classify a network: Nash when no relay has a feasible strictly improving
// deviation at all, HistoryInducedNash when the only such deviations lead to
// ledger-exhausted networks, MixedTrigger when the critical revisit count is
// armed and reached, NotEquilibrium otherwise.
Verdict verifyNash(const NetworkState& state, const HistoryLedger& history,
                   const TrafficParams& traffic, const RadioParams& radio);

}  // namespace relnet::game
