#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relnet {

// Node numbering: BS is 0, relay stations are 1..numRs, mobile stations are
// numRs+1..numRs+numMs. The kind is carried alongside the index so call sites
// cannot silently mix the three roles.
enum class NodeKind { Bs, Rs, Ms };

struct NodeId {
    NodeKind kind{NodeKind::Bs};
    int index{0};

    static NodeId bs() { return {NodeKind::Bs, 0}; }
    static NodeId rs(int i) { return {NodeKind::Rs, i}; }
    static NodeId ms(int i) { return {NodeKind::Ms, i}; }

    bool operator==(const NodeId&) const = default;
};

struct Position {
    double x{0};
    double y{0};

    bool operator==(const Position&) const = default;
};

double distance(const Position& a, const Position& b);

struct RadioParams {
    double txPowerRsW{0.05};
    double txPowerMsW{0.05};
    double noiseW{1e-13};
    double bandwidthHz{1e5};
    double pathLossExponent{3.0};

    void validate() const;  // throws std::invalid_argument on nonsense values
    bool operator==(const RadioParams&) const = default;
};

// Interpretation of the forwarded-traffic term: Subtree propagates the full
// offered load of every descendant (flow conservation on the uplink tree),
// Children counts only the direct children's own arrivals.
enum class DeltaMode { Subtree, Children };

struct TrafficParams {
    int packetBits{256};
    double msArrivalRate{250.0};  // packets/s offered by each MS
    double helloRate{1.0};        // keep-alive rate for relays with nothing to send
    double beta{0.7};             // throughput/delay tradeoff exponent
    double epsilonFraction{0.01}; // parent admission tolerance, fraction of its utility
    int historyThreshold{1};      // max visits before a network is barred from replay
    int criticalThreshold{2};     // visits that flag oscillation handling
    double reformPeriodS{30.0};   // seconds between re-formation rounds under mobility
    DeltaMode deltaMode{DeltaMode::Subtree};

    void validate() const;
    bool operator==(const TrafficParams&) const = default;
};

constexpr int kParentNone = -1;  // relay not attached anywhere
constexpr int kParentBs = 0;
constexpr int kServingNone = -1;  // MS not yet assigned
constexpr int kServingBs = 0;

// Identity of an RS tree: parent[i-1] for RS i. Two states with equal vectors
// are the same network for history bookkeeping.
using CanonicalTree = std::vector<std::int32_t>;

struct NetworkState {
    double areaSide{0};
    Position bsPos;
    std::vector<Position> rsPos;  // rsPos[i-1] is RS i
    std::vector<Position> msPos;  // msPos[k] is MS numRs+1+k
    std::vector<int> parent;      // per RS: kParentBs, an RS index, or kParentNone
    std::vector<int> serving;     // per MS: kServingBs, an RS index, or kServingNone

    int numRs() const { return static_cast<int>(rsPos.size()); }
    int numMs() const { return static_cast<int>(msPos.size()); }

    NodeId msId(int slot) const { return NodeId::ms(numRs() + 1 + slot); }
    int msSlot(NodeId ms) const { return ms.index - numRs() - 1; }

    const Position& positionOf(NodeId node) const;

    CanonicalTree canonical() const;
    std::vector<int> childrenOf(int rs) const;

    // true when `node` sits in the subtree rooted at `root` (walks up the
    // parent chain; `root` counts as its own descendant)
    bool inSubtree(int node, int root) const;
};

struct ValidationReport {
    bool acyclic{true};
    std::vector<bool> connected;  // per RS: parent chain reaches the BS

    bool allConnected() const;
    bool valid() const { return acyclic && allConnected(); }
};

ValidationReport validateTree(const NetworkState& state);

// Uplink path [rs, ..., BS]; nullopt when the relay cannot reach the BS
// (detached or caught in a cycle).
std::optional<std::vector<NodeId>> pathToBS(const NetworkState& state, NodeId rs);

// Fresh deployment: BS at the center of an areaSide x areaSide square, relays
// and mobiles dropped uniformly at random. Every relay starts attached to the
// BS, mobiles start unassigned.
NetworkState deployRandom(double areaSide, int numRs, int numMs, std::uint64_t seed);

}  // namespace relnet
