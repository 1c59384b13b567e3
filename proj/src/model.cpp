#include "relnet/model.hpp"

#include <cmath>
#include <stdexcept>

#include "relnet/rng.hpp"

namespace relnet {

double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

void RadioParams::validate() const {
    if (!(txPowerRsW > 0) || !(txPowerMsW > 0))
        throw std::invalid_argument("transmit power must be positive");
    if (!(noiseW > 0)) throw std::invalid_argument("noise power must be positive");
    if (!(bandwidthHz > 0)) throw std::invalid_argument("bandwidth must be positive");
    if (!(pathLossExponent >= 1))
        throw std::invalid_argument("path loss exponent must be >= 1");
}

void TrafficParams::validate() const {
    if (packetBits <= 0) throw std::invalid_argument("packet size must be positive");
    if (!(msArrivalRate > 0)) throw std::invalid_argument("arrival rate must be positive");
    if (!(helloRate > 0)) throw std::invalid_argument("hello rate must be positive");
    if (!(beta > 0) || !(beta < 1)) throw std::invalid_argument("beta must lie in (0,1)");
    if (!(epsilonFraction >= 0))
        throw std::invalid_argument("epsilon fraction must be nonnegative");
    if (historyThreshold < 1) throw std::invalid_argument("history threshold must be >= 1");
    if (criticalThreshold < 1)
        throw std::invalid_argument("critical threshold must be >= 1");
    if (!(reformPeriodS > 0)) throw std::invalid_argument("reform period must be positive");
}

const Position& NetworkState::positionOf(NodeId node) const {
    switch (node.kind) {
        case NodeKind::Bs:
            return bsPos;
        case NodeKind::Rs:
            if (node.index < 1 || node.index > numRs())
                throw std::out_of_range("relay index out of range");
            return rsPos[node.index - 1];
        case NodeKind::Ms: {
            int slot = msSlot(node);
            if (slot < 0 || slot >= numMs())
                throw std::out_of_range("mobile index out of range");
            return msPos[slot];
        }
    }
    throw std::logic_error("bad node kind");
}

CanonicalTree NetworkState::canonical() const {
    CanonicalTree t(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) t[i] = parent[i];
    return t;
}

std::vector<int> NetworkState::childrenOf(int rs) const {
    std::vector<int> kids;
    for (int i = 1; i <= numRs(); ++i)
        if (parent[i - 1] == rs) kids.push_back(i);
    return kids;
}

bool NetworkState::inSubtree(int node, int root) const {
    int cur = node;
    for (int steps = 0; steps <= numRs(); ++steps) {
        if (cur == root) return true;
        if (cur <= 0) return false;  // hit the BS or a detached relay
        cur = parent[cur - 1];
    }
    return false;  // cycle that does not pass through root
}

bool ValidationReport::allConnected() const {
    for (bool c : connected)
        if (!c) return false;
    return true;
}

ValidationReport validateTree(const NetworkState& state) {
    int m = state.numRs();
    ValidationReport rep;
    rep.connected.assign(m, false);
    for (int i = 1; i <= m; ++i) {
        int cur = i;
        int steps = 0;
        while (cur > 0 && steps <= m) {
            cur = state.parent[cur - 1];
            ++steps;
        }
        if (cur == kParentBs)
            rep.connected[i - 1] = true;
        else if (cur > 0)  // ran out of steps inside the relay set
            rep.acyclic = false;
    }
    return rep;
}

std::optional<std::vector<NodeId>> pathToBS(const NetworkState& state, NodeId rs) {
    if (rs.kind != NodeKind::Rs) throw std::invalid_argument("path query needs a relay");
    int m = state.numRs();
    if (rs.index < 1 || rs.index > m) throw std::out_of_range("relay index out of range");
    std::vector<NodeId> path;
    int cur = rs.index;
    int steps = 0;
    while (cur > 0) {
        if (++steps > m) return std::nullopt;  // cycle
        path.push_back(NodeId::rs(cur));
        cur = state.parent[cur - 1];
    }
    if (cur == kParentNone) return std::nullopt;
    path.push_back(NodeId::bs());
    return path;
}

NetworkState deployRandom(double areaSide, int numRs, int numMs, std::uint64_t seed) {
    if (!(areaSide > 0)) throw std::invalid_argument("area side must be positive");
    if (numRs < 0 || numMs < 0) throw std::invalid_argument("negative node count");
    NetworkState st;
    st.areaSide = areaSide;
    st.bsPos = {areaSide / 2.0, areaSide / 2.0};
    Rng rng(seed);
    st.rsPos.resize(numRs);
    for (auto& p : st.rsPos) {
        p.x = rng.uniform(0.0, areaSide);
        p.y = rng.uniform(0.0, areaSide);
    }
    st.msPos.resize(numMs);
    for (auto& p : st.msPos) {
        p.x = rng.uniform(0.0, areaSide);
        p.y = rng.uniform(0.0, areaSide);
    }
    st.parent.assign(numRs, kParentBs);
    st.serving.assign(numMs, kServingNone);
    return st;
}

}  // namespace relnet
