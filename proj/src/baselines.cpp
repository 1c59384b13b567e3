#include "relnet/baselines.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "relnet/utility.hpp"

namespace relnet::baselines {

NetworkState starTree(const NetworkState& state) {
    NetworkState st = state;
    std::fill(st.parent.begin(), st.parent.end(), kParentBs);
    std::fill(st.serving.begin(), st.serving.end(), kServingBs);
    return st;
}

NetworkState nearestNeighborTree(const NetworkState& state) {
    NetworkState st = state;
    int m = st.numRs();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return distance(st.rsPos[a - 1], st.bsPos) < distance(st.rsPos[b - 1], st.bsPos);
    });

    std::vector<int> attached;  // node ids already in the tree, BS first
    attached.push_back(kParentBs);
    for (int i : order) {
        int best = kParentBs;
        double bestD = distance(st.rsPos[i - 1], st.bsPos);
        for (int j : attached) {
            if (j == kParentBs) continue;
            double d = distance(st.rsPos[i - 1], st.rsPos[j - 1]);
            if (d < bestD) {
                bestD = d;
                best = j;
            }
        }
        st.parent[i - 1] = best;
        attached.push_back(i);
    }

    // Mobiles go by geometry alone here, that is the point of this baseline.
    for (int slot = 0; slot < st.numMs(); ++slot) {
        int best = kServingBs;
        double bestD = distance(st.msPos[slot], st.bsPos);
        for (int j = 1; j <= m; ++j) {
            double d = distance(st.msPos[slot], st.rsPos[j - 1]);
            if (d < bestD) {
                bestD = d;
                best = j;
            }
        }
        st.serving[slot] = best;
    }
    return st;
}

std::uint64_t rootedTreeCount(int numRs) {
    if (numRs < 0) throw std::invalid_argument("negative node count");
    if (numRs == 0) return 1;
    std::uint64_t n = 1;
    for (int k = 0; k < numRs - 1; ++k) n *= static_cast<std::uint64_t>(numRs + 1);
    return n;
}

void enumerateTrees(int numRs, const std::function<void(const CanonicalTree&)>& visit,
                    int cap) {
    if (numRs > cap)
        throw std::invalid_argument("refusing to enumerate " +
                                    std::to_string(rootedTreeCount(numRs)) + " trees for " +
                                    std::to_string(numRs) + " relays (cap " +
                                    std::to_string(cap) + ")");
    if (numRs == 0) {
        visit(CanonicalTree{});
        return;
    }
    int m = numRs;
    std::vector<int> digit(m, 0);  // digit d for relay i maps to parent d<i ? d : d+1
    CanonicalTree tree(m);
    std::vector<int> status(m + 1);
    std::vector<int> walk;
    for (;;) {
        for (int i = 1; i <= m; ++i) {
            int d = digit[i - 1];
            tree[i - 1] = (d < i) ? d : d + 1;
        }
        // Acyclicity: every relay must fall through to the BS.
        std::fill(status.begin(), status.end(), 0);  // 0 unseen, 1 on walk, 2 reaches BS
        bool ok = true;
        for (int i = 1; i <= m && ok; ++i) {
            walk.clear();
            int cur = i;
            while (cur != kParentBs && status[cur] == 0) {
                status[cur] = 1;
                walk.push_back(cur);
                cur = tree[cur - 1];
            }
            bool reaches = (cur == kParentBs) || status[cur] == 2;
            for (int w : walk) status[w] = reaches ? 2 : 1;
            if (!reaches) ok = false;
        }
        if (ok) visit(tree);

        int pos = 0;
        while (pos < m && digit[pos] == m - 1) digit[pos++] = 0;
        if (pos == m) break;
        ++digit[pos];
    }
}

double treeObjective(const NetworkState& state, Objective objective,
                     const TrafficParams& traffic, const RadioParams& radio) {
    std::vector<double> vals = (objective == Objective::MeanMsUtility)
                                   ? utility::msUtilityValues(state, traffic, radio)
                                   : utility::rsUtilityValues(state, traffic, radio);
    if (vals.empty()) return 0.0;
    double sum = 0.0;
    for (double v : vals) sum += v;
    return sum / static_cast<double>(vals.size());
}

std::pair<NetworkState, double> optimalTree(const NetworkState& state, Objective objective,
                                            const TrafficParams& traffic,
                                            const RadioParams& radio, int cap) {
    NetworkState best = state;
    double bestVal = -std::numeric_limits<double>::infinity();
    enumerateTrees(
        state.numRs(),
        [&](const CanonicalTree& tree) {
            NetworkState st = state;
            for (int i = 0; i < st.numRs(); ++i) st.parent[i] = tree[i];
            std::fill(st.serving.begin(), st.serving.end(), kServingNone);
            utility::assignAllMs(st, traffic, radio);
            double val = treeObjective(st, objective, traffic, radio);
            if (val > bestVal) {
                bestVal = val;
                best = st;
            }
        },
        cap);
    return {best, bestVal};
}

NashCensus enumerateNashNetworks(const NetworkState& state, const TrafficParams& traffic,
                                 const RadioParams& radio, Objective objective, int cap) {
    NashCensus census;
    game::HistoryLedger emptyHistory;
    double bestVal = -std::numeric_limits<double>::infinity();
    double worstNash = std::numeric_limits<double>::infinity();
    enumerateTrees(
        state.numRs(),
        [&](const CanonicalTree& tree) {
            ++census.treesExamined;
            NetworkState st = state;
            for (int i = 0; i < st.numRs(); ++i) st.parent[i] = tree[i];
            std::fill(st.serving.begin(), st.serving.end(), kServingNone);
            utility::assignAllMs(st, traffic, radio);
            double val = treeObjective(st, objective, traffic, radio);
            if (val > bestVal) {
                bestVal = val;
                census.optimalValue = val;
                census.optimalTreeVec = tree;
            }
            if (game::verifyNash(st, emptyHistory, traffic, radio) == game::Verdict::Nash) {
                census.nashTrees.push_back(tree);
                if (val < worstNash) {
                    worstNash = val;
                    census.worstNashValue = val;
                    census.worstNashTree = tree;
                }
            }
        },
        cap);
    if (!census.nashTrees.empty() && census.worstNashValue > 0)
        census.priceOfAnarchy = census.optimalValue / census.worstNashValue;
    return census;
}

}  // namespace relnet::baselines
