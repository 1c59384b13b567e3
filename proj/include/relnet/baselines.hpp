#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "relnet/game.hpp"
#include "relnet/model.hpp"

namespace relnet::baselines {

// Everyone talks straight to the BS: relays star-attached and idle, mobiles
// served by the BS. This is the no-relaying reference.
NetworkState starTree(const NetworkState& state);

// Greedy geometric construction: relays are processed by increasing distance
// to the BS and each links to the nearest node already in the tree (BS or an
// earlier relay); mobiles then go to the geometrically nearest node. Serves
// as the utility-blind multihop reference.
NetworkState nearestNeighborTree(const NetworkState& state);

// Number of distinct uplink trees on numRs relays rooted at the BS:
// (numRs+1)^(numRs-1).
std::uint64_t rootedTreeCount(int numRs);

// Visit every rooted tree as a parent vector. Exhaustive, so refuses node
// counts above `cap` (the default keeps runs under a few seconds).
void enumerateTrees(int numRs, const std::function<void(const CanonicalTree&)>& visit,
                    int cap = 8);

enum class Objective { MeanMsUtility, MeanRsUtility };

// Objective of a state as it stands (tree and MS assignment committed).
double treeObjective(const NetworkState& state, Objective objective,
                     const TrafficParams& traffic, const RadioParams& radio);

// Exhaustive search over all rooted trees, assigning mobiles fresh per tree.
// Returns the best state and its objective value.
std::pair<NetworkState, double> optimalTree(const NetworkState& state, Objective objective,
                                            const TrafficParams& traffic,
                                            const RadioParams& radio, int cap = 8);

struct NashCensus {
    std::uint64_t treesExamined{0};
    std::vector<CanonicalTree> nashTrees;
    double optimalValue{0};
    CanonicalTree optimalTreeVec;
    double worstNashValue{0};
    CanonicalTree worstNashTree;
    double priceOfAnarchy{0};  // optimalValue / worstNashValue, >= 1 when Nash trees exist

    int nashCount() const { return static_cast<int>(nashTrees.size()); }
};

// One pass over every rooted tree: per tree the mobiles are reassigned, the
// objective evaluated, and the network checked for equilibrium with an empty
// history (pure one-shot stability, assignments frozen while relays test
// deviations). Also tracks the exhaustive optimum, so the price of anarchy
// comes out of the same sweep.
NashCensus enumerateNashNetworks(const NetworkState& state, const TrafficParams& traffic,
                                 const RadioParams& radio,
                                 Objective objective = Objective::MeanMsUtility, int cap = 8);

}  // namespace relnet::baselines
