#pragma once

// Shared fixture builders for the test binaries.

#include <cmath>
#include <cstdint>
#include <vector>

#include "relnet/model.hpp"
#include "relnet/rng.hpp"

namespace testutil {

// Random deployment with a random valid tree and every MS attached to a
// random node. Tree shapes are drawn by inserting relays in shuffled order
// and attaching each to a uniformly chosen earlier node or the BS.
inline relnet::NetworkState randomState(int numRs, int numMs, std::uint64_t seed,
                                        double area = 3000.0) {
    relnet::NetworkState st = relnet::deployRandom(area, numRs, numMs, seed);
    relnet::Rng rng(relnet::mixSeed(seed, 0x7e57));
    std::vector<int> order(numRs);
    for (int i = 0; i < numRs; ++i) order[i] = i + 1;
    rng.shuffle(order);
    std::vector<int> placed;
    placed.push_back(0);
    for (int i : order) {
        st.parent[i - 1] = placed[rng.below(placed.size())];
        placed.push_back(i);
    }
    for (int s = 0; s < numMs; ++s)
        st.serving[s] = static_cast<int>(rng.below(numRs + 1));  // 0 is the BS
    return st;
}

inline bool bothInfOrClose(double a, long double b, double relTol) {
    double bd = static_cast<double>(b);
    if (std::isinf(a) || std::isinf(bd)) return std::isinf(a) && std::isinf(bd);
    double scale = std::max(std::fabs(a), std::fabs(bd));
    if (scale < 1e-300) return true;  // both are (numerically) zero
    return std::fabs(a - bd) <= relTol * scale;
}

}  // namespace testutil
