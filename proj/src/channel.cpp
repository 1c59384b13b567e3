#include "relnet/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relnet::channel {

double snr(double txPowerW, double distanceM, const RadioParams& radio) {
    double d = std::max(distanceM, kMinDistanceM);
    double gain = std::pow(d, -radio.pathLossExponent);
    return txPowerW * gain / radio.noiseW;
}

double berDirect(double gamma) {
    if (!(gamma >= 0)) throw std::invalid_argument("SNR must be nonnegative");
    return 0.5 * (1.0 - std::sqrt(gamma / (1.0 + gamma)));
}

namespace {

bool nearlyEqual(double a, double b) {
    return std::fabs(a - b) <= 1e-9 * std::max(std::fabs(a), std::fabs(b));
}

// Separate coinciding SNRs within one combining set. Values are visited in
// transmitter order; a clashing value is replaced by original*(1 + m*1e-6)
// with m = 1, -1, 2, -2, ... until it clears everything before it. Keeps the
// evaluation deterministic and leaves distinct inputs untouched.
void separateTies(std::vector<double>& g) {
    for (std::size_t i = 1; i < g.size(); ++i) {
        double orig = g[i];
        int step = 0;
        while (true) {
            bool clash = false;
            for (std::size_t j = 0; j < i; ++j)
                if (nearlyEqual(g[i], g[j])) {
                    clash = true;
                    break;
                }
            if (!clash) break;
            ++step;
            int m = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
            g[i] = orig * (1.0 + m * 1e-6);
        }
    }
}

}  // namespace

double berMultihop(const PathSnrMatrix& recvSnrs) {
    double total = 0.0;
    for (const auto& row : recvSnrs) {
        if (row.empty()) throw std::invalid_argument("empty combining set");
        std::vector<double> g = row;
        for (double v : g)
            if (!(v >= 0)) throw std::invalid_argument("SNR must be nonnegative");
        separateTies(g);
        double pe = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            double prod = 1.0;
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (j == k) continue;
                prod *= g[k] / (g[k] - g[j]);
            }
            pe += prod * berDirect(g[k]);
        }
        total += pe;
    }
    return std::clamp(total, 0.0, 1.0);
}

double psr(double ber, int packetBits) {
    if (packetBits <= 0) throw std::invalid_argument("packet size must be positive");
    double p = std::clamp(ber, 0.0, 1.0);
    return std::pow(1.0 - p, packetBits);
}

PathSnrMatrix pathSnrMatrix(const NetworkState& state, const std::vector<NodeId>& path,
                            const RadioParams& radio) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least one hop");
    PathSnrMatrix m;
    m.reserve(path.size() - 1);
    for (std::size_t r = 1; r < path.size(); ++r) {
        std::vector<double> row;
        row.reserve(r);
        const Position& rx = state.positionOf(path[r]);
        for (std::size_t k = 0; k < r; ++k) {
            double d = distance(state.positionOf(path[k]), rx);
            row.push_back(snr(radio.txPowerRsW, d, radio));
        }
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace relnet::channel
