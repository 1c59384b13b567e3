#pragma once

#include <vector>

#include "relnet/model.hpp"

namespace relnet::channel {

// Distances are floored here so that colocated nodes keep a finite gain.
inline constexpr double kMinDistanceM = 1.0;

// Received SNR over a distance-power-law channel: gain 1/d^mu, flat noise.
double snr(double txPowerW, double distanceM, const RadioParams& radio);

// Bit error rate of a single Rayleigh-faded BPSK link at average SNR gamma.
double berDirect(double gamma);

// recvSnrs[r][k]: SNR at the (r+1)-th node after the source, of the signal
// sent by the (k+1)-th node on the path. Row r has r+1 entries because every
// node on a decoded-relaying path hears all earlier transmitters and combines
// them. Row 0 is the first relay hop, the last row is the destination.
using PathSnrMatrix = std::vector<std::vector<double>>;

// End-to-end BER upper bound for decoded relaying with maximal ratio
// combining. Equal SNR pairs inside a row make the closed form singular
// (removable); they are separated by deterministic multiplicative nudges
// before evaluation. Result is clamped to [0,1].
double berMultihop(const PathSnrMatrix& recvSnrs);

// Packet success rate for a packetBits-bit packet under independent bit errors.
double psr(double ber, int packetBits);

// SNR matrix for an uplink relay path as returned by pathToBS (relays then
// the BS). All transmitters on such a path are relays.
PathSnrMatrix pathSnrMatrix(const NetworkState& state, const std::vector<NodeId>& path,
                            const RadioParams& radio);

}  // namespace relnet::channel
