// Prints the oracle values that the unit tests pin as literals. Run by hand
// when a fixture changes; the printed numbers are pasted into the tests.

#include <cstdio>

#include "oracle.hpp"

int main() {
    relnet::RadioParams radio;
    relnet::TrafficParams traffic;

    std::printf("snr(0.05, 1000m)        = %.15Lg\n", oracle::snr(0.05L, 1000.0L, radio));
    std::printf("berDirect(500)          = %.15Lg\n", oracle::berDirect(500.0L));
    std::printf("berDirect(52.4)         = %.15Lg\n", oracle::berDirect(52.4L));
    std::printf("psr(1e-3, 256)          = %.15Lg\n", oracle::psr(1e-3L, 256));
    std::printf("psr(berDirect(500),256) = %.15Lg\n",
                oracle::psr(oracle::berDirect(500.0L), 256));
    std::printf("serviceRate(500)        = %.15Lg\n",
                oracle::serviceRate(500.0L, radio, traffic));
    std::printf("mdOne(250, 3503)        = %.15Lg\n", oracle::mdOneDelay(250.0L, 3503.0L));
    std::printf("mdOne(0, 2000)          = %.15Lg\n", oracle::mdOneDelay(0.0L, 2000.0L));

    // two-hop relay fixture: receiver rows {{400}, {100, 900}}
    std::printf("ber2hop                 = %.15Lg\n",
                oracle::berMultihop({{400.0}, {100.0, 900.0}}));
    // three-hop fixture
    std::printf("ber3hop                 = %.15Lg\n",
                oracle::berMultihop({{400.0}, {150.0, 700.0}, {60.0, 250.0, 1200.0}}));
    // tie row: both upstream SNRs equal at the receiver
    std::printf("berTie                  = %.15Lg\n",
                oracle::berMultihop({{300.0}, {500.0, 500.0}}));

    // power utility fixture
    std::printf("power(250*0.7738, 2e-3) = %.15Lg\n",
                oracle::power(250.0L * 0.773882477092077L, 2e-3L, 0.7L));

    // one fully worked 2-relay chain with one MS: BS (1500,1500),
    // RS1 (1500,900), RS2 (1500,300), MS0 (1500,150) served by RS2,
    // tree 2 -> 1 -> BS
    relnet::NetworkState st;
    st.areaSide = 3000;
    st.bsPos = {1500, 1500};
    st.rsPos = {{1500, 900}, {1500, 300}};
    st.msPos = {{1500, 150}};
    st.parent = {0, 1};
    st.serving = {2};
    std::printf("chain rsU(1)            = %.15Lg\n", oracle::rsUtility(st, 1, traffic, radio));
    std::printf("chain rsU(2)            = %.15Lg\n", oracle::rsUtility(st, 2, traffic, radio));
    std::printf("chain msU(0 via 2)      = %.15Lg\n",
                oracle::msUtility(st, 0, 2, traffic, radio));
    std::printf("chain msU(0 via BS)     = %.15Lg\n",
                oracle::msUtility(st, 0, 0, traffic, radio));
    std::printf("chain pathDelay(2)      = %.15Lg\n",
                oracle::pathDelay(st, 2, traffic, radio));
    std::printf("chain pathBer(2)        = %.15Lg\n", oracle::pathBer(st, 2, radio));
    return 0;
}
