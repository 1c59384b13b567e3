#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "helpers.hpp"
#include "oracle.hpp"
#include "relnet/channel.hpp"

using namespace relnet;

namespace {
// Oracle-pinned values, printed by tests/freeze_gen.cpp.
constexpr double kBerDirect500 = 0.00049925124781643;
constexpr double kPsr1em3B256 = 0.774042818860508;
constexpr double kBer2Hop = 0.000625894773427666;
constexpr double kBer3Hop = 0.000625612821167936;
constexpr double kBerTie = 0.000832003276021632;
}  // namespace

TEST_CASE("snr follows the distance power law") {
    RadioParams radio;
    // 50 mW over 1 km at exponent 3 and -100 dBm noise
    CHECK(channel::snr(0.05, 1000.0, radio) == doctest::Approx(500.0).epsilon(1e-12));
    // distances below the floor behave like the floor
    CHECK(channel::snr(0.05, 0.25, radio) == channel::snr(0.05, channel::kMinDistanceM, radio));
    // doubling the distance at mu=3 cuts SNR by 8
    double a = channel::snr(0.05, 700.0, radio);
    double b = channel::snr(0.05, 1400.0, radio);
    CHECK(a / b == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("berDirect fixture and limits") {
    CHECK(channel::berDirect(500.0) == doctest::Approx(kBerDirect500).epsilon(1e-12));
    CHECK(channel::berDirect(0.0) == 0.5);  // no signal means coin-flip bits
    CHECK(channel::berDirect(1e12) < 1e-6);
    CHECK_THROWS_AS(channel::berDirect(-1.0), std::invalid_argument);
}

TEST_CASE("berDirect matches oracle on random SNRs") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        double g = std::exp(rng.uniform(-3.0, 14.0));
        CHECK(testutil::bothInfOrClose(channel::berDirect(g), oracle::berDirect(g), 1e-9));
    }
}

TEST_CASE("berMultihop pinned fixtures") {
    CHECK(channel::berMultihop({{400.0}, {100.0, 900.0}}) ==
          doctest::Approx(kBer2Hop).epsilon(1e-12));
    CHECK(channel::berMultihop({{400.0}, {150.0, 700.0}, {60.0, 250.0, 1200.0}}) ==
          doctest::Approx(kBer3Hop).epsilon(1e-12));
}

TEST_CASE("berMultihop single hop reduces to berDirect exactly") {
    Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        double g = std::exp(rng.uniform(-3.0, 14.0));
        double multi = channel::berMultihop({{g}});
        double direct = channel::berDirect(g);
        CHECK(std::fabs(multi - direct) <= 1e-12);
    }
}

TEST_CASE("berMultihop equal-SNR rows stay finite and continuous") {
    double tied = channel::berMultihop({{300.0}, {500.0, 500.0}});
    CHECK(std::isfinite(tied));
    CHECK(tied > 0.0);
    // the separated coefficients sit near 1e6, so a few digits wash out
    CHECK(tied == doctest::Approx(kBerTie).epsilon(1e-9));
    // nearby distinct SNRs land near the tied evaluation
    double nearby = channel::berMultihop({{300.0}, {500.0, 500.05}});
    CHECK(tied == doctest::Approx(nearby).epsilon(1e-3));
}

TEST_CASE("berMultihop leaves well-separated inputs unperturbed") {
    // evaluating the closed form by hand for rows {10, 40}
    double p1 = (10.0 / (10.0 - 40.0)) * channel::berDirect(10.0);
    double p2 = (40.0 / (40.0 - 10.0)) * channel::berDirect(40.0);
    double want = channel::berDirect(100.0) + p1 + p2;
    CHECK(channel::berMultihop({{100.0}, {10.0, 40.0}}) ==
          doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("berMultihop matches oracle on random paths") {
    Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        int hops = 2 + static_cast<int>(rng.below(3));
        channel::PathSnrMatrix m;
        for (int r = 1; r <= hops; ++r) {
            std::vector<double> row;
            for (int k = 0; k < r; ++k) row.push_back(std::exp(rng.uniform(0.0, 9.0)));
            m.push_back(row);
        }
        std::vector<std::vector<double>> copy = m;
        CHECK(testutil::bothInfOrClose(channel::berMultihop(m), oracle::berMultihop(copy),
                                       1e-9));
    }
}

TEST_CASE("berMultihop clamps the bound into [0,1]") {
    // hopeless SNRs blow the union bound past 1
    channel::PathSnrMatrix m = {{0.01}, {0.01, 0.02}, {0.01, 0.02, 0.03}};
    double v = channel::berMultihop(m);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
}

TEST_CASE("psr fixture and properties") {
    CHECK(channel::psr(1e-3, 256) == doctest::Approx(kPsr1em3B256).epsilon(1e-12));
    CHECK(channel::psr(0.0, 256) == 1.0);
    CHECK(channel::psr(1.0, 256) == 0.0);
    CHECK(channel::psr(2.0, 256) == 0.0);  // clamped
    CHECK_THROWS_AS(channel::psr(1e-3, 0), std::invalid_argument);

    // success over B1*B2 bits equals success over B1 raised to B2
    Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        double ber = rng.uniform(0.0, 0.02);
        double lhs = channel::psr(ber, 64 * 4);
        double rhs = std::pow(channel::psr(ber, 64), 4);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("pathSnrMatrix lays out receivers times earlier transmitters") {
    NetworkState st = deployRandom(1000, 2, 0, 5);
    st.bsPos = {0, 0};
    st.rsPos = {{0, 100}, {0, 300}};
    st.parent = {0, 1};
    RadioParams radio;
    auto path = pathToBS(st, NodeId::rs(2));
    REQUIRE(path.has_value());
    auto m = channel::pathSnrMatrix(st, *path, radio);
    REQUIRE(m.size() == 2);
    REQUIRE(m[0].size() == 1);
    REQUIRE(m[1].size() == 2);
    CHECK(m[0][0] == doctest::Approx(channel::snr(0.05, 200, radio)));   // 2 -> 1
    CHECK(m[1][0] == doctest::Approx(channel::snr(0.05, 300, radio)));   // 2 -> BS
    CHECK(m[1][1] == doctest::Approx(channel::snr(0.05, 100, radio)));   // 1 -> BS
}
