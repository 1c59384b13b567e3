#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "relnet/scenario.hpp"

using namespace relnet;

namespace {

ScenarioConfig smallConfig() {
    ScenarioConfig cfg;
    cfg.areaSideM = 2500;
    cfg.numRs = 4;
    cfg.numMs = 8;
    return cfg;
}

}  // namespace

TEST_CASE("summarize basics") {
    scenario::Summary empty = scenario::summarize({});
    CHECK(empty.n == 0);
    CHECK(empty.mean == 0);

    scenario::Summary one = scenario::summarize({4.25});
    CHECK(one.n == 1);
    CHECK(one.mean == 4.25);
    CHECK(one.min == 4.25);
    CHECK(one.max == 4.25);
    CHECK(one.se == 0);

    scenario::Summary s = scenario::summarize({1, 2, 3, 4});
    CHECK(s.n == 4);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.min == 1);
    CHECK(s.max == 4);
    // sample sd sqrt(5/3) over sqrt(4)
    CHECK(s.se == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("hop counts cover connected relays only and skip the MS access hop") {
    NetworkState st;
    st.areaSide = 2000;
    st.bsPos = {0, 0};
    st.rsPos = {{0, 100}, {0, 200}, {0, 300}, {0, 400}};
    st.msPos = {{5, 100}};
    st.parent = {kParentBs, 1, 1, 3};
    st.serving = {1};
    CHECK(scenario::hopCounts(st) == std::vector<double>{1, 2, 2, 3});

    st.parent[1] = kParentNone;  // detach relay 2, which also strands relay 4? no, 4 hangs on 3
    auto hops = scenario::hopCounts(st);
    CHECK(hops == std::vector<double>{1, 2, 3});
}

TEST_CASE("snapshot runs are deterministic and well formed") {
    ScenarioConfig cfg = smallConfig();
    scenario::SnapshotResult a = scenario::runSnapshot(cfg, 42);
    scenario::SnapshotResult b = scenario::runSnapshot(cfg, 42);

    CHECK(a.preMsState.canonical() == b.preMsState.canonical());
    CHECK(a.state.canonical() == b.state.canonical());
    CHECK(a.state.serving == b.state.serving);
    CHECK(a.preTrace.iterations == b.preTrace.iterations);
    CHECK(a.trace.iterations == b.trace.iterations);
    CHECK(a.trace.moves.size() == b.trace.moves.size());

    // the hello pass settles the backbone before any mobile is associated
    CHECK(validateTree(a.preMsState).valid());
    for (int s : a.preMsState.serving) CHECK(s == kServingNone);

    CHECK(validateTree(a.state).valid());
    for (int s : a.state.serving) CHECK(s != kServingNone);
    auto settled = [](game::Verdict v) {
        return v == game::Verdict::Nash || v == game::Verdict::HistoryInducedNash;
    };
    CHECK(settled(a.preTrace.verdict));
    CHECK(settled(a.trace.verdict));

    scenario::SnapshotResult c = scenario::runSnapshot(cfg, 43);
    bool samePlacement = c.state.rsPos == a.state.rsPos;
    CHECK_FALSE(samePlacement);  // different seed, different world
}

TEST_CASE("snapshot without mobiles still forms a tree") {
    ScenarioConfig cfg = smallConfig();
    cfg.numMs = 0;
    scenario::SnapshotResult r = scenario::runSnapshot(cfg, 7);
    CHECK(r.state.numMs() == 0);
    CHECK(validateTree(r.state).valid());
    CHECK(r.trace.iterations >= 1);
}

TEST_CASE("mobility keeps everyone inside the area and is deterministic") {
    ScenarioConfig cfg = smallConfig();
    scenario::MobilitySpec spec;
    spec.movers = MoverKind::Rs;
    spec.speedMps = 150.0;  // fast walk so reflections actually happen
    spec.durationS = 120.0;
    spec.reformPeriodS = 30.0;

    scenario::MobilityResult a = scenario::runMobility(cfg, spec, 5);
    CHECK(a.rounds.size() == 4);
    for (const auto& p : a.finalState.rsPos) {
        CHECK(p.x >= 0);
        CHECK(p.x <= cfg.areaSideM);
        CHECK(p.y >= 0);
        CHECK(p.y <= cfg.areaSideM);
    }
    CHECK(validateTree(a.finalState).valid());
    CHECK(a.finalState.msPos == a.initial.state.msPos);  // only relays moved

    scenario::MobilityResult b = scenario::runMobility(cfg, spec, 5);
    CHECK(a.finalState.canonical() == b.finalState.canonical());
    for (std::size_t i = 0; i < a.rounds.size(); ++i) {
        CHECK(a.rounds[i].actions == b.rounds[i].actions);
        CHECK(a.rounds[i].meanMsUtility == b.rounds[i].meanMsUtility);
    }

    int totalActions = 0;
    for (const auto& r : a.rounds) totalActions += r.actions;
    CHECK(a.actionsPerMinute == doctest::Approx(totalActions / 2.0).epsilon(1e-12));
}

TEST_CASE("mobility can move a chosen subset of mobiles on a fixed heading") {
    ScenarioConfig cfg = smallConfig();
    scenario::MobilitySpec spec;
    spec.movers = MoverKind::Ms;
    spec.moverIds = {0};
    spec.randomWalk = false;
    spec.headingX = 1.0;
    spec.headingY = 0.0;
    spec.speedMps = 2.0;
    spec.durationS = 60.0;
    spec.reformPeriodS = 30.0;

    scenario::MobilityResult r = scenario::runMobility(cfg, spec, 9);
    CHECK(r.finalState.rsPos == r.initial.state.rsPos);
    for (int s = 1; s < r.finalState.numMs(); ++s)
        CHECK(r.finalState.msPos[s].x == r.initial.state.msPos[s].x);
    // two periods of 30 s at 2 m/s eastward, far from any border at this speed
    CHECK(r.finalState.msPos[0].x ==
          doctest::Approx(r.initial.state.msPos[0].x + 120.0).epsilon(1e-9));
    CHECK(r.finalState.msPos[0].y == doctest::Approx(r.initial.state.msPos[0].y));
}

TEST_CASE("zero speed means nothing moves") {
    ScenarioConfig cfg = smallConfig();
    scenario::MobilitySpec spec;
    spec.movers = MoverKind::Rs;
    spec.speedMps = 0.0;
    spec.durationS = 90.0;
    spec.reformPeriodS = 30.0;
    scenario::MobilityResult r = scenario::runMobility(cfg, spec, 11);
    CHECK(r.finalState.rsPos == r.initial.state.rsPos);
    if (r.initial.trace.verdict == game::Verdict::Nash) {
        // a tree that is Nash stays put when the world does
        for (const auto& round : r.rounds) CHECK(round.actions == 0);
        CHECK(r.finalState.canonical() == r.initial.state.canonical());
    }
}

TEST_CASE("sweep emits three algorithm rows per axis point") {
    ScenarioConfig cfg = smallConfig();
    auto rows = scenario::runSweep(cfg, SweepAxis::NumMs, {6, 10}, 3, 2024);
    REQUIRE(rows.size() == 6);
    const char* expect[] = {"proposed", "nearest_neighbor", "direct",
                            "proposed", "nearest_neighbor", "direct"};
    for (int i = 0; i < 6; ++i) {
        CHECK(rows[i].algorithm == expect[i]);
        CHECK(rows[i].axisValue == (i < 3 ? 6 : 10));
        CHECK(rows[i].runs == 3);
        CHECK(rows[i].msUtility.n == 3);
    }
    // the formation trace belongs to the proposed rows only
    CHECK(rows[0].iterations.n == 3);
    CHECK(rows[1].iterations.n == 0);
    CHECK(rows[2].iterations.n == 0);
    CHECK(rows[0].runsNash + rows[0].runsHistoryNash + rows[0].runsMixedTrigger +
              rows[0].runsCapped ==
          3);
}

TEST_CASE("sweep results do not depend on the thread count") {
    ScenarioConfig one = smallConfig();
    one.jobs = 1;
    ScenarioConfig four = smallConfig();
    four.jobs = 4;
    auto a = scenario::runSweep(one, SweepAxis::NumRs, {3, 5}, 4, 77);
    auto b = scenario::runSweep(four, SweepAxis::NumRs, {3, 5}, 4, 77);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].algorithm == b[i].algorithm);
        CHECK(a[i].msUtility.mean == b[i].msUtility.mean);
        CHECK(a[i].msUtility.se == b[i].msUtility.se);
        CHECK(a[i].hops.mean == b[i].hops.mean);
        CHECK(a[i].iterations.max == b[i].iterations.max);
    }
}

TEST_CASE("speed axis sweeps mobility and reports the proposed algorithm only") {
    ScenarioConfig cfg = smallConfig();
    cfg.durationS = 60;
    auto rows = scenario::runSweep(cfg, SweepAxis::Speed, {18}, 2, 5);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].algorithm == "proposed");
    CHECK(rows[0].axisValue == 18);
    CHECK(rows[0].actionsPerMinute.n == 2);
    CHECK(rows[0].rsUtility.n == 0);  // not aggregated on this axis
}

TEST_CASE("census emits proposed, optimal and worst_nash per placement") {
    ScenarioConfig cfg = smallConfig();
    cfg.numRs = 3;
    cfg.numMs = 5;
    auto rows = scenario::runCensus(cfg, 2, 31);
    REQUIRE(rows.size() == 6);
    for (int r = 0; r < 2; ++r) {
        const auto& prop = rows[3 * r + 0];
        const auto& opt = rows[3 * r + 1];
        const auto& worst = rows[3 * r + 2];
        CHECK(prop.algorithm == "proposed");
        CHECK(opt.algorithm == "optimal");
        CHECK(worst.algorithm == "worst_nash");
        CHECK(prop.axisValue == r);
        CHECK(opt.axisValue == r);
        CHECK(worst.axisValue == r);
        CHECK(opt.msUtility.mean >= worst.msUtility.mean);
        CHECK(prop.nashCount.mean == opt.nashCount.mean);
        CHECK(prop.poa.mean == worst.poa.mean);
        if (worst.msUtility.mean > 0) CHECK(opt.poa.mean >= 1.0);
    }
}
