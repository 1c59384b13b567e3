#include "relnet/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "relnet/baselines.hpp"
#include "relnet/rng.hpp"
#include "relnet/utility.hpp"

namespace relnet::scenario {

namespace {

double mean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

// Run fn(0..n-1) on `jobs` threads. Work is claimed by index, outputs land in
// caller-owned slots, so the schedule cannot change any result.
void parallelFor(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> nextIdx{0};
    auto worker = [&] {
        for (;;) {
            int i = nextIdx.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min(jobs, n);
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

Summary summarize(const std::vector<double>& xs) {
    Summary s;
    s.n = static_cast<int>(xs.size());
    if (xs.empty()) return s;
    s.mean = mean(xs);
    s.min = *std::min_element(xs.begin(), xs.end());
    s.max = *std::max_element(xs.begin(), xs.end());
    if (s.n > 1) {
        double sq = 0.0;
        for (double x : xs) sq += (x - s.mean) * (x - s.mean);
        s.se = std::sqrt(sq / (s.n - 1)) / std::sqrt(static_cast<double>(s.n));
    }
    return s;
}

std::vector<double> hopCounts(const NetworkState& state) {
    std::vector<double> hops;
    hops.reserve(state.numRs());
    for (int i = 1; i <= state.numRs(); ++i) {
        auto path = pathToBS(state, NodeId::rs(i));
        if (path) hops.push_back(static_cast<double>(path->size() - 1));
    }
    return hops;
}

SnapshotResult runSnapshot(const ScenarioConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    NetworkState st = deployRandom(cfg.areaSideM, cfg.numRs, cfg.numMs, mixSeed(seed, 0));
    game::FormationOptions opt;
    opt.iterationCap = cfg.iterationCap;

    SnapshotResult result;
    // Mobiles are deployed but not yet associated, so only hello traffic flows
    // and link admission is essentially free. This pass settles the backbone.
    std::tie(result.preMsState, result.preTrace) =
        game::runFormation(st, cfg.traffic, cfg.radio, mixSeed(seed, 1), opt);

    // Load the backbone with mobile traffic and let the relays adapt to it,
    // starting from the hello tree rather than from scratch.
    NetworkState loaded = result.preMsState;
    utility::assignAllMs(loaded, cfg.traffic, cfg.radio);
    std::tie(result.state, result.trace) =
        game::runFormation(loaded, cfg.traffic, cfg.radio, mixSeed(seed, 2), opt);
    utility::assignAllMs(result.state, cfg.traffic, cfg.radio);
    return result;
}

MobilityResult runMobility(const ScenarioConfig& cfg, const MobilitySpec& spec,
                           std::uint64_t seed) {
    if (!(spec.speedMps >= 0)) throw std::invalid_argument("speed must be nonnegative");
    if (!(spec.reformPeriodS > 0)) throw std::invalid_argument("reform period must be positive");

    MobilityResult result;
    result.initial = runSnapshot(cfg, mixSeed(seed, 0));
    NetworkState state = result.initial.state;

    std::vector<int> movers = spec.moverIds;
    if (movers.empty()) {
        int count = (spec.movers == MoverKind::Rs) ? state.numRs() : state.numMs();
        movers.resize(count);
        std::iota(movers.begin(), movers.end(), (spec.movers == MoverKind::Rs) ? 1 : 0);
    }

    int rounds = static_cast<int>(spec.durationS / spec.reformPeriodS);
    Rng walkRng(mixSeed(seed, 1));
    double step = spec.speedMps * spec.reformPeriodS;
    int totalActions = 0;

    for (int r = 1; r <= rounds; ++r) {
        for (int id : movers) {
            Position& p = (spec.movers == MoverKind::Rs) ? state.rsPos.at(id - 1)
                                                         : state.msPos.at(id);
            double hx = spec.headingX;
            double hy = spec.headingY;
            if (spec.randomWalk) {
                double ang = walkRng.uniform(0.0, 2.0 * M_PI);
                hx = std::cos(ang);
                hy = std::sin(ang);
            } else {
                double norm = std::hypot(hx, hy);
                if (!(norm > 0)) throw std::invalid_argument("zero mobility heading");
                hx /= norm;
                hy /= norm;
            }
            p.x += hx * step;
            p.y += hy * step;
            // reflect back into the square
            while (p.x < 0 || p.x > state.areaSide) {
                if (p.x < 0) p.x = -p.x;
                if (p.x > state.areaSide) p.x = 2 * state.areaSide - p.x;
            }
            while (p.y < 0 || p.y > state.areaSide) {
                if (p.y < 0) p.y = -p.y;
                if (p.y > state.areaSide) p.y = 2 * state.areaSide - p.y;
            }
        }

        utility::assignAllMs(state, cfg.traffic, cfg.radio);
        game::FormationOptions opt;
        opt.iterationCap = cfg.iterationCap;
        auto [formed, trace] =
            game::runFormation(state, cfg.traffic, cfg.radio, mixSeed(seed, 100 + r), opt);
        state = std::move(formed);
        utility::assignAllMs(state, cfg.traffic, cfg.radio);

        MobilityRound round;
        round.timeS = r * spec.reformPeriodS;
        round.actions = static_cast<int>(trace.moves.size());
        round.iterations = trace.iterations;
        auto hops = hopCounts(state);
        round.meanHops = mean(hops);
        round.maxHops = hops.empty() ? 0.0 : *std::max_element(hops.begin(), hops.end());
        round.meanMsUtility = mean(utility::msUtilityValues(state, cfg.traffic, cfg.radio));
        round.verdict = trace.verdict;
        totalActions += round.actions;
        result.rounds.push_back(round);
    }

    result.finalState = std::move(state);
    double minutes = rounds * spec.reformPeriodS / 60.0;
    result.actionsPerMinute = minutes > 0 ? totalActions / minutes : 0.0;
    return result;
}

namespace {

// Everything one repetition contributes to the aggregation.
struct RepOutcome {
    double propMsU{0}, propRsU{0}, propHops{0}, propMaxHops{0}, propIters{0};
    game::Verdict verdict{game::Verdict::Nash};
    bool capped{false};
    double nnMsU{0}, nnRsU{0}, nnHops{0}, nnMaxHops{0};
    double dirMsU{0}, dirRsU{0};
    double actionsPerMinute{0};
    double mobIters{0}, mobHops{0}, mobMaxHops{0}, mobMsU{0};
};

ScenarioConfig atAxisPoint(const ScenarioConfig& cfg, SweepAxis axis, double value) {
    ScenarioConfig c = cfg;
    switch (axis) {
        case SweepAxis::NumMs:
            c.numMs = static_cast<int>(std::lround(value));
            break;
        case SweepAxis::NumRs:
            c.numRs = static_cast<int>(std::lround(value));
            break;
        case SweepAxis::Beta:
            c.traffic.beta = value;
            break;
        case SweepAxis::Speed:
            c.speedKmh = value;
            break;
    }
    return c;
}

void countVerdict(ExperimentResult& row, game::Verdict v, bool capped) {
    ++row.runs;
    if (capped)
        ++row.runsCapped;
    else if (v == game::Verdict::Nash)
        ++row.runsNash;
    else if (v == game::Verdict::HistoryInducedNash)
        ++row.runsHistoryNash;
    else if (v == game::Verdict::MixedTrigger)
        ++row.runsMixedTrigger;
}

int verdictRank(game::Verdict v) {
    switch (v) {
        case game::Verdict::Nash: return 0;
        case game::Verdict::HistoryInducedNash: return 1;
        case game::Verdict::NotEquilibrium: return 2;
        case game::Verdict::MixedTrigger: return 3;
        case game::Verdict::IterationCap: return 4;
    }
    return 4;
}

// A snapshot runs two formation passes; for run counting it is classified by
// the worse of the two outcomes.
game::Verdict snapshotVerdict(const SnapshotResult& snap) {
    return verdictRank(snap.preTrace.verdict) >= verdictRank(snap.trace.verdict)
               ? snap.preTrace.verdict
               : snap.trace.verdict;
}

}  // namespace

std::vector<ExperimentResult> runSweep(const ScenarioConfig& cfg, SweepAxis axis,
                                       const std::vector<double>& values, int repetitions,
                                       std::uint64_t masterSeed) {
    if (values.empty()) throw std::invalid_argument("sweep needs at least one axis value");
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

    std::vector<ExperimentResult> rows;
    for (std::size_t vi = 0; vi < values.size(); ++vi) {
        ScenarioConfig point = atAxisPoint(cfg, axis, values[vi]);
        point.validate();
        std::vector<RepOutcome> reps(repetitions);

        parallelFor(repetitions, cfg.jobs, [&](int r) {
            std::uint64_t seed = deriveSeed(masterSeed, vi, static_cast<std::uint64_t>(r));
            RepOutcome& out = reps[r];
            if (axis == SweepAxis::Speed) {
                MobilitySpec spec;
                spec.movers = point.movers;
                spec.moverIds = point.moverIds;
                spec.speedMps = point.speedKmh / 3.6;
                spec.durationS = point.durationS;
                spec.reformPeriodS = point.traffic.reformPeriodS;
                MobilityResult mob = runMobility(point, spec, seed);
                out.actionsPerMinute = mob.actionsPerMinute;
                std::vector<double> it, hp, mh, mu;
                for (const auto& round : mob.rounds) {
                    it.push_back(round.iterations);
                    hp.push_back(round.meanHops);
                    mh.push_back(round.maxHops);
                    mu.push_back(round.meanMsUtility);
                }
                out.mobIters = mean(it);
                out.mobHops = mean(hp);
                out.mobMaxHops = mean(mh);
                out.mobMsU = mean(mu);
                out.verdict = mob.rounds.empty() ? game::Verdict::Nash
                                                 : mob.rounds.back().verdict;
                return;
            }

            SnapshotResult snap = runSnapshot(point, seed);
            out.propMsU = mean(utility::msUtilityValues(snap.state, point.traffic, point.radio));
            out.propRsU = mean(utility::rsUtilityValues(snap.state, point.traffic, point.radio));
            auto hops = hopCounts(snap.state);
            out.propHops = mean(hops);
            out.propMaxHops = hops.empty() ? 0.0 : *std::max_element(hops.begin(), hops.end());
            out.propIters = snap.preTrace.iterations + snap.trace.iterations;
            out.verdict = snapshotVerdict(snap);
            out.capped = snap.preTrace.hardCapHit || snap.trace.hardCapHit;

            NetworkState nn = baselines::nearestNeighborTree(snap.state);
            out.nnMsU = mean(utility::msUtilityValues(nn, point.traffic, point.radio));
            out.nnRsU = mean(utility::rsUtilityValues(nn, point.traffic, point.radio));
            auto nnHops = hopCounts(nn);
            out.nnHops = mean(nnHops);
            out.nnMaxHops =
                nnHops.empty() ? 0.0 : *std::max_element(nnHops.begin(), nnHops.end());

            NetworkState direct = baselines::starTree(snap.state);
            out.dirMsU = mean(utility::msUtilityValues(direct, point.traffic, point.radio));
            out.dirRsU = mean(utility::rsUtilityValues(direct, point.traffic, point.radio));
        });

        auto collect = [&](const std::function<double(const RepOutcome&)>& get) {
            std::vector<double> xs(reps.size());
            for (std::size_t i = 0; i < reps.size(); ++i) xs[i] = get(reps[i]);
            return summarize(xs);
        };

        if (axis == SweepAxis::Speed) {
            ExperimentResult row;
            row.axisValue = values[vi];
            row.algorithm = "proposed";
            row.msUtility = collect([](const RepOutcome& o) { return o.mobMsU; });
            row.hops = collect([](const RepOutcome& o) { return o.mobHops; });
            row.maxHops = collect([](const RepOutcome& o) { return o.mobMaxHops; });
            row.iterations = collect([](const RepOutcome& o) { return o.mobIters; });
            row.actionsPerMinute =
                collect([](const RepOutcome& o) { return o.actionsPerMinute; });
            for (const auto& o : reps) countVerdict(row, o.verdict, o.capped);
            rows.push_back(std::move(row));
            continue;
        }

        ExperimentResult prop;
        prop.axisValue = values[vi];
        prop.algorithm = "proposed";
        prop.msUtility = collect([](const RepOutcome& o) { return o.propMsU; });
        prop.rsUtility = collect([](const RepOutcome& o) { return o.propRsU; });
        prop.hops = collect([](const RepOutcome& o) { return o.propHops; });
        prop.maxHops = collect([](const RepOutcome& o) { return o.propMaxHops; });
        prop.iterations = collect([](const RepOutcome& o) { return o.propIters; });
        for (const auto& o : reps) countVerdict(prop, o.verdict, o.capped);
        rows.push_back(std::move(prop));

        ExperimentResult nn;
        nn.axisValue = values[vi];
        nn.algorithm = "nearest_neighbor";
        nn.msUtility = collect([](const RepOutcome& o) { return o.nnMsU; });
        nn.rsUtility = collect([](const RepOutcome& o) { return o.nnRsU; });
        nn.hops = collect([](const RepOutcome& o) { return o.nnHops; });
        nn.maxHops = collect([](const RepOutcome& o) { return o.nnMaxHops; });
        nn.runs = repetitions;
        rows.push_back(std::move(nn));

        ExperimentResult direct;
        direct.axisValue = values[vi];
        direct.algorithm = "direct";
        direct.msUtility = collect([](const RepOutcome& o) { return o.dirMsU; });
        direct.rsUtility = collect([](const RepOutcome& o) { return o.dirRsU; });
        direct.runs = repetitions;
        rows.push_back(std::move(direct));
    }
    return rows;
}

std::vector<ExperimentResult> runCensus(const ScenarioConfig& cfg, int repetitions,
                                        std::uint64_t masterSeed) {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    cfg.validate();

    struct CensusRep {
        double proposed{0}, optimal{0}, worstNash{0};
        double nashCount{0}, poa{0};
        double hops{0}, maxHops{0}, iters{0};
        game::Verdict verdict{game::Verdict::Nash};
        bool capped{false};
    };
    std::vector<CensusRep> reps(repetitions);

    parallelFor(repetitions, cfg.jobs, [&](int r) {
        std::uint64_t seed = deriveSeed(masterSeed, 0, static_cast<std::uint64_t>(r));
        SnapshotResult snap = runSnapshot(cfg, seed);
        CensusRep& out = reps[r];
        out.proposed =
            baselines::treeObjective(snap.state, cfg.objective, cfg.traffic, cfg.radio);
        auto hops = hopCounts(snap.state);
        out.hops = mean(hops);
        out.maxHops = hops.empty() ? 0.0 : *std::max_element(hops.begin(), hops.end());
        out.iters = snap.preTrace.iterations + snap.trace.iterations;
        out.verdict = snapshotVerdict(snap);
        out.capped = snap.preTrace.hardCapHit || snap.trace.hardCapHit;
        baselines::NashCensus census =
            baselines::enumerateNashNetworks(snap.state, cfg.traffic, cfg.radio, cfg.objective,
                                             cfg.enumerationCap);
        out.optimal = census.optimalValue;
        out.worstNash = census.nashTrees.empty() ? 0.0 : census.worstNashValue;
        out.nashCount = census.nashCount();
        out.poa = census.priceOfAnarchy;
    });

    std::vector<ExperimentResult> rows;
    for (int r = 0; r < repetitions; ++r) {
        const CensusRep& o = reps[r];
        auto single = [](double v) {
            Summary s;
            s.n = 1;
            s.mean = s.min = s.max = v;
            return s;
        };
        ExperimentResult prop;
        prop.axisValue = r;
        prop.algorithm = "proposed";
        prop.msUtility = single(o.proposed);
        prop.hops = single(o.hops);
        prop.maxHops = single(o.maxHops);
        prop.iterations = single(o.iters);
        prop.nashCount = single(o.nashCount);
        prop.poa = single(o.poa);
        countVerdict(prop, o.verdict, o.capped);
        rows.push_back(std::move(prop));

        ExperimentResult opt;
        opt.axisValue = r;
        opt.algorithm = "optimal";
        opt.msUtility = single(o.optimal);
        opt.nashCount = single(o.nashCount);
        opt.poa = single(o.poa);
        opt.runs = 1;
        rows.push_back(std::move(opt));

        ExperimentResult worst;
        worst.axisValue = r;
        worst.algorithm = "worst_nash";
        worst.msUtility = single(o.worstNash);
        worst.nashCount = single(o.nashCount);
        worst.poa = single(o.poa);
        worst.runs = 1;
        rows.push_back(std::move(worst));
    }
    return rows;
}

}  // namespace relnet::scenario
