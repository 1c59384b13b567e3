#include "relnet/runner.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "relnet/report.hpp"
#include "relnet/rng.hpp"
#include "relnet/scenario.hpp"

namespace relnet {

std::string resolveOutDir(const ScenarioConfig& cfg) {
    if (!cfg.outDir.empty()) return cfg.outDir;
    if (const char* env = std::getenv("RELNET_OUT"); env && *env) return env;
    return ".";
}

std::vector<double> defaultSweepValues(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::NumMs:
            return {10, 20, 30, 40, 50};
        case SweepAxis::NumRs:
            return {5, 10, 15, 20, 25};
        case SweepAxis::Beta:
            return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
        case SweepAxis::Speed:
            return {9, 18, 36, 54, 72};
    }
    return {};
}

int runExperiment(const ScenarioConfig& cfg) {
    try {
        cfg.validate();
        ScenarioConfig resolved = cfg;
        resolved.outDir = resolveOutDir(cfg);

        SweepAxis axis = cfg.sweepAxis;
        std::vector<double> values;
        std::string axisName;
        std::vector<scenario::ExperimentResult> rows;

        switch (cfg.experiment) {
            case ExperimentKind::Snapshot:
                axis = SweepAxis::NumMs;
                values = {static_cast<double>(cfg.numMs)};
                axisName = toString(axis);
                break;
            case ExperimentKind::Sweep:
                values = cfg.sweepValues.empty() ? defaultSweepValues(axis) : cfg.sweepValues;
                axisName = toString(axis);
                break;
            case ExperimentKind::Mobility:
                axis = SweepAxis::Speed;
                values = cfg.sweepValues.empty() ? std::vector<double>{cfg.speedKmh}
                                                 : cfg.sweepValues;
                axisName = toString(axis);
                break;
            case ExperimentKind::Census:
                axisName = "repetition";
                for (int r = 0; r < cfg.repetitions; ++r) values.push_back(r);
                break;
        }

        std::vector<std::vector<std::uint64_t>> repSeeds;
        if (cfg.experiment == ExperimentKind::Census) {
            rows = scenario::runCensus(resolved, cfg.repetitions, cfg.masterSeed);
            repSeeds.emplace_back();
            for (int r = 0; r < cfg.repetitions; ++r)
                repSeeds[0].push_back(deriveSeed(cfg.masterSeed, 0, r));
        } else {
            resolved.sweepValues = values;
            rows = scenario::runSweep(resolved, axis, values, cfg.repetitions, cfg.masterSeed);
            for (std::size_t a = 0; a < values.size(); ++a) {
                repSeeds.emplace_back();
                for (int r = 0; r < cfg.repetitions; ++r)
                    repSeeds[a].push_back(deriveSeed(cfg.masterSeed, a, r));
            }
        }

        std::filesystem::create_directories(resolved.outDir);
        std::string csvPath = resolved.outDir + "/results.csv";
        std::string manifestPath = resolved.outDir + "/manifest.json";
        report::writeFile(csvPath, report::toCsv(rows));
        report::writeFile(manifestPath,
                          report::toManifest(resolved, axisName, values, repSeeds, rows.size()));
        std::cout << "wrote " << csvPath << " (" << rows.size() << " rows)\n";
        std::cout << "wrote " << manifestPath << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace relnet
