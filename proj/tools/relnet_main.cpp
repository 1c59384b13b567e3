#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "relnet/config.hpp"
#include "relnet/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"relay uplink tree formation simulator"};
    app.require_subcommand(1);

    std::string configPath;
    std::string outDir;
    std::uint64_t seed = 0;
    int repetitions = 0;
    int jobs = 0;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("config", configPath, "scenario config file")->required();
        cmd->add_option("--seed", seed, "override master_seed");
        cmd->add_option("--out", outDir, "output directory");
        cmd->add_option("--repetitions", repetitions, "override repetitions");
        cmd->add_option("--jobs", jobs, "worker threads for repetitions");
    };

    CLI::App* runCmd = app.add_subcommand("run", "run the experiment described by the config");
    addCommon(runCmd);
    CLI::App* validateCmd =
        app.add_subcommand("validate", "parse the config and print its canonical form");
    validateCmd->add_option("config", configPath, "scenario config file")->required();
    CLI::App* censusCmd =
        app.add_subcommand("census", "exhaustive equilibrium census for the config");
    addCommon(censusCmd);

    CLI11_PARSE(app, argc, argv);

    try {
        relnet::ScenarioConfig cfg = relnet::loadConfigFile(configPath);
        if (app.got_subcommand(validateCmd)) {
            cfg.validate();
            std::cout << relnet::emitConfig(cfg);
            return 0;
        }
        CLI::App* active = app.got_subcommand(runCmd) ? runCmd : censusCmd;
        if (active->count("--seed")) cfg.masterSeed = seed;
        if (active->count("--out")) cfg.outDir = outDir;
        if (active->count("--repetitions")) cfg.repetitions = repetitions;
        if (active->count("--jobs")) cfg.jobs = jobs;
        if (app.got_subcommand(censusCmd)) cfg.experiment = relnet::ExperimentKind::Census;
        return relnet::runExperiment(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
