#include "relnet/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "relnet/baselines.hpp"

namespace relnet::report {

namespace {

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

double orNan(const scenario::Summary& s, bool wantMax = false) {
    if (s.n == 0) return std::nan("");
    return wantMax ? s.max : s.mean;
}

}  // namespace

std::string toCsv(const std::vector<scenario::ExperimentResult>& rows) {
    std::string out =
        "axisValue,algorithm,meanMsUtility,stderr,meanHops,meanMaxHops,"
        "meanIterations,maxIterations,actions,nashCount,poa\n";
    for (const auto& r : rows) {
        out += num(r.axisValue);
        out += ',';
        out += r.algorithm;
        out += ',';
        out += num(orNan(r.msUtility));
        out += ',';
        out += r.msUtility.n ? num(r.msUtility.se) : "nan";
        out += ',';
        out += num(orNan(r.hops));
        out += ',';
        out += num(orNan(r.maxHops));
        out += ',';
        out += num(orNan(r.iterations));
        out += ',';
        out += num(orNan(r.iterations, true));
        out += ',';
        out += num(orNan(r.actionsPerMinute));
        out += ',';
        out += num(orNan(r.nashCount));
        out += ',';
        out += num(orNan(r.poa));
        out += '\n';
    }
    return out;
}

std::string toManifest(const ScenarioConfig& cfg, const std::string& axisName,
                       const std::vector<double>& axisValues,
                       const std::vector<std::vector<std::uint64_t>>& repSeeds,
                       std::size_t rowCount) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["experiment"] = toString(cfg.experiment);
    j["axis"] = axisName;
    j["axis_values"] = axisValues;
    j["repetitions"] = cfg.repetitions;
    j["master_seed"] = cfg.masterSeed;
    j["seed_derivation"] =
        "rep_seeds[a][r] = splitmix(splitmix(master_seed, axis_index a), repetition r)";
    j["rep_seeds"] = repSeeds;
    j["rows"] = rowCount;
    if (cfg.experiment == ExperimentKind::Census) {
        j["tree_count"] = baselines::rootedTreeCount(cfg.numRs);
        j["tree_count_formula"] = "(num_rs+1)^(num_rs-1) uplink trees rooted at the BS";
        j["tree_count_note"] =
            "the n^(n-2) labeled-tree count sometimes quoted for this setting counts "
            "unrooted trees on the relays alone and does not match this model";
    }
    j["config_ini"] = emitConfig(cfg);
    return j.dump(2) + "\n";
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("short write to " + path);
}

}  // namespace relnet::report
