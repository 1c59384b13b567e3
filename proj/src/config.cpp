#include "relnet/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace relnet {

void ScenarioConfig::validate() const {
    try {
        radio.validate();
        traffic.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
    if (!(areaSideM > 0)) throw ConfigError("area_m must be positive");
    if (numRs < 1) throw ConfigError("num_rs must be >= 1");
    if (numMs < 0) throw ConfigError("num_ms must be >= 0");
    if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
    if (!(speedKmh >= 0)) throw ConfigError("speed_kmh must be nonnegative");
    if (!(durationS > 0)) throw ConfigError("duration_s must be positive");
    if (enumerationCap < 1) throw ConfigError("enumeration_cap must be >= 1");
    if (iterationCap < 1) throw ConfigError("iteration_cap must be >= 1");
    for (int id : moverIds) {
        bool ok = (movers == MoverKind::Rs) ? (id >= 1 && id <= numRs)
                                            : (id >= 0 && id < numMs);
        if (!ok) throw ConfigError("mover_ids entry out of range: " + std::to_string(id));
    }
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

double parseDouble(const std::string& key, const std::string& v) {
    const char* p = v.c_str();
    char* end = nullptr;
    double x = std::strtod(p, &end);
    if (end == p || *end != '\0')
        throw ConfigError(key + ": expected a number, got '" + v + "'");
    return x;
}

int parseInt(const std::string& key, const std::string& v) {
    const char* p = v.c_str();
    char* end = nullptr;
    long long x = std::strtoll(p, &end, 10);
    if (end == p || *end != '\0')
        throw ConfigError(key + ": expected an integer, got '" + v + "'");
    if (x < INT32_MIN || x > INT32_MAX) throw ConfigError(key + ": out of range");
    return static_cast<int>(x);
}

std::uint64_t parseSeed(const std::string& key, const std::string& v) {
    const char* p = v.c_str();
    char* end = nullptr;
    unsigned long long x = std::strtoull(p, &end, 10);
    if (end == p || *end != '\0')
        throw ConfigError(key + ": expected an unsigned integer, got '" + v + "'");
    return x;
}

// watts, or "<x> dBm"
double parseNoise(const std::string& key, const std::string& raw) {
    std::string v = trim(raw);
    std::string l = lower(v);
    if (l.size() > 3 && l.substr(l.size() - 3) == "dbm") {
        double dbm = parseDouble(key, trim(v.substr(0, v.size() - 3)));
        return std::pow(10.0, (dbm - 30.0) / 10.0);
    }
    return parseDouble(key, v);
}

std::vector<double> parseDoubleList(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parseDouble(key, item));
    }
    return out;
}

std::vector<int> parseIntList(const std::string& key, const std::string& v) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parseInt(key, item));
    }
    return out;
}

std::string fmtDouble(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

template <typename T>
std::string joinList(const std::vector<T>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        if constexpr (std::is_same_v<T, double>)
            out += fmtDouble(xs[i]);
        else
            out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

std::string toString(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Snapshot: return "snapshot";
        case ExperimentKind::Sweep: return "sweep";
        case ExperimentKind::Mobility: return "mobility";
        case ExperimentKind::Census: return "census";
    }
    return "?";
}

std::string toString(SweepAxis a) {
    switch (a) {
        case SweepAxis::NumMs: return "num_ms";
        case SweepAxis::NumRs: return "num_rs";
        case SweepAxis::Beta: return "beta";
        case SweepAxis::Speed: return "speed";
    }
    return "?";
}

std::string toString(MoverKind m) { return m == MoverKind::Rs ? "rs" : "ms"; }

std::string toString(baselines::Objective o) {
    return o == baselines::Objective::MeanMsUtility ? "ms_utility" : "rs_utility";
}

std::string toString(DeltaMode d) { return d == DeltaMode::Subtree ? "subtree" : "children"; }

ScenarioConfig parseConfig(const std::string& text) {
    ScenarioConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(ss, line)) {
        ++lineNo;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineNo) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));

        if (key == "area_m") cfg.areaSideM = parseDouble(key, val);
        else if (key == "num_rs") cfg.numRs = parseInt(key, val);
        else if (key == "num_ms") cfg.numMs = parseInt(key, val);
        else if (key == "tx_power_rs_w") cfg.radio.txPowerRsW = parseDouble(key, val);
        else if (key == "tx_power_ms_w") cfg.radio.txPowerMsW = parseDouble(key, val);
        else if (key == "noise") cfg.radio.noiseW = parseNoise(key, val);
        else if (key == "bandwidth_hz") cfg.radio.bandwidthHz = parseDouble(key, val);
        else if (key == "path_loss_exponent") cfg.radio.pathLossExponent = parseDouble(key, val);
        else if (key == "packet_bits") cfg.traffic.packetBits = parseInt(key, val);
        else if (key == "ms_arrival_rate") cfg.traffic.msArrivalRate = parseDouble(key, val);
        else if (key == "hello_rate") cfg.traffic.helloRate = parseDouble(key, val);
        else if (key == "beta") cfg.traffic.beta = parseDouble(key, val);
        else if (key == "epsilon_fraction") cfg.traffic.epsilonFraction = parseDouble(key, val);
        else if (key == "history_threshold") cfg.traffic.historyThreshold = parseInt(key, val);
        else if (key == "critical_threshold") cfg.traffic.criticalThreshold = parseInt(key, val);
        else if (key == "reform_period_s") cfg.traffic.reformPeriodS = parseDouble(key, val);
        else if (key == "delta_mode") {
            std::string v = lower(val);
            if (v == "subtree") cfg.traffic.deltaMode = DeltaMode::Subtree;
            else if (v == "children") cfg.traffic.deltaMode = DeltaMode::Children;
            else throw ConfigError(key + ": expected subtree or children, got '" + val + "'");
        } else if (key == "experiment") {
            std::string v = lower(val);
            if (v == "snapshot") cfg.experiment = ExperimentKind::Snapshot;
            else if (v == "sweep") cfg.experiment = ExperimentKind::Sweep;
            else if (v == "mobility") cfg.experiment = ExperimentKind::Mobility;
            else if (v == "census") cfg.experiment = ExperimentKind::Census;
            else throw ConfigError(key + ": unknown experiment '" + val + "'");
        } else if (key == "sweep_axis") {
            std::string v = lower(val);
            if (v == "num_ms") cfg.sweepAxis = SweepAxis::NumMs;
            else if (v == "num_rs") cfg.sweepAxis = SweepAxis::NumRs;
            else if (v == "beta") cfg.sweepAxis = SweepAxis::Beta;
            else if (v == "speed") cfg.sweepAxis = SweepAxis::Speed;
            else throw ConfigError(key + ": unknown axis '" + val + "'");
        } else if (key == "sweep_values") cfg.sweepValues = parseDoubleList(key, val);
        else if (key == "repetitions") cfg.repetitions = parseInt(key, val);
        else if (key == "master_seed") {
            if (lower(val) == "random") {
                std::random_device rd;
                cfg.masterSeed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
            } else {
                cfg.masterSeed = parseSeed(key, val);
            }
        } else if (key == "objective") {
            std::string v = lower(val);
            if (v == "ms_utility") cfg.objective = baselines::Objective::MeanMsUtility;
            else if (v == "rs_utility") cfg.objective = baselines::Objective::MeanRsUtility;
            else throw ConfigError(key + ": unknown objective '" + val + "'");
        } else if (key == "speed_kmh") cfg.speedKmh = parseDouble(key, val);
        else if (key == "duration_s") cfg.durationS = parseDouble(key, val);
        else if (key == "movers") {
            std::string v = lower(val);
            if (v == "rs") cfg.movers = MoverKind::Rs;
            else if (v == "ms") cfg.movers = MoverKind::Ms;
            else throw ConfigError(key + ": expected rs or ms, got '" + val + "'");
        } else if (key == "mover_ids") cfg.moverIds = parseIntList(key, val);
        else if (key == "out_dir") cfg.outDir = val;
        else if (key == "jobs") cfg.jobs = parseInt(key, val);
        else if (key == "enumeration_cap") cfg.enumerationCap = parseInt(key, val);
        else if (key == "iteration_cap") cfg.iterationCap = parseInt(key, val);
        else throw ConfigError("unknown key '" + key + "' on line " + std::to_string(lineNo));
    }
    cfg.validate();
    return cfg;
}

std::string emitConfig(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "# relay uplink simulator configuration\n";
    out << "area_m = " << fmtDouble(cfg.areaSideM) << "\n";
    out << "num_rs = " << cfg.numRs << "\n";
    out << "num_ms = " << cfg.numMs << "\n";
    out << "tx_power_rs_w = " << fmtDouble(cfg.radio.txPowerRsW) << "\n";
    out << "tx_power_ms_w = " << fmtDouble(cfg.radio.txPowerMsW) << "\n";
    out << "noise = " << fmtDouble(cfg.radio.noiseW) << "\n";
    out << "bandwidth_hz = " << fmtDouble(cfg.radio.bandwidthHz) << "\n";
    out << "path_loss_exponent = " << fmtDouble(cfg.radio.pathLossExponent) << "\n";
    out << "packet_bits = " << cfg.traffic.packetBits << "\n";
    out << "ms_arrival_rate = " << fmtDouble(cfg.traffic.msArrivalRate) << "\n";
    out << "hello_rate = " << fmtDouble(cfg.traffic.helloRate) << "\n";
    out << "beta = " << fmtDouble(cfg.traffic.beta) << "\n";
    out << "epsilon_fraction = " << fmtDouble(cfg.traffic.epsilonFraction) << "\n";
    out << "history_threshold = " << cfg.traffic.historyThreshold << "\n";
    out << "critical_threshold = " << cfg.traffic.criticalThreshold << "\n";
    out << "reform_period_s = " << fmtDouble(cfg.traffic.reformPeriodS) << "\n";
    out << "delta_mode = " << toString(cfg.traffic.deltaMode) << "\n";
    out << "experiment = " << toString(cfg.experiment) << "\n";
    out << "sweep_axis = " << toString(cfg.sweepAxis) << "\n";
    out << "sweep_values = " << joinList(cfg.sweepValues) << "\n";
    out << "repetitions = " << cfg.repetitions << "\n";
    out << "master_seed = " << cfg.masterSeed << "\n";
    out << "objective = " << toString(cfg.objective) << "\n";
    out << "speed_kmh = " << fmtDouble(cfg.speedKmh) << "\n";
    out << "duration_s = " << fmtDouble(cfg.durationS) << "\n";
    out << "movers = " << toString(cfg.movers) << "\n";
    out << "mover_ids = " << joinList(cfg.moverIds) << "\n";
    out << "out_dir = " << cfg.outDir << "\n";
    out << "jobs = " << cfg.jobs << "\n";
    out << "enumeration_cap = " << cfg.enumerationCap << "\n";
    out << "iteration_cap = " << cfg.iterationCap << "\n";
    return out.str();
}

ScenarioConfig loadConfigFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseConfig(ss.str());
}

}  // namespace relnet
