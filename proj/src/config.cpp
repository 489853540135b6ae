#include "nss/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace nss {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key, int line) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || trim(end) != "")
        throw ParseError("value for '" + key + "' is not a number: '" + v + "'", line);
    return x;
}

long long to_int(const std::string& v, const std::string& key, int line) {
    const double x = to_double(v, key, line);
    if (x != std::floor(x)) throw ParseError("value for '" + key + "' is not an integer", line);
    return static_cast<long long>(x);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, std::pair<std::string, int>> kv;

    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", line_no);
        if (value.empty()) throw ParseError("empty value for '" + key + "'", line_no);
        kv[key] = {value, line_no};
    }

    auto take = [&](const char* key) -> std::optional<std::pair<std::string, int>> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        auto out = it->second;
        kv.erase(it);
        return out;
    };

    for (const char* key : {"L", "M", "eps2", "T"})
        if (!kv.count(key)) throw ValidationError(std::string("missing mandatory key '") + key + "'", key);

    {
        auto [v, ln] = *take("L");
        cfg.L = to_double(v, "L", ln);
        if (!(cfg.L > 0.0)) throw ValidationError("L must be positive", "L");
    }
    {
        auto [v, ln] = *take("M");
        const long long m = to_int(v, "M", ln);
        if (m < 4 || m % 2 != 0) throw ValidationError("M must be even and >= 4", "M");
        cfg.M = static_cast<int>(m);
    }
    {
        auto [v, ln] = *take("eps2");
        cfg.eps2 = to_double(v, "eps2", ln);
        if (!(cfg.eps2 > 0.0)) throw ValidationError("eps2 must be positive", "eps2");
    }
    {
        auto [v, ln] = *take("T");
        cfg.T = to_double(v, "T", ln);
        if (cfg.T < 0.0) throw ValidationError("T must be nonnegative", "T");
    }

    double tau = 0.001;
    if (auto o = take("tau")) {
        tau = to_double(o->first, "tau", o->second);
        if (!(tau > 0.0)) throw ValidationError("tau must be positive", "tau");
    }
    if (auto o = take("scheme")) {
        try {
            cfg.scheme = scheme_from_string(o->first);
        } catch (const DomainError& e) {
            throw ValidationError(e.what(), "scheme");
        }
    }
    if (auto o = take("A")) {
        cfg.A = to_double(o->first, "A", o->second);
        if (cfg.A < 0.0) throw ValidationError("A must be nonnegative", "A");
    }
    if (auto o = take("kappa")) {
        cfg.kappa = to_double(o->first, "kappa", o->second);
        if (cfg.kappa < 0.0) throw ValidationError("kappa must be nonnegative", "kappa");
    }
    if (auto o = take("seed"))
        cfg.seed = static_cast<unsigned long long>(to_int(o->first, "seed", o->second));
    if (auto o = take("outdir")) cfg.outdir = o->first;
    if (auto o = take("diag_dense_until"))
        cfg.cadence.dense_until = to_double(o->first, "diag_dense_until", o->second);
    if (auto o = take("diag_per_decade")) {
        cfg.cadence.per_decade = to_double(o->first, "diag_per_decade", o->second);
        if (!(cfg.cadence.per_decade > 0.0))
            throw ValidationError("diag_per_decade must be positive", "diag_per_decade");
    }
    if (auto o = take("snapshots")) {
        for (const std::string& item : split(o->first, ','))
            cfg.snapshot_times.push_back(to_double(item, "snapshots", o->second));
        std::sort(cfg.snapshot_times.begin(), cfg.snapshot_times.end());
    }
    if (auto o = take("forcing")) {
        if (o->first == "manufactured")
            cfg.forced = true;
        else if (o->first != "none")
            throw ValidationError("forcing must be 'none' or 'manufactured'", "forcing");
    }
    if (auto o = take("initial")) {
        const std::string& v = o->first;
        const auto colon = v.find(':');
        const std::string head = colon == std::string::npos ? v : trim(v.substr(0, colon));
        const std::string rest = colon == std::string::npos ? "" : trim(v.substr(colon + 1));
        if (head == "random") {
            cfg.initial.kind = InitialKind::Random;
            if (!rest.empty()) {
                cfg.initial.amplitude = to_double(rest, "initial", o->second);
                if (!(cfg.initial.amplitude > 0.0))
                    throw ValidationError("random amplitude must be positive", "initial");
            }
        } else if (head == "expr") {
            if (rest.empty()) throw ValidationError("expr initial needs an expression", "initial");
            cfg.initial.kind = InitialKind::Expression;
            cfg.initial.expression = rest;
        } else if (head == "snapshot") {
            if (rest.empty()) throw ValidationError("snapshot initial needs a path", "initial");
            cfg.initial.kind = InitialKind::Snapshot;
            cfg.initial.path = rest;
        } else {
            throw ValidationError("initial must be random[:amp], expr:<e> or snapshot:<path>",
                                  "initial");
        }
    }
    if (auto o = take("conv_tau0")) {
        cfg.conv_tau0 = to_double(o->first, "conv_tau0", o->second);
        if (!(cfg.conv_tau0 > 0.0)) throw ValidationError("conv_tau0 must be positive", "conv_tau0");
    }
    if (auto o = take("conv_levels")) {
        const long long n = to_int(o->first, "conv_levels", o->second);
        if (n < 2) throw ValidationError("conv_levels must be >= 2", "conv_levels");
        cfg.conv_levels = static_cast<int>(n);
    }

    std::vector<StepSchedule::Segment> segments;
    if (auto o = take("schedule")) {
        for (const std::string& item : split(o->first, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw ParseError("schedule segment must be 't_end:tau'", o->second);
            segments.push_back({to_double(trim(item.substr(0, colon)), "schedule", o->second),
                                to_double(trim(item.substr(colon + 1)), "schedule", o->second)});
        }
        if (segments.empty() || std::abs(segments.back().t_end - cfg.T) > 1e-9 * std::max(1.0, cfg.T))
            throw ValidationError("last schedule segment must end at T", "schedule");
    } else {
        segments.push_back({cfg.T, tau});
        // a zero-length horizon still needs a well-formed single segment
    }
    cfg.schedule = StepSchedule::make(std::move(segments));

    if (cfg.forced && std::abs(cfg.L - 2.0 * std::numbers::pi) > 1e-12)
        throw ValidationError("manufactured forcing requires L = 2*pi", "forcing");

    if (!kv.empty())
        throw ValidationError("unknown key '" + kv.begin()->first + "'", kv.begin()->first);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

}  // namespace nss
