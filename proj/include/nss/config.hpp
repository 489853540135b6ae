#pragma once

// Plain-text run configuration: `key = value` lines, '#' comments.
// Mandatory keys: L, M, eps2, T.  Everything else has defaults.

#include <optional>
#include <string>
#include <vector>

#include "nss/stepper.hpp"

namespace nss {

enum class InitialKind { Random, Expression, Snapshot };

struct InitialSpec {
    InitialKind kind = InitialKind::Random;
    double amplitude = 0.05;  // random mode
    std::string expression;   // expression mode
    std::string path;         // snapshot mode
};

struct RunConfig {
    double L = 0.0;
    int M = 0;
    double eps2 = 0.0;
    Scheme scheme = Scheme::SETDMS2;
    double A = kStabilityThresholdA;
    double kappa = 0.125;
    double T = 0.0;
    StepSchedule schedule;  // built from `schedule` or from `tau`
    unsigned long long seed = 0;
    InitialSpec initial;
    std::string outdir = "out";
    DiagnosticCadence cadence;           // diag_dense_until, diag_per_decade
    std::vector<double> snapshot_times;  // `snapshots = t1, t2, ...`
    bool forced = false;                 // `forcing = manufactured`

    // converge subcommand inputs
    double conv_tau0 = 0.005;
    int conv_levels = 6;

    SchemeParams scheme_params() const {
        return SchemeParams{ModelParams::make(eps2), A, kappa, scheme};
    }
    GridSpec grid() const { return GridSpec::make(L, M); }
};

// Throws ParseError (with line number) on malformed text and ValidationError
// (naming the field) on bad or missing values.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace nss
