// Command-line front end: run simulations from config files, drive the
// temporal-convergence study, fit diagnostic series, and cross-check the
// steppers against the dense oracle.
//
// Exit codes: 0 success, 2 config error, 3 solver blow-up, 4 I/O error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "nss/csv.hpp"
#include "nss/kernels.hpp"
#include "nss/dense_oracle.hpp"
#include "nss/forcing.hpp"
#include "nss/init.hpp"
#include "nss/snapshot.hpp"

namespace fs = std::filesystem;
using namespace nss;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

SnapshotHeader header_for(const RunConfig& cfg, double t) {
    SnapshotHeader h;
    h.M = static_cast<std::uint32_t>(cfg.M);
    h.L = cfg.L;
    h.t = t;
    h.eps2 = cfg.eps2;
    h.A = cfg.A;
    h.kappa = cfg.kappa;
    h.scheme = static_cast<std::uint32_t>(cfg.scheme);
    h.seed = cfg.seed;
    return h;
}

void warn_parameter_regimes(const RunConfig& cfg) {
    if (cfg.scheme == Scheme::SETDMS2 && cfg.A < kStabilityThresholdA)
        std::fprintf(stderr,
                     "note: A = %g is below the provable energy-stability threshold %.9f\n",
                     cfg.A, kStabilityThresholdA);
    for (const auto& seg : cfg.schedule.segments)
        if (seg.tau > 0.125) {
            std::fprintf(stderr, "note: tau = %g exceeds 1/8; the convergence theory assumed "
                                 "smaller steps\n",
                         seg.tau);
            break;
        }
}

int cmd_run(const std::string& config_path, const std::optional<std::string>& resume_path,
            const std::optional<std::string>& checkpoint_out) {
    const RunConfig cfg = load_config(config_path);
    warn_parameter_regimes(cfg);
    fs::create_directories(cfg.outdir);

    const SchemeParams params = cfg.scheme_params();
    std::optional<ForcedProblem> forced;
    SourceFn source;
    if (cfg.forced) {
        forced = ForcedProblem{params.model, cfg.grid()};
        source = forced->source();
    }

    DiagnosticsTable table;
    const DiagnosticsObserver observer = [&](const Diagnostics& d) { table.rows.push_back(d); };

    std::vector<double> snapshot_times = cfg.snapshot_times;
    size_t next_snapshot = 0;
    const StepHook hook = [&](const Stepper& st) {
        while (next_snapshot < snapshot_times.size() &&
               st.t() + 0.5 * st.tau() >= snapshot_times[next_snapshot]) {
            Snapshot snap{header_for(cfg, st.t()), st.u()};
            char stamp[32];
            std::snprintf(stamp, sizeof(stamp), "%g", snapshot_times[next_snapshot]);
            const std::string name = std::string("snapshot_t") + stamp + ".bin";
            write_snapshot(snap, (fs::path(cfg.outdir) / name).string());
            ++next_snapshot;
        }
    };

    RunResult result;
    if (resume_path) {
        const Checkpoint ck = read_checkpoint(*resume_path);
        if (static_cast<int>(ck.header.M) != cfg.M || ck.header.L != cfg.L)
            throw ValidationError("checkpoint grid does not match config", "resume");
        ResumePoint state = ck.state;
        relocate_cursor(state, cfg.schedule);
        result = run_resumed(state, params, cfg.schedule, cfg.cadence, observer, source, hook);
    } else {
        result = run(make_initial(cfg), params, cfg.schedule, cfg.cadence, observer, source, hook);
    }

    const std::string diag_path = (fs::path(cfg.outdir) / "diagnostics.csv").string();
    write_csv_file(table, diag_path);
    std::printf("run complete: T=%g steps=%ld diagnostics=%s\n", result.t, result.steps,
                diag_path.c_str());

    if (cfg.forced) {
        const double err = forced->relative_error(result.u, result.t);
        std::printf("relative error against the exact solution at T=%g: %.12e\n", result.t, err);
    }
    if (checkpoint_out) {
        write_checkpoint(Checkpoint{header_for(cfg, result.state.t), result.state},
                         *checkpoint_out);
        std::printf("checkpoint written to %s\n", checkpoint_out->c_str());
    }
    return 0;
}

int cmd_converge(const std::string& config_path) {
    const RunConfig cfg = load_config(config_path);
    if (!cfg.forced)
        throw ValidationError("converge needs 'forcing = manufactured' in the config", "forcing");
    warn_parameter_regimes(cfg);
    fs::create_directories(cfg.outdir);

    const ForcedProblem prob{ModelParams::make(cfg.eps2), cfg.grid()};
    std::vector<double> taus;
    for (int k = 1; k <= cfg.conv_levels; ++k) taus.push_back(cfg.conv_tau0 * std::pow(2.0, -k));
    const ConvergenceReport rep = convergence_study(prob, cfg.scheme_params(), taus, cfg.T);

    std::printf("%-12s %-14s %s\n", "tau", "rel_error", "order");
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        if (i == 0)
            std::printf("%-12.6g %-14.6e %s\n", rep.rows[i].tau, rep.rows[i].error, "-");
        else
            std::printf("%-12.6g %-14.6e %.4f\n", rep.rows[i].tau, rep.rows[i].error,
                        rep.pair_orders[i - 1]);
    }
    std::printf("summary order (least squares): %.4f\n", rep.summary_order);
    const std::string path = (fs::path(cfg.outdir) / "convergence.csv").string();
    write_csv_file(rep, path);
    std::printf("report written to %s\n", path.c_str());
    return 0;
}

int cmd_fit(const std::string& csv_path, const std::string& model, const std::string& column_name,
            double w_lo, double w_hi) {
    const DiagnosticsTable table = read_csv_file(csv_path);
    const TimeSeries series = column(table, column_name);
    const FitWindow window{w_lo, w_hi};
    FitResult r;
    if (model == "log")
        r = fit_log(series, window);
    else if (model == "power")
        r = fit_power(series, window);
    else
        throw ValidationError("--model must be log or power", "model");
    if (model == "log")
        std::printf("%s ~ a*ln(t) + b on [%g, %g]: a = %.6g  b = %.6g  rms = %.3e  (n in window)\n",
                    column_name.c_str(), w_lo, w_hi, r.a, r.b, r.rms_residual);
    else
        std::printf("%s ~ a*t^b on [%g, %g]: a = %.6g  b = %.6g  rms = %.3e\n",
                    column_name.c_str(), w_lo, w_hi, r.a, r.b, r.rms_residual);
    return 0;
}

int cmd_oracle(int M) {
    const GridSpec g = GridSpec::make(2.0 * std::numbers::pi, M);
    const double Astab = kStabilityThresholdA;
    bool ok = true;
    for (Scheme s : {Scheme::ETD1, Scheme::ETDMS2, Scheme::SETDMS2}) {
        const SchemeParams p{ModelParams::make(0.01), Astab, 0.125, s};
        const double dev = oracle_deviation(g, p, 0.05, 42, 5);
        const bool pass = dev < 1e-10;
        ok = ok && pass;
        std::printf("%-8s max deviation from dense oracle over 5 steps: %.3e  [%s]\n",
                    to_string(s).c_str(), dev, pass ? "ok" : "FAIL");
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    kernels::tune_allocator();
    CLI::App app{"Fourier pseudo-spectral solver for the 2-D no-slope-selection thin-film "
                 "growth equation (stabilized ETD multistep time stepping)"};
    app.require_subcommand(1);

    std::string config_path, csv_path;
    std::string fit_model = "log", fit_column = "energy", window = "1,1000";
    std::optional<std::string> resume_path, checkpoint_out;
    int oracle_m = 8;

    auto* c_run = app.add_subcommand("run", "integrate a config file");
    c_run->add_option("config", config_path, "config file")->required();
    c_run->add_option("--resume", resume_path, "continue from a checkpoint file");
    c_run->add_option("--checkpoint", checkpoint_out, "write a checkpoint at the end");

    auto* c_conv = app.add_subcommand("converge", "temporal-convergence study");
    c_conv->add_option("config", config_path, "config file (forcing = manufactured)")->required();

    auto* c_fit = app.add_subcommand("fit", "fit a diagnostics CSV column");
    c_fit->add_option("csv", csv_path, "diagnostics CSV")->required();
    c_fit->add_option("--model", fit_model, "log | power");
    c_fit->add_option("--column", fit_column, "energy | roughness | slope");
    c_fit->add_option("--window", window, "t_lo,t_hi (default 1,1000)");

    auto* c_oracle = app.add_subcommand("oracle", "dense-oracle cross check");
    c_oracle->add_option("M", oracle_m, "grid points per dimension (small!)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_run->parsed()) return cmd_run(config_path, resume_path, checkpoint_out);
        if (c_conv->parsed()) return cmd_converge(config_path);
        if (c_fit->parsed()) {
            const auto comma = window.find(',');
            if (comma == std::string::npos)
                throw ValidationError("--window must be t_lo,t_hi", "window");
            return cmd_fit(csv_path, fit_model, fit_column,
                           parse_double(window.substr(0, comma)),
                           parse_double(window.substr(comma + 1)));
        }
        if (c_oracle->parsed()) return cmd_oracle(oracle_m);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "config error (line %d): %s\n", e.line, e.what());
        return kExitConfig;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "config error (%s): %s\n", e.field.c_str(), e.what());
        return kExitConfig;
    } catch (const NonFinite& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return kExitSolver;
    } catch (const SnapshotFormatError& e) {
        std::fprintf(stderr, "file format error: %s\n", e.what());
        return kExitIo;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
