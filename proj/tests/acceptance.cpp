// End-to-end acceptance suite.  Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails.
//
//   1  temporal order of the forced problem (4 scheme variants)
//   2  long-time energy bound and monotone decay (3 seeds)
//   3  coarsening scaling-law fits over [1, 1000] (3 stabilization values)
//   4  dense matrix-function oracle equivalence on tiny grids
//   5  invariant suite (operators, phi weights, conservation, formats)

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nss/csv.hpp"
#include "nss/kernels.hpp"
#include "nss/dense_oracle.hpp"
#include "nss/forcing.hpp"
#include "nss/init.hpp"
#include "nss/phi.hpp"
#include "nss/snapshot.hpp"

#include "phi_oracle.hpp"

using namespace nss;

namespace {

const double kAstab = kStabilityThresholdA;
int g_failures = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s: %s\n", pass ? "PASS" : "FAIL", criterion, name,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buf[512];
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

// ---------------------------------------------------------------- criterion 1

void criterion_temporal_order() {
    const GridSpec grid = GridSpec::make(2.0 * std::numbers::pi, 128);
    const ForcedProblem prob{ModelParams::make(0.01), grid};
    std::vector<double> taus;
    for (int k = 1; k <= 6; ++k) taus.push_back(0.005 * std::pow(2.0, -k));

    struct Variant {
        std::string name;
        SchemeParams params;
    };
    const std::vector<Variant> variants = {
        {"sETDMs2 A=1/8", {ModelParams::make(0.01), 0.125, 0.125, Scheme::SETDMS2}},
        {"sETDMs2 A=0.01", {ModelParams::make(0.01), 0.01, 0.125, Scheme::SETDMS2}},
        {"sETDMs2 A=(2+sqrt3)/6", {ModelParams::make(0.01), kAstab, 0.125, Scheme::SETDMS2}},
        {"ETDMs2 kappa=1/8", {ModelParams::make(0.01), 0.0, 0.125, Scheme::ETDMS2}},
    };

    std::vector<ConvergenceReport> reports(variants.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < variants.size(); ++i)
        reports[i] = convergence_study(prob, variants[i].params, taus, 1.0);

    bool pass = true;
    std::ostringstream detail;
    for (size_t i = 0; i < variants.size(); ++i) {
        const double order = reports[i].summary_order;
        if (!(order >= 1.8 && order <= 2.2)) pass = false;
        detail << variants[i].name << " order=" << fmt("%.3f", order) << "; ";
    }
    // per-pair orders approach 2 monotonically down the ladder (the errors
    // here sit far above the roundoff floor)
    for (const ConvergenceReport& rep : reports)
        for (size_t k = 0; k + 1 < rep.pair_orders.size(); ++k)
            if (std::abs(rep.pair_orders[k + 1] - 2.0) >
                std::abs(rep.pair_orders[k] - 2.0) + 0.05) {
                pass = false;
                detail << fmt("order deviation grew at level %zu; ", k + 1);
            }
    // the three stabilized curves agree pairwise within 20% at every tau
    double worst_gap = 0.0;
    for (size_t k = 0; k < taus.size(); ++k)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                const double ea = reports[static_cast<size_t>(a)].rows[k].error;
                const double eb = reports[static_cast<size_t>(b)].rows[k].error;
                worst_gap = std::max(worst_gap, std::abs(ea - eb) / std::min(ea, eb));
            }
    if (worst_gap > 0.20) pass = false;
    detail << fmt("worst A-curve gap %.1f%% (limit 20%%)", 100.0 * worst_gap);
    report(1, "temporal order on the forced problem", pass, detail.str());
}

// ---------------------------------------------------------------- criterion 2

void criterion_energy_bound() {
    const GridSpec grid = GridSpec::make(12.8, 64);
    const SchemeParams params{ModelParams::make(0.005), kAstab, 0.125, Scheme::SETDMS2};
    bool pass = true;
    std::ostringstream detail;
    for (unsigned long long seed : {1ull, 2ull, 3ull}) {
        const Field u0 = project_zero_mean(random_field(grid, seed, 0.05));
        const double e0 = energy(u0, params.model);
        double worst_excess = -1e300, worst_rise = -1e300;
        double prev = e0;
        bool first = true;
        run(u0, params, StepSchedule::single(100.0, 0.004), DiagnosticCadence{10.0, 200.0},
            [&](const Diagnostics& d) {
                worst_excess = std::max(worst_excess, d.energy - e0);
                if (!first) worst_rise = std::max(worst_rise, d.energy - prev);
                prev = d.energy;
                first = false;
            });
        if (!(worst_excess <= 1e-8)) pass = false;
        if (!(worst_rise <= 1e-8 * std::abs(e0))) pass = false;
        detail << fmt("seed %llu: max(E-E0)=%.2e max step rise=%.2e; ", seed, worst_excess,
                      worst_rise);
    }
    report(2, "energy bound and monotone decay", pass, detail.str());
}

// ---------------------------------------------------------------- criterion 3

void criterion_scaling_laws() {
    const GridSpec grid = GridSpec::make(12.8, 128);
    const StepSchedule sched = StepSchedule::make({{200.0, 0.001}, {1000.0, 0.01}});
    const std::vector<double> As = {0.125, 0.01, kAstab};

    struct Fits {
        double energy_a = 0.0, rough_b = 0.0, slope_b = 0.0;
    };
    std::vector<Fits> fits(As.size());

#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < As.size(); ++i) {
        const SchemeParams params{ModelParams::make(0.005), As[i], 0.125, Scheme::SETDMS2};
        const Field u0 = project_zero_mean(random_field(grid, 2024, 0.05));
        TimeSeries e, h, m;
        run(u0, params, sched, DiagnosticCadence{1.0, 200.0}, [&](const Diagnostics& d) {
            e.push(d.t, d.energy);
            h.push(d.t, d.roughness);
            m.push(d.t, d.slope);
        });
        const FitWindow window{1.0, 1000.0};
        fits[i].energy_a = fit_log(e, window).a;
        fits[i].rough_b = fit_power(h, window).b;
        fits[i].slope_b = fit_power(m, window).b;
    }

    bool pass = true;
    std::ostringstream detail;
    for (size_t i = 0; i < As.size(); ++i) {
        if (!(std::abs(fits[i].energy_a - (-39.4)) <= 0.15 * 39.4)) pass = false;
        if (!(fits[i].rough_b >= 0.43 && fits[i].rough_b <= 0.55)) pass = false;
        if (!(fits[i].slope_b >= 0.21 && fits[i].slope_b <= 0.32)) pass = false;
        detail << fmt("A=%.4g: a=%.2f hb=%.4f mb=%.4f; ", As[i], fits[i].energy_a, fits[i].rough_b,
                      fits[i].slope_b);
    }
    double gap_h = 0.0, gap_m = 0.0;
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = a + 1; b < 3; ++b) {
            gap_h = std::max(gap_h, std::abs(fits[a].rough_b - fits[b].rough_b) /
                                        std::min(fits[a].rough_b, fits[b].rough_b));
            gap_m = std::max(gap_m, std::abs(fits[a].slope_b - fits[b].slope_b) /
                                        std::min(fits[a].slope_b, fits[b].slope_b));
        }
    if (gap_h > 0.03 || gap_m > 0.03) pass = false;
    detail << fmt("cross-A gaps: roughness %.2f%%, slope %.2f%% (limit 3%%)", 100.0 * gap_h,
                  100.0 * gap_m);
    report(3, "coarsening scaling-law fits", pass, detail.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion_dense_oracle() {
    bool pass = true;
    std::ostringstream detail;
    double worst = 0.0;
    for (int M : {4, 6, 8}) {
        const GridSpec g = GridSpec::make(2.0 * std::numbers::pi, M);
        for (Scheme s : {Scheme::ETD1, Scheme::ETDMS2, Scheme::SETDMS2}) {
            const SchemeParams p{ModelParams::make(0.01), kAstab, 0.125, s};
            const double dev = oracle_deviation(g, p, 0.05, 42 + static_cast<unsigned>(M), 5);
            worst = std::max(worst, dev);
            if (!(dev < 1e-10)) {
                pass = false;
                detail << fmt("M=%d %s dev=%.2e; ", M, to_string(s).c_str(), dev);
            }
        }
    }
    detail << fmt("worst deviation %.2e (limit 1e-10)", worst);
    report(4, "dense matrix-function oracle equivalence", pass, detail.str());
}

// ---------------------------------------------------------------- criterion 5

bool check(bool ok, const char* what, std::ostringstream& detail) {
    if (!ok) detail << what << " FAILED; ";
    return ok;
}

Field random_resolvable(const GridSpec& g, unsigned long long seed) {
    Field noise = random_field(g, seed, 1.0);
    SpectralField s = forward_transform(noise);
    const int ny = g.points / 2;
    for (int a = 0; a < g.points; ++a) {
        s.at(a, ny) = {0.0, 0.0};
        s.at(ny, a) = {0.0, 0.0};
    }
    return inverse_transform(s);
}

void criterion_invariants() {
    std::ostringstream detail;
    bool pass = true;

    // summation by parts and Parseval
    {
        const GridSpec g = GridSpec::make(2.0 * std::numbers::pi, 16);
        bool sbp = true, parseval = true;
        for (unsigned long long seed : {10ull, 11ull, 12ull}) {
            const Field f = random_resolvable(g, seed);
            const Field h = random_resolvable(g, seed + 40);
            auto [fx, fy] = gradient(f);
            auto [hx, hy] = gradient(h);
            const double scale = norm(f) * norm(h);
            sbp = sbp &&
                  std::abs(inner(f, laplacian(h)) + inner(fx, hx) + inner(fy, hy)) < 1e-10 * scale &&
                  std::abs(inner(f, laplacian(h)) - inner(laplacian(f), h)) < 1e-10 * scale;
            const SpectralField s = forward_transform(f);
            double sq = 0.0;
            for (const auto& c : s.coeffs) sq += std::norm(c);
            parseval = parseval &&
                       std::abs(inner(f, f) - g.length * g.length * sq) < 1e-10 * inner(f, f);
        }
        pass &= check(sbp, "summation-by-parts", detail);
        pass &= check(parseval, "Parseval", detail);
    }

    // beta bound and contraction
    {
        const GridSpec g = GridSpec::make(1.0, 16);
        bool bound = true, contraction = true;
        for (unsigned long long seed : {1ull, 2ull}) {
            const Field vx = random_field(g, seed, 4.0), vy = random_field(g, seed + 9, 4.0);
            const Field wx = random_field(g, seed + 17, 4.0), wy = random_field(g, seed + 23, 4.0);
            auto [bvx, bvy] = beta(vx, vy);
            auto [bwx, bwy] = beta(wx, wy);
            for (size_t i = 0; i < bvx.values.size(); ++i) {
                bound = bound && std::hypot(bvx.values[i], bvy.values[i]) <= 0.5 + 1e-15;
                contraction = contraction &&
                              std::hypot(bvx.values[i] - bwx.values[i], bvy.values[i] - bwy.values[i]) <=
                                  std::hypot(vx.values[i] - wx.values[i], vy.values[i] - wy.values[i]) +
                                      1e-14;
            }
        }
        pass &= check(bound, "beta half-bound", detail);
        pass &= check(contraction, "beta contraction", detail);
    }

    // mass conservation over 1e4 steps, all schemes
    {
        const GridSpec g = GridSpec::make(12.8, 32);
        bool mass_ok = true;
        for (Scheme s : {Scheme::ETD1, Scheme::ETDMS2, Scheme::SETDMS2}) {
            const SchemeParams p{ModelParams::make(0.005), kAstab, 0.125, s};
            Field u0 = random_field(g, 5, 0.05);
            for (double& v : u0.values) v += 0.125;
            const double m0 = mass(u0);
            const RunResult res = run(u0, p, StepSchedule::single(40.0, 0.004));
            mass_ok = mass_ok && std::abs(mass(res.u) - m0) < 1e-12;
        }
        pass &= check(mass_ok, "mass conservation over 1e4 steps", detail);
    }

    // phi accuracy against extended-precision quadrature
    {
        bool phi_ok = true;
        const double tau = 0.05;
        for (int e10 = -12; e10 <= 2 && phi_ok; ++e10) {
            for (double mant : {1.0, 3.3}) {
                const double z = mant * std::pow(10.0, e10);
                if (z > 1e2) continue;
                const double x = z / tau;
                const long double p0 = test::phi0_oracle(x, tau);
                const long double p1 = test::phi1_oracle(x, tau);
                phi_ok = phi_ok &&
                         std::abs(phi0_scalar(x, tau) - static_cast<double>(p0)) <=
                             1e-12 * static_cast<double>(p0) &&
                         std::abs(phi1_scalar(x, tau) - static_cast<double>(p1)) <=
                             1e-12 * static_cast<double>(p1);
            }
        }
        pass &= check(phi_ok, "phi-function accuracy", detail);
    }

    // linear-flow exactness
    {
        const GridSpec g = GridSpec::make(2.0 * std::numbers::pi, 8);
        bool linear_ok = true;
        for (Scheme s : {Scheme::ETD1, Scheme::ETDMS2, Scheme::SETDMS2}) {
            // disable the whole explicit slot (f_N off, kappa = 0)
            const SchemeParams p{ModelParams::make(0.01), kAstab, 0.0, s};
            const double tau = 0.3;
            const SymbolTable table = build_symbols(g, p, tau);
            Field u0(g);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    u0.at(i, j) = std::sin(g.node_x(i) + g.node_y(j));
            Stepper st(g, p, [](const SpectralField& uh, double) { return SpectralField(uh.grid); });
            st.seed(u0, 0.0);
            st.start_segment(tau);
            for (int i = 0; i < 12; ++i) st.step();
            const double decay = std::pow(table.expK[1 * 8 + 1], 12);
            double worst = 0.0;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    worst = std::max(worst, std::abs(st.u().at(i, j) - decay * u0.at(i, j)));
            linear_ok = linear_ok && worst <= 1e-12 * decay + 1e-15;
        }
        pass &= check(linear_ok, "linear-flow exactness", detail);
    }

    // CSV and snapshot round trips
    {
        namespace fs = std::filesystem;
        DiagnosticsTable t;
        std::mt19937_64 rng(4);
        for (int i = 0; i < 64; ++i) {
            auto r = [&] {
                return std::ldexp(static_cast<double>(rng() >> 11),
                                  -30 + static_cast<int>(rng() % 40));
            };
            t.rows.push_back({r(), -r(), r(), r(), r()});
        }
        std::ostringstream os;
        emit_csv(t, os);
        std::istringstream is(os.str());
        const DiagnosticsTable back = parse_diagnostics_csv(is);
        bool csv_ok = back.rows.size() == t.rows.size();
        for (size_t i = 0; csv_ok && i < t.rows.size(); ++i)
            csv_ok = back.rows[i].t == t.rows[i].t && back.rows[i].energy == t.rows[i].energy &&
                     back.rows[i].roughness == t.rows[i].roughness &&
                     back.rows[i].slope == t.rows[i].slope && back.rows[i].mass == t.rows[i].mass;
        pass &= check(csv_ok, "CSV bitwise round trip", detail);

        const GridSpec g = GridSpec::make(12.8, 16);
        Snapshot snap{{1, 16, 12.8, 2.5, 0.005, kAstab, 0.125, 2, 7}, random_field(g, 3, 0.4)};
        const std::string path = (fs::temp_directory_path() / "nss_acceptance_snap.bin").string();
        write_snapshot(snap, path);
        const Snapshot loaded = read_snapshot(path);
        bool snap_ok = loaded.header.t == snap.header.t && loaded.header.seed == snap.header.seed;
        for (size_t i = 0; snap_ok && i < snap.u.values.size(); ++i)
            snap_ok = loaded.u.values[i] == snap.u.values[i];
        std::remove(path.c_str());
        pass &= check(snap_ok, "snapshot bitwise round trip", detail);
    }

    // determinism under a fixed seed
    {
        const GridSpec g = GridSpec::make(12.8, 32);
        const SchemeParams p{ModelParams::make(0.005), kAstab, 0.125, Scheme::SETDMS2};
        auto trace = [&] {
            std::vector<Diagnostics> out;
            const Field u0 = project_zero_mean(random_field(g, 31, 0.05));
            run(u0, p, StepSchedule::single(1.0, 0.005), DiagnosticCadence{1e9, 200.0},
                [&](const Diagnostics& d) { out.push_back(d); });
            return out;
        };
        const auto a = trace(), b = trace();
        bool det_ok = a.size() == b.size();
        for (size_t i = 0; det_ok && i < a.size(); ++i)
            det_ok = a[i].t == b[i].t && a[i].energy == b[i].energy &&
                     a[i].roughness == b[i].roughness && a[i].slope == b[i].slope &&
                     a[i].mass == b[i].mass;
        pass &= check(det_ok, "fixed-seed determinism", detail);
    }

    if (pass) detail << "all sub-checks passed";
    report(5, "invariant suites", pass, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    kernels::tune_allocator();
    // criteria can be cherry-picked for development: acceptance 1 4 5
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    auto wanted = [&](int c) {
        return selected.empty() || std::find(selected.begin(), selected.end(), c) != selected.end();
    };

    if (wanted(1)) criterion_temporal_order();
    if (wanted(2)) criterion_energy_bound();
    if (wanted(3)) criterion_scaling_laws();
    if (wanted(4)) criterion_dense_oracle();
    if (wanted(5)) criterion_invariants();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
