#include "nss/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "nss/kernels.hpp"

namespace nss {
namespace {

// FFTW planning is not thread-safe; executing independent plans is.  Each
// thread keeps its own plan/buffer cache per grid size so concurrent
// trajectories never share a workspace.  FFTW_ESTIMATE keeps plan selection
// deterministic, which the bitwise-reproducibility contract relies on.
std::mutex g_planner_mutex;

struct PlanSet {
    int m = 0;
    fftw_complex* buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    explicit PlanSet(int M) : m(M) {
        std::lock_guard<std::mutex> lock(g_planner_mutex);
        buf = fftw_alloc_complex(static_cast<size_t>(M) * M);
        fwd = fftw_plan_dft_2d(M, M, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_2d(M, M, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~PlanSet() {
        std::lock_guard<std::mutex> lock(g_planner_mutex);
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (buf) fftw_free(buf);
    }
    PlanSet(const PlanSet&) = delete;
    PlanSet& operator=(const PlanSet&) = delete;
};

PlanSet& plans_for(int M) {
    thread_local std::map<int, std::unique_ptr<PlanSet>> cache;
    auto it = cache.find(M);
    if (it == cache.end()) it = cache.emplace(M, std::make_unique<PlanSet>(M)).first;
    return *it->second;
}

std::complex<double>* as_std(fftw_complex* p) {
    return reinterpret_cast<std::complex<double>*>(p);
}

}  // namespace

SpectralField forward_transform(const Field& f) {
    const int M = f.grid.points;
    const std::ptrdiff_t n = f.grid.size();
    PlanSet& ps = plans_for(M);
    std::complex<double>* buf = as_std(ps.buf);
#pragma omp parallel for schedule(static) if (n >= kernels::kParallelCutoff)
    for (std::ptrdiff_t i = 0; i < n; ++i) buf[i] = {f.values[static_cast<size_t>(i)], 0.0};
    fftw_execute(ps.fwd);
    SpectralField out(f.grid);
    const double scale = 1.0 / (static_cast<double>(M) * M);
#pragma omp parallel for schedule(static) if (n >= kernels::kParallelCutoff)
    for (std::ptrdiff_t i = 0; i < n; ++i) out.coeffs[static_cast<size_t>(i)] = buf[i] * scale;
    return out;
}

Field inverse_transform(const SpectralField& s) {
    const int M = s.grid.points;
    const std::ptrdiff_t n = s.grid.size();
    PlanSet& ps = plans_for(M);
    std::complex<double>* buf = as_std(ps.buf);
    // 1-norm of the components bounds |.| within a factor sqrt(2); plenty
    // for a 1e-10 threshold and much cheaper than hypot per mode
    std::vector<double> row_max(static_cast<size_t>(M), 0.0);
#pragma omp parallel for schedule(static) if (n >= kernels::kParallelCutoff)
    for (int r = 0; r < M; ++r) {
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(r) * M;
        double m = 0.0;
        for (int c = 0; c < M; ++c) {
            const std::complex<double> v = s.coeffs[static_cast<size_t>(off + c)];
            buf[off + c] = v;
            m = std::max(m, std::abs(v.real()) + std::abs(v.imag()));
        }
        row_max[static_cast<size_t>(r)] = m;
    }
    double max_coeff = 0.0;
    for (double m : row_max) max_coeff = std::max(max_coeff, m);
    fftw_execute(ps.bwd);
    Field out(s.grid);
#pragma omp parallel for schedule(static) if (n >= kernels::kParallelCutoff)
    for (int r = 0; r < M; ++r) {
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(r) * M;
        double m = 0.0;
        for (int c = 0; c < M; ++c) {
            m = std::max(m, std::abs(buf[off + c].imag()));
            out.values[static_cast<size_t>(off + c)] = buf[off + c].real();
        }
        row_max[static_cast<size_t>(r)] = m;
    }
    double max_imag = 0.0;
    for (double m : row_max) max_imag = std::max(max_imag, m);
    if (max_coeff > 0.0 && max_imag >= 1e-10 * max_coeff)
        throw NonHermitianInput("inverse_transform: imaginary residue " + std::to_string(max_imag) +
                                " exceeds 1e-10 * max|coeff|");
    return out;
}

Field inverse_of_product(const SpectralField& s, const double* sym) {
    SpectralField tmp = s;
    kernels::apply_symbol(tmp.coeffs.data(), sym, s.grid.size());
    return inverse_transform(tmp);
}

Field diff(const Field& f, Axis ax, int order) {
    if (order != 1 && order != 2) throw DomainError("diff: order must be 1 or 2");
    const GridSpec& g = f.grid;
    const int M = g.points;
    SpectralField s = forward_transform(f);
#pragma omp parallel for schedule(static) if (g.size() >= kernels::kParallelCutoff)
    for (int a = 0; a < M; ++a) {
        for (int b = 0; b < M; ++b) {
            const int idx = ax == Axis::X ? a : b;
            std::complex<double>& c = s.at(a, b);
            if (order == 1)
                c *= std::complex<double>(0.0, g.wavenumber_d1(idx));
            else
                c *= -g.wavenumber_sq(idx);
        }
    }
    return inverse_transform(s);
}

std::pair<Field, Field> gradient(const Field& f) {
    return gradient_from_spectral(forward_transform(f));
}

std::pair<Field, Field> gradient_from_spectral(const SpectralField& u_hat) {
    const GridSpec& g = u_hat.grid;
    const int M = g.points;
    std::vector<double> q(static_cast<size_t>(M));
    for (int a = 0; a < M; ++a) q[static_cast<size_t>(a)] = g.wavenumber_d1(a);
    SpectralField sx(g), sy(g);
#pragma omp parallel for schedule(static) if (g.size() >= kernels::kParallelCutoff)
    for (int a = 0; a < M; ++a) {
        const double qa = q[static_cast<size_t>(a)];
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(a) * M;
        for (int b = 0; b < M; ++b) {
            const std::complex<double> c = u_hat.coeffs[static_cast<size_t>(off + b)];
            sx.coeffs[static_cast<size_t>(off + b)] = {-qa * c.imag(), qa * c.real()};
            const double qb = q[static_cast<size_t>(b)];
            sy.coeffs[static_cast<size_t>(off + b)] = {-qb * c.imag(), qb * c.real()};
        }
    }
    return {inverse_transform(sx), inverse_transform(sy)};
}

SpectralField divergence_to_spectral(const Field& fx, const Field& fy) {
    require_same_grid(fx.grid, fy.grid);
    const GridSpec& g = fx.grid;
    const int M = g.points;
    std::vector<double> q(static_cast<size_t>(M));
    for (int a = 0; a < M; ++a) q[static_cast<size_t>(a)] = g.wavenumber_d1(a);
    SpectralField sx = forward_transform(fx);
    const SpectralField sy = forward_transform(fy);
#pragma omp parallel for schedule(static) if (g.size() >= kernels::kParallelCutoff)
    for (int a = 0; a < M; ++a) {
        const double qa = q[static_cast<size_t>(a)];
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(a) * M;
        for (int b = 0; b < M; ++b) {
            const std::complex<double> cx = sx.coeffs[static_cast<size_t>(off + b)];
            const std::complex<double> cy = sy.coeffs[static_cast<size_t>(off + b)];
            const double qb = q[static_cast<size_t>(b)];
            sx.coeffs[static_cast<size_t>(off + b)] = {-qa * cx.imag() - qb * cy.imag(),
                                                       qa * cx.real() + qb * cy.real()};
        }
    }
    return sx;
}

Field divergence(const Field& fx, const Field& fy) {
    return inverse_transform(divergence_to_spectral(fx, fy));
}

Field laplacian(const Field& f) {
    const GridSpec& g = f.grid;
    const int M = g.points;
    SpectralField s = forward_transform(f);
#pragma omp parallel for schedule(static) if (g.size() >= kernels::kParallelCutoff)
    for (int a = 0; a < M; ++a) {
        const double qa2 = g.wavenumber_sq(a);
        for (int b = 0; b < M; ++b) s.at(a, b) *= -(qa2 + g.wavenumber_sq(b));
    }
    return inverse_transform(s);
}

Field bilaplacian(const Field& f) {
    const GridSpec& g = f.grid;
    const int M = g.points;
    SpectralField s = forward_transform(f);
#pragma omp parallel for schedule(static) if (g.size() >= kernels::kParallelCutoff)
    for (int a = 0; a < M; ++a) {
        const double qa2 = g.wavenumber_sq(a);
        for (int b = 0; b < M; ++b) {
            const double lap = qa2 + g.wavenumber_sq(b);
            s.at(a, b) *= lap * lap;
        }
    }
    return inverse_transform(s);
}

double inner(const Field& f, const Field& g) {
    require_same_grid(f.grid, g.grid);
    const double h2 = f.grid.spacing * f.grid.spacing;
    return h2 * kernels::dot_rowwise(f.values.data(), g.values.data(), f.grid.points,
                                     f.grid.points);
}

double norm(const Field& f) { return std::sqrt(inner(f, f)); }

Field project_zero_mean(const Field& f) {
    const std::ptrdiff_t n = f.grid.size();
    const double mean =
        kernels::sum_rowwise(f.values.data(), f.grid.points, f.grid.points) / n;
    Field out(f.grid);
#pragma omp parallel for schedule(static) if (n >= kernels::kParallelCutoff)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out.values[static_cast<size_t>(i)] = f.values[static_cast<size_t>(i)] - mean;
    return out;
}

}  // namespace nss
