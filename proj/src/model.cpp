#include "nss/model.hpp"

#include <cmath>

#include "nss/kernels.hpp"

namespace nss {

std::pair<Field, Field> beta(const Field& vx, const Field& vy) {
    require_same_grid(vx.grid, vy.grid);
    Field bx(vx.grid), by(vx.grid);
    kernels::beta(bx.values.data(), by.values.data(), vx.values.data(), vy.values.data(),
                  vx.grid.size());
    return {std::move(bx), std::move(by)};
}

SpectralField nonlinear_term_spectral(const SpectralField& u_hat) {
    auto [gx, gy] = gradient_from_spectral(u_hat);
    auto [bx, by] = beta(gx, gy);
    SpectralField f_hat = divergence_to_spectral(bx, by);
    f_hat.at(0, 0) = {0.0, 0.0};
    return f_hat;
}

Field nonlinear_term(const Field& u) {
    return inverse_transform(nonlinear_term_spectral(forward_transform(u)));
}

double energy(const Field& u, const ModelParams& p) {
    const GridSpec& g = u.grid;
    auto [gx, gy] = gradient(u);
    const int M = g.points;
    // log term: pointwise collocation quadrature with weight h^2
    std::vector<double> partial(static_cast<size_t>(M), 0.0);
#pragma omp parallel for schedule(static) if (g.size() >= kernels::kParallelCutoff)
    for (int r = 0; r < M; ++r) {
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(r) * M;
        double s = 0.0;
        for (int c = 0; c < M; ++c) {
            const double a = gx.values[off + c];
            const double b = gy.values[off + c];
            s += std::log(1.0 + a * a + b * b);
        }
        partial[static_cast<size_t>(r)] = s;
    }
    double log_sum = 0.0;
    for (double s : partial) log_sum += s;
    const double h2 = g.spacing * g.spacing;
    Field lap = laplacian(u);
    return -0.5 * h2 * log_sum + 0.5 * p.eps2 * inner(lap, lap);
}

double mass(const Field& u) {
    return kernels::sum_rowwise(u.values.data(), u.grid.points, u.grid.points) /
           u.grid.size();
}

double roughness(const Field& u) {
    const double mean = mass(u);
    const int M = u.grid.points;
    std::vector<double> partial(static_cast<size_t>(M), 0.0);
#pragma omp parallel for schedule(static) if (u.grid.size() >= kernels::kParallelCutoff)
    for (int r = 0; r < M; ++r) {
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(r) * M;
        double s = 0.0;
        for (int c = 0; c < M; ++c) {
            const double d = u.values[off + c] - mean;
            s += d * d;
        }
        partial[static_cast<size_t>(r)] = s;
    }
    double acc = 0.0;
    for (double s : partial) acc += s;
    return std::sqrt(acc / u.grid.size());
}

double slope(const Field& u) {
    auto [gx, gy] = gradient(u);
    const double sq = kernels::dot_rowwise(gx.values.data(), gx.values.data(), u.grid.points,
                                           u.grid.points) +
                      kernels::dot_rowwise(gy.values.data(), gy.values.data(), u.grid.points,
                                           u.grid.points);
    return std::sqrt(sq / u.grid.size());
}

Diagnostics diagnostics(const Field& u, const ModelParams& p, double t) {
    Diagnostics d;
    d.t = t;
    d.energy = energy(u, p);
    d.roughness = roughness(u);
    d.slope = slope(u);
    d.mass = mass(u);
    return d;
}

}  // namespace nss
