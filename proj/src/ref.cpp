#include "nss/ref.hpp"

#include <cmath>
#include <numbers>

namespace nss::ref {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SpectralField forward_transform(const Field& f) {
    const GridSpec& g = f.grid;
    const int M = g.points;
    SpectralField out(g);
    for (int a = 0; a < M; ++a) {
        for (int b = 0; b < M; ++b) {
            std::complex<double> acc{0.0, 0.0};
            for (int i = 0; i < M; ++i) {
                for (int j = 0; j < M; ++j) {
                    const double phase = -kTwoPi * (static_cast<double>(a) * i + static_cast<double>(b) * j) / M;
                    acc += f.at(i, j) * std::complex<double>(std::cos(phase), std::sin(phase));
                }
            }
            out.at(a, b) = acc / (static_cast<double>(M) * M);
        }
    }
    return out;
}

Field inverse_transform(const SpectralField& s) {
    const GridSpec& g = s.grid;
    const int M = g.points;
    Field out(g);
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < M; ++j) {
            std::complex<double> acc{0.0, 0.0};
            for (int a = 0; a < M; ++a) {
                for (int b = 0; b < M; ++b) {
                    const double phase = kTwoPi * (static_cast<double>(a) * i + static_cast<double>(b) * j) / M;
                    acc += s.at(a, b) * std::complex<double>(std::cos(phase), std::sin(phase));
                }
            }
            out.at(i, j) = acc.real();
        }
    }
    return out;
}

Field diff(const Field& f, Axis ax, int order) {
    const GridSpec& g = f.grid;
    const int M = g.points;
    SpectralField s = forward_transform(f);
    for (int a = 0; a < M; ++a) {
        for (int b = 0; b < M; ++b) {
            const int idx = ax == Axis::X ? a : b;
            if (order == 1)
                s.at(a, b) *= std::complex<double>(0.0, g.wavenumber_d1(idx));
            else
                s.at(a, b) *= -g.wavenumber_sq(idx);
        }
    }
    return inverse_transform(s);
}

std::pair<Field, Field> gradient(const Field& f) {
    return {diff(f, Axis::X, 1), diff(f, Axis::Y, 1)};
}

Field divergence(const Field& fx, const Field& fy) {
    require_same_grid(fx.grid, fy.grid);
    Field dx = diff(fx, Axis::X, 1);
    Field dy = diff(fy, Axis::Y, 1);
    Field out(fx.grid);
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = dx.values[i] + dy.values[i];
    return out;
}

Field laplacian(const Field& f) {
    Field xx = diff(f, Axis::X, 2);
    Field yy = diff(f, Axis::Y, 2);
    Field out(f.grid);
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = xx.values[i] + yy.values[i];
    return out;
}

Field bilaplacian(const Field& f) {
    const GridSpec& g = f.grid;
    const int M = g.points;
    SpectralField s = forward_transform(f);
    for (int a = 0; a < M; ++a) {
        for (int b = 0; b < M; ++b) {
            const double lap = g.wavenumber_sq(a) + g.wavenumber_sq(b);
            s.at(a, b) *= lap * lap;
        }
    }
    return inverse_transform(s);
}

double inner(const Field& f, const Field& g) {
    require_same_grid(f.grid, g.grid);
    double acc = 0.0;
    for (size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * g.values[i];
    return f.grid.spacing * f.grid.spacing * acc;
}

double norm(const Field& f) { return std::sqrt(inner(f, f)); }

std::pair<Field, Field> beta(const Field& vx, const Field& vy) {
    require_same_grid(vx.grid, vy.grid);
    Field bx(vx.grid), by(vx.grid);
    for (size_t i = 0; i < bx.values.size(); ++i) {
        const double d = 1.0 + vx.values[i] * vx.values[i] + vy.values[i] * vy.values[i];
        bx.values[i] = vx.values[i] / d;
        by.values[i] = vy.values[i] / d;
    }
    return {bx, by};
}

Field nonlinear_term(const Field& u) {
    auto [gx, gy] = gradient(u);
    auto [bx, by] = beta(gx, gy);
    Field div = divergence(bx, by);
    // divergences are mean-free analytically; remove the roundoff mean
    double mean = 0.0;
    for (double v : div.values) mean += v;
    mean /= div.values.size();
    for (double& v : div.values) v -= mean;
    return div;
}

double energy(const Field& u, double eps2) {
    auto [gx, gy] = gradient(u);
    double log_sum = 0.0;
    for (size_t i = 0; i < u.values.size(); ++i)
        log_sum += std::log(1.0 + gx.values[i] * gx.values[i] + gy.values[i] * gy.values[i]);
    Field lap = laplacian(u);
    double lap_sq = 0.0;
    for (double v : lap.values) lap_sq += v * v;
    const double h2 = u.grid.spacing * u.grid.spacing;
    return -0.5 * h2 * log_sum + 0.5 * eps2 * h2 * lap_sq;
}

}  // namespace nss::ref
