#include "nss/forcing.hpp"

#include <cmath>

#include "nss/kernels.hpp"

namespace nss {

Field ForcedProblem::exact_field(double t) const {
    Field out(grid);
    const int M = grid.points;
    const double ct = std::cos(t);
#pragma omp parallel for schedule(static) if (grid.size() >= kernels::kParallelCutoff)
    for (int i = 0; i < M; ++i) {
        const double sx = std::sin(grid.node_x(i));
        for (int j = 0; j < M; ++j) out.at(i, j) = sx * std::cos(grid.node_y(j)) * ct;
    }
    return out;
}

double ForcedProblem::forcing(double x, double y, double t) const {
    const double ct = std::cos(t);
    const double st = std::sin(t);
    const double sx = std::sin(x), cx = std::cos(x);
    const double sy = std::sin(y), cy = std::cos(y);
    const double c2x = std::cos(2.0 * x), s2x = std::sin(2.0 * x);
    const double c2y = std::cos(2.0 * y), s2y = std::sin(2.0 * y);
    const double denom = 1.0 + 0.5 * ct * ct * (1.0 + c2x * c2y);
    return -sx * cy * st + 4.0 * model.eps2 * sx * cy * ct - 2.0 * sx * cy * ct / denom +
           ct * ct * ct * (cx * cy * s2x * c2y - sx * sy * c2x * s2y) / (denom * denom);
}

Field ForcedProblem::forcing_field(double t) const {
    // per-axis trig tables keep the per-step cost at O(M) transcendentals
    const int M = grid.points;
    std::vector<double> sx(M), cx(M), s2x(M), c2x(M), sy(M), cy(M), s2y(M), c2y(M);
    for (int i = 0; i < M; ++i) {
        const double v = grid.node_x(i);
        sx[i] = std::sin(v);
        cx[i] = std::cos(v);
        s2x[i] = std::sin(2.0 * v);
        c2x[i] = std::cos(2.0 * v);
        sy[i] = sx[i];
        cy[i] = cx[i];
        s2y[i] = s2x[i];
        c2y[i] = c2x[i];
    }
    const double ct = std::cos(t);
    const double st = std::sin(t);
    const double ct2_half = 0.5 * ct * ct;
    const double ct3 = ct * ct * ct;
    const double eps2 = model.eps2;
    Field out(grid);
#pragma omp parallel for schedule(static) if (grid.size() >= kernels::kParallelCutoff)
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < M; ++j) {
            const double denom = 1.0 + ct2_half * (1.0 + c2x[i] * c2y[j]);
            out.at(i, j) = -sx[i] * cy[j] * st + 4.0 * eps2 * sx[i] * cy[j] * ct -
                           2.0 * sx[i] * cy[j] * ct / denom +
                           ct3 * (cx[i] * cy[j] * s2x[i] * c2y[j] - sx[i] * sy[j] * c2x[i] * s2y[j]) /
                               (denom * denom);
        }
    }
    return out;
}

double ForcedProblem::relative_error(const Field& u_num, double t) const {
    require_same_grid(u_num.grid, grid);
    const Field ue = exact_field(t);
    const double den = norm(ue);
    if (den < 1e-14) throw DegenerateNorm("exact-solution norm vanishes at t=" + std::to_string(t));
    Field diff(grid);
    for (size_t i = 0; i < diff.values.size(); ++i)
        diff.values[i] = u_num.values[i] - ue.values[i];
    return norm(diff) / den;
}

SourceFn ForcedProblem::source() const {
    const ForcedProblem self = *this;
    return [self](const SpectralField& u_hat, double t) {
        SpectralField slot = nonlinear_term_spectral(u_hat);
        const SpectralField g_hat = forward_transform(self.forcing_field(t));
        const std::ptrdiff_t n = self.grid.size();
#pragma omp parallel for schedule(static) if (n >= kernels::kParallelCutoff)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            slot.coeffs[static_cast<size_t>(i)] -= g_hat.coeffs[static_cast<size_t>(i)];
        return slot;
    };
}

ConvergenceReport orders_from_errors(const std::vector<double>& taus,
                                     const std::vector<double>& errors) {
    ConvergenceReport rep;
    for (size_t i = 0; i < taus.size(); ++i) rep.rows.push_back({taus[i], errors[i]});
    for (size_t i = 0; i + 1 < errors.size(); ++i)
        rep.pair_orders.push_back(std::log2(errors[i] / errors[i + 1]));
    // least squares of ln e against ln tau
    const size_t n = taus.size();
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < n; ++i) {
            const double lx = std::log(taus[i]);
            const double ly = std::log(errors[i]);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        rep.summary_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return rep;
}

ConvergenceReport convergence_study(const ForcedProblem& prob, const SchemeParams& params,
                                    const std::vector<double>& taus, double T) {
    if (taus.size() < 2) throw ValidationError("need at least two step sizes", "taus");
    for (size_t i = 0; i + 1 < taus.size(); ++i) {
        if (!(taus[i] > taus[i + 1]) ||
            std::abs(taus[i + 1] - 0.5 * taus[i]) > 1e-9 * taus[i])
            throw ValidationError("step sizes must halve at each level", "taus");
    }
    const Field u0 = prob.exact_field(0.0);
    std::vector<double> errors(taus.size(), 0.0);
    for (size_t i = 0; i < taus.size(); ++i) {
        const StepSchedule sched = StepSchedule::single(T, taus[i]);
        RunResult res = run(u0, params, sched, {}, {}, prob.source());
        errors[i] = prob.relative_error(res.u, T);
    }
    return orders_from_errors(taus, errors);
}

}  // namespace nss
