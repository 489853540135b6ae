#pragma once

// Manufactured-solution machinery: with the time-dependent source g below,
// u_e(x,y,t) = sin x cos y cos t solves the forced equation
//   u_t = -eps2 lap^2 u - div(beta(grad u)) + g
// on [0,2pi]^2, which pins the temporal order of every stepper.

#include <vector>

#include "nss/stepper.hpp"

namespace nss {

struct ForcedProblem {
    ModelParams model;
    GridSpec grid;

    // exact solution and its nodal restriction
    static double exact(double x, double y, double t) {
        return std::sin(x) * std::cos(y) * std::cos(t);
    }
    Field exact_field(double t) const;

    // the closed-form source; all four terms
    double forcing(double x, double y, double t) const;
    Field forcing_field(double t) const;

    // ||u_num - u_e(t)|| / ||u_e(t)||; throws DegenerateNorm when the exact
    // norm vanishes (cos t = 0).
    double relative_error(const Field& u_num, double t) const;

    // Explicit-slot evaluator f_N(u) - g(t) for the steppers.
    SourceFn source() const;
};

struct ConvergenceReport {
    struct Row {
        double tau = 0.0;
        double error = 0.0;
    };
    std::vector<Row> rows;
    std::vector<double> pair_orders;  // log2(e_k / e_{k+1})
    double summary_order = 0.0;       // least-squares slope of ln e vs ln tau
};

// Runs the forced problem to T for each tau (strictly decreasing by factor
// 2) and collects relative errors and observed orders.
ConvergenceReport convergence_study(const ForcedProblem& prob, const SchemeParams& params,
                                    const std::vector<double>& taus, double T);

// Order bookkeeping alone, for precomputed error ladders.
ConvergenceReport orders_from_errors(const std::vector<double>& taus,
                                     const std::vector<double>& errors);

}  // namespace nss
