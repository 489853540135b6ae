#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nss/forcing.hpp"
#include "test_support.hpp"

using namespace nss;
using namespace nss::test;

namespace {
ForcedProblem problem(int M, double eps2 = 0.01) {
    return ForcedProblem{ModelParams::make(eps2), GridSpec::make(kTwoPi, M)};
}
}  // namespace

TEST_CASE("forcing at cos t = 0 reduces to -sin x cos y") {
    const ForcedProblem prob = problem(16);
    const double t = std::numbers::pi / 2.0;
    for (double x : {0.3, 1.1, 4.0}) {
        for (double y : {0.0, 2.2, 5.9}) {
            CHECK(prob.forcing(x, y, t) ==
                  doctest::Approx(-std::sin(x) * std::cos(y) * std::sin(t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("forcing term-by-term at sampled points") {
    // reference evaluation assembled from the four closed-form terms with
    // independently recomputed trigonometry
    const ForcedProblem prob = problem(16, 0.03);
    for (double x : {0.0, 0.7, 2.9}) {
        for (double y : {0.4, 1.8}) {
            for (double t : {0.0, 0.3, 2.5}) {
                const double D =
                    1.0 + 0.5 * std::cos(t) * std::cos(t) * (1.0 + std::cos(2 * x) * std::cos(2 * y));
                const double term1 = -std::sin(x) * std::cos(y) * std::sin(t);
                const double term2 = 4.0 * 0.03 * std::sin(x) * std::cos(y) * std::cos(t);
                const double term3 = -2.0 * std::sin(x) * std::cos(y) * std::cos(t) / D;
                const double term4 = std::pow(std::cos(t), 3) *
                                     (std::cos(x) * std::cos(y) * std::sin(2 * x) * std::cos(2 * y) -
                                      std::sin(x) * std::sin(y) * std::cos(2 * x) * std::sin(2 * y)) /
                                     (D * D);
                CHECK(prob.forcing(x, y, t) ==
                      doctest::Approx(term1 + term2 + term3 + term4).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("forced-equation residual decays spectrally in M") {
    // residual of u_e under the semi-discrete equation at t = 0.3
    const double t = 0.3;
    double prev = 0.0;
    for (int M : {16, 32, 64}) {
        const ForcedProblem prob = problem(M);
        const Field ue = prob.exact_field(t);
        Field ut(prob.grid);
        for (int i = 0; i < M; ++i)
            for (int j = 0; j < M; ++j)
                ut.at(i, j) =
                    -std::sin(prob.grid.node_x(i)) * std::cos(prob.grid.node_y(j)) * std::sin(t);
        const Field bl = bilaplacian(ue);
        const Field fn = nonlinear_term(ue);
        const Field gf = prob.forcing_field(t);
        Field resid(prob.grid);
        for (size_t i = 0; i < resid.values.size(); ++i)
            resid.values[i] =
                ut.values[i] + prob.model.eps2 * bl.values[i] + fn.values[i] - gf.values[i];
        const double r = norm(resid);
        if (M == 64) CHECK(r < 1e-6);
        if (prev > 0.0) CHECK(r < prev / 10.0);
        prev = r;
    }
}

TEST_CASE("relative error basics") {
    const ForcedProblem prob = problem(32);
    const double t = 0.4;
    const Field ue = prob.exact_field(t);
    CHECK(prob.relative_error(ue, t) < 1e-13);

    Field scaled(prob.grid);
    for (size_t i = 0; i < scaled.values.size(); ++i) scaled.values[i] = 1.01 * ue.values[i];
    CHECK(prob.relative_error(scaled, t) == doctest::Approx(0.01).epsilon(1e-12));

    CHECK_THROWS_AS(prob.relative_error(ue, std::numbers::pi / 2.0), DegenerateNorm);
}

TEST_CASE("order bookkeeping on a given error ladder") {
    const ConvergenceReport rep =
        orders_from_errors({0.01, 0.005, 0.0025}, {4e-4, 1e-4, 2.5e-5});
    REQUIRE(rep.pair_orders.size() == 2);
    CHECK(rep.pair_orders[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.pair_orders[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.summary_order == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(convergence_study(problem(16), SchemeParams{ModelParams::make(0.01)},
                                      {0.01}, 1.0),
                    ValidationError);
    CHECK_THROWS_AS(convergence_study(problem(16), SchemeParams{ModelParams::make(0.01)},
                                      {0.005, 0.01}, 1.0),
                    ValidationError);
}

TEST_CASE("short forced run reaches second order in the asymptotic regime") {
    // compact version of the acceptance experiment: the per-pair order of the
    // two finest rungs should sit near 2
    const ForcedProblem prob = problem(64);
    const SchemeParams p{ModelParams::make(0.01), 0.125, 0.125, Scheme::SETDMS2};
    const ConvergenceReport rep =
        convergence_study(prob, p, {2e-4, 1e-4, 5e-5}, 0.1);
    REQUIRE(rep.pair_orders.size() == 2);
    CHECK(rep.pair_orders.back() > 1.7);
    CHECK(rep.pair_orders.back() < 2.3);
}
