#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nss/model.hpp"
#include "nss/ref.hpp"
#include "test_support.hpp"

using namespace nss;
using namespace nss::test;

TEST_CASE("beta: direct values") {
    const GridSpec g = GridSpec::make(kTwoPi, 4);
    Field vx(g), vy(g);
    auto [z0x, z0y] = beta(vx, vy);
    CHECK(max_abs(z0x) == 0.0);
    CHECK(max_abs(z0y) == 0.0);

    vx.at(1, 2) = 1.0;
    auto [b1x, b1y] = beta(vx, vy);
    CHECK(b1x.at(1, 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b1y.at(1, 2) == 0.0);

    vx.at(1, 2) = 3.0;
    vy.at(1, 2) = 4.0;
    auto [b2x, b2y] = beta(vx, vy);
    CHECK(b2x.at(1, 2) == doctest::Approx(3.0 / 26.0).epsilon(1e-15));
    CHECK(b2y.at(1, 2) == doctest::Approx(4.0 / 26.0).epsilon(1e-15));
}

TEST_CASE("beta: pointwise half bound and contraction") {
    const GridSpec g = GridSpec::make(kTwoPi, 16);
    for (unsigned long long seed : {1ull, 2ull, 3ull, 4ull}) {
        const Field vx = random_field(g, seed, 5.0);
        const Field vy = random_field(g, seed + 50, 5.0);
        const Field wx = random_field(g, seed + 100, 5.0);
        const Field wy = random_field(g, seed + 150, 5.0);
        auto [bvx, bvy] = beta(vx, vy);
        auto [bwx, bwy] = beta(wx, wy);
        for (size_t i = 0; i < bvx.values.size(); ++i) {
            CHECK(std::hypot(bvx.values[i], bvy.values[i]) <= 0.5 + 1e-15);
            const double db = std::hypot(bvx.values[i] - bwx.values[i], bvy.values[i] - bwy.values[i]);
            const double dv = std::hypot(vx.values[i] - wx.values[i], vy.values[i] - wy.values[i]);
            CHECK(db <= dv + 1e-14);
        }
    }
}

TEST_CASE("nonlinear term: trivial inputs") {
    const GridSpec g = GridSpec::make(kTwoPi, 16);
    CHECK(max_abs(nonlinear_term(Field(g))) == 0.0);
    Field c(g);
    for (double& v : c.values) v = 2.5;
    CHECK(max_abs(nonlinear_term(c)) < 1e-14);
}

TEST_CASE("nonlinear term: analytic value for u = sin x") {
    // d/dx [cos x / (1 + cos^2 x)] = -sin^3 x / (1 + cos^2 x)^2
    const GridSpec g = GridSpec::make(kTwoPi, 64);
    const Field u = sample(g, [](double x, double) { return std::sin(x); });
    const Field f = nonlinear_term(u);
    const int iq = 16;  // x = pi/2
    CHECK(f.at(iq, 0) == doctest::Approx(-1.0).epsilon(1e-8));
    const Field want = sample(g, [](double x, double) {
        const double s = std::sin(x), c = std::cos(x);
        return -s * s * s / ((1.0 + c * c) * (1.0 + c * c));
    });
    CHECK(max_abs_diff(f, want) < 1e-8);
}

TEST_CASE("nonlinear term: result is mean-free") {
    const GridSpec g = GridSpec::make(5.5, 32);
    const Field u = random_field(g, 77, 0.5);
    const Field f = nonlinear_term(u);
    CHECK(std::abs(forward_transform(f).mode(0, 0)) < 1e-16);
    CHECK(std::abs(mass(f)) < 1e-15);
}

TEST_CASE("energy: trivial and shift invariance") {
    const GridSpec g = GridSpec::make(kTwoPi, 32);
    const ModelParams p = ModelParams::make(0.01);
    CHECK(energy(Field(g), p) == 0.0);

    const Field u = random_resolvable(g, 3, 0.3);
    Field shifted(g);
    for (size_t i = 0; i < u.values.size(); ++i) shifted.values[i] = u.values[i] + 1.7;
    CHECK(energy(shifted, p) == doctest::Approx(energy(u, p)).epsilon(1e-12));
}

TEST_CASE("energy: quadrature oracle for u = sin x cos y") {
    const GridSpec g = GridSpec::make(kTwoPi, 64);
    const ModelParams p = ModelParams::make(0.01);
    const Field u = sample(g, [](double x, double y) { return std::sin(x) * std::cos(y); });

    const double surface = 2.0 * p.eps2 * std::numbers::pi * std::numbers::pi;
    Field lap = laplacian(u);
    CHECK(0.5 * p.eps2 * inner(lap, lap) == doctest::Approx(surface).epsilon(1e-10));

    // oracle: 2048^2-point tensor quadrature of ln(1 + |grad u|^2);
    // |grad u|^2 = cos^2 x cos^2 y + sin^2 x sin^2 y
    const int Q = 2048;
    const double hq = kTwoPi / Q;
    long double log_integral = 0.0L;
    for (int i = 0; i < Q; ++i) {
        const double x = i * hq;
        const double cx = std::cos(x), sx = std::sin(x);
        long double row = 0.0L;
        for (int j = 0; j < Q; ++j) {
            const double y = j * hq;
            const double cy = std::cos(y), sy = std::sin(y);
            row += std::log(1.0 + cx * cx * cy * cy + sx * sx * sy * sy);
        }
        log_integral += row;
    }
    log_integral *= hq * hq;
    const double expected = surface - 0.5 * static_cast<double>(log_integral);
    CHECK(energy(u, p) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("energy: invariance under 90-degree grid rotation") {
    const GridSpec g = GridSpec::make(kTwoPi, 32);
    const ModelParams p = ModelParams::make(0.02);
    const Field u = random_field(g, 13, 0.4);
    Field rot(g);
    const int M = g.points;
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) rot.at(j, (M - i) % M) = u.at(i, j);
    CHECK(energy(rot, p) == doctest::Approx(energy(u, p)).epsilon(1e-11));
}

TEST_CASE("energy: coarse lower bound") {
    const GridSpec g = GridSpec::make(kTwoPi, 32);
    const ModelParams p = ModelParams::make(0.01);
    const Field u = random_field(g, 19, 0.2);
    auto [gx, gy] = gradient(u);
    double worst = 0.0;
    for (size_t i = 0; i < gx.values.size(); ++i)
        worst = std::max(worst, std::log(1.0 + gx.values[i] * gx.values[i] + gy.values[i] * gy.values[i]));
    const double area = g.length * g.length;
    CHECK(energy(u, p) >= -0.5 * area * worst - 1e-12);
}

TEST_CASE("energy matches serial reference") {
    const GridSpec g = GridSpec::make(3.0, 12);
    const ModelParams p = ModelParams::make(0.004);
    const Field u = random_field(g, 4, 0.8);
    CHECK(energy(u, p) == doctest::Approx(ref::energy(u, p.eps2)).epsilon(1e-12));
}

TEST_CASE("roughness, slope, mass") {
    const GridSpec g = GridSpec::make(kTwoPi, 16);
    Field c(g);
    for (double& v : c.values) v = 7.0;
    CHECK(roughness(c) == 0.0);
    CHECK(slope(c) < 1e-14);
    CHECK(mass(c) == doctest::Approx(7.0).epsilon(1e-15));

    // discrete mean of sin^2 over a full period is exactly 1/2
    for (int M : {4, 16, 64}) {
        const GridSpec gm = GridSpec::make(kTwoPi, M);
        const Field s = sample(gm, [](double x, double) { return std::sin(x); });
        CHECK(roughness(s) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
        CHECK(slope(s) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    }
}

TEST_CASE("diagnostics record") {
    const GridSpec g = GridSpec::make(kTwoPi, 16);
    const ModelParams p = ModelParams::make(0.01);
    const Field u = random_field(g, 2, 0.1);
    const Diagnostics d = diagnostics(u, p, 1.5);
    CHECK(d.t == 1.5);
    CHECK(d.energy == doctest::Approx(energy(u, p)).epsilon(1e-15));
    CHECK(d.roughness >= 0.0);
    CHECK(d.slope >= 0.0);
    CHECK(std::isfinite(d.mass));
}
