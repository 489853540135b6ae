// Timing and agreement comparison between the production path (FFTW
// transforms, OpenMP pointwise kernels) and the serial reference
// implementation in nss::ref.  The reference is O(M^4) per transform, so it
// is only exercised at small M; the pointwise kernels are compared at
// production sizes.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nss/init.hpp"
#include "nss/kernels.hpp"
#include "nss/model.hpp"
#include "nss/ref.hpp"
#include "nss/spectral.hpp"
#include "nss/stepper.hpp"

using namespace nss;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm-up
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

double max_dev(const Field& a, const Field& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

void bench_transforms() {
    std::printf("transforms: FFTW vs naive-DFT reference\n");
    std::printf("%6s %14s %14s %10s %12s\n", "M", "fftw (ms)", "naive (ms)", "speedup", "max dev");
    for (int M : {16, 32, 64}) {
        const GridSpec g = GridSpec::make(12.8, M);
        const Field f = random_field(g, 7, 1.0);
        SpectralField sp, sr;
        const double t_fft = time_ms([&] { sp = forward_transform(f); }, M <= 32 ? 50 : 20);
        const double t_ref = time_ms([&] { sr = ref::forward_transform(f); }, 2);
        double dev = 0.0;
        for (size_t i = 0; i < sp.coeffs.size(); ++i)
            dev = std::max(dev, std::abs(sp.coeffs[i] - sr.coeffs[i]));
        std::printf("%6d %14.4f %14.4f %9.1fx %12.3e\n", M, t_fft, t_ref, t_ref / t_fft, dev);
    }
}

void bench_model_ops() {
    std::printf("\nmodel operations: OpenMP kernels vs serial reference (small grid)\n");
    const GridSpec g = GridSpec::make(12.8, 32);
    const Field u = random_field(g, 3, 0.3);
    const Field fn_par = nonlinear_term(u);
    const Field fn_ref = ref::nonlinear_term(u);
    std::printf("  nonlinear term max dev: %.3e\n", max_dev(fn_par, fn_ref));
    std::printf("  energy dev: %.3e\n",
                std::abs(energy(u, ModelParams::make(0.01)) - ref::energy(u, 0.01)));
}

void bench_pointwise(int M) {
    std::printf("\npointwise kernels at M = %d (%d nodes)\n", M, M * M);
    const GridSpec g = GridSpec::make(12.8, M);
    const Field vx = random_field(g, 1, 2.0);
    const Field vy = random_field(g, 2, 2.0);
    Field bx(g), by(g);
    const double t_par = time_ms(
        [&] { kernels::beta(bx.values.data(), by.values.data(), vx.values.data(),
                            vy.values.data(), g.size()); },
        200);
    Field bx_s(g), by_s(g);
    const double t_ser = time_ms(
        [&] {
            for (std::ptrdiff_t i = 0; i < g.size(); ++i) {
                const double d = 1.0 + vx.values[static_cast<size_t>(i)] * vx.values[static_cast<size_t>(i)] +
                                 vy.values[static_cast<size_t>(i)] * vy.values[static_cast<size_t>(i)];
                bx_s.values[static_cast<size_t>(i)] = vx.values[static_cast<size_t>(i)] / d;
                by_s.values[static_cast<size_t>(i)] = vy.values[static_cast<size_t>(i)] / d;
            }
        },
        200);
    std::printf("  beta: parallel %.4f ms, serial %.4f ms, speedup %.2fx, dev %.3e\n", t_par,
                t_ser, t_ser / t_par, std::max(max_dev(bx, bx_s), max_dev(by, by_s)));

    const double t_dot_par =
        time_ms([&] { (void)kernels::dot_rowwise(vx.values.data(), vy.values.data(), M, M); }, 200);
    double serial_dot = 0.0;
    const double t_dot_ser = time_ms(
        [&] {
            serial_dot = 0.0;
            for (size_t i = 0; i < vx.values.size(); ++i) serial_dot += vx.values[i] * vy.values[i];
        },
        200);
    std::printf("  dot:  parallel %.4f ms, serial %.4f ms, speedup %.2fx\n", t_dot_par, t_dot_ser,
                t_dot_ser / t_dot_par);
}

void bench_step(int M) {
    std::printf("\nfull stabilized multistep step at M = %d\n", M);
    const GridSpec g = GridSpec::make(12.8, M);
    const SchemeParams p{ModelParams::make(0.005), kStabilityThresholdA, 0.125, Scheme::SETDMS2};
    Stepper st(g, p);
    st.seed(project_zero_mean(random_field(g, 5, 0.05)), 0.0);
    st.start_segment(0.01);
    st.step();
    const double t_step = time_ms([&] { st.step(); }, 100);
    std::printf("  %.4f ms/step  (%.0f steps/s)\n", t_step, 1000.0 / t_step);
}

}  // namespace

int main() {
    kernels::tune_allocator();
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel kernels run serially\n\n");
#endif
    bench_transforms();
    bench_model_ops();
    for (int M : {128, 256, 512}) bench_pointwise(M);
    for (int M : {128, 256}) bench_step(M);
    return 0;
}
