#pragma once

// Hot inner loops shared by the spectral operators and the time steppers.
// All kernels are data-parallel over the M*M nodes (or modes) and are
// parallelized with OpenMP when available.  Reductions accumulate one
// partial per row and combine the partials serially, so results do not
// depend on the number of threads.  Serial twins live in nss::ref and the
// bench tool compares the two.

#include <complex>
#include <cstddef>
#include <vector>

#ifdef __GLIBC__
#include <malloc.h>
#endif

namespace nss::kernels {

using cplx = std::complex<double>;

// The solver allocates and frees field-sized vectors (hundreds of KB) every
// step.  glibc's default trim threshold hands that memory back to the OS on
// each free, so every step pays page faults.  Long-running drivers should
// call this once at startup; it is a no-op on other libcs.
inline void tune_allocator() {
#ifdef __GLIBC__
    mallopt(M_MMAP_THRESHOLD, 64 * 1024 * 1024);
    mallopt(M_TRIM_THRESHOLD, 512 * 1024 * 1024);
#endif
}

// Loops shorter than this stay serial; the fork/join overhead dominates below.
inline constexpr std::ptrdiff_t kParallelCutoff = 4096;

inline void scale_complex(cplx* a, std::ptrdiff_t n, double s) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::ptrdiff_t i = 0; i < n; ++i) a[i] *= s;
}

// a[i] *= sym[i] for a real per-mode multiplier table.
inline void apply_symbol(cplx* a, const double* sym, std::ptrdiff_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::ptrdiff_t i = 0; i < n; ++i) a[i] *= sym[i];
}

// out[i] = sym[i] * a[i].
inline void mul_symbol(cplx* out, const cplx* a, const double* sym, std::ptrdiff_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = sym[i] * a[i];
}

// Fused ETD update: u_next = expK.u - phi0.e - phi1.(e - e_prev).
inline void etd_update(cplx* u_next, const cplx* u, const cplx* e, const cplx* e_prev,
                       const double* expK, const double* phi0, const double* phi1,
                       std::ptrdiff_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        u_next[i] = expK[i] * u[i] - phi0[i] * e[i] - phi1[i] * (e[i] - e_prev[i]);
}

// First-order variant without history: u_next = expK.u - phi0.e.
inline void etd_update_init(cplx* u_next, const cplx* u, const cplx* e, const double* expK,
                            const double* phi0, std::ptrdiff_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::ptrdiff_t i = 0; i < n; ++i) u_next[i] = expK[i] * u[i] - phi0[i] * e[i];
}

// Pointwise flux b = v / (1 + |v|^2), applied to a vector field (vx, vy).
inline void beta(double* bx, double* by, const double* vx, const double* vy,
                 std::ptrdiff_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double d = 1.0 + vx[i] * vx[i] + vy[i] * vy[i];
        bx[i] = vx[i] / d;
        by[i] = vy[i] / d;
    }
}

// Row-partial reductions: rows = M, cols = M, row-major data.  Each row is
// summed serially inside one thread; the M partials are combined in index
// order afterwards, making the result independent of the thread count.
inline double sum_rowwise(const double* a, int rows, int cols,
                          double (*term)(double) = nullptr) {
    std::vector<double> partial(static_cast<size_t>(rows), 0.0);
#pragma omp parallel for schedule(static) if (static_cast<std::ptrdiff_t>(rows) * cols >= kParallelCutoff)
    for (int r = 0; r < rows; ++r) {
        const double* row = a + static_cast<std::ptrdiff_t>(r) * cols;
        double s = 0.0;
        if (term) {
            for (int c = 0; c < cols; ++c) s += term(row[c]);
        } else {
            for (int c = 0; c < cols; ++c) s += row[c];
        }
        partial[static_cast<size_t>(r)] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

inline double dot_rowwise(const double* a, const double* b, int rows, int cols) {
    std::vector<double> partial(static_cast<size_t>(rows), 0.0);
#pragma omp parallel for schedule(static) if (static_cast<std::ptrdiff_t>(rows) * cols >= kParallelCutoff)
    for (int r = 0; r < rows; ++r) {
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(r) * cols;
        double s = 0.0;
        for (int c = 0; c < cols; ++c) s += a[off + c] * b[off + c];
        partial[static_cast<size_t>(r)] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace nss::kernels
