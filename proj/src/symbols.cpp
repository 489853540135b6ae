#include "nss/symbols.hpp"

#include <cmath>

#include "nss/kernels.hpp"
#include "nss/phi.hpp"

namespace nss {

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::ETD1: return "etd1";
        case Scheme::ETDMS2: return "etdms2";
        case Scheme::SETDMS2: return "setdms2";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "etd1") return Scheme::ETD1;
    if (name == "etdms2") return Scheme::ETDMS2;
    if (name == "setdms2") return Scheme::SETDMS2;
    throw DomainError("unknown scheme '" + name + "' (expected etd1|etdms2|setdms2)");
}

SymbolTable build_symbols(const GridSpec& grid, const SchemeParams& p, double tau) {
    if (!(tau > 0.0)) throw DomainError("build_symbols: tau must be positive");
    if (p.A < 0.0) throw DomainError("build_symbols: A must be nonnegative");
    if (p.kappa < 0.0) throw DomainError("build_symbols: kappa must be nonnegative");

    const int M = grid.points;
    const std::ptrdiff_t n = grid.size();
    SymbolTable t;
    t.grid = grid;
    t.tau = tau;
    t.s_lap.resize(static_cast<size_t>(n));
    t.K.resize(static_cast<size_t>(n));
    t.expK.resize(static_cast<size_t>(n));
    t.phi0K.resize(static_cast<size_t>(n));
    t.phi1K.resize(static_cast<size_t>(n));
    t.stabInv.resize(static_cast<size_t>(n));

    const bool stabilized = p.scheme == Scheme::SETDMS2;
    const double eps2 = p.model.eps2;

#pragma omp parallel for schedule(static) if (n >= kernels::kParallelCutoff)
    for (int a = 0; a < M; ++a) {
        const double qa2 = grid.wavenumber_sq(a);
        for (int b = 0; b < M; ++b) {
            const size_t idx = static_cast<size_t>(a) * M + b;
            const double s = -(qa2 + grid.wavenumber_sq(b));
            t.s_lap[idx] = s;
            double K, damp;
            if (stabilized) {
                const double denom = 1.0 + p.A * tau * tau * s * s;
                K = eps2 * s * s / denom;
                damp = 1.0 / denom;
            } else {
                K = eps2 * s * s - p.kappa * s;
                damp = 1.0;
            }
            t.K[idx] = K;
            t.stabInv[idx] = damp;
            t.expK[idx] = std::exp(-tau * K);
            t.phi0K[idx] = phi0_scalar(K, tau);
            t.phi1K[idx] = phi1_scalar(K, tau);
        }
    }
    // zero mode: K = 0 exactly, so expK = 1, phi0 = tau, phi1 = tau/2 already
    // hold by the phi limit values; the explicit slot is zeroed by the stepper.
    return t;
}

}  // namespace nss
