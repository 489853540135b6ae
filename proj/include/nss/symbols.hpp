#pragma once

// Per-mode multiplier tables for the ETD steppers, precomputed once per
// (grid, scheme parameters, step size).
//
// For the stabilized multistep scheme the linear symbol is
//   K = eps2 * s^2 / (1 + A tau^2 s^2),        s = -(2pi/L)^2 (k^2 + l^2),
// and the explicit slot is damped by stabInv = 1/(1 + A tau^2 s^2).
// For the convex-splitting baselines K is the L_c symbol
//   eps2 * s^2 - kappa * s   (>= 0, zero only at the mean mode)
// and stabInv is identically one.

#include <string>
#include <vector>

#include "nss/grid.hpp"
#include "nss/model.hpp"

namespace nss {

enum class Scheme { ETD1, ETDMS2, SETDMS2 };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

struct SchemeParams {
    ModelParams model;
    double A = 0.0;      // stabilization constant, >= 0
    double kappa = 0.0;  // splitting constant, >= 0 (ETD1/ETDMs2 only)
    Scheme scheme = Scheme::SETDMS2;
};

// Provable energy-stability threshold (2 + sqrt 3)/6 for the stabilized
// scheme; smaller A is allowed but flagged by the CLI.
inline constexpr double kStabilityThresholdA = 0.62200846792814621559;

struct SymbolTable {
    GridSpec grid;
    double tau = 0.0;
    std::vector<double> s_lap;    // Laplacian symbol, <= 0
    std::vector<double> K;        // linear symbol of the chosen scheme, >= 0
    std::vector<double> expK;     // e^{-tau K}
    std::vector<double> phi0K;    // phi0(K; tau)
    std::vector<double> phi1K;    // phi1(K; tau)
    std::vector<double> stabInv;  // 1/(1 + A tau^2 s^2), or 1 for baselines
};

SymbolTable build_symbols(const GridSpec& grid, const SchemeParams& p, double tau);

}  // namespace nss
