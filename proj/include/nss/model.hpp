#pragma once

// Physics of the no-slope-selection growth equation
//     u_t = -eps2 * lap^2 u - div( grad u / (1 + |grad u|^2) ),
// discretized by Fourier collocation: the nonlinear flux, the discrete
// energy, and the coarsening diagnostics.

#include <utility>

#include "nss/field.hpp"
#include "nss/spectral.hpp"

namespace nss {

struct ModelParams {
    double eps2 = 0.0;  // surface-diffusion coefficient, > 0

    static ModelParams make(double eps2) {
        if (!(eps2 > 0.0)) throw DomainError("ModelParams: eps2 must be positive");
        return ModelParams{eps2};
    }
};

// One record of the scalar observables along a trajectory.
struct Diagnostics {
    double t = 0.0;
    double energy = 0.0;
    double roughness = 0.0;
    double slope = 0.0;
    double mass = 0.0;
};

// Pointwise flux v / (1 + |v|^2); |result| <= 1/2 everywhere.
std::pair<Field, Field> beta(const Field& vx, const Field& vy);

// f_N(u) = div( beta(grad u) ).  The (0,0) coefficient of the result is
// forced to exactly zero (a divergence is mean-free analytically), which is
// what makes every integrator mass-conservative to machine precision.
Field nonlinear_term(const Field& u);
SpectralField nonlinear_term_spectral(const SpectralField& u_hat);

// E_N(u) = (-1/2 ln(1 + |grad u|^2), 1)_N + eps2/2 ||lap u||_N^2.
double energy(const Field& u, const ModelParams& p);

// RMS deviation from the grid mean.
double roughness(const Field& u);
// RMS of |grad u|.
double slope(const Field& u);
// Grid mean.
double mass(const Field& u);

Diagnostics diagnostics(const Field& u, const ModelParams& p, double t);

}  // namespace nss
