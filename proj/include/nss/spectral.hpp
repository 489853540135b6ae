#pragma once

// Fourier collocation infrastructure on the periodic M x M grid: transforms,
// spectral differentiation, discrete inner products.  Backed by FFTW; a naive
// DFT reference lives in nss::ref for testing.
//
// Forward normalization carries the 1/M^2 factor, so coeff(0,0) is the grid
// mean; the inverse carries none and evaluates the trigonometric interpolant
// at the nodes.

#include <utility>

#include "nss/field.hpp"

namespace nss {

SpectralField forward_transform(const Field& f);

// Throws NonHermitianInput when the imaginary residue of the inverse exceeds
// 1e-10 * max|coeff|.
Field inverse_transform(const SpectralField& s);

// Spectral partial derivative of order 1 or 2 along one axis.  Order 1 zeroes
// the Nyquist multiplier; order 2 keeps it at -(pi*M/L)^2.
Field diff(const Field& f, Axis ax, int order);

std::pair<Field, Field> gradient(const Field& f);
Field divergence(const Field& fx, const Field& fy);
Field laplacian(const Field& f);
// One spectral pass with the squared Laplacian symbol (2pi/L)^4 (k^2+l^2)^2.
Field bilaplacian(const Field& f);

// Discrete L2 inner product h^2 * sum f_ij g_ij and induced norm.
double inner(const Field& f, const Field& g);
double norm(const Field& f);

// f minus its grid mean; the (0,0) coefficient of the result is exactly zero.
Field project_zero_mean(const Field& f);

// --- spectral-space workhorses used by the steppers -------------------------

// Inverse transform of sym .* s without materializing the intermediate.
Field inverse_of_product(const SpectralField& s, const double* sym);

// Gradient straight from coefficients: two inverse transforms with the
// first-derivative symbol tables.
std::pair<Field, Field> gradient_from_spectral(const SpectralField& u_hat);

// Spectral divergence of a nodal vector field: i*qx*fx_hat + i*qy*fy_hat.
SpectralField divergence_to_spectral(const Field& fx, const Field& fy);

}  // namespace nss
