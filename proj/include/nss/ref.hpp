#pragma once

// Serial reference implementations of the spectral and model operations.
// Transforms are evaluated as literal double sums (O(M^4)) straight from the
// definitions, with no FFT and no OpenMP, so this path is independent of the
// production kernels it is used to check.  Only suitable for small grids.

#include <utility>

#include "nss/field.hpp"

namespace nss::ref {

SpectralField forward_transform(const Field& f);
Field inverse_transform(const SpectralField& s);

Field diff(const Field& f, Axis ax, int order);

std::pair<Field, Field> gradient(const Field& f);
Field divergence(const Field& fx, const Field& fy);
Field laplacian(const Field& f);
Field bilaplacian(const Field& f);

double inner(const Field& f, const Field& g);
double norm(const Field& f);

std::pair<Field, Field> beta(const Field& vx, const Field& vy);
Field nonlinear_term(const Field& u);
double energy(const Field& u, double eps2);

}  // namespace nss::ref
