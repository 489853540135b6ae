#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "nss/grid.hpp"

namespace nss {

// Real grid function.  values[i*M + j] is the sample at node (x_i, y_j).
struct Field {
    GridSpec grid;
    std::vector<double> values;

    Field() = default;
    explicit Field(const GridSpec& g) : grid(g), values(static_cast<size_t>(g.size()), 0.0) {}
    Field(const GridSpec& g, std::vector<double> v) : grid(g), values(std::move(v)) {}

    double& at(int i, int j) { return values[static_cast<size_t>(i) * grid.points + j]; }
    double at(int i, int j) const { return values[static_cast<size_t>(i) * grid.points + j]; }

    bool finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

// Fourier-coefficient counterpart of a Field, FFT mode layout, same row-major
// indexing: coeffs[a*M + b] is the coefficient of exp(2*pi*i*(k x + l y)/L)
// with k = grid.mode(a), l = grid.mode(b).
struct SpectralField {
    GridSpec grid;
    std::vector<std::complex<double>> coeffs;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& g)
        : grid(g), coeffs(static_cast<size_t>(g.size()), {0.0, 0.0}) {}

    std::complex<double>& at(int a, int b) {
        return coeffs[static_cast<size_t>(a) * grid.points + b];
    }
    std::complex<double> at(int a, int b) const {
        return coeffs[static_cast<size_t>(a) * grid.points + b];
    }

    // Coefficient addressed by signed mode pair (k,l).
    std::complex<double> mode(int k, int l) const {
        const int M = grid.points;
        const int a = k >= 0 ? k : k + M;
        const int b = l >= 0 ? l : l + M;
        return coeffs[static_cast<size_t>(a) * M + b];
    }
};

}  // namespace nss
