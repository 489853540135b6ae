#pragma once

#include <cmath>
#include <numbers>

#include "nss/errors.hpp"

namespace nss {

enum class Axis { X, Y };

// Descriptor of the periodic square domain [0,L]^2 sampled on a uniform
// M x M nodal grid, x_i = i*h, y_j = j*h, h = L/M.  Node (M,j) is identified
// with (0,j).  Fourier modes are indexed in FFT layout: storage index
// a in [0,M) corresponds to the signed mode a for a <= M/2 and a-M above,
// so the single Nyquist mode sits at index M/2.
struct GridSpec {
    double length = 0.0;  // physical side length L
    int points = 0;       // nodes per dimension M (even, >= 4)
    double spacing = 0.0; // h = L/M

    static GridSpec make(double L, int M) {
        if (!(L > 0.0)) throw DomainError("GridSpec: length must be positive");
        if (M < 4 || M % 2 != 0) throw DomainError("GridSpec: points must be even and >= 4");
        return GridSpec{L, M, L / M};
    }

    int size() const { return points * points; }

    // Signed integer mode for a storage index, in (-M/2, M/2].
    int mode(int index) const { return index <= points / 2 ? index : index - points; }

    // First-derivative wavenumber 2*pi*mode/L with the Nyquist entry zeroed,
    // which keeps odd derivatives of real fields real.
    double wavenumber_d1(int index) const {
        if (index == points / 2) return 0.0;
        return 2.0 * std::numbers::pi * mode(index) / length;
    }

    // Squared wavenumber (2*pi*mode/L)^2 for even derivatives; the Nyquist
    // entry keeps its full weight (pi*M/L)^2.
    double wavenumber_sq(int index) const {
        const double q = 2.0 * std::numbers::pi * mode(index) / length;
        return q * q;
    }

    double node_x(int i) const { return i * spacing; }
    double node_y(int j) const { return j * spacing; }

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.length == b.length && a.points == b.points;
    }
    friend bool operator!=(const GridSpec& a, const GridSpec& b) { return !(a == b); }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (a != b) throw GridMismatch("fields live on different grids");
}

}  // namespace nss
