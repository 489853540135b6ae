#pragma once

// Brute-force cross-check of the Fourier-diagonal steppers on tiny grids.
//
// The Laplacian is assembled as a dense M^2 x M^2 matrix column by column
// through the serial reference transforms; the operator exponential and the
// phi weights are evaluated by scaled Taylor series with step doubling; the
// stabilization solve uses dense LU.  Nothing here shares code with the
// per-mode production path, so agreement pins both the matrix functions and
// the symbol algebra.

#include <vector>

#include "nss/symbols.hpp"

namespace nss {

class DenseOracle {
  public:
    DenseOracle(const GridSpec& grid, const SchemeParams& params, double tau);

    // Advances the given nodal state(s) exactly like the production stepper:
    // the first step is the scheme's init step, later steps the multistep
    // form.  Returns the trajectory u_1 ... u_n.
    std::vector<Field> advance(const Field& u0, int nsteps) const;

  private:
    using Mat = std::vector<double>;  // n x n row-major

    GridSpec grid_;
    SchemeParams params_;
    double tau_;
    int n_ = 0;
    Mat lap_;      // Delta_N
    Mat expK_;     // e^{-tau K}
    Mat phi0_;     // phi0(K)
    Mat phi1_;     // phi1(K)
    Mat stab_lu_;  // LU factors of I + A tau^2 lap^2 (stabilized scheme only)
    std::vector<int> stab_piv_;

    std::vector<double> slot(const Field& u) const;
};

// Max deviation between the production stepper and the dense oracle over
// nsteps from seeded random mean-zero data; used by tests and `oracle` CLI.
double oracle_deviation(const GridSpec& grid, const SchemeParams& params, double tau,
                        unsigned long long seed, int nsteps);

}  // namespace nss
