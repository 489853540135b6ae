#include "nss/dense_oracle.hpp"

#include <cmath>

#include "nss/init.hpp"
#include "nss/ref.hpp"
#include "nss/stepper.hpp"

namespace nss {

namespace {

using Mat = std::vector<double>;

Mat matmul(const Mat& a, const Mat& b, int n) {
    Mat c(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a[static_cast<size_t>(i) * n + k];
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j)
                c[static_cast<size_t>(i) * n + j] += aik * b[static_cast<size_t>(k) * n + j];
        }
    return c;
}

Mat identity(int n) {
    Mat m(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1.0;
    return m;
}

double inf_norm(const Mat& a, int n) {
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::abs(a[static_cast<size_t>(i) * n + j]);
        best = std::max(best, row);
    }
    return best;
}

// LU with partial pivoting, in place; pivots returned separately.
void lu_factor(Mat& a, std::vector<int>& piv, int n) {
    piv.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[static_cast<size_t>(i) * n + k]) >
                std::abs(a[static_cast<size_t>(p) * n + k]))
                p = i;
        piv[static_cast<size_t>(k)] = p;
        if (p != k)
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<size_t>(k) * n + j], a[static_cast<size_t>(p) * n + j]);
        const double pivot = a[static_cast<size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            const double m = a[static_cast<size_t>(i) * n + k] / pivot;
            a[static_cast<size_t>(i) * n + k] = m;
            for (int j = k + 1; j < n; ++j)
                a[static_cast<size_t>(i) * n + j] -= m * a[static_cast<size_t>(k) * n + j];
        }
    }
}

void lu_solve(const Mat& lu, const std::vector<int>& piv, std::vector<double>& x, int n) {
    for (int k = 0; k < n; ++k)
        if (piv[static_cast<size_t>(k)] != k)
            std::swap(x[static_cast<size_t>(k)], x[static_cast<size_t>(piv[static_cast<size_t>(k)])]);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) x[static_cast<size_t>(i)] -= lu[static_cast<size_t>(i) * n + j] * x[static_cast<size_t>(j)];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j)
            x[static_cast<size_t>(i)] -= lu[static_cast<size_t>(i) * n + j] * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] /= lu[static_cast<size_t>(i) * n + i];
    }
}

std::vector<double> matvec(const Mat& a, const std::vector<double>& x, int n) {
    std::vector<double> y(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += a[static_cast<size_t>(i) * n + j] * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

// e^{-tau K}, phi0(K), phi1(K) by Taylor series on a halved step, then
// doubling:  phi0(2t) = (I + E) phi0(t),  phi1(2t) = (E phi1 + phi0 + phi1)/2.
void matrix_phis(const Mat& K, double tau, int n, Mat& expK, Mat& phi0, Mat& phi1) {
    int squarings = 0;
    double t = tau;
    while (inf_norm(K, n) * t > 0.5) {
        t *= 0.5;
        ++squarings;
    }
    // Z = -t K
    Mat Z(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < Z.size(); ++i) Z[i] = -t * K[i];
    expK = identity(n);
    phi0 = identity(n);
    phi1 = identity(n);
    for (auto& v : phi1) v *= 0.5;
    Mat term = identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = matmul(term, Z, n);
        for (auto& v : term) v /= k;
        for (size_t i = 0; i < term.size(); ++i) {
            expK[i] += term[i];
            phi0[i] += term[i] / (k + 1);
            phi1[i] += term[i] / ((k + 1) * (k + 2));
        }
    }
    for (auto& v : phi0) v *= t;
    for (auto& v : phi1) v *= t;
    for (int s = 0; s < squarings; ++s) {
        Mat e_phi1 = matmul(expK, phi1, n);
        for (size_t i = 0; i < phi1.size(); ++i) phi1[i] = 0.5 * (e_phi1[i] + phi0[i] + phi1[i]);
        Mat e_phi0 = matmul(expK, phi0, n);
        for (size_t i = 0; i < phi0.size(); ++i) phi0[i] += e_phi0[i];
        expK = matmul(expK, expK, n);
    }
}

}  // namespace

DenseOracle::DenseOracle(const GridSpec& grid, const SchemeParams& params, double tau)
    : grid_(grid), params_(params), tau_(tau), n_(grid.size()) {
    // Delta_N column by column through the reference transforms
    lap_.assign(static_cast<size_t>(n_) * n_, 0.0);
    for (int col = 0; col < n_; ++col) {
        Field e(grid_);
        e.values[static_cast<size_t>(col)] = 1.0;
        const Field lap_e = ref::laplacian(e);
        for (int row = 0; row < n_; ++row)
            lap_[static_cast<size_t>(row) * n_ + col] = lap_e.values[static_cast<size_t>(row)];
    }
    const Mat lap2 = matmul(lap_, lap_, n_);

    Mat K(static_cast<size_t>(n_) * n_);
    if (params_.scheme == Scheme::SETDMS2) {
        // K = eps2 (I + A tau^2 lap^2)^{-1} lap^2, columnwise LU solves
        Mat B = identity(n_);
        for (size_t i = 0; i < B.size(); ++i) B[i] += params_.A * tau * tau * lap2[i];
        stab_lu_ = B;
        lu_factor(stab_lu_, stab_piv_, n_);
        for (int col = 0; col < n_; ++col) {
            std::vector<double> x(static_cast<size_t>(n_));
            for (int row = 0; row < n_; ++row)
                x[static_cast<size_t>(row)] = lap2[static_cast<size_t>(row) * n_ + col];
            lu_solve(stab_lu_, stab_piv_, x, n_);
            for (int row = 0; row < n_; ++row)
                K[static_cast<size_t>(row) * n_ + col] = params_.model.eps2 * x[static_cast<size_t>(row)];
        }
    } else {
        // L_c = eps2 lap^2 - kappa lap
        for (size_t i = 0; i < K.size(); ++i)
            K[i] = params_.model.eps2 * lap2[i] - params_.kappa * lap_[i];
    }
    matrix_phis(K, tau_, n_, expK_, phi0_, phi1_);
}

std::vector<double> DenseOracle::slot(const Field& u) const {
    const Field f = ref::nonlinear_term(u);
    std::vector<double> e = f.values;
    if (params_.scheme == Scheme::SETDMS2) {
        lu_solve(stab_lu_, stab_piv_, e, n_);
    } else if (params_.kappa != 0.0) {
        const Field lap_u = ref::laplacian(u);
        for (int i = 0; i < n_; ++i)
            e[static_cast<size_t>(i)] += params_.kappa * lap_u.values[static_cast<size_t>(i)];
    }
    return e;
}

std::vector<Field> DenseOracle::advance(const Field& u0, int nsteps) const {
    std::vector<Field> out;
    std::vector<double> u = u0.values;
    std::vector<double> prev_slot;
    for (int step = 0; step < nsteps; ++step) {
        Field u_field(grid_, u);
        std::vector<double> e = slot(u_field);
        std::vector<double> u_next = matvec(expK_, u, n_);
        const std::vector<double> p0e = matvec(phi0_, e, n_);
        for (int i = 0; i < n_; ++i) u_next[static_cast<size_t>(i)] -= p0e[static_cast<size_t>(i)];
        const bool multistep = params_.scheme != Scheme::ETD1 && !prev_slot.empty();
        if (multistep) {
            std::vector<double> de(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i)
                de[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] - prev_slot[static_cast<size_t>(i)];
            const std::vector<double> p1de = matvec(phi1_, de, n_);
            for (int i = 0; i < n_; ++i) u_next[static_cast<size_t>(i)] -= p1de[static_cast<size_t>(i)];
        }
        if (params_.scheme != Scheme::ETD1) prev_slot = std::move(e);
        u = std::move(u_next);
        out.emplace_back(grid_, u);
    }
    return out;
}

double oracle_deviation(const GridSpec& grid, const SchemeParams& params, double tau,
                        unsigned long long seed, int nsteps) {
    const Field u0 = project_zero_mean(random_field(grid, seed, 0.1));
    const DenseOracle oracle(grid, params, tau);
    const std::vector<Field> expected = oracle.advance(u0, nsteps);

    Stepper st(grid, params);
    st.seed(u0, 0.0);
    st.start_segment(tau);
    double worst = 0.0;
    for (int k = 0; k < nsteps; ++k) {
        st.step();
        const Field u = st.u();
        for (size_t i = 0; i < u.values.size(); ++i)
            worst = std::max(worst, std::abs(u.values[i] - expected[static_cast<size_t>(k)].values[i]));
    }
    return worst;
}

}  // namespace nss
