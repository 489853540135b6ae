#include "nss/fit.hpp"

#include <cmath>

namespace nss {

namespace {

struct Ols {
    double slope = 0.0;
    double intercept = 0.0;
};

Ols ols(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    Ols r;
    if (det == 0.0) {
        // degenerate abscissa (all t equal); fall back to the mean
        r.slope = 0.0;
        r.intercept = sy / n;
    } else {
        r.slope = (n * sxy - sx * sy) / det;
        r.intercept = (sy - r.slope * sx) / n;
    }
    return r;
}

}  // namespace

double FitResult::eval(double t) const {
    return model == FitModel::LOG ? a * std::log(t) + b : a * std::pow(t, b);
}

FitResult fit_log(const TimeSeries& series, const FitWindow& window) {
    std::vector<double> lx, y;
    for (size_t i = 0; i < series.size(); ++i) {
        const double t = series.t[i];
        if (t < window.t_lo || t > window.t_hi) continue;
        if (!(t > 0.0)) throw NonPositiveTime("fit_log: sample at t <= 0 inside window");
        lx.push_back(std::log(t));
        y.push_back(series.value[i]);
    }
    if (lx.size() < 2) throw EmptyWindow("fit_log: fewer than 2 samples in window");
    const Ols r = ols(lx, y);
    FitResult out;
    out.model = FitModel::LOG;
    out.a = r.slope;
    out.b = r.intercept;
    out.t_lo = window.t_lo;
    out.t_hi = window.t_hi;
    double ss = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
        const double res = y[i] - (r.slope * lx[i] + r.intercept);
        ss += res * res;
    }
    out.rms_residual = std::sqrt(ss / lx.size());
    return out;
}

FitResult fit_power(const TimeSeries& series, const FitWindow& window) {
    std::vector<double> lx, ly;
    for (size_t i = 0; i < series.size(); ++i) {
        const double t = series.t[i];
        if (t < window.t_lo || t > window.t_hi) continue;
        if (!(t > 0.0)) throw NonPositiveTime("fit_power: sample at t <= 0 inside window");
        if (!(series.value[i] > 0.0))
            throw NonPositiveValue("fit_power: nonpositive value inside window");
        lx.push_back(std::log(t));
        ly.push_back(std::log(series.value[i]));
    }
    if (lx.size() < 2) throw EmptyWindow("fit_power: fewer than 2 samples in window");
    const Ols r = ols(lx, ly);
    FitResult out;
    out.model = FitModel::POWER;
    out.a = std::exp(r.intercept);
    out.b = r.slope;
    out.t_lo = window.t_lo;
    out.t_hi = window.t_hi;
    double ss = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
        const double res = ly[i] - (r.slope * lx[i] + r.intercept);
        ss += res * res;
    }
    out.rms_residual = std::sqrt(ss / lx.size());
    return out;
}

}  // namespace nss
