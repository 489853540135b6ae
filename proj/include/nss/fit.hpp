#pragma once

// Least-squares fits of trajectory diagnostics to the long-time laws
// a*ln(t)+b (energy) and a*t^b (roughness, slope), plus CSV emission.

#include <string>
#include <vector>

#include "nss/model.hpp"

namespace nss {

struct TimeSeries {
    std::string name;
    std::vector<double> t;
    std::vector<double> value;

    void push(double time, double v) {
        t.push_back(time);
        value.push_back(v);
    }
    size_t size() const { return t.size(); }
};

enum class FitModel { LOG, POWER };

struct FitResult {
    double a = 0.0;
    double b = 0.0;
    FitModel model = FitModel::LOG;
    double rms_residual = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;

    double eval(double t) const;
};

struct FitWindow {
    double t_lo = 1.0;
    double t_hi = 1000.0;
};

// OLS of value against ln t.  Throws EmptyWindow (< 2 samples in window) or
// NonPositiveTime.
FitResult fit_log(const TimeSeries& series, const FitWindow& window);

// OLS of ln value against ln t; a = exp(intercept), b = slope.  Throws
// NonPositiveValue in addition.
FitResult fit_power(const TimeSeries& series, const FitWindow& window);

}  // namespace nss
