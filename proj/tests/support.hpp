#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace wwtest {

using Complex = std::complex<double>;

inline double rel_err(Complex got, Complex want) {
    const double d = std::abs(got - want);
    return want == Complex{} ? d : d / std::abs(want);
}

inline double rel_err(double got, double want) { return want == 0.0 ? std::abs(got) : std::abs((got - want) / want); }

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::vector<double> geomspace(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return v;
}

}  // namespace wwtest
