#pragma once

#include <vector>

namespace wedgeworks {

/// Coefficients of |n>_L |n>_R, n = 0..n_max.
struct TwoModeState {
    double theta = 0.0;
    int n_max = 1;
    std::vector<double> amplitudes;

    bool operator==(const TwoModeState&) const = default;
};

struct ReducedSpectrum {
    std::vector<double> probabilities;
    double mean_occupation = 0.0;
    double entropy = 0.0;

    bool operator==(const ReducedSpectrum&) const = default;
};

/// amplitudes[n] = tanh^n(theta) / cosh(theta)
TwoModeState squeezed_vacuum(double theta, int n_max);

/// Norm deficit bound of the truncated squeezed vacuum, tanh(theta)^(2(n_max+1)).
double squeeze_tail_bound(double theta, int n_max);

/// One side traced out of the Schmidt-diagonal pair state.
ReducedSpectrum reduced_spectrum(const TwoModeState& state);

struct BilocalState {
    TwoModeState state;
    bool perturbative_warning = false;  // lambda_eff > 0.1
};

/// |0,0> + lambda |1,1>, normalised after truncation. State theta is atanh(lambda).
/// Accepts 0 <= lambda_eff <= 0.3.
BilocalState bilocal_first_order(double lambda_eff, int n_max);

struct OracleState {
    TwoModeState state;
    bool truncation_warning = false;  // top amplitude above 1e-8
};

/// exp(theta (c_L^+ c_R^+ - c_L c_R)) |0,0> on the truncated pair basis.
OracleState exact_squeeze_oracle(double theta, int n_max);

}  // namespace wedgeworks
