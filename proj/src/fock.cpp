#include "wedgeworks/fock.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "wedgeworks/errors.hpp"

namespace wedgeworks {

namespace {

void check(double theta, int n_max) {
    if (!(theta >= 0.0) || !std::isfinite(theta)) throw DomainError("theta must be finite and non-negative");
    if (n_max < 1) throw DomainError("n_max must be at least 1");
}

}  // namespace

TwoModeState squeezed_vacuum(double theta, int n_max) {
    check(theta, n_max);
    TwoModeState s{theta, n_max, {}};
    const double t = std::tanh(theta);
    double amp = 1.0 / std::cosh(theta);
    for (int n = 0; n <= n_max; ++n) {
        s.amplitudes.push_back(amp);
        amp *= t;
    }
    return s;
}

double squeeze_tail_bound(double theta, int n_max) {
    check(theta, n_max);
    return std::pow(std::tanh(theta), 2.0 * (n_max + 1));
}

ReducedSpectrum reduced_spectrum(const TwoModeState& state) {
    ReducedSpectrum r;
    for (std::size_t n = 0; n < state.amplitudes.size(); ++n) {
        const double p = state.amplitudes[n] * state.amplitudes[n];
        r.probabilities.push_back(p);
        r.mean_occupation += static_cast<double>(n) * p;
        if (p > 0.0) r.entropy -= p * std::log(p);
    }
    return r;
}

BilocalState bilocal_first_order(double lambda, int n_max) {
    if (!(std::abs(lambda) < 1.0)) throw DomainError("lambda_eff must satisfy |lambda_eff| < 1");
    if (!(lambda >= 0.0) || lambda > 0.3) throw DomainError("lambda_eff outside the perturbative range [0, 0.3]");
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    BilocalState b;
    b.state.theta = std::atanh(lambda);
    b.state.n_max = n_max;
    b.state.amplitudes.assign(n_max + 1, 0.0);
    const double norm = std::sqrt(1.0 + lambda * lambda);
    b.state.amplitudes[0] = 1.0 / norm;
    b.state.amplitudes[1] = lambda / norm;
    b.perturbative_warning = lambda > 0.1;
    return b;
}

OracleState exact_squeeze_oracle(double theta, int n_max) {
    check(theta, n_max);
    const int d = n_max + 1;
    // c_L^+ c_R^+ |n,n> = (n+1) |n+1,n+1>
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n) {
        G(n + 1, n) = theta * (n + 1);
        G(n, n + 1) = -theta * (n + 1);
    }
    const Eigen::MatrixXd U = G.exp();
    OracleState o;
    o.state.theta = theta;
    o.state.n_max = n_max;
    for (int n = 0; n < d; ++n) o.state.amplitudes.push_back(U(n, 0));
    o.truncation_warning = std::abs(o.state.amplitudes.back()) > 1e-8;
    return o;
}

}  // namespace wedgeworks
