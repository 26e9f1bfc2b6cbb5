#include "wedgeworks/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wedgeworks/errors.hpp"
#include "wedgeworks/quadrature.hpp"
#include "wedgeworks/specfun.hpp"

namespace wedgeworks {

namespace {

using std::numbers::pi;
const Complex I(0.0, 1.0);

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

void check(double k, double q, double c, double a) {
    require_positive(k, "k_omega");
    require_positive(q, "q_omega");
    require_positive(c, "apex_c");
    require_positive(a, "accel");
}

// (ac)^{i w / a}
Complex apex_phase(double w, double c, double a) { return std::exp(I * (w / a) * std::log(a * c)); }

// log sinh x for x > 0
double log_sinh(double x) { return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0); }

}  // namespace

BogoPair bogo_c_to_M(double k, double q, double c, double a) {
    require_positive(k, "k_omega");
    require_positive(q, "q_omega");
    require_positive(a, "accel");
    if (!std::isfinite(c)) throw DomainError("apex_c must be finite");
    const double kp = k / a;
    const Complex core = std::log(std::sqrt(k / q) / (2.0 * pi * a)) + I * kp * std::log(a / q) +
                         complex_log_gamma(Complex(0.0, kp));
    BogoPair p{BogoKind::CToM, k, q, c, a, {}, {}};
    p.alpha = std::exp(core + pi * kp / 2.0 - I * (q * c));
    p.beta = std::exp(core - pi * kp / 2.0 + I * (q * c));
    return p;
}

Complex alpha_c_to_0(double k, double q, double c, double a) {
    check(k, q, c, a);
    if (k == q) throw PoleError("alpha (c->0) has a pole at omega_k = omega_q");
    const Complex lb = complex_log_beta(Complex(0.0, k / a), Complex(0.0, -(k - q) / a));
    return std::sqrt(k / q) / (2.0 * pi * a) * apex_phase(k - q, c, a) * std::exp(lb);
}

Complex beta_c_to_0(double k, double q, double c, double a) {
    check(k, q, c, a);
    const Complex lb = complex_log_beta(Complex(0.0, k / a), Complex(0.0, -(k + q) / a));
    return std::sqrt(k / q) / (2.0 * pi * a) * apex_phase(k + q, c, a) * std::exp(lb);
}

BogoPair bogo_c_to_0(double k, double q, double c, double a) {
    return {BogoKind::CTo0, k, q, c, a, alpha_c_to_0(k, q, c, a), beta_c_to_0(k, q, c, a)};
}

Complex alpha_ctilde_to_0(double k, double q, double c, double a) {
    check(k, q, c, a);
    if (k == q) throw PoleError("alpha (c~->0) has a pole at omega_k = omega_q");
    const Complex lb = complex_log_beta(Complex(0.0, k / a), Complex(0.0, -q / a));
    return std::sqrt(k * q) / (2.0 * pi * a * (q - k)) * apex_phase(k - q, c, a) * std::exp(lb);
}

Complex beta_ctilde_to_0(double k, double q, double c, double a) {
    check(k, q, c, a);
    const Complex lb = complex_log_beta(Complex(0.0, k / a), Complex(0.0, q / a));
    return std::sqrt(k * q) / (2.0 * pi * a * (q + k)) * apex_phase(k + q, c, a) * std::exp(lb);
}

BogoPair bogo_ctilde_to_0(double k, double q, double c, double a) {
    return {BogoKind::CTildeTo0, k, q, c, a, alpha_ctilde_to_0(k, q, c, a), beta_ctilde_to_0(k, q, c, a)};
}

double thermal_curve_value(double q, double k, double a) {
    require_positive(q, "q_omega");
    require_positive(k, "k_omega");
    require_positive(a, "accel");
    return 1.0 / (2.0 * pi * a * q) / -std::expm1(-2.0 * pi * k / a);
}

double wedge_overlap_sq(double q, double k, double a) {
    require_positive(q, "q_omega");
    require_positive(k, "k_omega");
    require_positive(a, "accel");
    if (k == q) throw PoleError("complete-Beta overlap has a second-order pole at omega_k = omega_q");
    const double d = std::abs(q - k);
    const double l = log_sinh(pi * q / a) - log_sinh(pi * d / a) - log_sinh(pi * k / a);
    return std::exp(l) / (4.0 * pi * a * d);
}

Complex diamond_overlap(double q, double k, double c, double a) {
    check(k, q, c, a);
    // s = (x - c)/x maps [c, 2c] to [0, 1/2]:
    //   (ac)^{i(k-q)/a} (1/a) N_q N_k  int_0^{1/2} s^{B-1} (1-s)^{A-1} (w_k + w_q s) ds
    const Complex A(0.0, (q - k) / a);
    const Complex B(0.0, k / a);
    auto h = [&](double s) { return std::exp((A - 1.0) * std::log1p(-s)) * (k + q * s); };
    AdaptiveOptions opt;
    opt.rel_tol = 1e-13;
    const double s1 = 0.25;
    constexpr double W = 40.0;
    // Near s = 0 the oscillating limit h(0) is integrated exactly; the rest decays like e^{-w}.
    const Complex h0 = h(0.0);
    auto near = [&](double w) { return std::exp(-B * w) * (h(s1 * std::exp(-w)) - h0); };
    QuadResult rn = integrate(near, 0.0, W, opt);
    auto far = [&](double s) { return std::exp((B - 1.0) * std::log(s)) * h(s); };
    QuadResult rf = integrate(far, s1, 0.5, opt);
    const Complex s1B = std::exp(B * std::log(s1));
    const Complex tail = h0 / B;
    const Complex total = s1B * (rn.value + tail) + rf.value;
    if (!(rn.error + rf.error <= 1e-9 * std::abs(total)))
        throw ConvergenceError("diamond overlap quadrature did not converge");
    const double norm = 1.0 / (4.0 * pi * std::sqrt(q * k));
    return norm / a * apex_phase(k - q, c, a) * total;
}

double SpectralCurve::max_value() const {
    double m = 0.0;
    for (const auto& s : samples) m = std::max(m, s.value);
    return m;
}

SpectralCurve spectral_curve(CurveKind kind, double q, double a, const std::vector<double>& grid,
                             double c) {
    require_positive(q, "q_omega");
    require_positive(a, "accel");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        require_positive(grid[i], "grid node");
        if (i && !(grid[i] > grid[i - 1])) throw DomainError("frequency grid must be strictly increasing");
    }
    SpectralCurve out;
    out.kind = kind;
    out.q_omega = q;
    out.accel = a;
    if (kind == CurveKind::IncompleteBeta) {
        require_positive(c, "apex_c");
        out.apex_c = c;
    }
    for (double w : grid) {
        double v = 0.0;
        switch (kind) {
            case CurveKind::Thermal: v = thermal_curve_value(q, w, a); break;
            case CurveKind::CompleteBeta:
                if (std::abs(w - q) < kPoleWindow * q) continue;
                v = wedge_overlap_sq(q, w, a);
                break;
            case CurveKind::IncompleteBeta: v = std::norm(diamond_overlap(q, w, c, a)); break;
            case CurveKind::GaussianPacket:
                throw DomainError("packet curves come from sigma_sweep");
        }
        out.samples.push_back({w, v});
    }
    return out;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 1) throw DomainError("grid needs at least one point");
    if (points == 1) return {lo};
    if (!(hi > lo)) throw DomainError("grid-max must exceed grid-min");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
    return g;
}

std::string to_string(BogoKind k) {
    switch (k) {
        case BogoKind::CToM: return "cToM";
        case BogoKind::CTo0: return "cTo0";
        case BogoKind::CTildeTo0: return "cTildeTo0";
    }
    return "?";
}

std::string to_string(CurveKind k) {
    switch (k) {
        case CurveKind::Thermal: return "thermal";
        case CurveKind::CompleteBeta: return "completeBeta";
        case CurveKind::IncompleteBeta: return "incompleteBeta";
        case CurveKind::GaussianPacket: return "gaussianPacket";
    }
    return "?";
}

BogoKind bogo_kind_from_string(const std::string& s) {
    for (BogoKind k : {BogoKind::CToM, BogoKind::CTo0, BogoKind::CTildeTo0})
        if (to_string(k) == s) return k;
    throw DomainError("unknown Bogoliubov kind '" + s + "'");
}

CurveKind curve_kind_from_string(const std::string& s) {
    for (CurveKind k : {CurveKind::Thermal, CurveKind::CompleteBeta, CurveKind::IncompleteBeta,
                        CurveKind::GaussianPacket})
        if (to_string(k) == s) return k;
    throw DomainError("unknown curve kind '" + s + "'");
}

}  // namespace wedgeworks
