#include "wedgeworks/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wedgeworks/errors.hpp"
#include "wedgeworks/quadrature.hpp"

namespace wedgeworks {

namespace {

using std::numbers::pi;
const Complex I(0.0, 1.0);

void check(const PacketParams& p) {
    auto pos = [](double v, const char* n) {
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(n) + " must be positive and finite");
    };
    pos(p.q, "q");
    pos(p.k_omega, "k_omega");
    pos(p.accel, "accel");
    pos(p.sigma, "sigma");
    if (!std::isfinite(p.mu)) throw DomainError("mu must be finite");
    if (!(p.epsilon_reg >= 0.0)) throw DomainError("epsilon_reg must be non-negative");
}

}  // namespace

Complex packet_z(const PacketParams& p) { return Complex(p.mu / p.sigma, p.q * p.sigma); }
Complex packet_nu(const PacketParams& p) { return Complex(0.0, -p.k_omega / p.accel); }

Complex gaussian_overlap_closed(const PacketParams& p, const PcfOptions& opt) {
    check(p);
    const double kp = p.k_omega / p.accel;
    const Complex z = packet_z(p);
    const Complex nu = packet_nu(p);
    const PcfEvaluation d = pcf_log(nu, z, opt);
    const Complex lv = std::log(std::sqrt(p.k_omega / p.q) / (2.0 * pi * p.accel)) +
                       I * kp * std::log(p.sigma * p.accel) - p.mu * p.mu / (2.0 * p.sigma * p.sigma) +
                       z * z / 4.0 + complex_log_gamma(-nu) + d.log_value;
    return std::exp(lv);
}

Complex packet_integral(double q, Complex s, double mu, double sigma) {
    if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
    if (s.real() < 0.0 || s == Complex{}) throw DomainError("packet integral needs Re s >= 0, s != 0");
    auto h = [&](double x) {
        const double u = (x - mu) / sigma;
        return std::exp(Complex(-0.5 * u * u, q * x));
    };
    double scale = sigma;
    if (q != 0.0) scale = std::min(scale, 1.0 / std::abs(q));
    if (mu != 0.0) scale = std::min(scale, sigma * sigma / std::abs(mu));
    const double x1 = 0.5 * scale;
    AdaptiveOptions opt;
    opt.rel_tol = 1e-12;
    opt.max_intervals = 20000;
    constexpr double W = 40.0;
    auto near = [&](double w) { return std::exp(-s * w) * h(x1 * std::exp(-w)); };
    QuadResult rn = integrate(near, 0.0, W, opt);
    const Complex x1s = std::exp(s * std::log(x1));
    Complex total = x1s * (rn.value + h(0.0) * std::exp(-s * W) / s);
    double err = std::abs(x1s) * rn.error;
    auto far = [&](double x) { return std::exp((s - 1.0) * std::log(x)) * h(x); };
    const double xmax = std::max(mu, 0.0) + 12.0 * sigma;
    if (xmax > x1) {
        // chunks of a few oscillation periods keep each adaptive run short
        const double period = q != 0.0 ? 2.0 * pi / std::abs(q) : xmax;
        const int chunks = std::clamp(static_cast<int>((xmax - x1) / (20.0 * period)) + 1, 1, 2000);
        for (int j = 0; j < chunks; ++j) {
            const double a = x1 + (xmax - x1) * j / chunks;
            const double b = x1 + (xmax - x1) * (j + 1) / chunks;
            QuadResult r = integrate(far, a, b, opt);
            total += r.value;
            err += r.error;
        }
    }
    if (!(err <= 1e-8 * std::abs(total) || err < 1e-300))
        throw ConvergenceError("packet overlap quadrature did not converge");
    return total;
}

Complex gaussian_overlap_numeric(const PacketParams& p) {
    check(p);
    const double kp = p.k_omega / p.accel;
    const Complex pref = std::sqrt(p.k_omega / p.q) / (2.0 * pi) * std::exp((I * kp - 1.0) * std::log(p.accel));
    return pref * packet_integral(p.q, Complex(0.0, kp), p.mu, p.sigma);
}

double scaled_modulus(const PacketParams& p, const PcfOptions& opt) {
    const Complex v = gaussian_overlap_closed(p, opt);
    return 2.0 * pi * p.accel * p.q * std::norm(v) * std::exp(-2.0 * p.epsilon_reg * p.k_omega / p.accel);
}

StokesClass stokes_classify(const PacketParams& p, double band) {
    check(p);
    StokesClass s;
    s.z = packet_z(p);
    const double th = std::arg(s.z);
    if (th > pi / 4.0 + band) s.region = StokesRegion::ThermalDominant;
    else if (th < pi / 4.0 - band) s.region = StokesRegion::LocalizedDominant;
    else s.region = StokesRegion::NearLine;
    return s;
}

std::vector<StokesPoint> stokes_trajectory(double q, double a, double mu, const std::vector<double>& sigmas) {
    std::vector<StokesPoint> out;
    for (double sg : sigmas) {
        PacketParams p{q, 1.0, a, mu, sg, 0.0};
        StokesClass c = stokes_classify(p);
        out.push_back({sg, c.z, std::arg(c.z), c.region, classify_dominant_term(c.z)});
    }
    return out;
}

std::vector<SpectralCurve> sigma_sweep(double q, const std::vector<double>& k_grid, double a, double mu,
                                       const std::vector<double>& sigmas, double eps) {
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        if (!(k_grid[i] > 0.0)) throw DomainError("frequency grid must be positive");
        if (i && !(k_grid[i] > k_grid[i - 1])) throw DomainError("frequency grid must be strictly increasing");
    }
    std::vector<SpectralCurve> curves;
    for (double sg : sigmas) {
        SpectralCurve c;
        c.kind = CurveKind::GaussianPacket;
        c.q_omega = q;
        c.accel = a;
        c.mu = mu;
        c.sigma = sg;
        for (double k : k_grid) c.samples.push_back({k, scaled_modulus({q, k, a, mu, sg, eps})});
        curves.push_back(std::move(c));
    }
    return curves;
}

std::vector<double> default_sigmas() { return {0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0}; }

std::string to_string(StokesRegion r) {
    switch (r) {
        case StokesRegion::ThermalDominant: return "thermalDominant";
        case StokesRegion::LocalizedDominant: return "localizedDominant";
        case StokesRegion::NearLine: return "nearLine";
    }
    return "?";
}

StokesRegion stokes_region_from_string(const std::string& s) {
    for (StokesRegion r : {StokesRegion::ThermalDominant, StokesRegion::LocalizedDominant, StokesRegion::NearLine})
        if (to_string(r) == s) return r;
    throw DomainError("unknown Stokes region '" + s + "'");
}

}  // namespace wedgeworks
