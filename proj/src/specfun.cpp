#include "wedgeworks/specfun.hpp"

#include <array>
#include <cmath>

#include "wedgeworks/errors.hpp"
#include "wedgeworks/quadrature.hpp"

namespace wedgeworks {

namespace {

using std::numbers::pi;

const Complex I(0.0, 1.0);

// B_{2k} / (2k (2k-1))
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,           1.0 / 1260.0,   -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,      1.0 / 156.0,    -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0};

bool is_gamma_pole(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex stirling(Complex z) {
    const Complex zi = 1.0 / z;
    const Complex zi2 = zi * zi;
    Complex corr{};
    Complex p = zi;
    for (double c : kStirling) {
        corr += c * p;
        p *= zi2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + corr;
}

// log sin(pi z) without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
    const double n = std::round(z.real());
    const Complex zr = z - n;
    Complex out;
    if (zr.imag() > 1.0) {
        out = -I * pi * zr + std::log(1.0 - std::exp(2.0 * I * pi * zr)) - std::log(2.0) +
              I * (pi / 2.0);
    } else if (zr.imag() < -1.0) {
        out = std::conj(log_sin_pi(std::conj(zr)));
    } else {
        out = std::log(std::sin(pi * zr));
    }
    return out + I * (pi * std::fmod(n, 2.0));
}

Complex log_gamma_right(Complex z) {
    Complex shift{};
    while (std::abs(z) < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling(z) - shift;
}

constexpr double kLogWindow = 40.0;

// log of  int_0^inf exp(-(s - z)^2 / 2) s^(lam - 1) ds,  Re lam > 0.
Complex log_scaled_integral(Complex lam, Complex z, double tol) {
    AdaptiveOptions qopt;
    qopt.rel_tol = tol;
    qopt.max_intervals = 2000;
    double err = 0.0;
    Complex total{};
    Complex log_factor{};

    auto near_zero = [&](auto& g, double tau1) {
        // tau = tau1 e^{-w}
        auto h = [&](double w) { return std::exp(-lam * w) * g(tau1 * std::exp(-w)); };
        QuadResult r = integrate(h, 0.0, kLogWindow, qopt);
        err += std::abs(std::pow(Complex(tau1), lam)) * r.error;
        Complex tail = g(0.0) * std::exp(-lam * kLogWindow) / lam;
        return std::pow(Complex(tau1), lam) * (r.value + tail);
    };

    if (z.real() > 0.0) {
        const Complex z2 = z * z;
        if (z2.real() < 0.0) log_factor = -z2 / 2.0;
        auto g = [&](double tau) {
            const double u = 1.0 - tau;
            return std::exp(-z2 * (u * u) / 2.0 - log_factor);
        };
        const double tau1 = std::min(0.5, 1.0 / std::norm(z));
        Complex seg = near_zero(g, tau1);
        auto far = [&](double tau) { return std::exp((lam - 1.0) * std::log(tau)) * g(tau); };
        QuadResult rf = integrate(far, tau1, 1.0, qopt);
        const Complex zl = std::exp(lam * std::log(z));
        seg += rf.value;
        err += std::abs(zl) * rf.error;
        seg *= zl;
        auto ray = [&](double t) {
            return std::exp(-t * t / 2.0 - log_factor + (lam - 1.0) * std::log(z + t));
        };
        QuadResult rr = integrate(ray, 0.0, 12.0, qopt);
        err += rr.error;
        total = seg + rr.value;
    } else {
        log_factor = -z * z / 2.0;
        auto g = [&](double s) { return std::exp(z * s - s * s / 2.0); };
        const double s1 = std::min(1.0, 1.0 / (std::abs(z) + 1.0));
        total = near_zero(g, s1);
        auto far = [&](double s) { return std::exp((lam - 1.0) * std::log(s)) * g(s); };
        QuadResult rf = integrate(far, s1, 12.0, qopt);
        total += rf.value;
        err += rf.error;
    }
    if (!(err <= 1e-8 * std::abs(total)))
        throw ConvergenceError("parabolic cylinder integral did not converge");
    return log_factor + std::log(total);
}

// log of exp(-z^2/4) D_mu(-z) for Re mu < 0.
Complex log_scaled_direct(Complex mu, Complex z, double tol) {
    return log_scaled_integral(-mu, z, tol) - complex_log_gamma(-mu);
}

Complex log_add(Complex a, Complex b) {
    if (a.real() < b.real()) std::swap(a, b);
    return a + std::log(1.0 + std::exp(b - a));
}

bool is_nonneg_integer(Complex nu) {
    return nu.imag() == 0.0 && nu.real() >= 0.0 && nu.real() == std::floor(nu.real());
}

Complex asymptotic_series(Complex first_a, Complex first_b, double sign, Complex z2, double nu_abs) {
    // sum_s sign^s (first_a)_(2s) / (s! (2 z^2)^s), optimally truncated
    Complex sum = 1.0;
    Complex term = 1.0;
    double prev = 1.0;
    for (int s = 0; s < 400; ++s) {
        Complex next = term * sign * (first_a + 2.0 * s) * (first_b + 2.0 * s) /
                       (static_cast<double>(s + 1) * 2.0 * z2);
        const double an = std::abs(next);
        if (an < 1e-17 * std::abs(sum)) break;
        if (s + 1 > nu_abs + 1.0 && an >= prev) break;
        sum += next;
        term = next;
        prev = an;
    }
    return sum;
}

bool in_sector(Complex z, double margin) {
    const double th = std::arg(z);
    return th > -pi / 4.0 + margin && th < 3.0 * pi / 4.0 - margin;
}

PcfEvaluation finish(Complex log_value, PcfMethod m, Complex z) {
    PcfEvaluation e;
    e.log_value = log_value;
    e.value = std::exp(log_value);
    e.method = m;
    e.dominant_term = classify_dominant_term(z);
    return e;
}

PcfEvaluation checked(PcfEvaluation e) {
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()))
        throw RangeError("D_nu(-z) overflows double precision; use pcf_log");
    return e;
}

PcfEvaluation asymptotic_log(Complex nu, Complex z) {
    const Complex z2 = z * z;
    const Complex lz = std::log(z);
    const double na = std::abs(nu);
    Complex s1 = asymptotic_series(-nu, -nu + 1.0, -1.0, z2, na);
    Complex l1 = -I * pi * nu + nu * lz - z2 / 4.0 + std::log(s1);
    Complex lv = l1;
    if (!is_nonneg_integer(nu)) {
        Complex s2 = asymptotic_series(nu + 1.0, nu + 2.0, 1.0, z2, na);
        Complex l2 = 0.5 * std::log(2.0 * pi) - complex_log_gamma(-nu) - (nu + 1.0) * lz +
                     z2 / 4.0 + std::log(s2);
        lv = log_add(l1, l2);
    }
    return finish(lv, PcfMethod::Asymptotic, z);
}

PcfEvaluation integral_log(Complex nu, Complex z, double tol) {
    Complex ls;
    if (is_nonneg_integer(nu) && nu.real() <= 400.0) {
        // D_n(x) = e^{-x^2/4} He_n(x), x = -z, with running rescaling
        const int n = static_cast<int>(std::lround(nu.real()));
        const Complex x = -z;
        Complex h_prev = 1.0, h_cur = x, scale = 0.0;
        if (n == 0) h_cur = 1.0;
        for (int j = 1; j < n; ++j) {
            Complex h_next = x * h_cur - static_cast<double>(j) * h_prev;
            h_prev = h_cur;
            h_cur = h_next;
            const double r = std::abs(h_cur);
            if (r > 1e100) {
                scale += std::log(r);
                h_prev /= r;
                h_cur /= r;
            }
        }
        ls = -z * z / 2.0 + scale + std::log(h_cur);
    } else if (nu.real() < 0.0) {
        ls = log_scaled_direct(nu, z, tol);
    } else {
        const int m = static_cast<int>(std::floor(nu.real())) + 1;
        Complex mu = nu - static_cast<double>(m);
        const Complex ref = log_scaled_direct(mu, z, tol);
        Complex f_prev = std::exp(log_scaled_direct(mu - 1.0, z, tol) - ref);
        Complex f_cur = 1.0;
        for (int j = 0; j < m; ++j) {
            Complex f_next = -z * f_cur - mu * f_prev;
            f_prev = f_cur;
            f_cur = f_next;
            mu += 1.0;
        }
        ls = ref + std::log(f_cur);
    }
    return finish(z * z / 4.0 + ls, PcfMethod::IntegralRepresentation, z);
}

}  // namespace

Complex complex_log_gamma(Complex z) {
    if (is_gamma_pole(z)) throw PoleError("Gamma has a pole at a non-positive integer");
    if (z.real() < 0.5) return std::log(pi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
    return log_gamma_right(z);
}

Complex complex_gamma(Complex z) { return std::exp(complex_log_gamma(z)); }

Complex complex_log_beta(Complex a, Complex b) {
    if (is_gamma_pole(a) || is_gamma_pole(b)) throw PoleError("Beta argument at a Gamma pole");
    if (is_gamma_pole(a + b)) throw DomainError("Beta vanishes; its logarithm is undefined");
    return complex_log_gamma(a) + complex_log_gamma(b) - complex_log_gamma(a + b);
}

Complex complex_beta(Complex a, Complex b) {
    if (is_gamma_pole(a) || is_gamma_pole(b)) throw PoleError("Beta argument at a Gamma pole");
    if (is_gamma_pole(a + b)) return 0.0;
    return std::exp(complex_log_beta(a, b));
}

DominantTerm classify_dominant_term(Complex z) {
    const Complex z2 = z * z;
    if (std::abs(z2.real()) <= 1e-12 * std::norm(z)) return DominantTerm::Balanced;
    return z2.real() > 0.0 ? DominantTerm::DominantExpPlus : DominantTerm::RecessiveExpMinus;
}

PcfEvaluation pcf_log(Complex nu, Complex z, const PcfOptions& opt) {
    if (std::abs(z) >= opt.crossover_radius * (1.0 - 1e-12) && in_sector(z, opt.sector_margin))
        return asymptotic_log(nu, z);
    return integral_log(nu, z, opt.rel_tol);
}

PcfEvaluation parabolic_cylinder_D(Complex nu, Complex z, const PcfOptions& opt) {
    return checked(pcf_log(nu, z, opt));
}

PcfEvaluation pcf_asymptotic(Complex nu, Complex z, const PcfOptions& opt) {
    if (std::abs(z) < opt.crossover_radius * (1.0 - 1e-12))
        throw SectorError("|z| below the asymptotic crossover radius");
    if (!in_sector(z, opt.sector_margin))
        throw SectorError("arg z outside the asymptotic validity sector");
    return checked(asymptotic_log(nu, z));
}

PcfEvaluation pcf_integral(Complex nu, Complex z, const PcfOptions& opt) {
    return checked(integral_log(nu, z, opt.rel_tol));
}

std::string to_string(PcfMethod m) {
    return m == PcfMethod::Asymptotic ? "asymptotic" : "integralRepresentation";
}

std::string to_string(DominantTerm d) {
    switch (d) {
        case DominantTerm::RecessiveExpMinus: return "recessive-exp-minus";
        case DominantTerm::DominantExpPlus: return "dominant-exp-plus";
        default: return "balanced";
    }
}

}  // namespace wedgeworks
