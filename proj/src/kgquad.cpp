#include "wedgeworks/kgquad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wedgeworks/errors.hpp"
#include "wedgeworks/quadrature.hpp"

namespace wedgeworks {

namespace {

const Complex I(0.0, 1.0);
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogWindow = 40.0;

struct Accum {
    Complex value{};
    double error = 0.0;
    bool ok = true;
    int* count = nullptr;
    void add(const QuadResult& r) {
        if (count) ++*count;
        value += r.value;
        error += r.error;
        ok = ok && r.converged;
    }
};

class Overlap {
public:
    Overlap(const SliceForm& f, const SliceForm& g, const QuadratureConfig& cfg)
        : f_(f), g_(g), cfg_(cfg) {
        qopt_.rel_tol = cfg.rel_tol * 0.1;
        qopt_.abs_tol = cfg.abs_tol * 0.1;
        qopt_.max_intervals = cfg.max_subdivisions;
    }

    Complex integrand(Complex x) const {
        return I * f_.value(x) * g_.value(x) * (g_.log_derivative(x) - f_.log_derivative(x));
    }

    // x = e + d, with bases referenced to e so that tiny offsets keep full precision.
    Complex integrand_offset(double e, double d) const {
        return I * offset_value(f_, e, d) * offset_value(g_, e, d) *
               (offset_logd(g_, e, d) - offset_logd(f_, e, d));
    }

    // Same, with every power continued along a ray that starts at the real point x0.
    Complex integrand_from(double x0, Complex x) const {
        return I * ray_value(f_, x0, x) * ray_value(g_, x0, x) *
               (g_.log_derivative(x) - f_.log_derivative(x));
    }

    OverlapResult run(double lo, double hi) {
        OverlapResult r = pass(lo, hi);
        if (!r.converged && std::isfinite(r.estimated_error) && pieces_ > 0) {
            // Pieces can cancel; retry with an absolute target per piece set by the total.
            qopt_.abs_tol = std::max(qopt_.abs_tol, 0.5 * cfg_.rel_tol * std::abs(r.value) / pieces_);
            qopt_.rel_tol = 1e-15;
            extrapolation_error_ = 0.0;
            r = pass(lo, hi);
        }
        return r;
    }

private:
    OverlapResult pass(double lo, double hi) {
        pieces_ = 0;
        std::vector<double> pts;
        for (const SliceForm* s : {&f_, &g_})
            if (s->has_power && !s->horizon() && s->apex > lo && s->apex < hi) pts.push_back(s->apex);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        const std::vector<double> unruh = pts;

        double span = 1.0;
        for (const SliceForm* s : {&f_, &g_}) span = std::max(span, 1.0 / s->accel);
        std::vector<double> anchors = pts;
        if (std::isfinite(lo)) anchors.push_back(lo);
        if (std::isfinite(hi)) anchors.push_back(hi);
        if (anchors.empty()) anchors.push_back(0.0);
        const double amin = *std::min_element(anchors.begin(), anchors.end());
        const double amax = *std::max_element(anchors.begin(), anchors.end());
        const double A = std::isfinite(lo) ? lo : amin - span;
        const double B = std::isfinite(hi) ? hi : amax + span;
        pts.insert(pts.begin(), A);
        pts.push_back(B);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

        Accum acc;
        acc.count = &pieces_;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            double a = pts[i], b = pts[i + 1];
            const double len = b - a;
            const double h = std::min(0.5 * len, span);
            const bool left_special = (i == 0 && std::isfinite(lo) && horizon_exponent(a, nullptr)) ||
                                      std::binary_search(unruh.begin(), unruh.end(), a);
            const bool right_special =
                (i + 2 == pts.size() && std::isfinite(hi) && horizon_exponent(b, nullptr)) ||
                std::binary_search(unruh.begin(), unruh.end(), b);
            double ia = a, ib = b;
            if (left_special) {
                endpoint_piece(acc, a, +1.0, h);
                ia = a + h;
            }
            if (right_special) {
                endpoint_piece(acc, b, -1.0, h);
                ib = b - h;
            }
            if (ib > ia) acc.add(integrate([&](double x) { return integrand(Complex(x)); }, ia, ib, qopt_));
        }
        if (!std::isfinite(lo)) tail(acc, A, -1.0);
        if (!std::isfinite(hi)) tail(acc, B, +1.0);

        OverlapResult out;
        out.value = acc.value;
        out.estimated_error = acc.error + extrapolation_error_;
        out.converged = acc.ok && std::isfinite(out.estimated_error) &&
                        out.estimated_error <= std::max(cfg_.rel_tol * std::abs(out.value), cfg_.abs_tol);
        return out;
    }

    static Complex offset_base(const SliceForm& s, double e, double d) {
        return s.side * s.accel * ((e - s.apex) + d) + s.shift;
    }
    static Complex offset_value(const SliceForm& s, double e, double d) {
        Complex v = s.amplitude;
        if (s.wavenumber != 0.0) v *= std::exp(I * s.wavenumber * (e + d));
        if (s.has_power) v *= std::exp(s.exponent * std::log(offset_base(s, e, d)));
        return v;
    }
    static Complex offset_logd(const SliceForm& s, double e, double d) {
        Complex r = s.dt_const;
        if (s.has_power) r += s.dt_per_base / offset_base(s, e, d);
        return r;
    }

    static Complex ray_value(const SliceForm& s, double x0, Complex x) {
        Complex v = s.amplitude;
        if (s.wavenumber != 0.0) v *= std::exp(I * s.wavenumber * x);
        if (s.has_power) {
            const Complex w0 = s.base(Complex(x0));
            const Complex lw = std::log(w0) + std::log(s.base(x) / w0);
            v *= std::exp(s.exponent * lw);
        }
        return v;
    }

    // Sum of exponents of the forms whose branch point sits at e.
    bool horizon_exponent(double e, Complex* lam) const {
        Complex sum{};
        bool any = false;
        for (const SliceForm* s : {&f_, &g_}) {
            if (s->horizon() && s->apex == e) {
                sum += s->exponent;
                any = true;
            }
        }
        if (lam) *lam = sum;
        return any;
    }

    // Piece [e, e + dir*h] in the variable x = e + dir*e^v.
    void endpoint_piece(Accum& acc, double e, double dir, double h) {
        Complex lam;
        const bool hz = horizon_exponent(e, &lam);
        double vmin = std::log(h) - kLogWindow;
        if (!hz) {
            double scale = h;
            for (const SliceForm* s : {&f_, &g_})
                if (s->has_power && s->apex == e) scale = std::min(scale, std::abs(s->shift) / s->accel);
            vmin = std::log(scale) - 36.0;
        }
        auto G = [&](double v) {
            const double r = std::exp(v);
            return integrand_offset(e, dir * r) * r;
        };
        acc.add(integrate(G, vmin, std::log(h), qopt_));
        if (hz) {
            if (std::abs(lam) < 1e-12)
                throw RegionError("overlap diverges at the horizon (delta-normalized pairing)");
            acc.value += G(vmin) / lam;
        }
    }

    void tail(Accum& acc, double x0, double dir) {
        const double kappa = f_.wavenumber + g_.wavenumber;
        if (kappa != 0.0) {
            if (cfg_.tail == TailStrategy::ContourRotation && cfg_.regulator_eta <= 0.0)
                rotated_tail(acc, x0, dir, kappa);
            else
                damped_tail(acc, x0, dir, kappa);
            return;
        }
        Complex lam{};
        bool any = false;
        for (const SliceForm* s : {&f_, &g_})
            if (s->has_power) {
                lam += s->exponent;
                any = true;
            }
        if (!any || std::abs(lam) < 1e-12)
            throw RegionError("overlap is distribution-valued (delta-normalized pairing)");
        if (lam.real() > 1e-12) throw RegionError("overlap diverges at infinity");
        double span = 1.0;
        for (const SliceForm* s : {&f_, &g_})
            span = std::max({span, std::abs(s->apex - x0), std::abs(s->shift) / s->accel});
        const double u0 = std::log(span) - kLogWindow;
        const double u1 = std::log(span) + kLogWindow;
        auto G = [&](double u) {
            const double r = std::exp(u);
            return integrand(Complex(x0 + dir * r)) * r;
        };
        acc.add(integrate(G, u0, u1, qopt_));
        acc.value -= G(u1) / lam;
    }

    void rotated_tail(Accum& acc, double x0, double dir, double kappa) {
        const double phi = cfg_.rotation_angle;
        if (!(phi > 0.0 && phi <= std::numbers::pi / 2.0 + 1e-15))
            throw DomainError("rotation angle must lie in (0, pi/2]");
        const double sigma = kappa * dir > 0.0 ? 1.0 : -1.0;
        const Complex step = dir * std::polar(1.0, sigma * phi);
        const double rate = std::abs(kappa) * std::sin(phi);
        const double ymax = 45.0 / rate;
        // Oriented toward increasing x on both sides.
        auto G = [&](double y) { return integrand_from(x0, x0 + step * y) * step * dir; };
        // Split so the early oscillation and the decay are both resolved.
        AdaptiveOptions o = qopt_;
        const double y1 = std::min(ymax, 1.0 / rate);
        acc.add(integrate(G, 0.0, y1, o));
        acc.add(integrate(G, y1, ymax, o));
    }

    Complex damped_tail_at(double eta, double x0, double dir, Accum& acc) {
        const double L = 45.0 / eta;
        auto G = [&](double y) { return integrand(Complex(x0 + dir * y)) * std::exp(-eta * y); };
        QuadResult r = integrate(G, 0.0, L, qopt_);
        acc.error += r.error;
        acc.ok = acc.ok && r.converged;
        return r.value;
    }

    void damped_tail(Accum& acc, double x0, double dir, double) {
        if (cfg_.regulator_eta > 0.0) {
            acc.value += damped_tail_at(cfg_.regulator_eta, x0, dir, acc);
            return;
        }
        const auto& etas = cfg_.eta_sequence;
        if (etas.size() < 2) throw DomainError("eta extrapolation needs at least two regulators");
        std::vector<Complex> vals;
        for (double eta : etas) {
            if (!(eta > 0.0)) throw DomainError("regulators must be positive");
            vals.push_back(damped_tail_at(eta, x0, dir, acc));
        }
        Extrapolation ex = neville_at_zero(etas, vals);
        if (!(ex.error <= std::max(1e-4 * std::abs(ex.value), cfg_.abs_tol)))
            throw ConvergenceError("regulator extrapolation did not settle");
        acc.value += ex.value;
        extrapolation_error_ += ex.error;
    }

    SliceForm f_, g_;
    QuadratureConfig cfg_;
    AdaptiveOptions qopt_;
    double extrapolation_error_ = 0.0;
    int pieces_ = 0;
};

void region_bounds(const Region& r, double& lo, double& hi) {
    switch (r.kind) {
        case RegionKind::FullLine: lo = -kInf; hi = kInf; return;
        case RegionKind::RightWedge: lo = r.c1; hi = kInf; return;
        case RegionKind::LeftWedge: lo = -kInf; hi = r.c1; return;
        case RegionKind::Diamond: lo = r.c1; hi = r.c2; return;
    }
}

}  // namespace

std::vector<double> default_eta_sequence() {
    std::vector<double> e;
    for (int j = 0; j < 10; ++j) e.push_back(0.3 * std::pow(0.75, j));
    return e;
}

OverlapResult kg_inner_numeric(const ModeSpec& f, const ModeSpec& g, const Region& region,
                               const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
    if (region.kind == RegionKind::Diamond && !(region.c1 < region.c2))
        throw RegionError("diamond needs c1 < c2");
    const SliceForm fs = slice_form(f.conj(), cfg.epsilon);
    const SliceForm gs = slice_form(g, cfg.epsilon);
    double lo, hi;
    region_bounds(region, lo, hi);
    lo = std::max({lo, fs.lo, gs.lo});
    hi = std::min({hi, fs.hi, gs.hi});
    if (!(lo < hi)) throw RegionError("mode supports do not meet inside the region");
    Overlap ov(fs, gs, cfg);
    return ov.run(lo, hi);
}

}  // namespace wedgeworks
