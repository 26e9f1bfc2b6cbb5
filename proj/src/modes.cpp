#include "wedgeworks/modes.hpp"

#include <cmath>
#include <numbers>

#include "wedgeworks/errors.hpp"

namespace wedgeworks {

namespace {

using std::numbers::pi;
const Complex I(0.0, 1.0);

void check_spec(const ModeSpec& m) {
    if (!(m.omega > 0.0) || !std::isfinite(m.omega)) throw DomainError("mode frequency must be positive");
    if (!(m.accel > 0.0) || !std::isfinite(m.accel)) throw DomainError("acceleration must be positive");
    if (!std::isfinite(m.apex)) throw DomainError("apex must be finite");
}

double sgn(MomentumSign s) { return s == MomentumSign::Plus ? 1.0 : -1.0; }

double norm_factor(double omega) { return 1.0 / std::sqrt(4.0 * pi * omega); }

ModeSample conj_if(const ModeSpec& m, ModeSample s) {
    if (m.conjugated) return {std::conj(s.value), std::conj(s.dt)};
    return s;
}

}  // namespace

ThermalCoeffs thermal_coeffs(double omega, double accel) {
    if (!(omega > 0.0) || !(accel > 0.0)) throw DomainError("thermal coefficients need omega, a > 0");
    const double q = std::exp(-pi * omega / accel);
    const double alpha = 1.0 / std::sqrt(-std::expm1(-2.0 * pi * omega / accel));
    return {alpha, q * alpha, std::atanh(q)};
}

bool in_right_wedge(double t, double x, double apex) { return std::abs(t) < x - apex; }
bool in_left_wedge(double t, double x, double apex) { return std::abs(t) < apex - x; }

WedgeCoords right_wedge_coords(double t, double x, double apex, double accel) {
    if (!in_right_wedge(t, x, apex)) throw DomainError("point outside the right wedge");
    const double X = x - apex;
    return {std::atanh(t / X) / accel, std::log(accel * accel * (X - t) * (X + t)) / (2.0 * accel)};
}

WedgeCoords left_wedge_coords(double t, double x, double apex, double accel) {
    if (!in_left_wedge(t, x, apex)) throw DomainError("point outside the left wedge");
    const double X = x - apex;
    return {std::atanh(t / X) / accel, std::log(accel * accel * (X - t) * (X + t)) / (2.0 * accel)};
}

ModeSample eval_mode_with_dt(const ModeSpec& m, double t, double x, double epsilon) {
    check_spec(m);
    const double w = m.omega;
    const double a = m.accel;
    const double s = sgn(m.sign);
    const double n = norm_factor(w);
    const double X = x - m.apex;
    switch (m.family) {
        case ModeFamily::Minkowski: {
            Complex v = n * std::exp(I * (s * w * x - w * t));
            return conj_if(m, {v, -I * w * v});
        }
        case ModeFamily::RindlerRight: {
            if (!in_right_wedge(t, x, m.apex)) return {};
            WedgeCoords c = right_wedge_coords(t, x, m.apex, a);
            Complex v = n * std::exp(-I * (w * c.time - s * w * c.space));
            const double d = a * (X * X - t * t);
            return conj_if(m, {v, -I * (w * X / d + s * w * t / d) * v});
        }
        case ModeFamily::RindlerLeft: {
            if (!in_left_wedge(t, x, m.apex)) return {};
            WedgeCoords c = left_wedge_coords(t, x, m.apex, a);
            Complex v = n * std::exp(I * w * (c.time + s * c.space));
            const double d = a * (X * X - t * t);
            return conj_if(m, {v, I * w * (X / d - s * t / d) * v});
        }
        case ModeFamily::UnruhR:
        case ModeFamily::UnruhL: {
            if (!(epsilon > 0.0)) throw DomainError("Unruh modes need epsilon > 0");
            const double amp = thermal_coeffs(w, a).alpha * n;
            const double side = m.family == ModeFamily::UnruhR ? 1.0 : -1.0;
            // base = a (side X - s t) + s i a eps
            const Complex base = a * (side * X - s * t) + s * I * (a * epsilon);
            const Complex p = s * I * (w / a);
            Complex v = amp * std::exp(p * std::log(base));
            return conj_if(m, {v, -I * w / base * v});
        }
    }
    return {};
}

Complex eval_mode(const ModeSpec& m, double t, double x, double epsilon) {
    return eval_mode_with_dt(m, t, x, epsilon).value;
}

bool region_contains(const Region& r, double t, double x) {
    switch (r.kind) {
        case RegionKind::FullLine: return true;
        case RegionKind::RightWedge: return in_right_wedge(t, x, r.c1);
        case RegionKind::LeftWedge: return in_left_wedge(t, x, r.c1);
        case RegionKind::Diamond: return in_right_wedge(t, x, r.c1) && in_left_wedge(t, x, r.c2);
    }
    return false;
}

Complex SliceForm::log_derivative(Complex x) const {
    Complex d = dt_const;
    if (has_power) d += dt_per_base / base(x);
    return d;
}

Complex SliceForm::value(Complex x) const {
    Complex v = amplitude;
    if (wavenumber != 0.0) v *= std::exp(I * wavenumber * x);
    if (has_power) v *= std::exp(exponent * std::log(base(x)));
    return v;
}

SliceForm SliceForm::conjugate() const {
    SliceForm c = *this;
    c.amplitude = std::conj(amplitude);
    c.wavenumber = -wavenumber;
    c.shift = std::conj(shift);
    c.exponent = std::conj(exponent);
    c.dt_const = std::conj(dt_const);
    c.dt_per_base = std::conj(dt_per_base);
    return c;
}

SliceForm slice_form(const ModeSpec& m, double epsilon) {
    check_spec(m);
    const double w = m.omega;
    const double a = m.accel;
    const double s = sgn(m.sign);
    SliceForm f;
    f.amplitude = norm_factor(w);
    f.accel = a;
    f.apex = m.apex;
    switch (m.family) {
        case ModeFamily::Minkowski:
            f.wavenumber = s * w;
            f.dt_const = -I * w;
            break;
        case ModeFamily::RindlerRight:
        case ModeFamily::RindlerLeft:
            f.has_power = true;
            f.side = m.family == ModeFamily::RindlerRight ? 1.0 : -1.0;
            f.exponent = s * I * (w / a);
            f.dt_per_base = -I * w;
            if (m.family == ModeFamily::RindlerRight) f.lo = m.apex;
            else f.hi = m.apex;
            break;
        case ModeFamily::UnruhR:
        case ModeFamily::UnruhL:
            if (!(epsilon > 0.0)) throw DomainError("Unruh modes need epsilon > 0");
            f.amplitude *= thermal_coeffs(w, a).alpha;
            f.has_power = true;
            f.side = m.family == ModeFamily::UnruhR ? 1.0 : -1.0;
            f.shift = s * I * (a * epsilon);
            f.exponent = s * I * (w / a);
            f.dt_per_base = -I * w;
            break;
    }
    return m.conjugated ? f.conjugate() : f;
}

std::string to_string(ModeFamily f) {
    switch (f) {
        case ModeFamily::Minkowski: return "minkowski";
        case ModeFamily::RindlerRight: return "rindler-right";
        case ModeFamily::RindlerLeft: return "rindler-left";
        case ModeFamily::UnruhR: return "unruh-r";
        case ModeFamily::UnruhL: return "unruh-l";
    }
    return "?";
}

ModeFamily mode_family_from_string(const std::string& s) {
    for (ModeFamily f : {ModeFamily::Minkowski, ModeFamily::RindlerRight, ModeFamily::RindlerLeft,
                         ModeFamily::UnruhR, ModeFamily::UnruhL})
        if (to_string(f) == s) return f;
    throw DomainError("unknown mode family '" + s + "'");
}

}  // namespace wedgeworks
