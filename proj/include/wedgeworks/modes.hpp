#pragma once

#include <complex>
#include <limits>
#include <string>

namespace wedgeworks {

using Complex = std::complex<double>;

enum class ModeFamily { Minkowski, RindlerRight, RindlerLeft, UnruhR, UnruhL };
enum class MomentumSign { Plus, Minus };

struct ModeSpec {
    ModeFamily family = ModeFamily::Minkowski;
    MomentumSign sign = MomentumSign::Plus;
    double omega = 1.0;
    double accel = 1.0;
    double apex = 0.0;
    bool conjugated = false;

    ModeSpec conj() const {
        ModeSpec m = *this;
        m.conjugated = !m.conjugated;
        return m;
    }
};

enum class RegionKind { FullLine, RightWedge, LeftWedge, Diamond };

struct Region {
    RegionKind kind = RegionKind::FullLine;
    double c1 = 0.0;
    double c2 = 0.0;

    static Region full_line() { return {RegionKind::FullLine, 0.0, 0.0}; }
    static Region right_wedge(double c) { return {RegionKind::RightWedge, c, 0.0}; }
    static Region left_wedge(double c) { return {RegionKind::LeftWedge, c, 0.0}; }
    static Region diamond(double c1, double c2) { return {RegionKind::Diamond, c1, c2}; }
};

/// alpha = 1/sqrt(1 - e^{-2 pi w/a}), beta = e^{-pi w/a} alpha, tanh theta = e^{-pi w/a}.
struct ThermalCoeffs {
    double alpha, beta, theta;
};

inline constexpr double kDefaultEpsilon = 1e-8;

ThermalCoeffs thermal_coeffs(double omega, double accel);

/// Wedge coordinates: (eta, xi) on the right wedge, (gamma, delta) on the left.
struct WedgeCoords {
    double time, space;
};
WedgeCoords right_wedge_coords(double t, double x, double apex, double accel);
WedgeCoords left_wedge_coords(double t, double x, double apex, double accel);

Complex eval_mode(const ModeSpec& m, double t, double x, double epsilon = kDefaultEpsilon);

struct ModeSample {
    Complex value;
    Complex dt;
};
/// Value and exact time derivative.
ModeSample eval_mode_with_dt(const ModeSpec& m, double t, double x,
                             double epsilon = kDefaultEpsilon);

bool region_contains(const Region& r, double t, double x);
bool in_right_wedge(double t, double x, double apex);
bool in_left_wedge(double t, double x, double apex);

/// A mode on the t = 0 slice, continued to complex x:
///   value(x) = amplitude * exp(i k x) * base(x)^exponent,  base = side*a*(x - apex) + shift
///   dt(x)    = value(x) * (dt_const + dt_per_base / base(x))
/// Powers use the principal branch. Support is the open interval (lo, hi).
struct SliceForm {
    Complex amplitude{1.0};
    double wavenumber = 0.0;
    bool has_power = false;
    double side = 1.0;
    double accel = 1.0;
    double apex = 0.0;
    Complex shift{};
    Complex exponent{};
    Complex dt_const{};
    Complex dt_per_base{};
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    Complex base(Complex x) const { return side * accel * (x - apex) + shift; }
    Complex log_derivative(Complex x) const;
    Complex value(Complex x) const;
    Complex dt(Complex x) const { return value(x) * log_derivative(x); }
    /// Schwarz reflection: the slice form of the complex-conjugate mode.
    SliceForm conjugate() const;
    /// True when the power has a genuine branch point at the apex (no shift).
    bool horizon() const { return has_power && shift == Complex{}; }
};

SliceForm slice_form(const ModeSpec& m, double epsilon = kDefaultEpsilon);

std::string to_string(ModeFamily f);
ModeFamily mode_family_from_string(const std::string& s);

}  // namespace wedgeworks
