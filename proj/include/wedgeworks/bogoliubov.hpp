#pragma once

#include <complex>
#include <string>
#include <vector>

namespace wedgeworks {

using Complex = std::complex<double>;

enum class BogoKind { CToM, CTo0, CTildeTo0 };

struct BogoPair {
    BogoKind kind = BogoKind::CToM;
    double k_omega = 1.0;
    double q_omega = 1.0;
    double apex_c = 0.0;
    double accel = 1.0;
    Complex alpha{};
    Complex beta{};
};

/// Rindler wedge at apex c against Minkowski plane waves (omega_q = q > 0).
/// The translation phases exp(-+ i q c) are kept, so the result is the exact
/// KG overlap for any c; magnitudes do not depend on c.
BogoPair bogo_c_to_M(double k_omega, double q_omega, double apex_c, double accel);

/// Right wedge at apex c against the right wedge at 0. Throws PoleError for
/// k_omega == q_omega; beta_c_to_0 stays available there.
BogoPair bogo_c_to_0(double k_omega, double q_omega, double apex_c, double accel);
Complex alpha_c_to_0(double k_omega, double q_omega, double apex_c, double accel);
Complex beta_c_to_0(double k_omega, double q_omega, double apex_c, double accel);

/// Left wedge at apex c against the right wedge at 0.
BogoPair bogo_ctilde_to_0(double k_omega, double q_omega, double apex_c, double accel);
Complex alpha_ctilde_to_0(double k_omega, double q_omega, double apex_c, double accel);
Complex beta_ctilde_to_0(double k_omega, double q_omega, double apex_c, double accel);

/// (1 / (2 pi a omega_q)) / (1 - exp(-2 pi omega_k / a))
double thermal_curve_value(double q_omega, double k_omega, double accel);

/// |alpha_c_to_0|^2 in closed form; second-order pole at omega_k = omega_q.
double wedge_overlap_sq(double q_omega, double k_omega, double accel);

/// KG overlap of r_q (apex 0) with r_k (apex c) over the diamond slice x in [c, 2c].
Complex diamond_overlap(double q_omega, double k_omega, double c, double accel);

enum class CurveKind { Thermal, CompleteBeta, IncompleteBeta, GaussianPacket };

struct CurveSample {
    double omega_k;
    double value;
    bool operator==(const CurveSample&) const = default;
};

struct SpectralCurve {
    CurveKind kind = CurveKind::Thermal;
    double q_omega = 1.0;
    double accel = 1.0;
    double apex_c = 0.0;
    double mu = 0.0;
    double sigma = 0.0;
    std::vector<CurveSample> samples;

    double max_value() const;
    bool operator==(const SpectralCurve&) const = default;
};

inline constexpr double kPoleWindow = 1e-6;

/// Samples one closed form over an increasing positive grid. CompleteBeta
/// drops grid points with |omega_k - omega_q| < kPoleWindow * omega_q.
SpectralCurve spectral_curve(CurveKind kind, double q_omega, double accel,
                             const std::vector<double>& omega_grid, double apex_c = 1.0);

std::vector<double> linear_grid(double lo, double hi, int points);

std::string to_string(BogoKind k);
std::string to_string(CurveKind k);
BogoKind bogo_kind_from_string(const std::string& s);
CurveKind curve_kind_from_string(const std::string& s);

}  // namespace wedgeworks
