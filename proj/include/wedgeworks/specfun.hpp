#pragma once

#include <complex>
#include <numbers>
#include <string>

namespace wedgeworks {

using Complex = std::complex<double>;

/// log Gamma(z). The imaginary part is continuous on Re z >= 1/2; on the
/// left half-plane exp() of the result is Gamma(z) but the branch may differ
/// by 2 pi i. Throws PoleError at z = 0, -1, -2, ...
Complex complex_log_gamma(Complex z);
Complex complex_gamma(Complex z);
Complex complex_log_beta(Complex a, Complex b);
Complex complex_beta(Complex a, Complex b);

enum class PcfMethod { IntegralRepresentation, Asymptotic };
enum class DominantTerm { RecessiveExpMinus, DominantExpPlus, Balanced };

struct PcfOptions {
    double crossover_radius = 8.0;
    double sector_margin = std::numbers::pi / 8.0;
    double rel_tol = 1e-13;
};

/// D_nu(-z). log_value is always finite; value is exp(log_value).
struct PcfEvaluation {
    Complex value{};
    Complex log_value{};
    PcfMethod method = PcfMethod::IntegralRepresentation;
    DominantTerm dominant_term = DominantTerm::Balanced;
};

DominantTerm classify_dominant_term(Complex z);

/// D_nu(-z): asymptotic expansion for |z| >= crossover_radius inside
/// -pi/4 + margin < arg z < 3pi/4 - margin, integral representation otherwise.
PcfEvaluation parabolic_cylinder_D(Complex nu, Complex z, const PcfOptions& opt = {});

/// Large-|z| expansion of D_nu(-z) with both exponential branches kept.
/// Throws SectorError outside the narrowed sector or below the crossover radius.
PcfEvaluation pcf_asymptotic(Complex nu, Complex z, const PcfOptions& opt = {});

/// Integral representation (with upward recurrence in nu when Re nu >= 0).
PcfEvaluation pcf_integral(Complex nu, Complex z, const PcfOptions& opt = {});

/// log D_nu(-z) on whichever path parabolic_cylinder_D would take; never
/// exponentiated, so it stays usable where D_nu itself would overflow.
PcfEvaluation pcf_log(Complex nu, Complex z, const PcfOptions& opt = {});

std::string to_string(PcfMethod m);
std::string to_string(DominantTerm d);

}  // namespace wedgeworks
