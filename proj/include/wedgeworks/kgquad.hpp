#pragma once

#include <complex>
#include <vector>

#include "wedgeworks/modes.hpp"

namespace wedgeworks {

enum class TailStrategy { ContourRotation, EtaExtrapolation };

std::vector<double> default_eta_sequence();

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
    TailStrategy tail = TailStrategy::ContourRotation;
    /// > 0 fixes the damping factor exp(-eta |x - x0|) on oscillatory tails
    /// and skips the extrapolation.
    double regulator_eta = 0.0;
    std::vector<double> eta_sequence = default_eta_sequence();
    /// Angle of the rotated tail contour, in (0, pi/2].
    double rotation_angle = 1.5707963267948966;
    double epsilon = kDefaultEpsilon;
};

struct OverlapResult {
    Complex value{};
    double estimated_error = 0.0;
    bool converged = false;
};

/// <f, g> = i * integral over the t = 0 slice of the region of
///          (f^* d_t g - g d_t f^*) dx.
/// Horizon endpoints and pure power-law tails carry the regulated
/// (analytically continued) value, which is what the closed-form
/// coefficients are. Throws RegionError when the supports do not meet or the
/// pairing is distribution-valued (delta normalized).
OverlapResult kg_inner_numeric(const ModeSpec& f, const ModeSpec& g, const Region& region,
                               const QuadratureConfig& cfg = {});

}  // namespace wedgeworks
