#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wedgeworks/bogoliubov.hpp"
#include "wedgeworks/specfun.hpp"

namespace wedgeworks {

/// Left-moving Gaussian kernel exp(-(x - mu)^2 / 2 sigma^2) against a
/// Minkowski wave of momentum q (omega_q = q) and the Rindler mode of
/// frequency k_omega on the eta = 0 slice.
struct PacketParams {
    double q = 1.0;
    double k_omega = 1.0;
    double accel = 1.0;
    double mu = 1.0;
    double sigma = 1.0;
    double epsilon_reg = 0.0;
};

/// z = i q sigma + mu / sigma
Complex packet_z(const PacketParams& p);
/// nu = -i k_omega / a
Complex packet_nu(const PacketParams& p);

/// (1/2 pi a) sqrt(w_k/w_q) e^{-mu^2/2 sigma^2} (sigma a)^{i w_k/a} e^{z^2/4} Gamma(-nu) D_nu(-z),
/// assembled in log space.
Complex gaussian_overlap_closed(const PacketParams& p, const PcfOptions& opt = {});

/// (1/2 pi) sqrt(w_k/w_q) a^{i w_k/a - 1} int_0^inf e^{-(x-mu)^2/2 sigma^2 + i q x} x^{i w_k/a - 1} dx
Complex gaussian_overlap_numeric(const PacketParams& p);

/// int_0^inf exp(-(x-mu)^2/(2 sigma^2) + i q x) x^{s-1} dx for Re s >= 0, q of either sign.
/// At Re s = 0 the x -> 0 end carries its regulated value.
Complex packet_integral(double q, Complex s, double mu, double sigma);

/// 2 pi a w_q |overlap|^2 e^{-2 eps w_k / a}
double scaled_modulus(const PacketParams& p, const PcfOptions& opt = {});

enum class StokesRegion { ThermalDominant, LocalizedDominant, NearLine };

struct StokesClass {
    Complex z{};
    StokesRegion region = StokesRegion::NearLine;
};

inline constexpr double kStokesBand = 0.02;

StokesClass stokes_classify(const PacketParams& p, double band = kStokesBand);

struct StokesPoint {
    double sigma;
    Complex z;
    double arg_z;
    StokesRegion region;
    DominantTerm dominant_term;
    bool operator==(const StokesPoint&) const = default;
};

std::vector<StokesPoint> stokes_trajectory(double q, double accel, double mu, const std::vector<double>& sigmas);

/// One GaussianPacket curve of scaled_modulus per sigma over k_grid.
std::vector<SpectralCurve> sigma_sweep(double q, const std::vector<double>& k_grid, double accel, double mu,
                                       const std::vector<double>& sigmas, double epsilon_reg = 0.0);

/// The packet sweep defaults: q = a = mu = 1.
std::vector<double> default_sigmas();

std::string to_string(StokesRegion r);
StokesRegion stokes_region_from_string(const std::string& s);

}  // namespace wedgeworks
