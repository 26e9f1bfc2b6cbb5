#pragma once

// JSON mappings for every emitted data type, and CSV number formatting.

#include <complex>
#include <json.hpp>
#include <string>
#include <vector>

#include "wedgeworks/bogoliubov.hpp"
#include "wedgeworks/fock.hpp"
#include "wedgeworks/modes.hpp"
#include "wedgeworks/modular.hpp"
#include "wedgeworks/wavepacket.hpp"

NLOHMANN_JSON_NAMESPACE_BEGIN
template <>
struct adl_serializer<std::complex<double>> {
    static void to_json(json& j, const std::complex<double>& z) { j = json{{"re", z.real()}, {"im", z.imag()}}; }
    static void from_json(const json& j, std::complex<double>& z) {
        z = {j.at("re").get<double>(), j.at("im").get<double>()};
    }
};
NLOHMANN_JSON_NAMESPACE_END

namespace wedgeworks {

using json = nlohmann::json;

/// 17 significant digits, so values survive a text round trip.
std::string format_real(double v);

struct LatticePoint {
    double t, x;
    Complex value;
    bool operator==(const LatticePoint&) const = default;
};

struct ModeLattice {
    ModeSpec spec;
    double epsilon = kDefaultEpsilon;
    std::vector<LatticePoint> points;
    bool operator==(const ModeLattice&) const;
};

struct VerifyRow {
    std::string kind;
    std::string coefficient;
    double omega_k = 0.0;
    double omega_q = 0.0;
    Complex closed{};
    Complex oracle{};
    double rel_residual = 0.0;
    double threshold = 0.0;
    bool converged = false;
    bool operator==(const VerifyRow&) const = default;
};

struct FockReport {
    TwoModeState state;
    ReducedSpectrum spectrum;
    std::string source;
    bool warning = false;
    bool operator==(const FockReport&) const = default;
};

struct PacketReport {
    std::vector<SpectralCurve> curves;
    std::vector<StokesPoint> stokes;
    bool operator==(const PacketReport&) const = default;
};

void to_json(json& j, const ModeSpec& m);
void from_json(const json& j, ModeSpec& m);
void to_json(json& j, const LatticePoint& p);
void from_json(const json& j, LatticePoint& p);
void to_json(json& j, const ModeLattice& l);
void from_json(const json& j, ModeLattice& l);
void to_json(json& j, const CurveSample& s);
void from_json(const json& j, CurveSample& s);
void to_json(json& j, const SpectralCurve& c);
void from_json(const json& j, SpectralCurve& c);
void to_json(json& j, const VerifyRow& r);
void from_json(const json& j, VerifyRow& r);
void to_json(json& j, const GroupLawReport& r);
void from_json(const json& j, GroupLawReport& r);
void to_json(json& j, const TwoModeState& s);
void from_json(const json& j, TwoModeState& s);
void to_json(json& j, const ReducedSpectrum& s);
void from_json(const json& j, ReducedSpectrum& s);
void to_json(json& j, const FockReport& r);
void from_json(const json& j, FockReport& r);
void to_json(json& j, const StokesPoint& p);
void from_json(const json& j, StokesPoint& p);
void to_json(json& j, const PacketReport& r);
void from_json(const json& j, PacketReport& r);

}  // namespace wedgeworks
