#include "wedgeworks/serialize.hpp"

#include <cstdio>

namespace wedgeworks {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool ModeLattice::operator==(const ModeLattice& o) const {
    return spec.family == o.spec.family && spec.sign == o.spec.sign && spec.omega == o.spec.omega &&
           spec.accel == o.spec.accel && spec.apex == o.spec.apex && spec.conjugated == o.spec.conjugated &&
           epsilon == o.epsilon && points == o.points;
}

void to_json(json& j, const ModeSpec& m) {
    j = json{{"family", to_string(m.family)},
             {"momentum_sign", m.sign == MomentumSign::Plus ? "+" : "-"},
             {"omega", m.omega},
             {"accel", m.accel},
             {"apex", m.apex},
             {"conjugated", m.conjugated}};
}

void from_json(const json& j, ModeSpec& m) {
    m.family = mode_family_from_string(j.at("family").get<std::string>());
    m.sign = j.at("momentum_sign").get<std::string>() == "+" ? MomentumSign::Plus : MomentumSign::Minus;
    j.at("omega").get_to(m.omega);
    j.at("accel").get_to(m.accel);
    j.at("apex").get_to(m.apex);
    j.at("conjugated").get_to(m.conjugated);
}

void to_json(json& j, const LatticePoint& p) { j = json{{"t", p.t}, {"x", p.x}, {"value", p.value}}; }
void from_json(const json& j, LatticePoint& p) {
    j.at("t").get_to(p.t);
    j.at("x").get_to(p.x);
    j.at("value").get_to(p.value);
}

void to_json(json& j, const ModeLattice& l) {
    j = json{{"spec", l.spec}, {"epsilon", l.epsilon}, {"points", l.points}};
}
void from_json(const json& j, ModeLattice& l) {
    j.at("spec").get_to(l.spec);
    j.at("epsilon").get_to(l.epsilon);
    j.at("points").get_to(l.points);
}

void to_json(json& j, const CurveSample& s) { j = json{{"omega_k", s.omega_k}, {"value", s.value}}; }
void from_json(const json& j, CurveSample& s) {
    j.at("omega_k").get_to(s.omega_k);
    j.at("value").get_to(s.value);
}

void to_json(json& j, const SpectralCurve& c) {
    j = json{{"kind", to_string(c.kind)}, {"q_omega", c.q_omega}, {"accel", c.accel},
             {"apex_c", c.apex_c}, {"mu", c.mu}, {"sigma", c.sigma},
             {"max_value", c.max_value()}, {"samples", c.samples}};
}
void from_json(const json& j, SpectralCurve& c) {
    c.kind = curve_kind_from_string(j.at("kind").get<std::string>());
    j.at("q_omega").get_to(c.q_omega);
    j.at("accel").get_to(c.accel);
    j.at("apex_c").get_to(c.apex_c);
    j.at("mu").get_to(c.mu);
    j.at("sigma").get_to(c.sigma);
    j.at("samples").get_to(c.samples);
}

void to_json(json& j, const VerifyRow& r) {
    j = json{{"kind", r.kind},       {"coefficient", r.coefficient},   {"omega_k", r.omega_k},
             {"omega_q", r.omega_q}, {"closed", r.closed},             {"oracle", r.oracle},
             {"rel_residual", r.rel_residual}, {"threshold", r.threshold}, {"converged", r.converged}};
}
void from_json(const json& j, VerifyRow& r) {
    j.at("kind").get_to(r.kind);
    j.at("coefficient").get_to(r.coefficient);
    j.at("omega_k").get_to(r.omega_k);
    j.at("omega_q").get_to(r.omega_q);
    j.at("closed").get_to(r.closed);
    j.at("oracle").get_to(r.oracle);
    j.at("rel_residual").get_to(r.rel_residual);
    j.at("threshold").get_to(r.threshold);
    j.at("converged").get_to(r.converged);
}

void to_json(json& j, const GroupLawReport& r) {
    j = json{{"c", r.c},
             {"n", r.n},
             {"accel", r.accel},
             {"nodes", r.nodes},
             {"max_residual", r.max_residual},
             {"refinement_slope", r.refinement_slope},
             {"covariance_residual", r.covariance_residual}};
}
void from_json(const json& j, GroupLawReport& r) {
    j.at("c").get_to(r.c);
    j.at("n").get_to(r.n);
    j.at("accel").get_to(r.accel);
    j.at("nodes").get_to(r.nodes);
    j.at("max_residual").get_to(r.max_residual);
    j.at("refinement_slope").get_to(r.refinement_slope);
    j.at("covariance_residual").get_to(r.covariance_residual);
}

void to_json(json& j, const TwoModeState& s) {
    j = json{{"theta", s.theta}, {"n_max", s.n_max}, {"amplitudes", s.amplitudes}};
}
void from_json(const json& j, TwoModeState& s) {
    j.at("theta").get_to(s.theta);
    j.at("n_max").get_to(s.n_max);
    j.at("amplitudes").get_to(s.amplitudes);
}

void to_json(json& j, const ReducedSpectrum& s) {
    j = json{{"probabilities", s.probabilities}, {"mean_occupation", s.mean_occupation}, {"entropy", s.entropy}};
}
void from_json(const json& j, ReducedSpectrum& s) {
    j.at("probabilities").get_to(s.probabilities);
    j.at("mean_occupation").get_to(s.mean_occupation);
    j.at("entropy").get_to(s.entropy);
}

void to_json(json& j, const FockReport& r) {
    j = json{{"source", r.source}, {"state", r.state}, {"spectrum", r.spectrum}, {"warning", r.warning}};
}
void from_json(const json& j, FockReport& r) {
    j.at("source").get_to(r.source);
    j.at("state").get_to(r.state);
    j.at("spectrum").get_to(r.spectrum);
    j.at("warning").get_to(r.warning);
}

void to_json(json& j, const StokesPoint& p) {
    j = json{{"sigma", p.sigma}, {"z", p.z}, {"arg_z", p.arg_z},
             {"region", to_string(p.region)}, {"dominant_term", to_string(p.dominant_term)}};
}
void from_json(const json& j, StokesPoint& p) {
    j.at("sigma").get_to(p.sigma);
    j.at("z").get_to(p.z);
    j.at("arg_z").get_to(p.arg_z);
    p.region = stokes_region_from_string(j.at("region").get<std::string>());
    const std::string d = j.at("dominant_term").get<std::string>();
    p.dominant_term = d == "dominant-exp-plus"     ? DominantTerm::DominantExpPlus
                      : d == "recessive-exp-minus" ? DominantTerm::RecessiveExpMinus
                                                   : DominantTerm::Balanced;
}

void to_json(json& j, const PacketReport& r) { j = json{{"curves", r.curves}, {"stokes", r.stokes}}; }
void from_json(const json& j, PacketReport& r) {
    j.at("curves").get_to(r.curves);
    j.at("stokes").get_to(r.stokes);
}

}  // namespace wedgeworks
