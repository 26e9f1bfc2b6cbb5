#include "wedgeworks/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "wedgeworks/bogoliubov.hpp"
#include "wedgeworks/errors.hpp"
#include "wedgeworks/fock.hpp"
#include "wedgeworks/kgquad.hpp"
#include "wedgeworks/modes.hpp"
#include "wedgeworks/modular.hpp"
#include "wedgeworks/serialize.hpp"
#include "wedgeworks/wavepacket.hpp"

namespace wedgeworks {

namespace {

struct Flags {
    double q_omega = 1.0;
    double k_omega = 1.0;
    double accel = 1.0;
    std::optional<double> apex;
    double mu = 1.0;
    std::vector<double> sigma;
    std::optional<double> theta;
    int n_max = 8;
    std::optional<double> grid_min, grid_max;
    std::optional<int> grid_points;
    std::string kind;
    std::string format = "csv";
    std::string out = "-";
    std::string momentum_sign = "plus";
    double epsilon = kDefaultEpsilon;
    double epsilon_reg = 0.0;
    int power = 2;
    std::vector<int> nodes = {32, 64, 128};
};

class VerificationFailed : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "verification"; }
};

std::vector<double> grid_from(const Flags& f, double lo, double hi, int points) {
    return linear_grid(f.grid_min.value_or(lo), f.grid_max.value_or(hi), f.grid_points.value_or(points));
}

double env_tolerance(double fallback) {
    const char* s = std::getenv("WEDGEWORKS_TOL");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
        throw DomainError("WEDGEWORKS_TOL must be a positive number");
    return v;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

std::string mode_lattice(const Flags& f) {
    ModeSpec m;
    m.family = mode_family_from_string(f.kind.empty() ? "unruh-r" : f.kind);
    if (f.momentum_sign != "plus" && f.momentum_sign != "minus") throw DomainError("momentum-sign must be plus or minus");
    m.sign = f.momentum_sign == "plus" ? MomentumSign::Plus : MomentumSign::Minus;
    m.omega = f.k_omega;
    m.accel = f.accel;
    m.apex = f.apex.value_or(0.0);
    const std::vector<double> g = grid_from(f, -2.0, 2.0, 41);
    ModeLattice lat{m, f.epsilon, {}};
    for (double t : g)
        for (double x : g) lat.points.push_back({t, x, eval_mode(m, t, x, f.epsilon)});
    if (f.format == "json") return json(lat).dump(1) + "\n";
    std::ostringstream os;
    os << "t,x,re,im,abs,arg\n";
    for (const auto& p : lat.points)
        os << format_real(p.t) << ',' << format_real(p.x) << ',' << format_real(p.value.real()) << ','
           << format_real(p.value.imag()) << ',' << format_real(std::abs(p.value)) << ','
           << format_real(std::arg(p.value)) << '\n';
    return os.str();
}

CurveKind curve_alias(const std::string& s) {
    if (s == "complete-beta") return CurveKind::CompleteBeta;
    if (s == "incomplete-beta") return CurveKind::IncompleteBeta;
    return curve_kind_from_string(s);
}

std::string bogo_curve(const Flags& f) {
    std::vector<CurveKind> kinds;
    if (f.kind.empty() || f.kind == "all")
        kinds = {CurveKind::Thermal, CurveKind::CompleteBeta, CurveKind::IncompleteBeta};
    else
        kinds = {curve_alias(f.kind)};
    const std::vector<double> g = grid_from(f, 0.01, 3.01, 301);
    std::vector<SpectralCurve> curves;
    for (CurveKind k : kinds) {
        if (k == CurveKind::GaussianPacket) throw DomainError("use packet-sweep for packet curves");
        curves.push_back(spectral_curve(k, f.q_omega, f.accel, g, f.apex.value_or(1.0)));
    }
    if (f.format == "json") return json(curves).dump(1) + "\n";
    std::ostringstream os;
    os << "kind,omega_k,value\n";
    for (const auto& c : curves)
        for (const auto& s : c.samples)
            os << to_string(c.kind) << ',' << format_real(s.omega_k) << ',' << format_real(s.value) << '\n';
    return os.str();
}

struct VerifyOutcome {
    std::string text;
    bool all_converged = true;
    bool all_pass = true;
};

VerifyOutcome bogo_verify(const Flags& f) {
    std::vector<std::string> kinds;
    if (f.kind.empty() || f.kind == "all") kinds = {"cToM", "cTo0", "cTildeTo0", "diamond"};
    else kinds = {f.kind};
    const double c = f.apex.value_or(1.0);
    const double a = f.accel;
    const std::vector<double> g = grid_from(f, 0.25, 2.0, 5);
    QuadratureConfig cfg;
    cfg.rel_tol = env_tolerance(cfg.rel_tol);
    std::vector<VerifyRow> rows;
    auto record = [&](const std::string& kind, const std::string& coef, double k, double q, Complex closed,
                      const OverlapResult& r, double thr) {
        const double rel = std::abs(std::abs(closed) - std::abs(r.value)) / std::abs(r.value);
        rows.push_back({kind, coef, k, q, closed, r.value, rel, thr, r.converged});
    };
    for (const auto& kind : kinds) {
        for (double q : g) {
            for (double k : g) {
                const ModeSpec rq0{ModeFamily::RindlerRight, MomentumSign::Plus, q, a, 0.0, false};
                if (kind == "cToM") {
                    const ModeSpec ph{ModeFamily::Minkowski, MomentumSign::Plus, q, a, 0.0, false};
                    const ModeSpec rk{ModeFamily::RindlerRight, MomentumSign::Plus, k, a, c, false};
                    BogoPair p = bogo_c_to_M(k, q, c, a);
                    record(kind, "alpha", k, q, p.alpha, kg_inner_numeric(ph, rk, Region::right_wedge(c), cfg), 1e-6);
                    record(kind, "beta", k, q, p.beta, kg_inner_numeric(ph.conj(), rk, Region::right_wedge(c), cfg), 1e-6);
                } else if (kind == "cTo0") {
                    const ModeSpec rk{ModeFamily::RindlerRight, MomentumSign::Plus, k, a, c, false};
                    if (k != q)
                        record(kind, "alpha", k, q, alpha_c_to_0(k, q, c, a),
                               kg_inner_numeric(rq0, rk, Region::right_wedge(c), cfg), 1e-6);
                    record(kind, "beta", k, q, beta_c_to_0(k, q, c, a),
                           kg_inner_numeric(rq0.conj(), rk, Region::right_wedge(c), cfg), 1e-6);
                } else if (kind == "cTildeTo0") {
                    const ModeSpec lk{ModeFamily::RindlerLeft, MomentumSign::Minus, k, a, c, false};
                    if (k != q)
                        record(kind, "alpha", k, q, alpha_ctilde_to_0(k, q, c, a),
                               kg_inner_numeric(rq0.conj(), lk, Region::left_wedge(c), cfg), 1e-6);
                    record(kind, "beta", k, q, beta_ctilde_to_0(k, q, c, a),
                           kg_inner_numeric(rq0, lk, Region::left_wedge(c), cfg), 1e-6);
                } else if (kind == "diamond") {
                    const ModeSpec rk{ModeFamily::RindlerRight, MomentumSign::Plus, k, a, c, false};
                    record(kind, "overlap", k, q, diamond_overlap(q, k, c, a),
                           kg_inner_numeric(rq0, rk, Region::diamond(c, 2.0 * c), cfg), 1e-4);
                } else {
                    throw DomainError("unknown verification kind '" + kind + "'");
                }
            }
        }
    }
    VerifyOutcome o;
    for (const auto& r : rows) {
        o.all_converged = o.all_converged && r.converged;
        o.all_pass = o.all_pass && r.rel_residual <= r.threshold;
    }
    if (f.format == "json") {
        o.text = json(rows).dump(1) + "\n";
        return o;
    }
    std::ostringstream os;
    os << "kind,coefficient,omega_k,omega_q,closed_abs,oracle_abs,rel_residual,threshold,converged\n";
    for (const auto& r : rows)
        os << r.kind << ',' << r.coefficient << ',' << format_real(r.omega_k) << ',' << format_real(r.omega_q) << ','
           << format_real(std::abs(r.closed)) << ',' << format_real(std::abs(r.oracle)) << ','
           << format_real(r.rel_residual) << ',' << format_real(r.threshold) << ',' << csv_bool(r.converged) << '\n';
    o.text = os.str();
    return o;
}

std::string modular_verify(const Flags& f) {
    GroupLawReport r = verify_group_law(f.apex.value_or(1.0), f.power, f.accel, f.nodes);
    if (f.format == "json") return json(r).dump(1) + "\n";
    std::ostringstream os;
    os << "c,n,nodes,max_residual,refinement_slope,covariance_residual\n";
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        os << format_real(r.c) << ',' << r.n << ',' << r.nodes[i] << ',' << format_real(r.max_residual[i]) << ','
           << format_real(r.refinement_slope) << ',' << format_real(r.covariance_residual) << '\n';
    return os.str();
}

std::string fock_squeeze(const Flags& f) {
    const double theta =
        f.theta.value_or(std::atanh(std::exp(-std::numbers::pi * f.k_omega / f.accel)));
    FockReport rep;
    rep.source = f.kind.empty() ? "squeezed" : f.kind;
    if (rep.source == "squeezed") {
        rep.state = squeezed_vacuum(theta, f.n_max);
    } else if (rep.source == "oracle") {
        OracleState o = exact_squeeze_oracle(theta, f.n_max);
        rep.state = o.state;
        rep.warning = o.truncation_warning;
    } else if (rep.source == "bilocal") {
        BilocalState b = bilocal_first_order(std::tanh(theta), f.n_max);
        rep.state = b.state;
        rep.warning = b.perturbative_warning;
    } else {
        throw DomainError("fock-squeeze kind must be squeezed, oracle or bilocal");
    }
    rep.spectrum = reduced_spectrum(rep.state);
    if (f.format == "json") return json(rep).dump(1) + "\n";
    std::ostringstream os;
    os << "n,amplitude,probability\n";
    for (std::size_t n = 0; n < rep.state.amplitudes.size(); ++n)
        os << n << ',' << format_real(rep.state.amplitudes[n]) << ',' << format_real(rep.spectrum.probabilities[n])
           << '\n';
    return os.str();
}

std::string packet_sweep(const Flags& f) {
    const std::vector<double> sigmas = f.sigma.empty() ? default_sigmas() : f.sigma;
    const std::vector<double> g = grid_from(f, 0.01, 3.0, 300);
    PacketReport rep;
    const std::string kind = f.kind.empty() ? "curves" : f.kind;
    if (kind != "curves" && kind != "stokes" && kind != "max")
        throw DomainError("packet-sweep kind must be curves, stokes or max");
    rep.curves = sigma_sweep(f.q_omega, g, f.accel, f.mu, sigmas, f.epsilon_reg);
    rep.stokes = stokes_trajectory(f.q_omega, f.accel, f.mu, sigmas);
    if (f.format == "json") return json(rep).dump(1) + "\n";
    std::ostringstream os;
    if (kind == "curves") {
        os << "sigma,omega_k,scaled_modsq\n";
        for (const auto& c : rep.curves)
            for (const auto& s : c.samples)
                os << format_real(c.sigma) << ',' << format_real(s.omega_k) << ',' << format_real(s.value) << '\n';
    } else if (kind == "max") {
        os << "sigma,max_scaled_modsq\n";
        for (const auto& c : rep.curves) os << format_real(c.sigma) << ',' << format_real(c.max_value()) << '\n';
    } else {
        os << "sigma,z_re,z_im,arg_z,region,dominant_term\n";
        for (const auto& p : rep.stokes)
            os << format_real(p.sigma) << ',' << format_real(p.z.real()) << ',' << format_real(p.z.imag()) << ','
               << format_real(p.arg_z) << ',' << to_string(p.region) << ',' << to_string(p.dominant_term) << '\n';
    }
    return os.str();
}

void emit(const Flags& f, const std::string& text, std::ostream& out) {
    if (f.out == "-") {
        out << text;
        return;
    }
    std::ofstream file(f.out, std::ios::binary);
    if (!file) throw DomainError("cannot open output file '" + f.out + "'");
    file << text;
    if (!file) throw DomainError("failed writing output file '" + f.out + "'");
}

void error_line(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"Rindler, Unruh and Bogoliubov mode toolkit"};
    app.set_config("--config", "", "key = value file; flags on the command line take precedence");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--q-omega", f.q_omega, "Minkowski / reference frequency omega_q");
    app.add_option("--k-omega", f.k_omega, "Rindler frequency omega_k");
    app.add_option("--accel", f.accel, "acceleration a");
    app.add_option("--apex", f.apex, "wedge apex c");
    app.add_option("--mu", f.mu, "packet centre");
    app.add_option("--sigma", f.sigma, "packet width(s)")->delimiter(',');
    app.add_option("--theta", f.theta, "squeeze parameter");
    app.add_option("--n-max", f.n_max, "Fock truncation level");
    app.add_option("--grid-min", f.grid_min);
    app.add_option("--grid-max", f.grid_max);
    app.add_option("--grid-points", f.grid_points);
    app.add_option("--kind", f.kind, "subcommand-specific selector");
    app.add_option("--format", f.format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", f.out, "output path, - for stdout");
    app.add_option("--momentum-sign", f.momentum_sign)->check(CLI::IsMember({"plus", "minus"}));
    app.add_option("--epsilon", f.epsilon, "i epsilon shift of the Unruh modes");
    app.add_option("--epsilon-reg", f.epsilon_reg, "UV regulator of the packet sweep");
    app.add_option("--power", f.power, "group-law composition power n");
    app.add_option("--nodes", f.nodes, "group-law grid sizes")->delimiter(',');

    auto* modes = app.add_subcommand("modes-render", "mode values on a (t, x) lattice");
    auto* curve = app.add_subcommand("bogo-curve", "thermal, complete-Beta and incomplete-Beta curves");
    auto* verify = app.add_subcommand("bogo-verify", "closed forms against the Klein-Gordon quadrature");
    auto* modular = app.add_subcommand("modular-verify", "group-law residual report");
    auto* fock = app.add_subcommand("fock-squeeze", "two-mode squeezed state and reduced spectrum");
    auto* packet = app.add_subcommand("packet-sweep", "Gaussian packet overlaps and Stokes classification");

    std::vector<std::string> storage;
    storage.push_back("wedgeworks");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        error_line(err, "usage", e.what());
        return 1;
    }

    try {
        if (modes->parsed()) emit(f, mode_lattice(f), out);
        else if (curve->parsed()) emit(f, bogo_curve(f), out);
        else if (modular->parsed()) emit(f, modular_verify(f), out);
        else if (fock->parsed()) emit(f, fock_squeeze(f), out);
        else if (packet->parsed()) emit(f, packet_sweep(f), out);
        else if (verify->parsed()) {
            VerifyOutcome o = bogo_verify(f);
            emit(f, o.text, out);
            if (!o.all_converged) throw ConvergenceError("oracle quadrature did not converge for some rows");
            if (!o.all_pass) throw VerificationFailed("residual above threshold for some rows");
        }
    } catch (const ConvergenceError& e) {
        error_line(err, e.kind(), e.what());
        return 2;
    } catch (const RangeError& e) {
        error_line(err, e.kind(), e.what());
        return 2;
    } catch (const Error& e) {
        error_line(err, e.kind(), e.what());
        return 1;
    } catch (const std::exception& e) {
        error_line(err, "internal", e.what());
        return 1;
    }
    return 0;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace wedgeworks
