#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wedgeworks/bogoliubov.hpp"
#include "wedgeworks/cli.hpp"
#include "wedgeworks/errors.hpp"
#include "wedgeworks/fock.hpp"
#include "wedgeworks/kgquad.hpp"
#include "wedgeworks/modes.hpp"
#include "wedgeworks/modular.hpp"
#include "wedgeworks/specfun.hpp"
#include "wedgeworks/wavepacket.hpp"

namespace py = pybind11;
using namespace wedgeworks;

namespace {

MomentumSign sign_from(const std::string& s) {
    if (s == "plus") return MomentumSign::Plus;
    if (s == "minus") return MomentumSign::Minus;
    throw DomainError("momentum sign must be plus or minus");
}

ModeSpec make_spec(const std::string& family, double omega, double accel, double apex, const std::string& sign,
                   bool conjugated) {
    return ModeSpec{mode_family_from_string(family), sign_from(sign), omega, accel, apex, conjugated};
}

Region make_region(const std::string& kind, double c1, double c2) {
    if (kind == "full") return Region::full_line();
    if (kind == "right") return Region::right_wedge(c1);
    if (kind == "left") return Region::left_wedge(c1);
    if (kind == "diamond") return Region::diamond(c1, c2);
    throw DomainError("region must be full, right, left or diamond");
}

py::list samples(const SpectralCurve& c) {
    py::list out;
    for (const CurveSample& s : c.samples) out.append(py::make_tuple(s.omega_k, s.value));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rindler, Unruh and Bogoliubov mode toolkit";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto domain = py::register_exception<DomainError>(m, "DomainError", m.attr("Error").ptr());
    py::register_exception<PoleError>(m, "PoleError", domain.ptr());
    py::register_exception<SectorError>(m, "SectorError", domain.ptr());
    py::register_exception<RegionError>(m, "RegionError", domain.ptr());
    py::register_exception<RangeError>(m, "RangeError", m.attr("Error").ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", m.attr("Error").ptr());

    m.def("complex_gamma", &complex_gamma, py::arg("z"));
    m.def("complex_log_gamma", &complex_log_gamma, py::arg("z"));
    m.def("complex_beta", &complex_beta, py::arg("a"), py::arg("b"));
    m.def(
        "pcf",
        [](Complex nu, Complex z, const std::string& method) {
            PcfEvaluation e;
            if (method == "auto") e = parabolic_cylinder_D(nu, z);
            else if (method == "integral") e = pcf_integral(nu, z);
            else if (method == "asymptotic") e = pcf_asymptotic(nu, z);
            else throw DomainError("method must be auto, integral or asymptotic");
            return py::dict(py::arg("value") = e.value, py::arg("log_value") = e.log_value,
                            py::arg("method") = to_string(e.method),
                            py::arg("dominant_term") = to_string(e.dominant_term));
        },
        py::arg("nu"), py::arg("z"), py::arg("method") = "auto", "D_nu(-z) with its evaluation path");

    m.def(
        "thermal_coeffs",
        [](double w, double a) {
            ThermalCoeffs c = thermal_coeffs(w, a);
            return py::make_tuple(c.alpha, c.beta, c.theta);
        },
        py::arg("omega"), py::arg("accel") = 1.0);
    m.def(
        "eval_mode",
        [](const std::string& family, double omega, double t, double x, double accel, double apex,
           const std::string& sign, bool conjugated, double epsilon) {
            return eval_mode(make_spec(family, omega, accel, apex, sign, conjugated), t, x, epsilon);
        },
        py::arg("family"), py::arg("omega"), py::arg("t"), py::arg("x"), py::arg("accel") = 1.0,
        py::arg("apex") = 0.0, py::arg("sign") = "plus", py::arg("conjugated") = false,
        py::arg("epsilon") = kDefaultEpsilon);
    m.def(
        "kg_inner",
        [](py::dict f, py::dict g, const std::string& region, double c1, double c2, double rel_tol) {
            auto spec = [](py::dict d) {
                return make_spec(d["family"].cast<std::string>(), d["omega"].cast<double>(),
                                 d.contains("accel") ? d["accel"].cast<double>() : 1.0,
                                 d.contains("apex") ? d["apex"].cast<double>() : 0.0,
                                 d.contains("sign") ? d["sign"].cast<std::string>() : "plus",
                                 d.contains("conjugated") ? d["conjugated"].cast<bool>() : false);
            };
            QuadratureConfig cfg;
            cfg.rel_tol = rel_tol;
            OverlapResult r = kg_inner_numeric(spec(f), spec(g), make_region(region, c1, c2), cfg);
            return py::make_tuple(r.value, r.estimated_error, r.converged);
        },
        py::arg("f"), py::arg("g"), py::arg("region") = "full", py::arg("c1") = 0.0, py::arg("c2") = 0.0,
        py::arg("rel_tol") = 1e-8, "Klein-Gordon overlap <f, g>; modes are dicts with family and omega");

    auto pair = [](const BogoPair& p) { return py::make_tuple(p.alpha, p.beta); };
    m.def("bogo_c_to_M", [pair](double k, double q, double c, double a) { return pair(bogo_c_to_M(k, q, c, a)); },
          py::arg("k_omega"), py::arg("q_omega"), py::arg("apex_c"), py::arg("accel") = 1.0);
    m.def("bogo_c_to_0", [pair](double k, double q, double c, double a) { return pair(bogo_c_to_0(k, q, c, a)); },
          py::arg("k_omega"), py::arg("q_omega"), py::arg("apex_c"), py::arg("accel") = 1.0);
    m.def("bogo_ctilde_to_0",
          [pair](double k, double q, double c, double a) { return pair(bogo_ctilde_to_0(k, q, c, a)); },
          py::arg("k_omega"), py::arg("q_omega"), py::arg("apex_c"), py::arg("accel") = 1.0);
    m.def("thermal_curve_value", &thermal_curve_value, py::arg("q_omega"), py::arg("k_omega"), py::arg("accel") = 1.0);
    m.def("wedge_overlap_sq", &wedge_overlap_sq, py::arg("q_omega"), py::arg("k_omega"), py::arg("accel") = 1.0);
    m.def("diamond_overlap", &diamond_overlap, py::arg("q_omega"), py::arg("k_omega"), py::arg("c"),
          py::arg("accel") = 1.0);
    m.def(
        "spectral_curve",
        [](const std::string& kind, double q, double a, const std::vector<double>& grid, double c) {
            return samples(spectral_curve(curve_kind_from_string(kind), q, a, grid, c));
        },
        py::arg("kind"), py::arg("q_omega"), py::arg("accel"), py::arg("grid"), py::arg("apex_c") = 1.0);

    m.def(
        "lambda_block",
        [](double c, double a, int n, const std::string& sector) {
            BogoMatrix b = lambda_block(c, a, FrequencyGrid::standard(a, n),
                                        sector == "minus" ? Sector::Minus : Sector::Plus);
            return py::make_tuple(b.grid.nodes, b.A, b.B);
        },
        py::arg("c"), py::arg("accel") = 1.0, py::arg("nodes") = 64, py::arg("sector") = "plus");
    m.def(
        "phase_matrix",
        [](double c, double a, int n) { return phase_matrix(c, a, FrequencyGrid::standard(a, n)); },
        py::arg("c"), py::arg("accel") = 1.0, py::arg("nodes") = 64);
    m.def(
        "verify_group_law",
        [](double c, int n, double a, const std::vector<int>& nodes) {
            GroupLawReport r = verify_group_law(c, n, a, nodes);
            return py::dict(py::arg("nodes") = r.nodes, py::arg("max_residual") = r.max_residual,
                            py::arg("refinement_slope") = r.refinement_slope,
                            py::arg("covariance_residual") = r.covariance_residual);
        },
        py::arg("c") = 1.0, py::arg("n") = 2, py::arg("accel") = 1.0,
        py::arg("nodes") = std::vector<int>{32, 64, 128});

    m.def("squeezed_vacuum", [](double th, int n) { return squeezed_vacuum(th, n).amplitudes; }, py::arg("theta"),
          py::arg("n_max"));
    m.def("exact_squeeze_oracle", [](double th, int n) { return exact_squeeze_oracle(th, n).state.amplitudes; },
          py::arg("theta"), py::arg("n_max"));
    m.def(
        "bilocal_first_order",
        [](double l, int n) {
            BilocalState b = bilocal_first_order(l, n);
            return py::make_tuple(b.state.amplitudes, b.perturbative_warning);
        },
        py::arg("lambda_eff"), py::arg("n_max"));
    m.def(
        "reduced_spectrum",
        [](double th, int n) {
            ReducedSpectrum r = reduced_spectrum(squeezed_vacuum(th, n));
            return py::dict(py::arg("probabilities") = r.probabilities,
                            py::arg("mean_occupation") = r.mean_occupation, py::arg("entropy") = r.entropy);
        },
        py::arg("theta"), py::arg("n_max"));

    auto packet = [](double q, double k, double a, double mu, double sigma) {
        return PacketParams{q, k, a, mu, sigma, 0.0};
    };
    m.def(
        "gaussian_overlap",
        [packet](double q, double k, double a, double mu, double sigma, bool numeric) {
            const PacketParams p = packet(q, k, a, mu, sigma);
            return numeric ? gaussian_overlap_numeric(p) : gaussian_overlap_closed(p);
        },
        py::arg("q"), py::arg("k_omega"), py::arg("accel") = 1.0, py::arg("mu") = 1.0, py::arg("sigma") = 1.0,
        py::arg("numeric") = false);
    m.def(
        "scaled_modulus",
        [packet](double q, double k, double a, double mu, double sigma) {
            return scaled_modulus(packet(q, k, a, mu, sigma));
        },
        py::arg("q"), py::arg("k_omega"), py::arg("accel") = 1.0, py::arg("mu") = 1.0, py::arg("sigma") = 1.0);
    m.def(
        "stokes_classify",
        [packet](double q, double a, double mu, double sigma) {
            StokesClass s = stokes_classify(packet(q, 1.0, a, mu, sigma));
            return py::make_tuple(s.z, to_string(s.region));
        },
        py::arg("q"), py::arg("accel") = 1.0, py::arg("mu") = 1.0, py::arg("sigma") = 1.0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI subcommand in-process; returns (exit code, stdout, stderr).");
}
