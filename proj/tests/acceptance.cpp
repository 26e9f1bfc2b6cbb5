// Acceptance checks 1-12. Usage: wedgeworks_acceptance [--cli PATH] [N ...]
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "wedgeworks/bogoliubov.hpp"
#include "wedgeworks/cli.hpp"
#include "wedgeworks/fock.hpp"
#include "wedgeworks/kgquad.hpp"
#include "wedgeworks/modular.hpp"
#include "wedgeworks/serialize.hpp"
#include "wedgeworks/specfun.hpp"
#include "wedgeworks/wavepacket.hpp"

using namespace wedgeworks;
using std::numbers::pi;
using wwtest::rel_err;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string g(double v) { return fmt("%.3g", v); }

std::string cli_path;

Verdict gamma_identity() {
    double worst = 0.0;
    for (double b : {0.1, 0.5, 1.0, 2.0, 5.0})
        worst = std::max(worst, rel_err(std::norm(complex_gamma(Complex(0, b))) * b * std::sinh(pi * b), pi));
    return {worst <= 1e-10, "max rel err " + g(worst)};
}

Verdict oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    const double a = 1.0, c = 1.0;
    QuadratureConfig cfg;
    double worst = 0.0, worst_diamond = 0.0;
    bool converged = true;
    auto cmp = [&](Complex closed, const OverlapResult& r, double& w) {
        converged = converged && r.converged;
        w = std::max(w, std::abs(std::abs(closed) - std::abs(r.value)) / std::abs(r.value));
    };
    std::vector<double> grid = linear_grid(0.25, 2.0, 5);
    for (double q : grid)
        for (double k : grid) {
            const ModeSpec ph{ModeFamily::Minkowski, MomentumSign::Plus, q, a, 0.0, false};
            const ModeSpec rq{ModeFamily::RindlerRight, MomentumSign::Plus, q, a, 0.0, false};
            const ModeSpec rk{ModeFamily::RindlerRight, MomentumSign::Plus, k, a, c, false};
            const ModeSpec lk{ModeFamily::RindlerLeft, MomentumSign::Minus, k, a, c, false};
            BogoPair m = bogo_c_to_M(k, q, c, a);
            cmp(m.alpha, kg_inner_numeric(ph, rk, Region::right_wedge(c), cfg), worst);
            cmp(m.beta, kg_inner_numeric(ph.conj(), rk, Region::right_wedge(c), cfg), worst);
            if (k != q) {
                cmp(alpha_c_to_0(k, q, c, a), kg_inner_numeric(rq, rk, Region::right_wedge(c), cfg), worst);
                cmp(alpha_ctilde_to_0(k, q, c, a), kg_inner_numeric(rq.conj(), lk, Region::left_wedge(c), cfg), worst);
            }
            cmp(beta_c_to_0(k, q, c, a), kg_inner_numeric(rq.conj(), rk, Region::right_wedge(c), cfg), worst);
            cmp(beta_ctilde_to_0(k, q, c, a), kg_inner_numeric(rq, lk, Region::left_wedge(c), cfg), worst);
            cmp(diamond_overlap(q, k, c, a), kg_inner_numeric(rq, rk, Region::diamond(c, 2 * c), cfg), worst_diamond);
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = converged && worst <= 1e-6 && worst_diamond <= 1e-4 && secs < 120.0;
    return {ok, "max rel " + g(worst) + ", diamond " + g(worst_diamond) + ", converged " +
                    (converged ? "yes" : "no") + ", " + fmt("%.2f", secs) + " s"};
}

Verdict c_invariance() {
    double worst = 0.0;
    std::vector<double> grid = linear_grid(0.25, 2.0, 5);
    for (double q : grid)
        for (double k : grid) {
            if (k == q) continue;
            const BogoPair r0 = bogo_c_to_0(k, q, 0.5, 1.0), t0 = bogo_ctilde_to_0(k, q, 0.5, 1.0);
            for (double c : {1.0, 2.0, 4.0}) {
                const BogoPair r = bogo_c_to_0(k, q, c, 1.0), t = bogo_ctilde_to_0(k, q, c, 1.0);
                worst = std::max({worst, rel_err(std::abs(r.alpha), std::abs(r0.alpha)),
                                  rel_err(std::abs(r.beta), std::abs(r0.beta)),
                                  rel_err(std::abs(t.alpha), std::abs(t0.alpha)),
                                  rel_err(std::abs(t.beta), std::abs(t0.beta))});
            }
        }
    return {worst <= 1e-12, "max rel spread " + g(worst)};
}

Verdict second_order_pole() {
    std::vector<double> d = wwtest::geomspace(1e-4, 1e-2, 11), above, below;
    for (double x : d) {
        above.push_back(wedge_overlap_sq(1.0, 1.0 + x, 1.0));
        below.push_back(wedge_overlap_sq(1.0, 1.0 - x, 1.0));
    }
    const double s1 = wwtest::loglog_slope(d, above), s2 = wwtest::loglog_slope(d, below);
    const bool ok = std::abs(s1 + 2) <= 0.05 && std::abs(s2 + 2) <= 0.05;
    return {ok, "slope " + fmt("%.4f", s1) + " above, " + fmt("%.4f", s2) + " below"};
}

Verdict diamond_suppression() {
    const std::vector<double> grid = linear_grid(0.01, 3.01, 301);
    const SpectralCurve ib = spectral_curve(CurveKind::IncompleteBeta, 1.0, 1.0, grid, 1.0);
    const double at_001 = ib.samples.front().value;
    const double cb_01 = wedge_overlap_sq(1.0, 0.1, 1.0);
    auto top = std::max_element(ib.samples.begin(), ib.samples.end(),
                                [](const CurveSample& x, const CurveSample& y) { return x.value < y.value; });
    const double step = grid[1] - grid[0];
    const bool finite = std::isfinite(at_001);
    const bool smaller = at_001 < cb_01;
    const bool peaked = std::abs(top->omega_k - 1.0) <= step * (1 + 1e-9);
    return {finite && smaller && peaked, "incomplete(0.01) " + g(at_001) + " vs complete(0.1) " + g(cb_01) +
                                             ", argmax " + g(top->omega_k)};
}

Verdict modular_covariance() {
    FrequencyGrid grid = FrequencyGrid::standard(1.0, 64);
    const BogoMatrix one = lambda_block(1.0, 1.0, grid);
    double cov = 0.0;
    for (double c : {0.5, 2.0, 4.0}) {
        const BogoMatrix m = lambda_block(c, 1.0, grid);
        const ComplexMatrix P = phase_matrix(c, 1.0, grid);
        cov = std::max({cov, (m.A - P * one.A * P.inverse()).cwiseAbs().maxCoeff(),
                        (m.B - P * one.B * P).cwiseAbs().maxCoeff()});
    }
    GroupLawReport r = verify_group_law(1.0, 2, 1.0, std::vector<int>{32, 64, 128});
    const bool mono = r.max_residual[1] < r.max_residual[0] && r.max_residual[2] < r.max_residual[1];
    return {cov <= 1e-12 && mono, "covariance " + g(cov) + ", residual " + g(r.max_residual[0]) + " / " +
                                      g(r.max_residual[1]) + " / " + g(r.max_residual[2])};
}

Verdict fock_thermality() {
    const double th = std::atanh(std::exp(-pi));
    const int n = 8;
    const TwoModeState s = squeezed_vacuum(th, n);
    const ReducedSpectrum sp = reduced_spectrum(s);
    double ratio = 0.0;
    for (int j = 0; j < n; ++j) ratio = std::max(ratio, rel_err(sp.probabilities[j + 1] / sp.probabilities[j], std::exp(-2 * pi)));
    // occupation carried by the levels above n_max
    const double t = std::tanh(th) * std::tanh(th);
    const double bound = std::pow(t, n + 1) * ((n + 1) + t / (1 - t));
    const double occ = std::abs(sp.mean_occupation - 1.0 / std::expm1(2 * pi));
    const OracleState o = exact_squeeze_oracle(th, n);
    double amp = 0.0;
    for (int j = 0; j <= n; ++j) amp = std::max(amp, std::abs(o.state.amplitudes[j] - s.amplitudes[j]));
    const bool ok = ratio <= 1e-12 && occ <= bound * (1 + 1e-9) && amp <= 1e-10;
    return {ok, "ratio rel " + g(ratio) + ", occupation gap " + g(occ) + " (bound " + g(bound) + "), oracle " + g(amp)};
}

Verdict perturbative_order() {
    std::vector<double> lam = wwtest::geomspace(1e-3, 1e-1, 9), dev;
    for (double l : lam) {
        const TwoModeState a = bilocal_first_order(l, 10).state, b = squeezed_vacuum(std::atanh(l), 10);
        double m = 0.0;
        for (int j = 0; j <= 10; ++j) m = std::max(m, std::abs(a.amplitudes[j] - b.amplitudes[j]));
        dev.push_back(m);
    }
    const double s = wwtest::loglog_slope(lam, dev);
    return {std::abs(s - 2) <= 0.1, "slope " + fmt("%.4f", s)};
}

PacketParams packet(double k, double sigma) {
    PacketParams p;
    p.q = 1.0;
    p.k_omega = k;
    p.accel = 1.0;
    p.mu = 1.0;
    p.sigma = sigma;
    return p;
}

Verdict thermal_limit() {
    std::vector<double> dist;
    for (double s : {10.0, 30.0, 100.0}) {
        double m = 0.0;
        for (double k : {0.25, 0.5, 1.0, 2.0}) {
            const double planck = 1.0 / std::expm1(2 * pi * k);
            m = std::max(m, std::abs(scaled_modulus(packet(k, s)) - planck) / planck);
        }
        dist.push_back(m);
    }
    const bool ok = dist[2] <= 0.02 && dist[1] < dist[0] && dist[2] < dist[1];
    return {ok, "max rel distance " + g(dist[0]) + " / " + g(dist[1]) + " / " + g(dist[2]) + " at sigma 10 / 30 / 100"};
}

Verdict localized_regime() {
    std::vector<double> ks = {0.05, 0.025, 0.0125, 0.00625}, vals;
    for (double k : ks) vals.push_back(scaled_modulus(packet(k, 0.2)));
    bool bounded = std::isfinite(vals[0]);
    for (std::size_t i = 1; i < vals.size(); ++i) bounded = bounded && std::isfinite(vals[i]) && vals[i] <= vals[i - 1];
    const StokesClass sc = stokes_classify(packet(0.05, 0.2));
    PcfOptions near;
    near.crossover_radius = 4.0;
    const PcfEvaluation e = pcf_asymptotic(packet_nu(packet(0.05, 0.2)), sc.z, near);
    const bool ok = bounded && sc.region == StokesRegion::LocalizedDominant && e.dominant_term == DominantTerm::DominantExpPlus;
    return {ok, "value(0.05) " + g(vals[0]) + ", value(0.00625) " + g(vals[3]) + ", " + to_string(sc.region) + ", " +
                    to_string(e.dominant_term)};
}

Verdict dual_path() {
    double worst = 0.0;
    int n = 0;
    for (double w : {0.5, 1.0, 2.0})
        for (double r = 8.0; r <= 20.0 + 1e-9; r += 1.0)
            for (int j = 1; j <= 9; ++j) {
                const double th = -pi / 8 + (3 * pi / 4) * j / 10.0;
                const Complex z = std::polar(r, th), nu(0.0, -w);
                const Complex la = pcf_asymptotic(nu, z).log_value, li = pcf_integral(nu, z).log_value;
                worst = std::max(worst, std::abs(std::exp(la - li) - 1.0));
                ++n;
            }
    return {worst <= 1e-5, "max rel " + g(worst) + " over " + std::to_string(n) + " points"};
}

std::string in_process(const std::vector<std::string>& args, int* code) {
    std::ostringstream o, e;
    *code = run(args, o, e);
    return o.str();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict determinism() {
    const std::vector<std::vector<std::string>> cmds = {
        {"modes-render", "--format", "json"},
        {"bogo-curve", "--format", "json"},
        {"bogo-curve"},
        {"bogo-verify", "--grid-points", "3", "--format", "json"},
        {"modular-verify", "--nodes", "16,32", "--format", "json"},
        {"fock-squeeze", "--format", "json"},
        {"packet-sweep", "--format", "json", "--grid-points", "30"},
        {"packet-sweep", "--kind", "stokes"},
    };
    bool same = true, ok_codes = true, round = true;
    int processes = 0;
    for (const auto& c : cmds) {
        int c1 = 0, c2 = 0;
        const std::string a = in_process(c, &c1), b = in_process(c, &c2);
        same = same && a == b;
        ok_codes = ok_codes && c1 == 0 && c2 == 0;
        if (!cli_path.empty()) {
            std::string line = "\"" + cli_path + "\"";
            for (const auto& s : c) line += " " + s;
            const auto p1 = std::filesystem::temp_directory_path() / "wedgeworks_acc_1";
            const auto p2 = std::filesystem::temp_directory_path() / "wedgeworks_acc_2";
            const int r1 = std::system((line + " > \"" + p1.string() + "\"").c_str());
            const int r2 = std::system((line + " > \"" + p2.string() + "\"").c_str());
            ok_codes = ok_codes && r1 == 0 && r2 == 0;
            same = same && slurp(p1) == slurp(p2) && slurp(p1) == a;
            std::filesystem::remove(p1);
            std::filesystem::remove(p2);
            processes += 2;
        }
        if (std::find(c.begin(), c.end(), "json") == c.end()) continue;
        const json j = json::parse(a);
        const std::string& sub = c[0];
        std::string again;
        if (sub == "modes-render") {
            auto v = j.get<ModeLattice>();
            round = round && json(v).get<ModeLattice>() == v;
            again = json(v).dump(1);
        } else if (sub == "bogo-curve") {
            auto v = j.get<std::vector<SpectralCurve>>();
            round = round && json(v).get<std::vector<SpectralCurve>>() == v;
            again = json(v).dump(1);
        } else if (sub == "bogo-verify") {
            auto v = j.get<std::vector<VerifyRow>>();
            round = round && json(v).get<std::vector<VerifyRow>>() == v;
            again = json(v).dump(1);
        } else if (sub == "modular-verify") {
            auto v = j.get<GroupLawReport>();
            round = round && json(v).get<GroupLawReport>() == v;
            again = json(v).dump(1);
        } else if (sub == "fock-squeeze") {
            auto v = j.get<FockReport>();
            round = round && json(v).get<FockReport>() == v;
            again = json(v).dump(1);
        } else {
            auto v = j.get<PacketReport>();
            round = round && json(v).get<PacketReport>() == v;
            again = json(v).dump(1);
        }
        round = round && again + "\n" == a;
    }
    return {same && ok_codes && round, std::string("identical ") + (same ? "yes" : "no") + ", round trip " +
                                           (round ? "yes" : "no") + ", separate processes " + std::to_string(processes)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"gamma identity", gamma_identity},
        {"oracle equivalence", oracle_equivalence},
        {"c-invariance", c_invariance},
        {"second-order pole", second_order_pole},
        {"diamond suppression", diamond_suppression},
        {"modular covariance", modular_covariance},
        {"Fock thermality", fock_thermality},
        {"perturbative order", perturbative_order},
        {"packet thermal limit", thermal_limit},
        {"localized regime", localized_regime},
        {"dual-path PCF", dual_path},
        {"determinism and round trip", determinism},
    };
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc) cli_path = argv[++i];
        else which.push_back(std::atoi(a.c_str()));
    }
    if (which.empty())
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) which.push_back(i);
    bool all = true;
    for (int n : which) {
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::cerr << "no criterion " << n << "\n";
            return 2;
        }
        Verdict v;
        try {
            v = criteria[n - 1].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        all = all && v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  " << n << "  " << criteria[n - 1].first << ": " << v.detail
                  << std::endl;
    }
    return all ? 0 : 1;
}
