#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "wedgeworks/cli.hpp"
#include "wedgeworks/serialize.hpp"

using namespace wedgeworks;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    const int code = run(args, o, e);
    return {code, o.str(), e.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("wedgeworks_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("every subcommand emits its CSV header") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
        {{"modes-render", "--grid-points", "5"}, "t,x,re,im,abs,arg"},
        {{"bogo-curve", "--grid-points", "5"}, "kind,omega_k,value"},
        {{"modular-verify", "--nodes", "16,32"}, "c,n,nodes,max_residual,refinement_slope,covariance_residual"},
        {{"fock-squeeze"}, "n,amplitude,probability"},
        {{"packet-sweep", "--grid-points", "4", "--sigma", "1,2"}, "sigma,omega_k,scaled_modsq"},
        {{"packet-sweep", "--kind", "stokes"}, "sigma,z_re,z_im,arg_z,region,dominant_term"},
        {{"packet-sweep", "--kind", "max", "--grid-points", "4"}, "sigma,max_scaled_modsq"},
    };
    for (const auto& [args, header] : cases) {
        Outcome r = call(args);
        CHECK(r.code == 0);
        CHECK(first_line(r.out) == header);
    }
}

TEST_CASE("thermal curve value") {
    Outcome r = call({"bogo-curve", "--kind", "thermal", "--grid-min", "1", "--grid-max", "2", "--grid-points", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("thermal,1,0.1594527118997") != std::string::npos);
}

TEST_CASE("fock defaults come from the thermal angle") {
    Outcome r = call({"fock-squeeze", "--format", "json", "--n-max", "4"});
    REQUIRE(r.code == 0);
    FockReport rep = json::parse(r.out).get<FockReport>();
    CHECK(std::abs(std::tanh(rep.state.theta) - std::exp(-std::numbers::pi)) < 1e-15);
    CHECK(rep.source == "squeezed");
}

TEST_CASE("repeated invocations are byte-identical") {
    const std::vector<std::vector<std::string>> cmds = {
        {"modes-render", "--kind", "unruh-l", "--format", "json"},
        {"bogo-curve"},
        {"bogo-curve", "--format", "json", "--grid-points", "30"},
        {"modular-verify", "--nodes", "16,32", "--format", "json"},
        {"fock-squeeze", "--kind", "oracle", "--n-max", "12"},
        {"packet-sweep", "--grid-points", "10", "--format", "json"},
    };
    for (const auto& c : cmds) {
        Outcome a = call(c), b = call(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("JSON outputs reload with equality") {
    {
        Outcome r = call({"bogo-curve", "--format", "json", "--grid-points", "40"});
        auto curves = json::parse(r.out).get<std::vector<SpectralCurve>>();
        REQUIRE(curves.size() == 3);
        CHECK(curves[0] == spectral_curve(CurveKind::Thermal, 1.0, 1.0, linear_grid(0.01, 3.01, 40)));
        CHECK(json(curves).dump(1) + "\n" == r.out);
    }
    {
        Outcome r = call({"modes-render", "--format", "json", "--kind", "rindler-right", "--apex", "0.5"});
        auto lat = json::parse(r.out).get<ModeLattice>();
        CHECK(lat.spec.family == ModeFamily::RindlerRight);
        CHECK(json(lat).dump(1) + "\n" == r.out);
        CHECK(json(lat).get<ModeLattice>() == lat);
    }
    {
        Outcome r = call({"modular-verify", "--nodes", "16,32", "--format", "json"});
        auto rep = json::parse(r.out).get<GroupLawReport>();
        CHECK(rep == verify_group_law(1.0, 2, 1.0, std::vector<int>{16, 32}));
    }
    {
        Outcome r = call({"packet-sweep", "--grid-points", "6", "--sigma", "0.2,100", "--format", "json"});
        auto rep = json::parse(r.out).get<PacketReport>();
        CHECK(rep.curves.size() == 2);
        CHECK(rep.stokes.at(0).region == StokesRegion::LocalizedDominant);
        CHECK(json(rep).get<PacketReport>() == rep);
        CHECK(json(rep).dump(1) + "\n" == r.out);
    }
    {
        Outcome r = call({"fock-squeeze", "--kind", "bilocal", "--theta", "0.05", "--format", "json"});
        auto rep = json::parse(r.out).get<FockReport>();
        CHECK(json(rep).get<FockReport>() == rep);
        CHECK(json(rep).dump(1) + "\n" == r.out);
    }
}

TEST_CASE("output file option") {
    const auto path = scratch("curve.csv");
    Outcome r = call({"bogo-curve", "--grid-points", "3", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == call({"bogo-curve", "--grid-points", "3"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("config file with command-line precedence") {
    const auto path = scratch("config.ini");
    {
        std::ofstream cfg(path);
        cfg << "q-omega = 2\n" << "grid-points = 3\n" << "kind = thermal\n";
    }
    Outcome from_file = call({"--config", path.string(), "bogo-curve"});
    Outcome direct = call({"bogo-curve", "--q-omega", "2", "--grid-points", "3", "--kind", "thermal"});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == direct.out);
    Outcome override = call({"--config", path.string(), "bogo-curve", "--grid-points", "4"});
    CHECK(override.out == call({"bogo-curve", "--q-omega", "2", "--grid-points", "4", "--kind", "thermal"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("errors are JSON lines with exit code 1") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"bogo-curve", "--kind", "bogus"}, {"fock-squeeze", "--theta", "-1"},
          {"bogo-curve", "--format", "xml"}, {"no-such-command"}, {}}) {
        Outcome r = call(args);
        CHECK(r.code == 1);
        json j = json::parse(first_line(r.err));
        CHECK(j.contains("error"));
        CHECK(j.contains("message"));
    }
    Outcome p = call({"fock-squeeze", "--kind", "bilocal", "--theta", "1.0"});
    CHECK(p.code == 1);
    CHECK(json::parse(first_line(p.err))["error"] == "domain");
}

TEST_CASE("help exits cleanly") {
    Outcome r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bogo-verify") != std::string::npos);
}

TEST_CASE("bogo-verify passes on a small grid") {
    Outcome r = call({"bogo-verify", "--grid-points", "2", "--format", "json"});
    CHECK(r.code == 0);
    auto rows = json::parse(r.out).get<std::vector<VerifyRow>>();
    // alpha of the two wedge-to-wedge kinds is skipped on the coincident diagonal
    CHECK(rows.size() == 8 + 6 + 6 + 4);
    for (const VerifyRow& row : rows) {
        CHECK(row.converged);
        CHECK(row.rel_residual <= row.threshold);
    }
}

TEST_CASE("tolerance override from the environment") {
    ::setenv("WEDGEWORKS_TOL", "not-a-number", 1);
    Outcome bad = call({"bogo-verify", "--grid-points", "2", "--kind", "cToM"});
    CHECK(bad.code == 1);
    ::setenv("WEDGEWORKS_TOL", "1e-10", 1);
    Outcome tight = call({"bogo-verify", "--grid-points", "2", "--kind", "cToM"});
    CHECK(tight.code == 0);
    ::unsetenv("WEDGEWORKS_TOL");
}

TEST_CASE("spec examples") {
    Outcome z = call({"fock-squeeze", "--theta", "0", "--n-max", "3"});
    CHECK(z.code == 0);
    CHECK(z.out == "n,amplitude,probability\n0,1,1\n1,0,0\n2,0,0\n3,0,0\n");
    Outcome p = call({"packet-sweep", "--format", "json", "--grid-points", "3"});
    auto rep = json::parse(p.out).get<PacketReport>();
    CHECK(rep.curves.size() == default_sigmas().size());
    for (const SpectralCurve& c : rep.curves) {
        CHECK(c.q_omega == 1.0);
        CHECK(c.accel == 1.0);
        CHECK(c.mu == 1.0);
    }
}

}
