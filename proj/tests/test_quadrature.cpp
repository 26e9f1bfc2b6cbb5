#include <doctest.h>

#include <numbers>

#include "support.hpp"
#include "wedgeworks/quadrature.hpp"

using namespace wedgeworks;
using wwtest::rel_err;

TEST_SUITE("quadrature") {

TEST_CASE("polynomials up to degree 31 are exact on one panel") {
    auto f = [](double x) { return Complex(std::pow(x, 31), 0.0); };
    QuadResult r = integrate(f, 0.0, 1.0);
    CHECK(rel_err(r.value, Complex(1.0 / 32.0)) < 1e-14);
    CHECK(r.converged);
}

TEST_CASE("oscillatory complex integrand") {
    auto f = [](double x) { return std::exp(Complex(0.0, 40.0 * x)); };
    QuadResult r = integrate(f, 0.0, 3.0);
    const Complex want = (std::exp(Complex(0.0, 120.0)) - 1.0) / Complex(0.0, 40.0);
    CHECK(rel_err(r.value, want) < 1e-12);
}

TEST_CASE("endpoint singularity under bisection") {
    auto f = [](double x) { return Complex(1.0 / std::sqrt(x), 0.0); };
    AdaptiveOptions o;
    o.rel_tol = 1e-10;
    QuadResult r = integrate(f, 0.0, 4.0, o);
    CHECK(rel_err(r.value, Complex(4.0)) < 1e-9);
}

TEST_CASE("result does not depend on interval orientation beyond sign") {
    auto f = [](double x) { return Complex(std::cos(x), std::sin(3 * x)); };
    QuadResult a = integrate(f, 0.0, 2.0);
    QuadResult b = integrate(f, 2.0, 0.0);
    CHECK(std::abs(a.value + b.value) < 1e-14);
}

TEST_CASE("repeated runs are bitwise identical") {
    auto f = [](double x) { return std::exp(Complex(-x * x, 7.0 * x)) / (1.0 + x); };
    QuadResult a = integrate(f, 0.0, 9.0);
    QuadResult b = integrate(f, 0.0, 9.0);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
}

TEST_CASE("interval budget exhaustion is reported") {
    auto f = [](double x) { return Complex(std::sin(1.0 / (x + 1e-9)), 0.0); };
    AdaptiveOptions o;
    o.max_intervals = 5;
    o.rel_tol = 1e-14;
    QuadResult r = integrate(f, 0.0, 1.0, o);
    CHECK_FALSE(r.converged);
}

TEST_CASE("Neville extrapolation recovers a polynomial at zero") {
    std::vector<double> x = {0.4, 0.3, 0.2, 0.1};
    std::vector<Complex> y;
    for (double t : x) y.push_back(Complex(2.0 - t + 3 * t * t * t, t));
    Extrapolation e = neville_at_zero(x, y);
    CHECK(std::abs(e.value - Complex(2.0)) < 1e-13);
}

}
