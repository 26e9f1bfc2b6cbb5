#pragma once

// Adaptive Gauss-Kronrod (G10/K21) on real intervals for complex-valued
// integrands, plus polynomial extrapolation to zero.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

namespace wedgeworks {

using Complex = std::complex<double>;

struct AdaptiveOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_intervals = 4000;
};

struct QuadResult {
    Complex value{};
    double error = 0.0;
    bool converged = false;
    int intervals = 0;
};

namespace detail {

inline constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a, b;
    Complex value;
    double error;
};

template <class F>
Segment gk21(F& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::abs(hlgth);
    Complex fv1[10], fv2[10];
    const Complex fc = f(centr);
    Complex resg{};
    Complex resk = fc * kWgk[10];
    double resabs = std::abs(fc) * kWgk[10];
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * kXgk[jtw];
        const Complex f1 = f(centr - absc);
        const Complex f2 = f(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * kXgk[jtwm1];
        const Complex f1 = f(centr - absc);
        const Complex f2 = f(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
    }
    const Complex reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    const Complex result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(50.0 * eps * resabs, err);
    if (!std::isfinite(std::abs(result))) err = std::numeric_limits<double>::infinity();
    return {a, b, result, err};
}

}  // namespace detail

/// Globally adaptive bisection: always splits the interval with the largest
/// error estimate. The final sum runs over intervals ordered by position, so
/// the result depends only on the integrand and the options.
template <class F>
QuadResult integrate(F&& f, double a, double b, const AdaptiveOptions& opt = {}) {
    using detail::Segment;
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    auto cmp = [](const Segment& x, const Segment& y) { return x.error < y.error; };
    std::vector<Segment> heap;
    std::vector<Segment> frozen;
    heap.push_back(detail::gk21(f, a, b));
    Complex total = heap.front().value;
    double err = heap.front().error;
    int count = 1;
    while (!heap.empty()) {
        if (err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) break;
        if (count >= opt.max_intervals) break;
        std::pop_heap(heap.begin(), heap.end(), cmp);
        Segment s = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (s.a + s.b);
        if (!(mid > std::min(s.a, s.b) && mid < std::max(s.a, s.b))) {
            frozen.push_back(s);
            continue;
        }
        Segment l = detail::gk21(f, s.a, mid);
        Segment r = detail::gk21(f, mid, s.b);
        total += l.value + r.value - s.value;
        err += l.error + r.error - s.error;
        heap.push_back(l);
        std::push_heap(heap.begin(), heap.end(), cmp);
        heap.push_back(r);
        std::push_heap(heap.begin(), heap.end(), cmp);
        ++count;
    }
    heap.insert(heap.end(), frozen.begin(), frozen.end());
    std::sort(heap.begin(), heap.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    Complex sum{};
    double esum = 0.0;
    for (const auto& s : heap) {
        sum += s.value;
        esum += s.error;
    }
    out.value = sum;
    out.error = esum;
    out.intervals = static_cast<int>(heap.size());
    out.converged = std::isfinite(esum) && esum <= std::max(opt.abs_tol, opt.rel_tol * std::abs(sum));
    return out;
}

struct Extrapolation {
    Complex value{};
    double error = 0.0;
};

/// Neville's scheme evaluated at x = 0. The error is the change between the
/// two highest-order estimates.
inline Extrapolation neville_at_zero(std::span<const double> x, std::span<const Complex> y) {
    std::vector<Complex> p(y.begin(), y.end());
    const std::size_t n = p.size();
    Complex prev = n ? p[n - 1] : Complex{};
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i)
            p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
        if (m + 1 == n) break;
        prev = p[0];
    }
    if (n == 0) return {};
    return {p[0], n > 1 ? std::abs(p[0] - prev) : 0.0};
}

}  // namespace wedgeworks
