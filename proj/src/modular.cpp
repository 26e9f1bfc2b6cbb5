#include "wedgeworks/modular.hpp"

#include <cmath>
#include <numbers>

#include "wedgeworks/bogoliubov.hpp"
#include "wedgeworks/errors.hpp"
#include "wedgeworks/specfun.hpp"

namespace wedgeworks {

namespace {

using std::numbers::pi;
const Complex I(0.0, 1.0);

// alpha (c -> 0) at ac = 1
Complex alpha_kernel(double k, double q, double a) {
    return std::sqrt(k / q) / (2.0 * pi * a) *
           std::exp(complex_log_beta(Complex(0.0, k / a), Complex(0.0, -(k - q) / a)));
}

Complex beta_kernel(double k, double q, double a) {
    return std::sqrt(k / q) / (2.0 * pi * a) *
           std::exp(complex_log_beta(Complex(0.0, k / a), Complex(0.0, -(k + q) / a)));
}

void check_grid(const FrequencyGrid& g) {
    if (g.nodes.size() < 2 || g.nodes.size() != g.weights.size()) throw DomainError("malformed frequency grid");
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (!(g.nodes[i] > 0.0) || !(g.weights[i] > 0.0)) throw DomainError("grid nodes and weights must be positive");
        if (i && !(g.nodes[i] > g.nodes[i - 1])) throw PoleError("grid nodes must be strictly increasing");
    }
}

double max_abs(const ComplexMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

FrequencyGrid FrequencyGrid::log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw DomainError("log grid needs 0 < lo < hi and n >= 2");
    FrequencyGrid g;
    const double ul = std::log(lo), uh = std::log(hi);
    const double du = (uh - ul) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double w = std::exp(ul + du * i);
        g.nodes.push_back(w);
        g.weights.push_back(w * du * ((i == 0 || i == n - 1) ? 0.5 : 1.0));
    }
    return g;
}

FrequencyGrid FrequencyGrid::standard(double accel, int n) { return log_spaced(1e-2 * accel, 10.0 * accel, n); }

ComplexMatrix phase_matrix(double c, double accel, const FrequencyGrid& grid) {
    if (!(c > 0.0)) throw DomainError("phase matrix needs c > 0");
    if (!(accel > 0.0)) throw DomainError("accel must be positive");
    const std::size_t n = grid.size();
    ComplexMatrix P = ComplexMatrix::Zero(n, n);
    const double lc = std::log(c);
    for (std::size_t r = 0; r < n; ++r) P(r, r) = std::exp(I * (grid.nodes[r] / accel) * lc);
    return P;
}

BogoMatrix lambda_block(double c, double a, const FrequencyGrid& grid, Sector sector) {
    if (!(c > 0.0)) throw DomainError("lambda block needs c > 0");
    if (!(a > 0.0)) throw DomainError("accel must be positive");
    check_grid(grid);
    const auto& w = grid.nodes;
    const std::size_t n = w.size();
    BogoMatrix M{grid, ComplexMatrix(n, n), ComplexMatrix(n, n), c, a, sector};
    const double lac = std::log(a * c);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                const double lo = i > 0 ? w[i] - w[i - 1] : w[i + 1] - w[i];
                const double hi = i + 1 < n ? w[i + 1] - w[i] : w[i] - w[i - 1];
                const double d = 0.5 * std::min(lo, hi);
                M.A(i, i) = 0.5 * (alpha_kernel(w[i] + d, w[i], a) + alpha_kernel(w[i] - d, w[i], a));
            } else {
                M.A(i, j) = std::exp(I * ((w[i] - w[j]) / a) * lac) * alpha_kernel(w[i], w[j], a);
            }
            M.B(i, j) = std::exp(I * ((w[i] + w[j]) / a) * lac) * beta_kernel(w[i], w[j], a);
        }
    }
    if (sector == Sector::Minus) {
        M.A = M.A.conjugate().eval();
        M.B = M.B.conjugate().eval();
    }
    return M;
}

namespace {

struct Level {
    double residual;
    double covariance;
};

Level group_law_level(double c, int n, double a, const FrequencyGrid& grid) {
    const BogoMatrix L = lambda_block(c, a, grid);
    const BogoMatrix Ln = lambda_block(n * c, a, grid);
    const BogoMatrix L1 = lambda_block(1.0, a, grid);
    const std::size_t N = grid.size();

    auto cov = [&](const BogoMatrix& M, double cc) {
        // Lambda_cc = Q Lambda_1 Q^-1 with Q = diag(P_cc, conj P_cc)
        const ComplexMatrix P = phase_matrix(cc, a, grid);
        const ComplexMatrix Pi = P.conjugate();
        return std::max(max_abs(M.A - P * L1.A * Pi), max_abs(M.B - P * L1.B * P));
    };
    double covariance = std::max(cov(L, c), cov(Ln, n * c));

    Eigen::VectorXd W(N);
    for (std::size_t i = 0; i < N; ++i) W(i) = grid.weights[i];
    // kernel acting as an integral operator, including the delta(k - q)/2 part of alpha
    ComplexMatrix Aop = L.A * W.asDiagonal();
    for (std::size_t i = 0; i < N; ++i) Aop(i, i) += 0.5;
    const ComplexMatrix Bop = L.B * W.asDiagonal();
    ComplexMatrix Anop = Ln.A * W.asDiagonal();
    for (std::size_t i = 0; i < N; ++i) Anop(i, i) += 0.5;
    const ComplexMatrix Bnop = Ln.B * W.asDiagonal();

    double worst = 0.0;
    for (double centre : {0.5, 1.0, 2.0}) {
        Eigen::VectorXcd v(N);
        for (std::size_t i = 0; i < N; ++i) {
            const double u = (std::log(grid.nodes[i] / a) - std::log(centre)) / 0.3;
            v(i) = std::exp(-0.5 * u * u);
        }
        for (int col = 0; col < 2; ++col) {
            Eigen::VectorXcd x = col == 0 ? v : Eigen::VectorXcd::Zero(N);
            Eigen::VectorXcd y = col == 0 ? Eigen::VectorXcd::Zero(N) : v;
            for (int s = 0; s < n; ++s) {
                Eigen::VectorXcd xn = Aop * x + Bop * y;
                Eigen::VectorXcd yn = Bop.conjugate() * x + Aop.conjugate() * y;
                x = xn;
                y = yn;
            }
            const Eigen::VectorXcd direct = col == 0 ? Eigen::VectorXcd(Anop * v) : Eigen::VectorXcd(Bnop * v);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < N; ++i) {
                const double wa = grid.nodes[i] / a;
                if (wa <= 0.2 || wa >= 5.0) continue;
                num = std::max(num, std::abs(x(i) - direct(i)));
                den = std::max(den, std::abs(direct(i)));
            }
            if (den > 0.0) worst = std::max(worst, num / den);
        }
    }
    return {worst, covariance};
}

}  // namespace

GroupLawReport verify_group_law(double c, int n, double a, const std::vector<FrequencyGrid>& grids) {
    if (!(c > 0.0)) throw DomainError("group law needs c > 0");
    if (n < 1) throw DomainError("group law needs n >= 1");
    if (grids.empty()) throw DomainError("group law needs at least one grid");
    GroupLawReport rep;
    rep.c = c;
    rep.n = n;
    rep.accel = a;
    for (const auto& g : grids) {
        Level lv = group_law_level(c, n, a, g);
        rep.nodes.push_back(static_cast<int>(g.size()));
        rep.max_residual.push_back(lv.residual);
        rep.covariance_residual = std::max(rep.covariance_residual, lv.covariance);
    }
    if (grids.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = static_cast<double>(grids.size());
        for (std::size_t i = 0; i < grids.size(); ++i) {
            const double x = std::log(static_cast<double>(rep.nodes[i]));
            const double y = std::log(std::max(rep.max_residual[i], 1e-300));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        rep.refinement_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    return rep;
}

GroupLawReport verify_group_law(double c, int n, double a, const std::vector<int>& node_counts) {
    std::vector<FrequencyGrid> grids;
    for (int k : node_counts) grids.push_back(FrequencyGrid::standard(a, k));
    return verify_group_law(c, n, a, grids);
}

}  // namespace wedgeworks
