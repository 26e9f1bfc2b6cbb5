#pragma once

#include <Eigen/Dense>
#include <vector>

namespace wedgeworks {

using ComplexMatrix = Eigen::MatrixXcd;

struct FrequencyGrid {
    std::vector<double> nodes;
    std::vector<double> weights;

    /// Nodes evenly spaced in log(omega) over [lo, hi]; trapezoid weights for d(omega).
    static FrequencyGrid log_spaced(double lo, double hi, int n);
    /// [1e-2, 10] * accel.
    static FrequencyGrid standard(double accel, int n = 64);
    std::size_t size() const { return nodes.size(); }
};

enum class Sector { Plus, Minus };

/// A (alpha block) and B (beta block) of the (c -> 0) transform on the grid.
/// The diagonal of A is the principal-value average of the kernel at
/// omega_i +- half the local node spacing. The minus-momentum sector is the
/// complex conjugate of the plus sector.
struct BogoMatrix {
    FrequencyGrid grid;
    ComplexMatrix A;
    ComplexMatrix B;
    double apex_c = 1.0;
    double accel = 1.0;
    Sector sector = Sector::Plus;
};

/// diag(c^{i omega_r / a})
ComplexMatrix phase_matrix(double c, double accel, const FrequencyGrid& grid);

BogoMatrix lambda_block(double c, double accel, const FrequencyGrid& grid, Sector sector = Sector::Plus);

struct GroupLawReport {
    double c = 1.0;
    int n = 2;
    double accel = 1.0;
    std::vector<int> nodes;
    std::vector<double> max_residual;
    double refinement_slope = 0.0;
    /// max |A_c - P_c A_1 P_c^-1|, |B_c - P_c B_1 P_c| and the Q_n identity over all grids
    double covariance_residual = 0.0;

    bool operator==(const GroupLawReport&) const = default;
};

/// Composes Lambda_c n times, with the grid weights as the intermediate
/// d(omega) measure, and compares against Lambda_{nc} built directly. The
/// alpha kernel contributes its distributional part delta(k - q)/2 to the
/// composition. The residual is measured on smooth test packets (Gaussians in
/// log omega centred at 0.5a, a, 2a) over the window 0.2a < omega < 5a,
/// relative to the direct result, and maximised over both top-row blocks.
GroupLawReport verify_group_law(double c, int n, double accel, const std::vector<FrequencyGrid>& grids);
GroupLawReport verify_group_law(double c, int n, double accel, const std::vector<int>& node_counts = {32, 64, 128});

}  // namespace wedgeworks
