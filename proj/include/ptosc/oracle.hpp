#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptosc/linalg.hpp"
#include "ptosc/model.hpp"
#include "ptosc/states.hpp"

namespace ptosc::oracle {

/// Eigen-decomposition of a general complex 2x2 matrix from its
/// characteristic polynomial. Values are ordered by descending real part;
/// vectors have unit Euclidean norm.
struct NumericEigen {
    std::array<Complex, 2> values{};
    std::array<Vec2, 2> vectors{};
    bool defective{false};
};

NumericEigen numeric_eigensystem(const Mat2& m);

/// exp(i Omega t) with Omega = sqrt(p^2 + M^2), assembled from the numeric
/// eigen-decomposition as V diag(exp(i omega_k t)) V^-1.
Mat2 evolution_operator(const ModelParams& params, double t);

/// Positive metric (V^-1)^dagger V^-1 with the columns of V scaled to unit
/// |PT norm|. Coincides with C'P in the unbroken phase.
Mat2 positive_metric(const ModelParams& params);

/// tr(rho_i(t0) pi_j(t)) from evolved basis vectors, the numeric metric and
/// trace normalisation.
double probability(const ModelParams& params, Flavour i, Flavour j, double t0, double t);

/// (U(t) e_a)^dagger (U(t) e_b)
Complex dirac_overlap(const ModelParams& params, Flavour a, Flavour b, double t);

/// Central second difference of xi over h, compared with -omega^2 xi.
/// Returns the relative residual.
double mode_equation_residual(Branch branch, double t, double h, const EigenSystem& es);

struct OracleReport {
    std::string check_name;
    double max_abs_error{};
    double tolerance{};
    bool passed{};
    std::size_t grid_size{};
};

struct OracleGrid {
    /// Extra eta values evaluated with the same m1^2, m2^2 and p as the params.
    std::vector<double> etas;
    std::vector<double> times;
    std::vector<double> t0s;
    std::size_t random_draws{1000};
    std::uint64_t seed{20230222};
    /// Replaces every tolerance when set.
    std::optional<double> tolerance;
};

/// eta in {0.05, ..., 0.95} plus 0.999, 16 times in [-5, 8], t0 in {-3.2, 0, 1.7, 100}.
OracleGrid default_grid();

/// Looser bound above this eta: eigenvector conditioning grows like (1-eta^2)^(-1/2).
inline constexpr double kNearExceptionalEta = 0.95;
inline constexpr double kNearExceptionalTolerance = 1e-8;

/// Runs every invariant family. Failures are reported, not thrown. Each family
/// is split into a regular band and an eta > 0.95 band when the grid has both.
std::vector<OracleReport> check_all(const ModelParams& params, const OracleGrid& grid = default_grid());

inline bool all_passed(const std::vector<OracleReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

}  // namespace ptosc::oracle
