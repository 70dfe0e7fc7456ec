#pragma once

#include "ptosc/linalg.hpp"

namespace ptosc {

/// Values of eta closer to 1 than this are treated as the exceptional point.
inline constexpr double kExceptionalPointTolerance = 1e-12;

/// Validated inputs of the two-state model. Construct through make_params().
class ModelParams {
public:
    double m1_sq() const noexcept { return m1_sq_; }
    double m2_sq() const noexcept { return m2_sq_; }
    double mu_sq() const noexcept { return mu_sq_; }
    double p() const noexcept { return p_; }

    /// Non-Hermiticity parameter 2 mu^2 / |m1^2 - m2^2|, always >= 0.
    double eta() const noexcept;
    /// eta carrying the sign of m1^2 - m2^2. Equals eta() whenever m1^2 > m2^2.
    double signed_eta() const noexcept;

    friend ModelParams make_params(double m1_sq, double m2_sq, double mu_sq, double p);

private:
    ModelParams(double m1_sq, double m2_sq, double mu_sq, double p)
        : m1_sq_(m1_sq), m2_sq_(m2_sq), mu_sq_(mu_sq), p_(p) {}

    double m1_sq_;
    double m2_sq_;
    double mu_sq_;
    double p_;
};

/// Throws DomainError (NonFinite, DegenerateDiagonal, NonPositiveMass,
/// NegativeMixing, NegativeMomentum).
ModelParams make_params(double m1_sq, double m2_sq, double mu_sq, double p = 0.0);

/// Builds params with m1^2 + m2^2 = mass_sum and (m1^2 - m2^2)/(m1^2 + m2^2) = ratio,
/// choosing mu^2 so that the model has the requested eta. Requires 0 < ratio < 1.
ModelParams params_from_eta(double eta, double ratio = 0.5, double mass_sum = 1.0, double p = 0.0);

/// [[m1^2, mu^2], [-mu^2, m2^2]]
Mat2 mass_matrix(const ModelParams& params);
/// [[m1^2, mu^2], [mu^2, m2^2]], the Hermitian comparison model.
Mat2 hermitian_mass_matrix(const ModelParams& params);

enum class Branch { plus, minus };

/// Squared-mass eigenvalues and the matching angular frequencies. Exists for
/// eta <= 1, including the exceptional point.
struct MassSpectrum {
    double eta{};
    double m_plus_sq{};
    double m_minus_sq{};
    double omega_plus{};
    double omega_minus{};

    double omega(Branch b) const noexcept { return b == Branch::plus ? omega_plus : omega_minus; }
    /// omega_plus - omega_minus
    double delta_omega() const noexcept { return omega_plus - omega_minus; }
};

/// Throws DomainError(BrokenPTPhase) for eta > 1. At the exceptional point the
/// two eigenvalues are returned equal to (m1^2 + m2^2)/2 exactly.
MassSpectrum mass_spectrum(const ModelParams& params);

/// Full eigensystem in the unbroken phase 0 <= eta < 1.
///
/// e_plus pairs with the larger root m_plus_sq. The eigenvector with positive
/// PT norm (the one that reduces to flavour 1 as mu^2 -> 0) sits on the plus
/// branch when m1^2 > m2^2 and on the minus branch otherwise.
struct EigenSystem {
    ModelParams params;
    MassSpectrum spectrum;
    double eta{};         ///< >= 0
    double signed_eta{};  ///< sign of m1^2 - m2^2
    double theta{};       ///< artanh(signed_eta)/2
    double cosh_theta{};
    double sinh_theta{};
    double n_factor{};    ///< normalisation N > 0; +inf in the Hermitian limit eta = 0
    Vec2 e_plus{};
    Vec2 e_minus{};
    Branch positive_branch{Branch::plus};

    double m_plus_sq() const noexcept { return spectrum.m_plus_sq; }
    double m_minus_sq() const noexcept { return spectrum.m_minus_sq; }
    double omega_plus() const noexcept { return spectrum.omega_plus; }
    double omega_minus() const noexcept { return spectrum.omega_minus; }
    double delta_omega() const noexcept { return spectrum.delta_omega(); }
    const Vec2& eigenvector(Branch b) const noexcept { return b == Branch::plus ? e_plus : e_minus; }
    Branch negative_branch() const noexcept { return positive_branch == Branch::plus ? Branch::minus : Branch::plus; }
    /// omega on the flavour-1 branch minus omega on the flavour-2 branch; equals
    /// delta_omega() when m1^2 > m2^2 and -delta_omega() otherwise.
    double flavour_delta_omega() const noexcept {
        return spectrum.omega(positive_branch) - spectrum.omega(negative_branch());
    }
};

/// Throws ExceptionalPointError at eta == 1 (carrying the merged eigenvalue)
/// and DomainError(BrokenPTPhase) for eta > 1.
EigenSystem eigensystem(const ModelParams& params);

/// diag(1, -1)
Mat2 parity_matrix();

/// (1/sqrt(1-eta^2)) [[1, -eta], [eta, -1]]. Accepts |eta| < 1; a negative
/// value gives the metric of the m1^2 < m2^2 orientation.
Mat2 cprime_matrix(double eta);

/// Classifies eta: throws ExceptionalPointError within tolerance of 1,
/// DomainError(BrokenPTPhase) beyond it.
void require_unbroken(double eta, double merged_mass_sq = 0.0);

}  // namespace ptosc

namespace ptosc {

struct EigenvaluePair {
    double plus{};
    double minus{};
};

/// Eigenvalues of the Hermitian comparison matrix,
/// (m1^2+m2^2)/2 +- sqrt((m1^2-m2^2)^2 + 4 mu^4)/2. Real for every eta; the
/// lower one turns negative for large mixing.
EigenvaluePair hermitian_mass_eigenvalues(const ModelParams& params);

}  // namespace ptosc
