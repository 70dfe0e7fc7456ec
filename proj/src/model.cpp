#include "ptosc/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ptosc/errors.hpp"

namespace ptosc {

namespace {

std::string describe(double m1_sq, double m2_sq, double mu_sq, double p) {
    std::ostringstream os;
    os.precision(17);
    os << "(m1_sq=" << m1_sq << ", m2_sq=" << m2_sq << ", mu_sq=" << mu_sq << ", p=" << p << ")";
    return os.str();
}

double mean_mass_sq(const ModelParams& params) { return 0.5 * (params.m1_sq() + params.m2_sq()); }

}  // namespace

double ModelParams::eta() const noexcept { return 2.0 * mu_sq_ / std::abs(m1_sq_ - m2_sq_); }

double ModelParams::signed_eta() const noexcept { return 2.0 * mu_sq_ / (m1_sq_ - m2_sq_); }

ModelParams make_params(double m1_sq, double m2_sq, double mu_sq, double p) {
    if (!std::isfinite(m1_sq) || !std::isfinite(m2_sq) || !std::isfinite(mu_sq) || !std::isfinite(p)) {
        throw DomainError(ErrorKind::NonFinite, "all parameters must be finite " + describe(m1_sq, m2_sq, mu_sq, p));
    }
    if (m1_sq <= 0.0 || m2_sq <= 0.0) {
        throw DomainError(ErrorKind::NonPositiveMass,
                          "squared masses must be positive " + describe(m1_sq, m2_sq, mu_sq, p));
    }
    if (m1_sq == m2_sq) {
        throw DomainError(ErrorKind::DegenerateDiagonal,
                          "m1_sq == m2_sq leaves eta undefined " + describe(m1_sq, m2_sq, mu_sq, p));
    }
    if (mu_sq < 0.0) {
        throw DomainError(ErrorKind::NegativeMixing, "mu_sq must be >= 0 " + describe(m1_sq, m2_sq, mu_sq, p));
    }
    if (p < 0.0) {
        throw DomainError(ErrorKind::NegativeMomentum, "p must be >= 0 " + describe(m1_sq, m2_sq, mu_sq, p));
    }
    return ModelParams(m1_sq, m2_sq, mu_sq, p);
}

ModelParams params_from_eta(double eta, double ratio, double mass_sum, double p) {
    if (!(ratio > 0.0 && ratio < 1.0)) {
        throw DomainError(ErrorKind::NonPositiveMass, "mass splitting ratio must lie in (0, 1)");
    }
    if (!(eta >= 0.0)) {
        throw DomainError(ErrorKind::NegativeMixing, "eta must be >= 0");
    }
    const double m1_sq = 0.5 * mass_sum * (1.0 + ratio);
    const double m2_sq = 0.5 * mass_sum * (1.0 - ratio);
    return make_params(m1_sq, m2_sq, 0.5 * eta * (m1_sq - m2_sq), p);
}

Mat2 mass_matrix(const ModelParams& params) {
    return Mat2{{params.m1_sq(), params.mu_sq(), -params.mu_sq(), params.m2_sq()}};
}

Mat2 hermitian_mass_matrix(const ModelParams& params) {
    return Mat2{{params.m1_sq(), params.mu_sq(), params.mu_sq(), params.m2_sq()}};
}

void require_unbroken(double eta, double merged_mass_sq) {
    const double a = std::abs(eta);
    if (a > 1.0 + kExceptionalPointTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "eta = " << a << " > 1: complex eigenvalues";
        throw DomainError(ErrorKind::BrokenPTPhase, os.str());
    }
    if (a >= 1.0 - kExceptionalPointTolerance) {
        throw ExceptionalPointError(merged_mass_sq, "eta = 1: eigenvalues merge and eigenvectors coalesce");
    }
}

MassSpectrum mass_spectrum(const ModelParams& params) {
    const double eta = params.eta();
    const double mean = mean_mass_sq(params);
    MassSpectrum s;
    s.eta = eta;
    try {
        require_unbroken(eta, mean);
        const double gap = std::abs(params.m1_sq() - params.m2_sq());
        const double twice_mu = 2.0 * params.mu_sq();
        // (|d| - 2mu^2)(|d| + 2mu^2) avoids cancellation in d^2 - 4 mu^4.
        const double half_split = 0.5 * std::sqrt((gap - twice_mu) * (gap + twice_mu));
        s.m_plus_sq = mean + half_split;
        s.m_minus_sq = mean - half_split;
        if (params.mu_sq() == 0.0) {
            // diagonal: hand back the entries themselves rather than mean +- gap/2
            s.m_plus_sq = std::max(params.m1_sq(), params.m2_sq());
            s.m_minus_sq = std::min(params.m1_sq(), params.m2_sq());
        }
    } catch (const ExceptionalPointError&) {
        s.m_plus_sq = mean;
        s.m_minus_sq = mean;
    }
    const double p_sq = params.p() * params.p();
    s.omega_plus = std::sqrt(p_sq + s.m_plus_sq);
    s.omega_minus = std::sqrt(p_sq + s.m_minus_sq);
    return s;
}

EigenSystem eigensystem(const ModelParams& params) {
    require_unbroken(params.eta(), mean_mass_sq(params));

    EigenSystem es{params, mass_spectrum(params)};
    es.eta = params.eta();
    es.signed_eta = params.signed_eta();
    es.theta = 0.5 * std::atanh(es.signed_eta);

    const double s = std::sqrt((1.0 - es.eta) * (1.0 + es.eta));
    es.cosh_theta = std::sqrt(0.5 * (1.0 + 1.0 / s));
    es.sinh_theta = (es.signed_eta / s) / std::sqrt(2.0 * (1.0 + 1.0 / s));

    // N*eta and N*(-1 + sqrt(1-eta^2)) rewritten so the eta -> 0 limit is finite.
    const double a = std::sqrt((1.0 + s) / (2.0 * s));
    const double b = -es.signed_eta / std::sqrt(2.0 * s * (1.0 + s));
    const Vec2 positive{{a, b}};
    const Vec2 negative{{b, a}};
    es.positive_branch = params.m1_sq() > params.m2_sq() ? Branch::plus : Branch::minus;
    es.e_plus = es.positive_branch == Branch::plus ? positive : negative;
    es.e_minus = es.positive_branch == Branch::plus ? negative : positive;
    es.n_factor = es.eta > 0.0 ? a / es.eta : std::numeric_limits<double>::infinity();
    return es;
}

Mat2 parity_matrix() { return Mat2::diag(1.0, -1.0); }

Mat2 cprime_matrix(double eta) {
    require_unbroken(eta);
    const double inv_s = 1.0 / std::sqrt((1.0 - eta) * (1.0 + eta));
    return Mat2{{inv_s, -eta * inv_s, eta * inv_s, -inv_s}};
}

}  // namespace ptosc

namespace ptosc {

EigenvaluePair hermitian_mass_eigenvalues(const ModelParams& params) {
    const double mean = 0.5 * (params.m1_sq() + params.m2_sq());
    const double half_split = 0.5 * std::hypot(params.m1_sq() - params.m2_sq(), 2.0 * params.mu_sq());
    return {mean + half_split, mean - half_split};
}

}  // namespace ptosc
