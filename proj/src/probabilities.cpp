#include "ptosc/probabilities.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ptosc/errors.hpp"

namespace ptosc {

namespace {

double sin_sq(double x) {
    const double s = std::sin(x);
    return s * s;
}

Mat2 mixed_basis_outer(Flavour i, double t, const EigenSystem& es) {
    return outer(mixed_basis_ket(i, t, es).ket(), mixed_basis_bra(i, t, es).bra());
}

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::trace: return "trace";
        case Method::hermitian: return "hermitian";
        case Method::naive_continuation: return "naive_continuation";
    }
    return "unknown";
}

DensityOperator density_operator(Flavour i, double t0, const EigenSystem& es) {
    return {i, t0, mixed_basis_outer(i, t0, es)};
}

ProjectionOperator projection_operator(Flavour j, double t, const EigenSystem& es) {
    return {j, t, mixed_basis_outer(j, t, es)};
}

ProbabilityRecord probability_trace(const DensityOperator& rho, const ProjectionOperator& pi) {
    const Complex tr = (rho.matrix * pi.matrix).trace();
    if (std::abs(tr.imag()) > kNonRealTraceTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "tr(rho pi) = " << tr << " at t0=" << rho.anchor_time << ", t=" << pi.anchor_time;
        throw DomainError(ErrorKind::NonRealTrace, os.str());
    }
    return {rho.flavour, pi.flavour, rho.anchor_time, pi.anchor_time, tr.real(), Method::trace};
}

ProbabilityRecord probability_trace(Flavour i, Flavour j, double t0, double t, const EigenSystem& es) {
    return probability_trace(density_operator(i, t0, es), projection_operator(j, t, es));
}

double transition_closed_form(double eta, double phase) {
    if (std::abs(eta) > 1.0 + kExceptionalPointTolerance) require_unbroken(eta);
    return eta * eta * sin_sq(phase);
}

double transition_hermitian(double eta, double phase) {
    const double eta_sq = eta * eta;
    return eta_sq / (1.0 + eta_sq) * sin_sq(phase);
}

double transition_naive_continuation(double eta, double phase) {
    require_unbroken(eta);
    const double eta_sq = eta * eta;
    return -eta_sq / ((1.0 - eta) * (1.0 + eta)) * sin_sq(phase);
}

ProbabilityRecord probability_closed_form(Flavour i, Flavour j, double dt, const MassSpectrum& spectrum) {
    const double phase = 0.5 * spectrum.delta_omega() * dt;
    return {i, j, 0.0, dt, select(i, j, transition_closed_form(spectrum.eta, phase)), Method::closed_form};
}

ProbabilityRecord probability_hermitian(Flavour i, Flavour j, double dt, const ModelParams& params) {
    const EigenvaluePair m = hermitian_mass_eigenvalues(params);
    const double p_sq = params.p() * params.p();
    if (m.minus <= 0.0) {
        std::ostringstream os;
        os.precision(17);
        os << "lower Hermitian squared mass " << m.minus << " <= 0";
        throw DomainError(ErrorKind::TachyonicMass, os.str());
    }
    const double delta_omega = std::sqrt(p_sq + m.plus) - std::sqrt(p_sq + m.minus);
    const double phase = 0.5 * delta_omega * dt;
    return {i, j, 0.0, dt, select(i, j, transition_hermitian(params.eta(), phase)), Method::hermitian};
}

ProbabilityRecord probability_naive_continuation(Flavour i, Flavour j, double dt, const EigenSystem& es) {
    const double phase = 0.5 * es.delta_omega() * dt;
    return {i, j, 0.0, dt, select(i, j, transition_naive_continuation(es.eta, phase)),
            Method::naive_continuation};
}

double dirac_norm(Flavour i, double t, const EigenSystem& es) {
    return inner(dirac_bra(i, t, es).bra(), flavour_ket(i, t, es).ket()).real();
}

double dirac_norm_closed_form(double t, const EigenSystem& es) {
    const double eta_sq = es.eta * es.eta;
    return (1.0 - eta_sq * std::cos(es.delta_omega() * t)) / ((1.0 - es.eta) * (1.0 + es.eta));
}

Complex dirac_overlap(Flavour bra, Flavour ket, double t, const EigenSystem& es) {
    return inner(dirac_bra(bra, t, es).bra(), flavour_ket(ket, t, es).ket());
}

Complex dirac_overlap_closed_form(double t, const EigenSystem& es) {
    const double eta = es.signed_eta;
    const double one_minus_eta_sq = (1.0 - es.eta) * (1.0 + es.eta);
    const double x = es.flavour_delta_omega() * t;
    // Measured as omega(flavour 1 branch) - omega(flavour 2 branch) the sine term
    // enters with a plus sign; the minus-sign form belongs to the opposite orientation.
    return (eta / one_minus_eta_sq) * Complex(1.0 - std::cos(x), std::sqrt(one_minus_eta_sq) * std::sin(x));
}

double dirac_norm_ratio(Flavour i, double t, double t0, const EigenSystem& es) {
    return dirac_norm(i, t, es) / dirac_norm(i, t0, es);
}

double cardioid_r(double phase, double eta) {
    require_unbroken(eta);
    const double eta_sq = eta * eta;
    return (1.0 - eta_sq * std::cos(phase)) / ((1.0 - eta) * (1.0 + eta));
}

double cardioid_ratio(double phase, double eta) { return cardioid_r(phase, eta) / cardioid_r(std::numbers::pi, eta); }

double hermitian_tachyon_eta(double ratio) { return std::sqrt(1.0 / (ratio * ratio) - 1.0); }

}  // namespace ptosc
