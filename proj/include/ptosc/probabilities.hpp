#pragma once

#include <string_view>

#include "ptosc/model.hpp"
#include "ptosc/states.hpp"

namespace ptosc {

enum class Method { closed_form, trace, hermitian, naive_continuation };

std::string_view to_string(Method m);

/// One evaluated P(i -> j). Closed-form style methods record t0 = 0, t = dt.
struct ProbabilityRecord {
    Flavour from{Flavour::one};
    Flavour to{Flavour::one};
    double t0{};
    double t{};
    double value{};
    Method method{Method::closed_form};
};

struct DensityTag {};
struct ProjectionTag {};

/// |ket(t)><bra(t)| from the normalised mixed basis; trace 1 and idempotent.
template <class Tag>
struct AnchoredOperator {
    Flavour flavour{Flavour::one};
    double anchor_time{};
    Mat2 matrix{};
};

using DensityOperator = AnchoredOperator<DensityTag>;
using ProjectionOperator = AnchoredOperator<ProjectionTag>;

/// Imaginary parts of a trace larger than this indicate a construction bug.
inline constexpr double kNonRealTraceTolerance = 1e-9;

/// rho_1 = |phi_1><phi_1^C'PT|, rho_2 = |phi_2^C'><phi_2^PT| at t0.
DensityOperator density_operator(Flavour i, double t0, const EigenSystem& es);
ProjectionOperator projection_operator(Flavour j, double t, const EigenSystem& es);

/// tr(rho_i(t0) pi_j(t)) as an explicit matrix product. Throws
/// DomainError(NonRealTrace) if the imaginary part exceeds tolerance.
ProbabilityRecord probability_trace(Flavour i, Flavour j, double t0, double t, const EigenSystem& es);
ProbabilityRecord probability_trace(const DensityOperator& rho, const ProjectionOperator& pi);

/// eta^2 sin^2(phase); finite on the whole closed interval 0 <= eta <= 1.
double transition_closed_form(double eta, double phase);
/// eta^2/(1+eta^2) sin^2(phase); any eta >= 0.
double transition_hermitian(double eta, double phase);
/// -eta^2/(1-eta^2) sin^2(phase), the mu^4 -> -mu^4 continuation of the
/// Hermitian result. Unbounded below; throws at the exceptional point.
double transition_naive_continuation(double eta, double phase);

/// Survival for i == j, transition otherwise, at phase = delta_omega * dt / 2.
ProbabilityRecord probability_closed_form(Flavour i, Flavour j, double dt, const MassSpectrum& spectrum);
inline ProbabilityRecord probability_closed_form(Flavour i, Flavour j, double dt, const EigenSystem& es) {
    return probability_closed_form(i, j, dt, es.spectrum);
}

/// Uses the Hermitian model's own frequency splitting. Throws
/// DomainError(TachyonicMass) if its lower squared mass is <= 0.
ProbabilityRecord probability_hermitian(Flavour i, Flavour j, double dt, const ModelParams& params);

ProbabilityRecord probability_naive_continuation(Flavour i, Flavour j, double dt, const EigenSystem& es);

/// Survival/transition selector shared by the phase-parameterised sweeps.
inline double select(Flavour i, Flavour j, double transition) { return i == j ? 1.0 - transition : transition; }

/// <phi_i(t)|phi_i(t)> by direct contraction of Dirac bra and ket.
double dirac_norm(Flavour i, double t, const EigenSystem& es);
/// (1 - eta^2 cos(delta_omega t)) / (1 - eta^2)
double dirac_norm_closed_form(double t, const EigenSystem& es);

/// <phi_a(t)|phi_b(t)> by direct contraction.
Complex dirac_overlap(Flavour bra, Flavour ket, double t, const EigenSystem& es);
inline Complex dirac_overlap(double t, const EigenSystem& es) { return dirac_overlap(Flavour::one, Flavour::two, t, es); }
/// (eta/(1-eta^2)) [1 - cos(dw t) + i sqrt(1-eta^2) sin(dw t)] for <phi_1|phi_2>, dw = omega_+ - omega_-.
Complex dirac_overlap_closed_form(double t, const EigenSystem& es);

/// Dirac norm at t relative to t0. Not a function of t - t0 alone.
double dirac_norm_ratio(Flavour i, double t, double t0, const EigenSystem& es);

/// r(phase) = (1 - eta^2 cos phase) / (1 - eta^2)
double cardioid_r(double phase, double eta);
/// r(phase) / r(pi)
double cardioid_ratio(double phase, double eta);

/// eta at which the lower Hermitian squared mass reaches zero for a given
/// (m1^2 - m2^2)/(m1^2 + m2^2).
double hermitian_tachyon_eta(double ratio);

}  // namespace ptosc
