#include "ptosc/states.hpp"

#include <cmath>
#include <stdexcept>

namespace ptosc {

namespace {

double scale(Normalisation n, const EigenSystem& es) {
    return n == Normalisation::raw ? 1.0 : 1.0 / std::sqrt(std::cosh(2.0 * es.theta));
}

Branch own_branch(Flavour i, const EigenSystem& es) {
    return i == Flavour::one ? es.positive_branch : es.negative_branch();
}
Branch partner_branch(Flavour i, const EigenSystem& es) { return own_branch(other(i), es); }

// cosh(theta) xi_a(t) e_a + sign * sinh(theta) xi_b(t) e_b, with the
// eigenvectors optionally replaced by their section conjugates.
Vec2 expand(Flavour i, double t, const EigenSystem& es, double sinh_sign, bool conjugate_side) {
    const Branch a = own_branch(i, es);
    const Branch b = partner_branch(i, es);
    Complex xa = xi(a, t, es);
    Complex xb = xi(b, t, es);
    Vec2 ea = es.eigenvector(a);
    Vec2 eb = es.eigenvector(b);
    if (conjugate_side) {
        xa = std::conj(xa);
        xb = std::conj(xb);
        ea = cpt_conjugate(es.signed_eta, StateVector{ea, Basis::mass}).components;
        eb = cpt_conjugate(es.signed_eta, StateVector{eb, Basis::mass}).components;
    }
    return (es.cosh_theta * xa) * ea + (sinh_sign * es.sinh_theta * xb) * eb;
}

}  // namespace

StateVector FlavourState::ket() const {
    if (is_bra()) throw std::logic_error("FlavourState holds a bra, not a ket");
    return {components, Basis::flavour};
}

CoStateVector FlavourState::bra() const {
    if (!is_bra()) throw std::logic_error("FlavourState holds a ket, not a bra");
    Conjugation c = Conjugation::dirac;
    switch (kind) {
        case StateKind::tilde_bra: c = Conjugation::tilde; break;
        case StateKind::cpt_bra: c = Conjugation::cpt; break;
        case StateKind::pt_bra: c = Conjugation::pt; break;
        default: break;
    }
    return {components, c};
}

Complex xi(Branch branch, double t, const MassSpectrum& spectrum) {
    return std::polar(1.0, spectrum.omega(branch) * t);
}

FlavourState flavour_ket(Flavour i, double t, const EigenSystem& es, Normalisation n) {
    return {i, StateKind::ket, n, t, scale(n, es) * expand(i, t, es, +1.0, false)};
}

FlavourState tilde_bra(Flavour i, double t, const EigenSystem& es) {
    return {i, StateKind::tilde_bra, Normalisation::raw, t, expand(i, t, es, -1.0, true)};
}

FlavourState cpt_bra(Flavour i, double t, const EigenSystem& es, Normalisation n) {
    return {i, StateKind::cpt_bra, n, t, scale(n, es) * expand(i, t, es, +1.0, true)};
}

FlavourState cprime_ket(Flavour i, double t, const EigenSystem& es, Normalisation n) {
    const Vec2 ket = flavour_ket(i, t, es, n).components;
    return {i, StateKind::cprime_ket, n, t, cprime_matrix(es.signed_eta).transpose() * ket};
}

FlavourState pt_bra(Flavour i, double t, const EigenSystem& es, Normalisation n) {
    const StateVector ket = flavour_ket(i, t, es, n).ket();
    return {i, StateKind::pt_bra, n, t, pt_conjugate(ket).components};
}

FlavourState dirac_bra(Flavour i, double t, const EigenSystem& es) {
    const StateVector ket = flavour_ket(i, t, es).ket();
    return {i, StateKind::dirac_bra, Normalisation::raw, t, dirac_dagger(ket).components};
}

FlavourState mixed_basis_ket(Flavour i, double t, const EigenSystem& es) {
    return i == Flavour::one ? flavour_ket(i, t, es, Normalisation::mixed_basis)
                             : cprime_ket(i, t, es, Normalisation::mixed_basis);
}

FlavourState mixed_basis_bra(Flavour i, double t, const EigenSystem& es) {
    return i == Flavour::one ? cpt_bra(i, t, es, Normalisation::mixed_basis)
                             : pt_bra(i, t, es, Normalisation::mixed_basis);
}

}  // namespace ptosc
