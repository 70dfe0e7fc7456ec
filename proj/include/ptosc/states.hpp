#pragma once

#include "ptosc/inner_products.hpp"
#include "ptosc/model.hpp"

namespace ptosc {

enum class Flavour { one = 1, two = 2 };

inline Flavour other(Flavour f) { return f == Flavour::one ? Flavour::two : Flavour::one; }

enum class StateKind { ket, tilde_bra, cpt_bra, pt_bra, cprime_ket, dirac_bra };

/// raw: the expansions with unit cosh/sinh weights. mixed_basis: scaled by
/// sqrt(sech 2theta), which makes the mixed C'PT/PT flavour basis orthonormal.
enum class Normalisation { raw, mixed_basis };

/// A flavour state evaluated at one time.
struct FlavourState {
    Flavour index{Flavour::one};
    StateKind kind{StateKind::ket};
    Normalisation normalisation{Normalisation::raw};
    double time{};
    Vec2 components{};

    bool is_bra() const noexcept { return kind != StateKind::ket && kind != StateKind::cprime_ket; }

    /// Throws std::logic_error when called on a bra.
    StateVector ket() const;
    /// Throws std::logic_error when called on a ket.
    CoStateVector bra() const;
};

/// Mode amplitude exp(i omega_b t) of the mass eigenstate b.
Complex xi(Branch branch, double t, const MassSpectrum& spectrum);
inline Complex xi(Branch branch, double t, const EigenSystem& es) { return xi(branch, t, es.spectrum); }

/// |phi_1(t)> = cosh(theta) xi_+ e_+ + sinh(theta) xi_- e_-, and 1 <-> 2, + <-> -.
FlavourState flavour_ket(Flavour i, double t, const EigenSystem& es, Normalisation n = Normalisation::raw);

/// Flavour-conjugate bra: the sinh term enters with a minus sign, giving
/// <tilde phi_i(t)|phi_j(t)> = delta_ij.
FlavourState tilde_bra(Flavour i, double t, const EigenSystem& es);

/// C'PT conjugate of the flavour ket, built from the section-conjugated
/// eigenvectors. Not orthogonal: overlaps are cosh 2theta and sinh 2theta.
FlavourState cpt_bra(Flavour i, double t, const EigenSystem& es, Normalisation n = Normalisation::raw);

/// C'^T |phi_i(t)>
FlavourState cprime_ket(Flavour i, double t, const EigenSystem& es, Normalisation n = Normalisation::raw);

/// PT conjugate of the flavour ket, <phi_i(t)| P.
FlavourState pt_bra(Flavour i, double t, const EigenSystem& es, Normalisation n = Normalisation::raw);

/// Hermitian conjugate of the flavour ket.
FlavourState dirac_bra(Flavour i, double t, const EigenSystem& es);

/// Orthonormal mixed basis: kets {|phi_1>, |phi_2^C'>}, bras {<phi_1^C'PT|, <phi_2^PT|}.
FlavourState mixed_basis_ket(Flavour i, double t, const EigenSystem& es);
FlavourState mixed_basis_bra(Flavour i, double t, const EigenSystem& es);

}  // namespace ptosc
