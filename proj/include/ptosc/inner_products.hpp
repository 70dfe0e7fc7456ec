#pragma once

#include "ptosc/linalg.hpp"

namespace ptosc {

enum class Basis { flavour, mass };

enum class Conjugation { dirac, pt, cpt, tilde };

/// Column state |v>. The basis tag is descriptive only.
struct StateVector {
    Vec2 components{};
    Basis basis{Basis::flavour};
};

/// Row state <u|, already conjugated. The tag records which conjugation
/// produced it; arithmetic never looks at it.
struct CoStateVector {
    Vec2 components{};
    Conjugation conjugation{Conjugation::dirac};
};

/// v^dagger
CoStateVector dirac_dagger(const StateVector& v);
/// v^dagger P
CoStateVector pt_conjugate(const StateVector& v);
/// v^dagger C' P. Throws like cprime_matrix() for |eta| >= 1.
CoStateVector cpt_conjugate(double eta, const StateVector& v);

/// <bra|ket>
Complex inner(const CoStateVector& bra, const StateVector& ket);

/// |ket><bra|
Mat2 outer(const StateVector& ket, const CoStateVector& bra);

inline Complex dirac_inner(const StateVector& u, const StateVector& v) { return inner(dirac_dagger(u), v); }
inline Complex pt_inner(const StateVector& u, const StateVector& v) { return inner(pt_conjugate(u), v); }
inline Complex cpt_inner(double eta, const StateVector& u, const StateVector& v) {
    return inner(cpt_conjugate(eta, u), v);
}

}  // namespace ptosc
