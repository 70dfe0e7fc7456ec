#include "ptosc/inner_products.hpp"

#include "ptosc/model.hpp"

namespace ptosc {

CoStateVector dirac_dagger(const StateVector& v) { return {conj(v.components), Conjugation::dirac}; }

CoStateVector pt_conjugate(const StateVector& v) {
    return {conj(v.components) * parity_matrix(), Conjugation::pt};
}

CoStateVector cpt_conjugate(double eta, const StateVector& v) {
    return {conj(v.components) * (cprime_matrix(eta) * parity_matrix()), Conjugation::cpt};
}

Complex inner(const CoStateVector& bra, const StateVector& ket) { return dot(bra.components, ket.components); }

Mat2 outer(const StateVector& ket, const CoStateVector& bra) { return outer(ket.components, bra.components); }

}  // namespace ptosc
