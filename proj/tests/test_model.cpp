#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "ptosc/errors.hpp"
#include "ptosc/model.hpp"
#include "ptosc/oracle.hpp"

using namespace ptosc;
using ptosc::test::near;
using ptosc::test::uniform;

namespace {

// Independent references for (m1^2, m2^2, mu^2) = (2, 1, 0.3):
//   tr M^2 = 3, det M^2 = 2 + 0.09 = 2.09, roots (3 +- sqrt(9 - 8.36))/2 = 1.9, 1.1
//   eta = 0.6, sqrt(1 - eta^2) = 0.8, N = [2(0.36 - 1 + 0.8)]^(-1/2) = 1/sqrt(0.32)
//   theta = artanh(0.6)/2 = ln(2)/2, cosh(theta) = 3/(2 sqrt 2), sinh(theta) = 1/(2 sqrt 2)
constexpr double kN = 1.7677669529663687;
constexpr double kTheta = 0.34657359027997264;
constexpr double kCoshTheta = 1.0606601717798212;
constexpr double kSinhTheta = 0.35355339059327373;

ModelParams reference() { return make_params(2.0, 1.0, 0.3, 0.0); }

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const DomainError& e) {
        return e.kind();
    }
    FAIL("expected DomainError");
    return ErrorKind::NonFinite;
}

}  // namespace

TEST_CASE("make_params validates inputs") {
    CHECK(reference().eta() == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(make_params(2.0, 1.0, 0.0, 0.0).eta() == 0.0);

    CHECK(kind_of([] { make_params(1.0, 1.0, 0.1, 0.0); }) == ErrorKind::DegenerateDiagonal);
    CHECK(kind_of([] { make_params(0.0, 1.0, 0.1, 0.0); }) == ErrorKind::NonPositiveMass);
    CHECK(kind_of([] { make_params(2.0, -1.0, 0.1, 0.0); }) == ErrorKind::NonPositiveMass);
    CHECK(kind_of([] { make_params(2.0, 1.0, -0.1, 0.0); }) == ErrorKind::NegativeMixing);
    CHECK(kind_of([] { make_params(2.0, 1.0, 0.1, -1.0); }) == ErrorKind::NegativeMomentum);
    CHECK(kind_of([] { make_params(NAN, 1.0, 0.1, 0.0); }) == ErrorKind::NonFinite);
    CHECK(kind_of([] { make_params(2.0, INFINITY, 0.1, 0.0); }) == ErrorKind::NonFinite);
}

TEST_CASE("params_from_eta reproduces eta and the mass ratio") {
    const ModelParams p = params_from_eta(0.6, 0.5, 3.0);
    CHECK(p.m1_sq() + p.m2_sq() == doctest::Approx(3.0));
    CHECK((p.m1_sq() - p.m2_sq()) / (p.m1_sq() + p.m2_sq()) == doctest::Approx(0.5));
    CHECK(p.eta() == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("eigensystem at the reference point") {
    const EigenSystem es = eigensystem(reference());
    CHECK(es.m_plus_sq() == doctest::Approx(1.9).epsilon(1e-14));
    CHECK(es.m_minus_sq() == doctest::Approx(1.1).epsilon(1e-14));
    CHECK(es.eta == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(es.n_factor == doctest::Approx(kN).epsilon(1e-14));
    CHECK(es.theta == doctest::Approx(kTheta).epsilon(1e-14));
    CHECK(es.cosh_theta == doctest::Approx(kCoshTheta).epsilon(1e-14));
    CHECK(es.sinh_theta == doctest::Approx(kSinhTheta).epsilon(1e-14));
    CHECK(es.omega_plus() == doctest::Approx(std::sqrt(1.9)).epsilon(1e-14));
    CHECK(es.omega_minus() == doctest::Approx(std::sqrt(1.1)).epsilon(1e-14));

    // N [eta, -1 + sqrt(1-eta^2)] with the values above.
    CHECK(near(es.e_plus, Vec2{{kN * 0.6, kN * -0.2}}, 1e-14));
    CHECK(near(es.e_minus, Vec2{{kN * -0.2, kN * 0.6}}, 1e-14));

    // Cross-check against the characteristic-polynomial oracle.
    const auto ne = oracle::numeric_eigensystem(mass_matrix(reference()));
    CHECK(ne.values[0].real() == doctest::Approx(1.9).epsilon(1e-14));
    CHECK(ne.values[1].real() == doctest::Approx(1.1).epsilon(1e-14));
}

TEST_CASE("Hermitian diagonal limit mu^2 = 0") {
    const EigenSystem es = eigensystem(make_params(2.0, 1.0, 0.0, 0.0));
    CHECK(es.m_plus_sq() == 2.0);
    CHECK(es.m_minus_sq() == 1.0);
    CHECK(near(es.e_plus, Vec2{{1.0, 0.0}}, 0.0));
    CHECK(near(es.e_minus, Vec2{{0.0, 1.0}}, 0.0));
    CHECK(std::isinf(es.n_factor));
    CHECK(es.theta == 0.0);
}

TEST_CASE("normalised eigenvectors stay finite as eta -> 0") {
    const EigenSystem es = eigensystem(make_params(2.0, 1.0, 0.5e-8, 0.0));
    CHECK(es.eta == doctest::Approx(1e-8));
    CHECK(near(es.e_plus, Vec2{{1.0, 0.0}}, 1e-6));
    CHECK(near(es.e_minus, Vec2{{0.0, 1.0}}, 1e-6));
}

TEST_CASE("exceptional point and broken phase") {
    const ModelParams ep = make_params(2.0, 1.0, 0.5, 0.0);
    CHECK(ep.eta() == 1.0);
    try {
        eigensystem(ep);
        FAIL("expected ExceptionalPointError");
    } catch (const ExceptionalPointError& e) {
        CHECK(e.kind() == ErrorKind::ExceptionalPoint);
        CHECK(e.merged_mass_sq() == 1.5);
    }
    const MassSpectrum s = mass_spectrum(ep);
    CHECK(s.m_plus_sq == 1.5);
    CHECK(s.m_minus_sq == 1.5);
    CHECK(s.delta_omega() == 0.0);

    // Inside the tolerance band the masses merge exactly as well.
    const MassSpectrum near_ep = mass_spectrum(make_params(2.0, 1.0, 0.5 * (1.0 - 1e-13), 0.0));
    CHECK(near_ep.m_plus_sq == near_ep.m_minus_sq);

    const ModelParams broken = make_params(2.0, 1.0, 0.6, 0.0);
    CHECK(kind_of([&] { eigensystem(broken); }) == ErrorKind::BrokenPTPhase);
    CHECK(kind_of([&] { mass_spectrum(broken); }) == ErrorKind::BrokenPTPhase);
    CHECK(kind_of([] { cprime_matrix(1.0); }) == ErrorKind::ExceptionalPoint);
}

TEST_CASE("parity matrix") {
    const Mat2 p = parity_matrix();
    CHECK(near(p, Mat2::diag(1.0, -1.0), 0.0));
    CHECK(near(p * p, Mat2::identity(), 0.0));
    const Mat2 m = mass_matrix(reference());
    CHECK(near(p * m * p, m.adjoint(), 1e-14));
}

TEST_CASE("C' matrix") {
    const Mat2 c = cprime_matrix(0.6);
    CHECK(near(c, Mat2{{1.25, -0.75, 0.75, -1.25}}, 1e-15));
    CHECK(near(c * c, Mat2::identity(), 1e-14));
    CHECK(near(cprime_matrix(0.0), parity_matrix(), 0.0));

    const EigenSystem es = eigensystem(reference());
    const Mat2 ct = c.transpose();
    CHECK(near(ct * es.e_plus, es.e_plus, 1e-14));
    CHECK(near(ct * es.e_minus, -1.0 * es.e_minus, 1e-14));
    // C' itself does not map e_+ onto a multiple of itself.
    const Vec2 ce = c * es.e_plus;
    CHECK(std::abs(ce[0] * es.e_plus[1] - ce[1] * es.e_plus[0]) > 0.1);

    const Mat2 cp = c * parity_matrix();
    CHECK(cp(0, 1) == cp(1, 0));
}

TEST_CASE("properties over random parameter draws") {
    for (int k = 0; k < 1000; ++k) {
        const double m1 = uniform(0.1, 10.0);
        const double m2 = uniform(0.1, 10.0);
        const double eta = uniform(0.0, 0.99);
        const ModelParams p = make_params(m1, m2, 0.5 * eta * std::abs(m1 - m2), uniform(0.0, 2.0));
        const EigenSystem es = eigensystem(p);
        const Mat2 m = mass_matrix(p);
        const double scale = max_abs(m);

        CHECK(std::abs(es.m_plus_sq() + es.m_minus_sq() - (m1 + m2)) <= 1e-12 * (m1 + m2));
        const double det = m1 * m2 + p.mu_sq() * p.mu_sq();
        CHECK(std::abs(es.m_plus_sq() * es.m_minus_sq() - det) <= 1e-12 * det);

        const auto ne = oracle::numeric_eigensystem(m);
        const double hi = std::max(es.m_plus_sq(), es.m_minus_sq());
        const double lo = std::min(es.m_plus_sq(), es.m_minus_sq());
        CHECK(std::abs(ne.values[0].real() - hi) <= 1e-10 * scale);
        CHECK(std::abs(ne.values[1].real() - lo) <= 1e-10 * scale);

        CHECK(norm(m * es.e_plus - es.m_plus_sq() * es.e_plus) < 1e-10 * scale);
        CHECK(norm(m * es.e_minus - es.m_minus_sq() * es.e_minus) < 1e-10 * scale);

        const Mat2 par = parity_matrix();
        CHECK(near(par * m * par, m.adjoint(), 1e-14 * scale));
        const Mat2 ct = cprime_matrix(es.signed_eta).transpose();
        CHECK(near(ct * m * ct, m, 1e-10 * scale));
        const Mat2 cp = cprime_matrix(es.signed_eta) * par;
        CHECK(cp(0, 1) == cp(1, 0));

        CHECK(std::abs(std::tanh(2.0 * es.theta) - es.signed_eta) <= 1e-12);
        CHECK(std::abs(es.cosh_theta - std::cosh(es.theta)) <= 1e-12);
        CHECK(std::abs(es.sinh_theta - std::sinh(es.theta)) <= 1e-12);
        CHECK(es.omega_plus() == doctest::Approx(std::sqrt(p.p() * p.p() + es.m_plus_sq())));
    }
}

TEST_CASE("plus is the larger root in either orientation") {
    const EigenSystem fwd = eigensystem(make_params(2.0, 1.0, 0.3, 0.0));
    CHECK(fwd.m_plus_sq() >= fwd.m_minus_sq());
    CHECK(fwd.positive_branch == Branch::plus);
    CHECK(fwd.flavour_delta_omega() == fwd.delta_omega());

    const EigenSystem rev = eigensystem(make_params(1.0, 2.0, 0.3, 0.0));
    CHECK(rev.eta == doctest::Approx(0.6));
    CHECK(rev.signed_eta == doctest::Approx(-0.6));
    CHECK(rev.m_plus_sq() == doctest::Approx(1.9).epsilon(1e-14));
    CHECK(rev.m_minus_sq() == doctest::Approx(1.1).epsilon(1e-14));
    CHECK(rev.positive_branch == Branch::minus);
    CHECK(rev.flavour_delta_omega() == -rev.delta_omega());
    const Mat2 m = mass_matrix(rev.params);
    CHECK(norm(m * rev.e_plus - rev.m_plus_sq() * rev.e_plus) < 1e-14);
    CHECK(norm(m * rev.e_minus - rev.m_minus_sq() * rev.e_minus) < 1e-14);
    // The positive-PT-norm vector still starts out as flavour 1.
    const Vec2& pos = rev.eigenvector(rev.positive_branch);
    CHECK((pos[0] * pos[0] - pos[1] * pos[1]).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(pos[0]) > std::abs(pos[1]));
}

TEST_CASE("Hermitian diagonal limit orders the roots as max/min") {
    for (const auto& [a, b] : {std::pair{2.0, 1.0}, std::pair{1.0, 2.0}, std::pair{0.3, 5.0}}) {
        const MassSpectrum s = mass_spectrum(make_params(a, b, 0.0, 0.0));
        CHECK(s.m_plus_sq == std::max(a, b));
        CHECK(s.m_minus_sq == std::min(a, b));
        const EigenSystem es = eigensystem(make_params(a, b, 0.0, 0.0));
        const Vec2 heavy = a > b ? Vec2{{1.0, 0.0}} : Vec2{{0.0, 1.0}};
        CHECK(near(es.e_plus, heavy, 0.0));
    }
}

TEST_CASE("Hermitian comparison eigenvalues") {
    const EigenvaluePair h = hermitian_mass_eigenvalues(reference());
    // (3 +- sqrt(1 + 0.36))/2
    CHECK(h.plus == doctest::Approx(0.5 * (3.0 + std::sqrt(1.36))));
    CHECK(h.minus == doctest::Approx(0.5 * (3.0 - std::sqrt(1.36))));
    const auto ne = oracle::numeric_eigensystem(hermitian_mass_matrix(reference()));
    CHECK(ne.values[0].real() == doctest::Approx(h.plus));
    CHECK(ne.values[1].real() == doctest::Approx(h.minus));
}
