#include <doctest.h>

#include "starlax/representation.hpp"
#include "starlax/sampling.hpp"

using namespace starlax;

namespace {

constexpr int kOrder = 4;

PhasePoly term(const GaussRational& c, const PhaseKey& key) { return PhasePoly(ParamRat::constant(c, kOrder), key); }
PhasePoly hbar_term(const GaussRational& c, int power, const PhaseKey& key = {})
{
    return PhasePoly(ParamRat::constant(HbarSeries::monomial(kOrder, c, power)), key);
}

} // namespace

TEST_SUITE("representation")
{
    TEST_CASE("rho_standard examples")
    {
        WaveFn q1(PhasePoly::q(1, kOrder));
        CHECK(rho_standard(PhasePoly::p(1, kOrder), q1).poly() == hbar_term(GaussRational(Rational(0), Rational(-1)), 1));

        Sampler s(41, kOrder);
        auto eq = term(1, Mono{}.exp_q(1, 1));
        for (int t = 0; t < 10; ++t) {
            WaveFn psi(s.wavefn(2, 2));
            CHECK(rho_standard(eq, psi).poly() == eq * psi.poly());
        }

        WaveFn q1sq(term(1, Mono{}.q(1, 2)));
        CHECK(rho_standard(term(1, Mono{}.p(1, 2)), q1sq).poly() == hbar_term(-2, 2));
    }

    TEST_CASE("rho_weyl examples")
    {
        WaveFn one(PhasePoly::constant(1, kOrder));
        auto qp = PhasePoly::q(1, kOrder) * PhasePoly::p(1, kOrder);
        CHECK(rho_weyl(qp, one).poly() == hbar_term(GaussRational(Rational(0), Rational(-1, 2)), 1));

        Sampler s(42, kOrder);
        for (int t = 0; t < 10; ++t) {
            WaveFn psi(s.wavefn(2, 2));
            CHECK(rho_weyl(PhasePoly::q(1, kOrder), psi).poly() == PhasePoly::q(1, kOrder) * psi.poly());
            auto f = s.wavefn(2, 2); // p-free observable
            CHECK(rho_weyl(f, psi) == rho_standard(f, psi));
        }
    }

    TEST_CASE("wavefunctions reject momentum dependence")
    {
        CHECK_THROWS_AS(WaveFn(PhasePoly::p(1, kOrder)), ArgumentError);
    }

    TEST_CASE("representation identities")
    {
        Sampler s(43, kOrder);
        for (int t = 0; t < 40; ++t) {
            auto f = s.phase_poly(2, 2), g = s.phase_poly(2, 2);
            WaveFn psi(s.wavefn(2, 2));
            CHECK(rho_standard(star_standard(f, g), psi) == rho_standard(f, rho_standard(g, psi)));
            CHECK(rho_weyl(star_weyl(f, g), psi) == rho_weyl(f, rho_weyl(g, psi)));
        }
    }

    TEST_CASE("linearity")
    {
        Sampler s(44, kOrder);
        for (int t = 0; t < 20; ++t) {
            auto f = s.phase_poly(2, 2), g = s.phase_poly(2, 2);
            WaveFn a(s.wavefn(2, 2)), b(s.wavefn(2, 2));
            CHECK(rho_standard(f + g, a) == rho_standard(f, a) + rho_standard(g, a));
            CHECK(rho_weyl(f, a + b) == rho_weyl(f, a) + rho_weyl(f, b));
        }
    }
}
