#include <doctest.h>

#include "starlax/integrability.hpp"
#include "starlax/lax_catalog.hpp"

using namespace starlax;

namespace {

constexpr int kOrder = 4;

PhasePoly term(const GaussRational& c, const PhaseKey& key = {}) { return PhasePoly(ParamRat::constant(c, kOrder), key); }
PhasePoly lam() { return PhasePoly(ParamRat::variable(0, kOrder)); }

} // namespace

TEST_SUITE("lax_catalog")
{
    TEST_CASE("build_U examples")
    {
        auto a1 = build_U(SystemId::A1, 1, Params{}, kOrder);
        CHECK(a1(0, 0) == PhasePoly::p(1, kOrder) - lam());
        CHECK(a1(1, 1).is_zero());

        auto b3 = build_U(SystemId::B3, 2, Params::parse("g=1,delta=1"), kOrder);
        CHECK(b3(0, 1) == -(term(1, Mono{}.exp_p(2, 1)) + term(1)) * term(1, Mono{}.exp_q(2, -1)));

        auto c2 = build_U(SystemId::C2, 1, Params::parse("eps=1"), kOrder);
        CHECK(c2(0, 1) == -(term(1, Mono{}.exp_p(1, 1)) - term(1)) * term(1, Mono{}.exp_q(1, -1)));

        auto a2 = build_U(SystemId::A2, 3, Params{}, kOrder);
        CHECK(a2(1, 0) == PhasePoly::p(3, kOrder) * term(1, Mono{}.exp_q(3, 1)));
        CHECK(a2(1, 1) == term(1));
    }

    TEST_CASE("B and C entries carry the parameters")
    {
        auto p = Params::parse("eps=2,g=3,delta=1/2");
        auto b2 = build_U(SystemId::B2, 1, p, kOrder);
        CHECK(b2(0, 1) == term(-9, Mono{}.exp_q(1, -1).exp_p(1, 1)));
        auto b3 = build_U(SystemId::B3, 1, p, kOrder);
        CHECK(b3(1, 1) == lam() * GaussRational(Rational(-9, 2)));
        auto c1 = build_U(SystemId::C1, 1, p, kOrder);
        CHECK(c1(0, 0) == PhasePoly(ParamRat(ParamPoly::constant(HbarSeries(kOrder, 1)), {{den_variable(0), 1}})) -
                              lam() * term(1, Mono{}.exp_p(1, 2)));
        CHECK(c1(1, 1) == lam() * GaussRational(-4));
        auto c2 = build_U(SystemId::C2, 1, p, kOrder);
        CHECK(c2(1, 1) == lam() * GaussRational(2));
        CHECK(c2(1, 0) == term(2, Mono{}.exp_q(1, 1)));
    }

    TEST_CASE("matching_R examples")
    {
        auto a = matching_R(SystemId::A1, Params{}, kOrder);
        auto ihbar = HbarSeries::monomial(kOrder, GaussRational::i(), 1);
        CHECK(a == build_quantum_R(RKind::casimir_rational, ihbar));
        CHECK(a == RingMatrix<ParamRat>::identity(4, ParamRat::constant(1, kOrder)) +
                       casimir(kOrder).scaled(ParamRat(ParamPoly::constant(ihbar), {{den_variable(0) - den_variable(1), 1}})));

        auto tanh_rho = series_func(SeriesFunction::tanh, GaussRational(Rational(0), Rational(1, 2)), kOrder);
        CHECK(matching_R(SystemId::B1, Params{}, kOrder) ==
              build_quantum_R(RKind::trigonometric_tilde, tanh_rho * GaussRational(-2)));
        CHECK(matching_R(SystemId::C1, Params::parse("eps=1"), kOrder) == matching_R(SystemId::B1, Params{}, kOrder));
        CHECK_FALSE(matching_R(SystemId::C1, Params::parse("eps=2"), kOrder) == matching_R(SystemId::B1, Params{}, kOrder));
    }

    TEST_CASE("classical L and H examples")
    {
        auto l1 = build_classical_L(1, kOrder);
        CHECK(l1.dim() == 1);
        CHECK(l1(0, 0) == PhasePoly::p(1, kOrder));
        auto l2 = build_classical_L(2, kOrder);
        auto half = term(1, Mono{}.exp_q(1, Rational(1, 2)).exp_q(2, Rational(-1, 2)));
        CHECK(l2(0, 1) == half);
        CHECK(l2(1, 0) == half);
        CHECK(l2(1, 1) == PhasePoly::p(2, kOrder));
        CHECK(build_classical_L(3, kOrder)(0, 2).is_zero());

        auto half_sq = [](int i) { return term(Rational(1, 2), Mono{}.p(i, 2)); };
        auto e = [](int i) { return term(1, Mono{}.exp_q(i, 1).exp_q(i + 1, -1)); };
        CHECK(hamiltonian(1, kOrder) == half_sq(1));
        CHECK(hamiltonian(2, kOrder) == half_sq(1) + half_sq(2) + e(1));
        CHECK(hamiltonian(3, kOrder) == half_sq(1) + half_sq(2) + half_sq(3) + e(1) + e(2));
    }

    TEST_CASE("parameter parsing")
    {
        auto p = Params::parse("eps=2,g=3,delta=1/2");
        CHECK(p.eps == Rational(2));
        CHECK(p.g == Rational(3));
        CHECK(p.delta == Rational(1, 2));
        CHECK(Params::parse("") == Params{});
        CHECK(Params::parse("delta=-3/4").delta == Rational(-3, 4));
        CHECK(p.str() == "eps=2,g=3,delta=1/2");
        CHECK_THROWS_AS(Params::parse("eps=0.5"), ArgumentError);
        CHECK_THROWS_AS(Params::parse("zeta=1"), ArgumentError);
        CHECK_THROWS_AS(Params::parse("eps"), ArgumentError);
        CHECK_THROWS_AS(Params::parse("g=1/0"), ArgumentError);

        CHECK_THROWS_AS((void)build_U(SystemId::C1, 1, Params::parse("eps=0"), kOrder), ArgumentError);
        CHECK_THROWS_AS((void)build_U(SystemId::B2, 1, Params::parse("g=0"), kOrder), ArgumentError);
        CHECK_THROWS_AS((void)build_U(SystemId::B3, 1, Params::parse("g=0"), kOrder), ArgumentError);
        CHECK_THROWS_AS((void)matching_R(SystemId::C2, Params::parse("eps=0"), kOrder), ArgumentError);
        CHECK_THROWS_AS((void)build_U(SystemId::A1, 0, Params{}, kOrder), ArgumentError);
        CHECK_NOTHROW((void)build_U(SystemId::B1, 1, Params::parse("g=0"), kOrder));

        CHECK(parse_system("B3") == SystemId::B3);
        CHECK(name(SystemId::C2) == "C2");
        CHECK_THROWS_AS((void)parse_system("D1"), ArgumentError);
        CHECK(parse_group("C") == RGroup::C);
        CHECK(group_of(SystemId::A2) == RGroup::A);
        CHECK(group_of(SystemId::B3) == RGroup::B);
        CHECK(group_of(SystemId::C1) == RGroup::C);
    }

    TEST_CASE("every U lives on its own particle and is Laurent in lambda")
    {
        for (auto bind : {Params{}, Params::parse("eps=2,g=3,delta=1/2")})
            for (auto s : kAllSystems)
                for (int k = 1; k <= 3; ++k) {
                    auto u = build_U(s, k, bind, kOrder);
                    for (const auto& e : u.entries()) {
                        for (int j = 1; j <= 4; ++j) {
                            if (j == k) continue;
                            CHECK(partial(e, {Coord::q, j}).is_zero());
                            CHECK(partial(e, {Coord::p, j}).is_zero());
                        }
                        auto lp = LambdaPoly::from_phase(e);
                        if (group_of(s) == RGroup::A) {
                            CHECK(lp.min_power() >= 0);
                            CHECK(lp.max_power() <= 1);
                        } else {
                            CHECK(lp.min_power() >= -1);
                            CHECK(lp.max_power() <= 1);
                        }
                    }
                }
    }
}
