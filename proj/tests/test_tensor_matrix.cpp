#include <doctest.h>

#include "starlax/r_matrices.hpp"
#include "starlax/ring_matrix.hpp"
#include "starlax/sampling.hpp"

using namespace starlax;

namespace {

constexpr int kOrder = 3;

using M = RingMatrix<ParamRat>;

ParamRat one() { return ParamRat::constant(GaussRational(1), kOrder); }
M unit2(std::size_t i, std::size_t j) { return M::unit(2, i, j, one()); }
M id(std::size_t d) { return M::identity(d, one()); }

M random_matrix(Sampler& s, std::size_t dim)
{
    M m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (s.uniform(0, 2)) m(i, j) = s.param_rat();
    return m;
}

M expected_casimir()
{
    M c(4);
    c(0, 0) = one();
    c(1, 2) = one();
    c(2, 1) = one();
    c(3, 3) = one();
    return c;
}

} // namespace

TEST_SUITE("tensor_matrix")
{
    TEST_CASE("kron examples")
    {
        auto e = kron(unit2(0, 0), unit2(0, 0));
        CHECK(e == M::unit(4, 0, 0, one()));
        M c(4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) c += kron(unit2(i, j), unit2(j, i));
        CHECK(c == expected_casimir());
        CHECK(c == casimir(kOrder));
        CHECK(kron(id(2), id(2)) == id(4));
    }

    TEST_CASE("embed examples")
    {
        M expected(8);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) expected += kron(kron(unit2(i, j), id(2)), unit2(j, i));
        CHECK(embed(casimir(kOrder), 1, 3, 3) == expected);

        for (auto kind : {RKind::casimir_rational, RKind::trigonometric_tilde}) {
            auto r = build_classical_r(kind, kOrder);
            CHECK(embed(r, 2, 1, 2) == -embed(r, 1, 2, 2));
        }
        CHECK(embed(id(4), 1, 3, 3) == id(8));
        CHECK(embed(id(4), 3, 2, 3) == id(8));
        CHECK_THROWS_AS((void)embed(id(4), 2, 2, 3), ArgumentError);
        CHECK_THROWS_AS((void)embed(id(4), 1, 4, 3), ArgumentError);
    }

    TEST_CASE("embed renames spectral parameters")
    {
        // (lambda - 2 mu) E_11 (x) E_22 placed on legs (3, 1) -> (nu - 2 lambda) at leg 3 / leg 1
        M m(4);
        m(1, 1) = ParamRat::variable(0, kOrder) - ParamRat::variable(1, kOrder) * GaussRational(2);
        auto e = embed(m, 3, 1, 3);
        auto value = ParamRat::variable(2, kOrder) - ParamRat::variable(0, kOrder) * GaussRational(2);
        // E_22 at leg 1, E_11 at leg 3: basis index 1*4 + s2*2 + 0
        CHECK(e(4, 4) == value);
        CHECK(e(6, 6) == value);
        CHECK(residual_terms(e) == 2);
    }

    TEST_CASE("mat_mul examples")
    {
        CHECK(unit2(0, 1) * unit2(1, 0) == unit2(0, 0));

        RingMatrix<PhasePoly> a(2), b(2);
        a(0, 0) = PhasePoly::p(1, kOrder);
        b(0, 0) = PhasePoly::q(1, kOrder);
        auto star = mat_mul(a, b, Product::star_weyl);
        auto expected = PhasePoly::q(1, kOrder) * PhasePoly::p(1, kOrder) -
                        PhasePoly::constant(ParamRat::constant(
                            HbarSeries::monomial(kOrder, GaussRational(Rational(0), Rational(1, 2)), 1)));
        CHECK(star(0, 0) == expected);

        RingMatrix<PhasePoly> c(2), d(2);
        c(0, 1) = PhasePoly::p(1, kOrder);
        c(1, 1) = PhasePoly(ParamRat::constant(1, kOrder), Mono{}.exp_q(1, 1));
        d(1, 0) = PhasePoly::q(2, kOrder);
        d(1, 1) = PhasePoly::p(2, kOrder);
        CHECK(mat_mul(c, d, Product::star_weyl) == mat_mul(c, d, Product::pointwise));
    }

    TEST_CASE("trace examples")
    {
        CHECK(trace(unit2(0, 0)) == one());
        CHECK(trace(casimir(kOrder)) == ParamRat::constant(2, kOrder));
        CHECK(trace(id(8)) == ParamRat::constant(8, kOrder));
    }

    TEST_CASE("kron associativity, mixed products, cyclic trace")
    {
        Sampler s(51, kOrder);
        for (int t = 0; t < 10; ++t) {
            auto a = random_matrix(s, 2), b = random_matrix(s, 2), c = random_matrix(s, 2), d = random_matrix(s, 2);
            CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
            CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
            auto x = random_matrix(s, 3), y = random_matrix(s, 3);
            CHECK(ratfun_eq(trace(x * y), trace(y * x)));
        }
    }

    TEST_CASE("embed respects multiplication leg-wise")
    {
        Sampler s(52, kOrder);
        const std::pair<int, int> legs[] = {{1, 2}, {2, 1}, {1, 3}, {3, 2}};
        for (int t = 0; t < 5; ++t) {
            auto m = random_matrix(s, 4), k = random_matrix(s, 4);
            for (auto [a, b] : legs) CHECK(embed(m, a, b, 3) * embed(k, a, b, 3) == embed(m * k, a, b, 3));
        }
    }

    TEST_CASE("determinant of a commuting matrix")
    {
        RingMatrix<PhasePoly> m(2);
        m(0, 0) = PhasePoly::p(1, kOrder);
        m(0, 1) = PhasePoly(ParamRat::constant(1, kOrder), Mono{}.exp_q(1, 1));
        m(1, 0) = PhasePoly(ParamRat::constant(1, kOrder), Mono{}.exp_q(2, -1));
        m(1, 1) = PhasePoly::p(2, kOrder);
        auto expected = PhasePoly::p(1, kOrder) * PhasePoly::p(2, kOrder) -
                        PhasePoly(ParamRat::constant(1, kOrder), Mono{}.exp_q(1, 1).exp_q(2, -1));
        CHECK(determinant(m) == expected);
    }
}
