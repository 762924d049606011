#include <doctest.h>

#include "starlax/r_matrices.hpp"
#include "starlax/sampling.hpp"

using namespace starlax;

namespace {

constexpr int kOrder = 6;

using M = RingMatrix<ParamRat>;

ParamRat one() { return ParamRat::constant(GaussRational(1), kOrder); }
const DenPoly kLam = den_variable(0);
const DenPoly kMu = den_variable(1);

HbarSeries two_rho() { return HbarSeries::monomial(kOrder, GaussRational::i(), 1); }
HbarSeries minus_two_tanh(const Rational& eps)
{
    return series_func(SeriesFunction::tanh, GaussRational(Rational(0), eps / Rational(2)), kOrder) *
           GaussRational(-2);
}

/// Brute-force three-leg placement of s (x) t * phi, independent of embed():
/// explicit Kronecker products of 2x2 units, spectral parameters renamed by hand.
M brute_embed(const M& m, int a, int b)
{
    SpectralRenaming ren{};
    ren[0] = a - 1;
    ren[1] = b - 1;
    ren[2] = 3 - (a - 1) - (b - 1);
    M out(8);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    const auto& phi = m(2 * i + k, 2 * j + l);
                    if (phi.is_zero()) continue;
                    M slot[3] = {M::identity(2, one()), M::identity(2, one()), M::identity(2, one())};
                    slot[a - 1] = M::unit(2, i, j, one());
                    slot[b - 1] = M::unit(2, k, l, one());
                    out += kron(kron(slot[0], slot[1]), slot[2]).scaled(phi.renamed(ren));
                }
    return out;
}

M brute_cybe(const M& r)
{
    auto r12 = brute_embed(r, 1, 2), r13 = brute_embed(r, 1, 3), r23 = brute_embed(r, 2, 3);
    return r12 * r13 - r13 * r12 + r12 * r23 - r23 * r12 + r13 * r23 - r23 * r13;
}

} // namespace

TEST_SUITE("r_matrices")
{
    TEST_CASE("classical r examples")
    {
        auto r = build_classical_r(RKind::casimir_rational, kOrder);
        ParamRat inv(ParamPoly::constant(HbarSeries(kOrder, 1)), {{kLam - kMu, 1}});
        CHECK(r == casimir(kOrder).scaled(inv));

        auto rt = build_classical_r(RKind::trigonometric_tilde, kOrder);
        auto l = ParamRat::variable(0, kOrder), m = ParamRat::variable(1, kOrder);
        CHECK(ratfun_eq(rt(1, 2) * (l * l - m * m), l * m));
        CHECK(rt(1, 1) == ParamRat::constant(GaussRational(Rational(-1, 2)), kOrder));
        CHECK(ratfun_eq(rt(0, 0) * (l * l - m * m) * GaussRational(2), l * l + m * m));
    }

    TEST_CASE("quantum R examples")
    {
        auto R = build_quantum_R(RKind::casimir_rational, two_rho());
        auto expected = M::identity(4, one()) + build_classical_r(RKind::casimir_rational, kOrder).scaled(two_rho());
        CHECK(R == expected);
        CHECK(build_quantum_R(RKind::trigonometric_tilde, HbarSeries(kOrder)) == M::identity(4, one()));
        CHECK(build_quantum_R(RKind::casimir_rational, HbarSeries(kOrder)) == M::identity(4, one()));
    }

    TEST_CASE("CYBE: exact zero for r and r~, nonzero negative control")
    {
        for (auto kind : {RKind::casimir_rational, RKind::trigonometric_tilde}) {
            auto r = build_classical_r(kind, kOrder);
            CHECK(check_cybe(r).is_zero());
            CHECK(brute_cybe(r).is_zero());
        }
        M bad(4);
        bad(1, 1) = ParamRat(ParamPoly::constant(HbarSeries(kOrder, 1)), {{kLam - kMu, 1}}); // E11 (x) E22
        // diagonal in both legs: every placement commutes, so the brute-force residual is zero too
        CHECK(brute_cybe(bad).is_zero());
        CHECK(check_cybe(bad).is_zero());

        M half(4);
        half(1, 2) = bad(1, 1); // E12 (x) E21 alone, without the other half of the Casimir
        auto residual = check_cybe(half);
        CHECK_FALSE(residual.is_zero());
        CHECK(residual == brute_cybe(half));
    }

    TEST_CASE("QYBE to order N for the table R-matrices and random f")
    {
        CHECK(check_qybe(build_quantum_R(RKind::casimir_rational, two_rho())).is_zero());
        CHECK(check_qybe(build_quantum_R(RKind::trigonometric_tilde, minus_two_tanh(1))).is_zero());
        CHECK(check_qybe(build_quantum_R(RKind::trigonometric_tilde, minus_two_tanh(2))).is_zero());
        Sampler s(61, kOrder);
        for (int t = 0; t < 3; ++t) {
            auto f = s.series_no_constant(3);
            CHECK(check_qybe(build_quantum_R(RKind::casimir_rational, f)).is_zero());
            CHECK(check_qybe(build_quantum_R(RKind::trigonometric_tilde, f)).is_zero());
        }
    }

    TEST_CASE("third-order term in f vanishes on its own")
    {
        for (auto kind : {RKind::casimir_rational, RKind::trigonometric_tilde}) {
            CHECK(qybe_cubic_term(build_classical_r(kind, kOrder)).is_zero());
            // same coefficient read off the full residual with f = hbar
            auto residual = check_qybe(build_quantum_R(kind, HbarSeries::monomial(kOrder, 1, 1)));
            for (const auto& e : residual.entries()) CHECK(e.is_zero());
        }
    }

    TEST_CASE("unitarity up to a scalar")
    {
        auto l = ParamRat::variable(0, kOrder), m = ParamRat::variable(1, kOrder);
        ParamRat diff_sq_inv(ParamPoly::constant(HbarSeries(kOrder, 1)), {{kLam - kMu, 2}});

        // C^2 = 1 (x) 1 by direct multiplication
        CHECK(casimir(kOrder) * casimir(kOrder) == M::identity(4, one()));
        auto a = check_unitarity(build_quantum_R(RKind::casimir_rational, two_rho()));
        REQUIRE(a.scalar.has_value());
        auto hbar_sq = HbarSeries::monomial(kOrder, 1, 2);
        CHECK(ratfun_eq(*a.scalar, one() + diff_sq_inv * hbar_sq));

        // r~^2 = (lambda^2+mu^2)^2 / (4 (lambda^2-mu^2)^2) * 1 by direct multiplication
        auto rt = build_classical_r(RKind::trigonometric_tilde, kOrder);
        auto sq = rt * rt;
        auto num = (l * l + m * m) * (l * l + m * m);
        ParamRat factor(num.num(), {{kLam - kMu, 2}, {kLam + kMu, 2}});
        factor *= GaussRational(Rational(1, 4));
        CHECK(sq == M::identity(4, one()).scaled(factor));

        auto tanh_rho = series_func(SeriesFunction::tanh, GaussRational(Rational(0), Rational(1, 2)), kOrder);
        auto b = check_unitarity(build_quantum_R(RKind::trigonometric_tilde, minus_two_tanh(1)));
        REQUIRE(b.scalar.has_value());
        ParamRat expected_b = one() - factor * GaussRational(4) * (tanh_rho * tanh_rho);
        CHECK(ratfun_eq(*b.scalar, expected_b));

        auto c = check_unitarity(M::identity(4, one()));
        REQUIRE(c.scalar.has_value());
        CHECK(*c.scalar == one());

        M bad = M::identity(4, one());
        bad(0, 1) = one();
        CHECK_FALSE(check_unitarity(bad).scalar.has_value());
    }
}
