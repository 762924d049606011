#include <doctest.h>

#include "starlax/sampling.hpp"
#include "starlax/waring.hpp"

using namespace starlax;

namespace {

constexpr int kOrder = 8;

PhasePoly term(const GaussRational& c, const PhaseKey& key = {}, int order = kOrder)
{
    return PhasePoly(ParamRat::constant(c, order), key);
}
PhasePoly p(int i) { return PhasePoly::p(i, kOrder); }
PhasePoly e(int i, int j, int c = 1) { return term(1, Mono{}.exp_q(i, c).exp_q(j, -c)); }
PhasePoly hbar_pow(const GaussRational& c, int k) { return PhasePoly(ParamRat::constant(HbarSeries::monomial(kOrder, c, k))); }

std::vector<PhasePoly> traces(int n, int kmax)
{
    std::vector<PhasePoly> out;
    for (int k = 1; k <= kmax; ++k) out.push_back(trace_poly(n, k, kOrder));
    return out;
}

} // namespace

TEST_SUITE("waring")
{
    TEST_CASE("multi-indices")
    {
        auto two = weighted_partitions(2);
        REQUIRE(two.size() == 2);
        CHECK(two[0].r == std::vector<int>{0, 1});
        CHECK(two[1].r == std::vector<int>{2, 0});
        // number of partitions of k
        const std::size_t counts[] = {1, 2, 3, 5, 7, 11, 15};
        for (int k = 1; k <= 7; ++k) {
            auto parts = weighted_partitions(k);
            CHECK(parts.size() == counts[k - 1]);
            for (const auto& r : parts) CHECK(r.weighted_degree() == k);
        }
        MultiIndex r{{2, 0, 3}};
        CHECK(r.size() == 5);
        CHECK(r.factorial() == Rational(12));
        CHECK(r.weighted_degree() == 11);
    }

    TEST_CASE("trace polynomial examples")
    {
        CHECK(trace_poly(2, 1, kOrder) == p(1) + p(2));
        CHECK(trace_poly(2, 2, kOrder) == (p(1) * p(1) + p(2) * p(2)) * GaussRational(Rational(1, 2)) + e(1, 2));
        CHECK(trace_poly(1, 2, kOrder) == p(1) * p(1) * GaussRational(Rational(1, 2)));
        for (int n = 1; n <= 4; ++n) CHECK(trace_poly(n, 2, kOrder) == hamiltonian(n, kOrder));
    }

    TEST_CASE("characteristic coefficient examples")
    {
        CHECK(char_coeff(2, 1, kOrder) == -(p(1) + p(2)));
        CHECK(char_coeff(2, 2, kOrder) == p(1) * p(2) - e(1, 2));
        for (int n = 1; n <= 5; ++n) CHECK(char_coeff(n, 1, kOrder) == -trace_poly(n, 1, kOrder));
        CHECK(char_coeff(2, 3, kOrder).is_zero());
        // J_n = (-1)^n det L; for n = 3: det L = p1 p2 p3 - p1 E2 - p3 E1
        auto det = p(1) * p(2) * p(3) - p(1) * e(2, 3) - p(3) * e(1, 2);
        CHECK(char_coeff(3, 3, kOrder) == -det);
    }

    TEST_CASE("Waring formulas on generic commuting inputs")
    {
        Sampler s(81, 2);
        for (int t = 0; t < 5; ++t) {
            std::vector<PhasePoly> in{s.phase_poly(2, 2), s.phase_poly(2, 2), s.phase_poly(2, 2)};
            CHECK(waring_forward(in, 1) == -in[0]);
            CHECK(waring_forward(in, 2) == in[0] * in[0] * GaussRational(Rational(1, 2)) - in[1]);
            CHECK(waring_backward(in, 1, Product::pointwise) == -in[0]);
            CHECK(waring_backward(in, 2, Product::pointwise) == in[0] * in[0] * GaussRational(Rational(1, 2)) - in[1]);
            // inverse maps of each other in the commutative setting
            std::vector<PhasePoly> j{waring_forward(in, 1), waring_forward(in, 2), waring_forward(in, 3)};
            for (int k = 1; k <= 3; ++k) CHECK(waring_backward(j, k, Product::pointwise) == in[static_cast<std::size_t>(k - 1)]);
        }
    }

    TEST_CASE("Waring identities for the Toda chain, both directions")
    {
        for (int n = 1; n <= 5; ++n) {
            auto i = traces(n, n);
            auto j = char_coeffs(n, n, kOrder);
            for (int k = 1; k <= n; ++k) {
                CHECK(waring_forward(i, k) == j[static_cast<std::size_t>(k - 1)]);
                CHECK(waring_backward(j, k, Product::pointwise) == i[static_cast<std::size_t>(k - 1)]);
            }
        }
    }

    TEST_CASE("corrected quantities agree with the classical ones up to k = 3")
    {
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= 3; ++k) CHECK(corrected_trace_poly(n, k, kOrder) == trace_poly(n, k, kOrder));
        auto j = char_coeffs(2, 2, kOrder);
        CHECK(waring_backward(j, 1, Product::star_weyl) == -j[0]);
        CHECK(waring_backward(j, 2, Product::star_weyl) == trace_poly(2, 2, kOrder));
    }

    TEST_CASE("star-Waring does not depend on the factor order")
    {
        for (int n = 2; n <= 4; ++n)
            for (int k = 4; k <= 6; ++k)
                CHECK(corrected_trace_poly(n, k, kOrder, FactorOrder::ascending) ==
                      corrected_trace_poly(n, k, kOrder, FactorOrder::descending));
    }

    TEST_CASE("quantum corrections for k = 4, 5 match the closed forms")
    {
        for (int n : {2, 3, 4, 5}) {
            CHECK(quantum_correction(n, 4, kOrder) == closed_form_correction(n, 4, kOrder));
            CHECK(quantum_correction(n, 5, kOrder) == closed_form_correction(n, 5, kOrder));
        }
        PhasePoly k4;
        for (int i = 1; i < 4; ++i) k4 += e(i, i + 1);
        CHECK(closed_form_correction(4, 4, kOrder) == k4 * ParamRat::constant(HbarSeries::monomial(kOrder, Rational(-1, 4), 2)));
        CHECK_THROWS_AS((void)closed_form_correction(4, 3, kOrder), ArgumentError);
    }

    TEST_CASE("k = 6 correction: next-nearest coefficient differs from the closed form")
    {
        for (int n : {3, 4}) {
            auto diff = quantum_correction(n, 6, kOrder) - closed_form_correction(n, 6, kOrder);
            PhasePoly expected;
            for (int i = 1; i + 2 <= n; ++i) expected += e(i, i + 2) * hbar_pow(Rational(-5, 6), 2);
            CHECK(diff == expected);
            auto h = hamiltonian(n, kOrder);
            CHECK(star_commutator(corrected_trace_poly(n, 6, kOrder), h).is_zero());
            CHECK_FALSE(star_commutator(trace_poly(n, 6, kOrder) + closed_form_correction(n, 6, kOrder), h).is_zero());
        }
        // n = 2 has no next-nearest pair and agrees exactly
        CHECK(quantum_correction(2, 6, kOrder) == closed_form_correction(2, 6, kOrder));
    }

    TEST_CASE("corrections start at hbar^2")
    {
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k <= 6; ++k) {
                auto d = quantum_correction(n, k, kOrder);
                CHECK(d.hbar_coefficient(0).is_zero());
                CHECK(d.hbar_coefficient(1).is_zero());
            }
    }

    TEST_CASE("corrected quantities commute; uncorrected ones need not")
    {
        for (int n = 2; n <= 3; ++n) {
            std::vector<PhasePoly> hat;
            for (int k = 1; k <= 5; ++k) hat.push_back(corrected_trace_poly(n, k, kOrder));
            auto h = hamiltonian(n, kOrder);
            for (std::size_t a = 0; a < hat.size(); ++a) {
                CHECK(star_commutator(hat[a], h).is_zero());
                for (std::size_t b = a + 1; b < hat.size(); ++b) CHECK(star_commutator(hat[a], hat[b]).is_zero());
            }
        }
        auto w = find_quantum_asymmetry(6, 5, kOrder);
        REQUIRE(w.has_value());
        CHECK_FALSE(w->commutator.is_zero());
        CHECK(w->commutator == star_commutator(trace_poly(w->n, w->j, kOrder), trace_poly(w->n, w->k, kOrder)));
        CHECK(star_commutator(corrected_trace_poly(w->n, w->j, kOrder), corrected_trace_poly(w->n, w->k, kOrder)).is_zero());
        // classically the pair is still in involution
        CHECK(w->commutator.hbar_coefficient(1).is_zero());
    }
}
