#include "starlax/r_matrices.hpp"

namespace starlax {

namespace {

ParamRat one(int order) { return ParamRat::constant(GaussRational(1), order); }

ParamRat over(const ParamPoly& num, std::vector<ParamRat::Factor> den) { return ParamRat(num, std::move(den)); }

} // namespace

RingMatrix<ParamRat> casimir(int order)
{
    RingMatrix<ParamRat> c(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) c(2 * i + j, 2 * j + i) = one(order);
    return c;
}

RingMatrix<ParamRat> build_classical_r(RKind kind, int order)
{
    const DenPoly lam = den_variable(0), mu = den_variable(1);
    if (kind == RKind::casimir_rational) {
        ParamRat inv = over(ParamPoly::constant(HbarSeries(order, GaussRational(1))), {{lam - mu, 1}});
        return casimir(order).scaled(inv);
    }
    const ParamPoly l = spectral_variable(0, order), m = spectral_variable(1, order);
    const std::vector<ParamRat::Factor> diff_sq{{lam - mu, 1}, {lam + mu, 1}};
    const GaussRational half(Rational(1, 2));
    ParamRat diag = over((l * l + m * m).scaled(half), diff_sq);
    ParamRat off = over(l * m, diff_sq);
    RingMatrix<ParamRat> r(4);
    r(0, 0) = diag;
    r(3, 3) = diag;
    r(1, 1) = ParamRat::constant(GaussRational(Rational(-1, 2)), order);
    r(2, 2) = ParamRat::constant(half, order);
    r(1, 2) = off;
    r(2, 1) = off;
    return r;
}

RingMatrix<ParamRat> build_quantum_R(RKind kind, const HbarSeries& f)
{
    const int order = f.order();
    return RingMatrix<ParamRat>::identity(4, one(order)) + build_classical_r(kind, order).scaled(f);
}

RingMatrix<ParamRat> check_cybe(const RingMatrix<ParamRat>& r)
{
    auto r12 = embed(r, 1, 2, 3), r13 = embed(r, 1, 3, 3), r23 = embed(r, 2, 3, 3);
    return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
}

RingMatrix<ParamRat> check_qybe(const RingMatrix<ParamRat>& R)
{
    auto r12 = embed(R, 1, 2, 3), r13 = embed(R, 1, 3, 3), r23 = embed(R, 2, 3, 3);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

RingMatrix<ParamRat> qybe_cubic_term(const RingMatrix<ParamRat>& r) { return check_qybe(r); }

UnitarityOutcome check_unitarity(const RingMatrix<ParamRat>& R)
{
    UnitarityOutcome out{embed(R, 1, 2, 2) * embed(R, 2, 1, 2), std::nullopt};
    const auto& p = out.product;
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) {
            if (i != j && !p(i, j).is_zero()) return out;
            if (i == j && !ratfun_eq(p(i, i), p(0, 0))) return out;
        }
    out.scalar = p(0, 0);
    return out;
}

} // namespace starlax
