#include "starlax/sampling.hpp"

namespace starlax {

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::rational(int bound) { return Rational(uniform(-bound, bound), uniform(1, bound)); }

GaussRational Sampler::gauss(int bound)
{
    if (uniform(0, 2) == 0) return GaussRational(rational(bound));
    return {rational(bound), rational(bound)};
}

GaussRational Sampler::gauss_nonzero(int bound)
{
    for (;;) {
        GaussRational g = gauss(bound);
        if (!g.is_zero()) return g;
    }
}

HbarSeries Sampler::series(int terms)
{
    HbarSeries s(order_);
    for (int t = 0; t < terms; ++t) s += HbarSeries::monomial(order_, gauss(), uniform(0, std::min(order_, 3)));
    return s;
}

HbarSeries Sampler::series_no_constant(int terms)
{
    HbarSeries s(order_);
    for (int t = 0; t < terms; ++t) s += HbarSeries::monomial(order_, gauss(), uniform(1, std::max(1, std::min(order_, 3))));
    return s;
}

ParamPoly Sampler::param_poly(int vars, int degree, int terms)
{
    ParamPoly p;
    for (int t = 0; t < terms; ++t) {
        SpectralExp e{};
        int left = uniform(0, degree);
        for (int v = 0; v < vars && left > 0; ++v) {
            int x = v + 1 == vars ? left : uniform(0, left);
            e[static_cast<std::size_t>(v)] = x;
            left -= x;
        }
        p += ParamPoly::monomial(e, series(2));
    }
    return p;
}

ParamRat Sampler::param_rat(int vars)
{
    std::vector<ParamRat::Factor> den;
    const DenPoly lam = den_variable(0);
    const DenPoly mu = den_variable(1);
    const DenPoly pool[] = {lam, mu, lam - mu, lam + mu};
    const int choices = vars >= 2 ? 4 : 1;
    int nfactors = uniform(0, 2);
    for (int f = 0; f < nfactors; ++f) den.emplace_back(pool[uniform(0, choices - 1)], 1);
    return ParamRat(param_poly(vars), std::move(den));
}

PhaseKey Sampler::key(int particles, bool allow_q_powers, bool allow_p)
{
    static const Rational lins[] = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
    Mono m;
    for (int j = 1; j <= particles; ++j) {
        if (uniform(0, 2) == 0) continue;
        if (allow_q_powers) m.q(j, uniform(0, 2));
        m.exp_q(j, lins[uniform(0, 4)]);
        if (allow_p) {
            m.p(j, uniform(0, 2));
            m.exp_p(j, lins[uniform(0, 4)]);
        }
    }
    return m.key();
}

PhasePoly Sampler::phase_poly(int particles, int terms, bool allow_q_powers)
{
    PhasePoly f;
    for (int t = 0; t < terms; ++t) {
        HbarSeries c = uniform(0, 3) == 0 ? series(2) : HbarSeries(order_, gauss_nonzero());
        f += PhasePoly(ParamRat::constant(c), key(particles, allow_q_powers, true));
    }
    return f;
}

PhasePoly Sampler::wavefn(int particles, int terms)
{
    PhasePoly f;
    for (int t = 0; t < terms; ++t)
        f += PhasePoly(ParamRat::constant(GaussRational(gauss_nonzero()), order_), key(particles, true, false));
    return f;
}

} // namespace starlax
