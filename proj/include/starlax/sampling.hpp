#pragma once

#include <cstdint>
#include <random>

#include "starlax/phase_poly.hpp"

namespace starlax {

/// Seeded generators for the randomized property suites. Every draw is
/// exact (small rationals), so failures reproduce from the seed alone.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, int order) : rng_(seed), order_(order) {}

    [[nodiscard]] int order() const { return order_; }

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);
    /// a/b with |a| <= bound, 1 <= b <= bound.
    Rational rational(int bound = 4);
    GaussRational gauss(int bound = 4);
    /// Nonzero Gaussian rational.
    GaussRational gauss_nonzero(int bound = 4);
    /// Series with up to `terms` nonzero low-order coefficients.
    HbarSeries series(int terms = 3);
    /// Series with zero constant term.
    HbarSeries series_no_constant(int terms = 3);
    /// Polynomial in the first `vars` spectral parameters, total degree <= degree.
    ParamPoly param_poly(int vars = 2, int degree = 2, int terms = 3);
    /// ParamPoly over a product of factors drawn from {lambda, mu, lambda - mu, lambda + mu}.
    ParamRat param_rat(int vars = 2);

    /// Random observable on particles 1..particles: up to `terms` terms, each a
    /// Gaussian-rational (possibly hbar-dependent) constant times q^a p^b exp(v q + u p)
    /// per particle with a, b <= 2 and v, u in {-1, -1/2, 0, 1/2, 1}.
    PhasePoly phase_poly(int particles = 2, int terms = 3, bool allow_q_powers = true);
    /// p-free observable (test wavefunction class).
    PhasePoly wavefn(int particles = 2, int terms = 2);

private:
    PhaseKey key(int particles, bool allow_q_powers, bool allow_p);

    std::mt19937_64 rng_;
    int order_;
};

} // namespace starlax
