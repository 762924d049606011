#pragma once

#include <set>
#include <string>
#include <vector>

#include "starlax/param_rat.hpp"

namespace starlax {

/// Factor of a phase-space monomial belonging to one particle:
/// q^qpow * p^ppow * exp(qlin*q + plin*p).
struct ParticleExp {
    int particle = 0;
    int qpow = 0;
    int ppow = 0;
    Rational qlin;
    Rational plin;

    [[nodiscard]] bool is_trivial() const { return qpow == 0 && ppow == 0 && qlin.is_zero() && plin.is_zero(); }
    friend auto operator<=>(const ParticleExp&, const ParticleExp&) = default;
};

/// Sorted by particle, no trivial entries. The empty key is the constant 1.
using PhaseKey = std::vector<ParticleExp>;

/// Fluent builder for phase keys: Mono{}.p(1, 2).exp_q(1, 1).exp_q(2, -1).
class Mono {
public:
    Mono& q(int particle, int power = 1);
    Mono& p(int particle, int power = 1);
    Mono& exp_q(int particle, const Rational& coeff);
    Mono& exp_p(int particle, const Rational& coeff);

    [[nodiscard]] const PhaseKey& key() const { return key_; }
    operator const PhaseKey&() const { return key_; } // NOLINT(google-explicit-constructor)

private:
    ParticleExp& slot(int particle);
    void prune();

    PhaseKey key_;
};

/// Product of two keys (powers and exponents add).
[[nodiscard]] PhaseKey multiply_keys(const PhaseKey& a, const PhaseKey& b);

struct PhaseTerm {
    ParamRat coeff;
    PhaseKey key;
};

/// Canonical sum of coeff * monomial * exponential terms on phase space.
/// Terms are sorted by key with distinct keys and nonzero coefficients; the
/// empty sum is the zero observable.
class PhasePoly {
public:
    PhasePoly() = default;
    PhasePoly(ParamRat coeff, PhaseKey key = {});

    static PhasePoly constant(ParamRat c) { return PhasePoly(std::move(c)); }
    static PhasePoly constant(const GaussRational& c, int order) { return PhasePoly(ParamRat::constant(c, order)); }
    static PhasePoly q(int particle, int order);
    static PhasePoly p(int particle, int order);

    [[nodiscard]] const std::vector<PhaseTerm>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    /// Truncation order of the coefficients (kUnsetOrder for zero).
    [[nodiscard]] int order() const;
    /// Particles the observable depends on.
    [[nodiscard]] std::set<int> particles() const;
    /// True if no term carries p-dependence.
    [[nodiscard]] bool is_p_free() const;

    PhasePoly& operator+=(const PhasePoly& o);
    PhasePoly& operator-=(const PhasePoly& o);
    PhasePoly& operator*=(const ParamRat& c);
    PhasePoly& operator*=(const GaussRational& c);

    friend PhasePoly operator+(const PhasePoly& a, const PhasePoly& b);
    friend PhasePoly operator-(const PhasePoly& a, const PhasePoly& b);
    friend PhasePoly operator-(PhasePoly a);
    /// Pointwise (commutative) product.
    friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);
    friend PhasePoly operator*(PhasePoly a, const ParamRat& c) { return a *= c; }
    friend PhasePoly operator*(PhasePoly a, const GaussRational& c) { return a *= c; }

    friend bool operator==(const PhasePoly& a, const PhasePoly& b);

    [[nodiscard]] PhasePoly renamed_spectral(const SpectralRenaming& map) const;
    /// Keeps only the hbar^k part of every coefficient (as an order-preserving series).
    [[nodiscard]] PhasePoly hbar_coefficient(int k) const;

    /// Terms in canonical order, e.g. "p1^2 + (-1/2*i*hbar)*exp(q1 - q2)".
    [[nodiscard]] std::string str() const;

    friend PhasePoly normalize(std::vector<PhaseTerm> raw);

private:
    std::vector<PhaseTerm> terms_;
};

/// Merges like keys, drops zero coefficients, sorts keys.
[[nodiscard]] PhasePoly normalize(std::vector<PhaseTerm> raw);

enum class Coord { q, p };

struct PhaseVar {
    Coord coord;
    int particle;
};

[[nodiscard]] PhasePoly partial(const PhasePoly& f, PhaseVar var);

/// {F,G} = sum_j (dF/dq_j dG/dp_j - dF/dp_j dG/dq_j).
[[nodiscard]] PhasePoly poisson(const PhasePoly& f, const PhasePoly& g);

/// Weyl (Moyal) star product, truncated at the coefficient order.
[[nodiscard]] PhasePoly star_weyl(const PhasePoly& f, const PhasePoly& g);

/// Standard-ordered star product exp((hbar/i) sum_j d/dp_j (x) d/dq_j).
[[nodiscard]] PhasePoly star_standard(const PhasePoly& f, const PhasePoly& g);

/// N = exp((hbar/2i) sum_j d^2/dq_j dp_j) for direction +1, its inverse for -1.
[[nodiscard]] PhasePoly n_transform(const PhasePoly& f, int direction);

/// Complex conjugation of all coefficients; hbar is real.
[[nodiscard]] PhasePoly conjugate(const PhasePoly& f);

/// Pullback along (q, p) -> (q, -p).
[[nodiscard]] PhasePoly parity(const PhasePoly& f);

/// F*G - G*F with the Weyl star product.
[[nodiscard]] PhasePoly star_commutator(const PhasePoly& f, const PhasePoly& g);

/// k-fold Weyl star power (k >= 0; F^0 needs an explicit order).
[[nodiscard]] PhasePoly star_power(const PhasePoly& f, int k, int order);

} // namespace starlax
