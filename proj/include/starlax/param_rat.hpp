#pragma once

#include <string>
#include <utility>
#include <vector>

#include "starlax/spectral_poly.hpp"

namespace starlax {

/// Rational function in the spectral parameters: ParamPoly numerator over a
/// product of hbar-free denominator factors.
///
/// Denominator factors are stored monic (leading graded-lex coefficient 1),
/// sorted, with multiplicities, and are assumed irreducible by the caller
/// (lambda, lambda - mu, lambda + mu, ...). After every operation each factor is
/// divided out of the numerator as far as exactly possible, so for irreducible
/// factors the representation is canonical and structural equality coincides with
/// equality of rational functions. ratfun_eq does not rely on this.
class ParamRat {
public:
    using Factor = std::pair<DenPoly, int>;

    ParamRat() = default;
    ParamRat(ParamPoly num); // NOLINT(google-explicit-constructor)
    /// num / prod(factor^multiplicity). Factors need not be monic; constant factors fold into num.
    ParamRat(ParamPoly num, std::vector<Factor> den);

    static ParamRat constant(const GaussRational& c, int order);
    static ParamRat constant(HbarSeries c);
    static ParamRat variable(int var, int order);

    [[nodiscard]] const ParamPoly& num() const { return num_; }
    [[nodiscard]] const std::vector<Factor>& den_factors() const { return den_; }
    /// Expanded denominator polynomial.
    [[nodiscard]] DenPoly den() const;
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.empty(); }
    [[nodiscard]] int order() const { return order_of(num_); }

    ParamRat& operator+=(const ParamRat& o);
    ParamRat& operator-=(const ParamRat& o);
    ParamRat& operator*=(const ParamRat& o);
    ParamRat& operator*=(const HbarSeries& s);
    ParamRat& operator*=(const GaussRational& c);

    friend ParamRat operator+(ParamRat a, const ParamRat& b) { return a += b; }
    friend ParamRat operator-(ParamRat a, const ParamRat& b) { return a -= b; }
    friend ParamRat operator*(const ParamRat& a, const ParamRat& b);
    friend ParamRat operator*(ParamRat a, const HbarSeries& s) { return a *= s; }
    friend ParamRat operator*(ParamRat a, const GaussRational& c) { return a *= c; }
    friend ParamRat operator-(ParamRat a);

    /// Structural equality of the canonical form.
    friend bool operator==(const ParamRat& a, const ParamRat& b) = default;

    /// Complex conjugation of every coefficient (hbar and spectral parameters real).
    [[nodiscard]] ParamRat conj() const;
    [[nodiscard]] ParamRat renamed(const SpectralRenaming& map) const;

    /// "num" or "(num)/(factor^m*...)".
    [[nodiscard]] std::string str() const;

private:
    void reduce();

    ParamPoly num_;
    std::vector<Factor> den_;
};

/// Equality by cross-multiplication: a.num*b.den - b.num*a.den == 0.
[[nodiscard]] bool ratfun_eq(const ParamRat& a, const ParamRat& b);

} // namespace starlax
