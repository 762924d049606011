#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace starlax {

/// Exact rational number, always in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline and
/// combined with 128-bit intermediates; anything larger lives in a shared
/// arbitrary-precision value. The representation is unique: a value is stored
/// big only if it does not fit inline.
class Rational {
public:
    using value_type = boost::multiprecision::cpp_rational;
    using integer_type = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(long long n) : n_(n) // NOLINT(google-explicit-constructor)
    {
        if (n == std::numeric_limits<long long>::min()) assign(value_type(n));
    }
    Rational(long long n, long long d);
    explicit Rational(const value_type& v) { assign(v); }

    /// Parses "a", "-a" or "a/b". Anything else (including decimals) throws ArgumentError.
    static Rational parse(std::string_view text);

    [[nodiscard]] value_type value() const;
    [[nodiscard]] integer_type numerator() const;
    [[nodiscard]] integer_type denominator() const;

    [[nodiscard]] bool is_zero() const { return !big_ && n_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_integer() const;

    /// Throws ArgumentError if not an integer or out of range.
    [[nodiscard]] long long to_integer() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b)
    {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "a" for integers, "a/b" otherwise.
    [[nodiscard]] std::string str() const;

private:
    void assign(const value_type& v);
    /// Sets n/d from 128-bit parts already in lowest terms (d > 0), promoting if needed.
    void set_reduced(__int128 n, __int128 d);

    long long n_ = 0;
    long long d_ = 1;
    std::shared_ptr<const value_type> big_;
};

[[nodiscard]] Rational pow(const Rational& base, int exponent);
[[nodiscard]] Rational factorial(int n);
[[nodiscard]] Rational binomial(int n, int k);

/// Element of Q(i).
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussRational(long long re) : re_(re) {}           // NOLINT(google-explicit-constructor)
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }

    [[nodiscard]] GaussRational conj() const { return {re_, -im_}; }
    /// Throws ArgumentError on zero.
    [[nodiscard]] GaussRational inverse() const;

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator*=(const Rational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator*(GaussRational a, const Rational& b) { return a *= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussRational&, const GaussRational&) = default;

    /// "a/b", "c/d*i" or "(a/b+c/d*i)".
    [[nodiscard]] std::string str() const;

private:
    Rational re_;
    Rational im_;
};

[[nodiscard]] GaussRational pow(const GaussRational& base, int exponent);

} // namespace starlax
