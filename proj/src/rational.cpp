#include "starlax/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "starlax/errors.hpp"

namespace starlax {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational::integer_type parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ArgumentError("not an exact rational: '" + std::string(s) + "'");
    Rational::integer_type v{std::string(s)};
    return negative ? Rational::integer_type(-v) : v;
}

using u128 = unsigned __int128;
using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<long long>::max();

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational::value_type to_big(i128 n, i128 d)
{
    auto conv = [](i128 x) {
        bool neg = x < 0;
        u128 m = uabs(x);
        Rational::integer_type r = static_cast<std::uint64_t>(m >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(m);
        return neg ? Rational::integer_type(-r) : r;
    };
    return Rational::value_type(conv(n), conv(d));
}

} // namespace

Rational::Rational(long long n, long long d)
{
    if (d == 0) throw ArgumentError("rational with zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    u128 g = gcd128(uabs(nn), static_cast<u128>(dd));
    if (g > 1) {
        nn /= static_cast<i128>(g);
        dd /= static_cast<i128>(g);
    }
    set_reduced(nn, dd);
}

void Rational::assign(const value_type& v)
{
    const auto& num = boost::multiprecision::numerator(v);
    const auto& den = boost::multiprecision::denominator(v);
    if (num <= kMax && num >= -kMax && den <= kMax) {
        n_ = num.convert_to<long long>();
        d_ = den.convert_to<long long>();
        big_.reset();
    } else {
        n_ = 0;
        d_ = 1;
        big_ = std::make_shared<const value_type>(v);
    }
}

void Rational::set_reduced(i128 n, i128 d)
{
    if (n <= kMax && n >= -kMax && d <= kMax) {
        n_ = static_cast<long long>(n);
        d_ = static_cast<long long>(d);
        big_.reset();
    } else {
        assign(to_big(n, d));
    }
}

Rational::value_type Rational::value() const
{
    if (big_) return *big_;
    return value_type(n_, d_);
}

int Rational::sign() const
{
    if (big_) return big_->sign();
    return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

Rational& Rational::operator+=(const Rational& o)
{
    if (big_ || o.big_) {
        assign(value() + o.value());
        return *this;
    }
    if (o.n_ == 0) return *this;
    if (d_ == 1 && o.d_ == 1) {
        set_reduced(static_cast<i128>(n_) + o.n_, 1);
        return *this;
    }
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(d_), static_cast<std::uint64_t>(o.d_));
    const i128 da = d_ / static_cast<long long>(g), db = o.d_ / static_cast<long long>(g);
    i128 t = static_cast<i128>(n_) * db + static_cast<i128>(o.n_) * da;
    if (t == 0) {
        n_ = 0;
        d_ = 1;
        return *this;
    }
    u128 g2 = g == 1 ? 1 : gcd128(uabs(t), g);
    i128 d = da * o.d_;
    if (g2 > 1) {
        t /= static_cast<i128>(g2);
        d /= static_cast<i128>(g2);
    }
    set_reduced(t, d);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o)
{
    if (big_ || o.big_) {
        assign(value() * o.value());
        return *this;
    }
    if (n_ == 0 || o.n_ == 0) {
        n_ = 0;
        d_ = 1;
        return *this;
    }
    i128 a = n_, b = o.n_, c = d_, d = o.d_;
    if (c != 1 || d != 1) {
        u128 g1 = gcd128(uabs(a), static_cast<u128>(d));
        u128 g2 = gcd128(uabs(b), static_cast<u128>(c));
        a /= static_cast<i128>(g1);
        d /= static_cast<i128>(g1);
        b /= static_cast<i128>(g2);
        c /= static_cast<i128>(g2);
    }
    set_reduced(a * b, c * d);
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw ArgumentError("division by zero");
    if (big_ || o.big_) {
        assign(value() / o.value());
        return *this;
    }
    Rational inv;
    inv.n_ = o.n_ < 0 ? -o.d_ : o.d_;
    inv.d_ = o.n_ < 0 ? -o.n_ : o.n_;
    return *this *= inv;
}

Rational operator-(const Rational& a)
{
    Rational r;
    if (a.big_) {
        r.assign(-*a.big_);
    } else {
        r.n_ = -a.n_;
        r.d_ = a.d_;
    }
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.n_) * b.d_, r = static_cast<i128>(b.n_) * a.d_;
        return l <=> r;
    }
    auto x = a.value(), y = b.value();
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(value_type(parse_integer(text)));
    auto num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ArgumentError("not an exact rational: '" + std::string(text) + "'");
    integer_type den(std::string{den_text});
    if (den == 0) throw ArgumentError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(value_type(num, den));
}

Rational::integer_type Rational::numerator() const
{
    return big_ ? integer_type(boost::multiprecision::numerator(*big_)) : integer_type(n_);
}

Rational::integer_type Rational::denominator() const
{
    return big_ ? integer_type(boost::multiprecision::denominator(*big_)) : integer_type(d_);
}

bool Rational::is_integer() const { return big_ ? boost::multiprecision::denominator(*big_) == 1 : d_ == 1; }

long long Rational::to_integer() const
{
    if (!is_integer()) throw ArgumentError("not an integer: " + str());
    if (big_) throw ArgumentError("integer out of range: " + str());
    return n_;
}

std::string Rational::str() const
{
    if (!big_) return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

Rational pow(const Rational& base, int exponent)
{
    if (exponent < 0) return pow(Rational(1) / base, -exponent);
    Rational result(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

Rational factorial(int n)
{
    Rational::integer_type f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(Rational::value_type(f));
}

Rational binomial(int n, int k)
{
    if (k < 0 || k > n) return Rational(0);
    Rational::integer_type b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return Rational(Rational::value_type(b));
}

GaussRational GaussRational::inverse() const
{
    if (is_zero()) throw ArgumentError("inverse of zero");
    Rational norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
}

GaussRational& GaussRational::operator+=(const GaussRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o)
{
    if (o.im_.is_zero()) return *this *= o.re_;
    if (im_.is_zero()) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
}

GaussRational& GaussRational::operator*=(const Rational& o)
{
    re_ *= o;
    im_ *= o;
    return *this;
}

std::string GaussRational::str() const
{
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.is_one() ? "i" : (im_ == Rational(-1) ? "-i" : im_.str() + "*i");
    if (re_.is_zero()) return imag;
    std::string sep = im_.sign() < 0 ? "" : "+";
    return "(" + re_.str() + sep + imag + ")";
}

GaussRational pow(const GaussRational& base, int exponent)
{
    if (exponent < 0) return pow(base.inverse(), -exponent);
    GaussRational result(1);
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

} // namespace starlax
