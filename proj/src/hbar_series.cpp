#include "starlax/hbar_series.hpp"

#include <algorithm>

#include "starlax/errors.hpp"

namespace starlax {

namespace {
const GaussRational kZero{};
}

HbarSeries::HbarSeries(int order) : order_(order)
{
    if (order < 0) throw ConfigurationError("truncation order must be nonnegative");
}

HbarSeries::HbarSeries(int order, GaussRational constant) : HbarSeries(order)
{
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

HbarSeries HbarSeries::monomial(int order, GaussRational c, int power)
{
    HbarSeries s(order);
    if (power <= order && !c.is_zero()) {
        s.c_.resize(static_cast<std::size_t>(power) + 1);
        s.c_.back() = std::move(c);
    }
    return s;
}

HbarSeries HbarSeries::from_coeffs(int order, std::vector<GaussRational> coeffs)
{
    HbarSeries s(order);
    if (coeffs.size() > static_cast<std::size_t>(order) + 1) coeffs.resize(static_cast<std::size_t>(order) + 1);
    s.c_ = std::move(coeffs);
    s.trim();
    return s;
}

const GaussRational& HbarSeries::operator[](int k) const
{
    if (k < 0 || k >= stored()) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

bool HbarSeries::is_one() const { return c_.size() == 1 && c_[0] == GaussRational(1); }

void HbarSeries::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int HbarSeries::merge_order(const HbarSeries& o) const
{
    if (order_ == kUnsetOrder) return o.order_;
    if (o.order_ == kUnsetOrder || o.order_ == order_) return order_;
    throw ConfigurationError("truncation order mismatch: " + std::to_string(order_) + " vs " +
                             std::to_string(o.order_));
}

HbarSeries HbarSeries::inverse() const
{
    if (c_.empty() || c_[0].is_zero()) throw ArgumentError("series inverse needs a nonzero constant term");
    const int n = order_;
    std::vector<GaussRational> inv(static_cast<std::size_t>(n) + 1);
    GaussRational c0inv = c_[0].inverse();
    inv[0] = c0inv;
    for (int k = 1; k <= n; ++k) {
        GaussRational acc;
        for (int j = 1; j <= k; ++j) acc += (*this)[j] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -(acc * c0inv);
    }
    return from_coeffs(n, std::move(inv));
}

HbarSeries HbarSeries::conj() const
{
    HbarSeries s = *this;
    for (auto& c : s.c_) c = c.conj();
    return s;
}

HbarSeries HbarSeries::with_order(int order) const
{
    HbarSeries s(order);
    s.c_ = c_;
    if (s.c_.size() > static_cast<std::size_t>(order) + 1) s.c_.resize(static_cast<std::size_t>(order) + 1);
    s.trim();
    return s;
}

HbarSeries& HbarSeries::operator+=(const HbarSeries& o)
{
    order_ = merge_order(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

HbarSeries& HbarSeries::operator-=(const HbarSeries& o)
{
    order_ = merge_order(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b)
{
    HbarSeries r;
    r.order_ = a.merge_order(b);
    if (a.c_.empty() || b.c_.empty()) return r;
    if (b.c_.size() == 1) return HbarSeries(a) *= b.c_[0];
    if (a.c_.size() == 1) return HbarSeries(b) *= a.c_[0];
    const std::size_t len = std::min(a.c_.size() + b.c_.size() - 1, static_cast<std::size_t>(r.order_) + 1);
    r.c_.resize(len);
    for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size() && i + j < len; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

HbarSeries& HbarSeries::operator*=(const HbarSeries& o)
{
    *this = *this * o;
    return *this;
}

HbarSeries& HbarSeries::operator*=(const GaussRational& c)
{
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

HbarSeries operator-(HbarSeries a)
{
    for (auto& x : a.c_) x = -x;
    return a;
}

bool operator==(const HbarSeries& a, const HbarSeries& b)
{
    if (a.c_ != b.c_) return false;
    if (a.c_.empty()) return true;
    return a.order_ == b.order_;
}

std::string HbarSeries::str() const
{
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string coeff = c_[k].str();
        bool negative = !coeff.empty() && coeff.front() == '-';
        if (!out.empty()) {
            out += negative ? " - " : " + ";
            if (negative) coeff.erase(0, 1);
        }
        if (k == 0) {
            out += coeff;
            continue;
        }
        if (coeff != "1") out += coeff + "*";
        out += k == 1 ? "hbar" : "hbar^" + std::to_string(k);
    }
    return out;
}

HbarSeries series_func(SeriesFunction kind, const GaussRational& scale, int order)
{
    // exp(x) = sum x^k/k!, x = scale*hbar
    std::vector<GaussRational> e(static_cast<std::size_t>(order) + 1);
    GaussRational power(1);
    for (int k = 0; k <= order; ++k) {
        e[static_cast<std::size_t>(k)] = power * (Rational(1) / factorial(k));
        power *= scale;
    }
    HbarSeries ex = HbarSeries::from_coeffs(order, e);
    if (kind == SeriesFunction::exp) return ex;

    // tanh = sinh/cosh, split exp into odd and even parts
    std::vector<GaussRational> odd(e.size()), even(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) (k % 2 ? odd : even)[k] = e[k];
    HbarSeries sinh = HbarSeries::from_coeffs(order, std::move(odd));
    HbarSeries cosh = HbarSeries::from_coeffs(order, std::move(even));
    return sinh * cosh.inverse();
}

HbarSeries rho_series(int order)
{
    return HbarSeries::monomial(order, GaussRational(Rational(0), Rational(1, 2)), 1);
}

} // namespace starlax
