#pragma once

#include <string>
#include <vector>

#include "starlax/rational.hpp"

namespace starlax {

/// Truncated formal power series c_0 + c_1 hbar + ... + c_N hbar^N over Q(i).
///
/// Every nonzero series carries its truncation order N, and all ring operations
/// require matching orders. Logically the series has exactly N+1 coefficients;
/// trailing zero coefficients are not stored. A default-constructed series is a
/// zero whose order is left open: it adopts the order of whatever it is combined
/// with.
class HbarSeries {
public:
    static constexpr int kUnsetOrder = -1;

    HbarSeries() = default;
    explicit HbarSeries(int order);
    HbarSeries(int order, GaussRational constant);

    /// c * hbar^power (zero if power > order).
    static HbarSeries monomial(int order, GaussRational c, int power);
    static HbarSeries from_coeffs(int order, std::vector<GaussRational> coeffs);

    [[nodiscard]] int order() const { return order_; }
    /// Coefficient of hbar^k; zero for k beyond the stored range.
    [[nodiscard]] const GaussRational& operator[](int k) const;
    /// Number of stored coefficients (degree + 1, or 0 for the zero series).
    [[nodiscard]] int stored() const { return static_cast<int>(c_.size()); }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    [[nodiscard]] bool is_one() const;

    /// Multiplicative inverse; requires a nonzero constant term.
    [[nodiscard]] HbarSeries inverse() const;
    [[nodiscard]] HbarSeries conj() const;
    /// Same coefficients reinterpreted at another truncation order (drops excess terms).
    [[nodiscard]] HbarSeries with_order(int order) const;

    HbarSeries& operator+=(const HbarSeries& o);
    HbarSeries& operator-=(const HbarSeries& o);
    HbarSeries& operator*=(const HbarSeries& o);
    HbarSeries& operator*=(const GaussRational& c);

    friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
    friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) { return a -= b; }
    friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
    friend HbarSeries operator*(HbarSeries a, const GaussRational& c) { return a *= c; }
    friend HbarSeries operator-(HbarSeries a);
    /// Equal coefficients; the order is compared only when both sides are nonzero.
    friend bool operator==(const HbarSeries& a, const HbarSeries& b);

    /// e.g. "1 + i/2*hbar - 1/8*hbar^2".
    [[nodiscard]] std::string str() const;

private:
    int merge_order(const HbarSeries& o) const;
    void trim();

    int order_ = kUnsetOrder;
    std::vector<GaussRational> c_;
};

enum class SeriesFunction { exp, tanh };

/// Taylor series of kind(scale * hbar), truncated at the given order.
[[nodiscard]] HbarSeries series_func(SeriesFunction kind, const GaussRational& scale, int order);

/// rho = i*hbar/2.
[[nodiscard]] HbarSeries rho_series(int order);

} // namespace starlax
