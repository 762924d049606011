#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "starlax/errors.hpp"
#include "starlax/hbar_series.hpp"
#include "starlax/rational.hpp"

namespace starlax {

/// Number of spectral parameters: lambda, mu, nu (tensor legs 1, 2, 3).
inline constexpr int kSpectralVars = 3;

using SpectralExp = std::array<int, kSpectralVars>;

/// Spectral parameter names in variable order.
inline constexpr std::array<const char*, kSpectralVars> kSpectralNames{"lambda", "mu", "nu"};

inline int total_degree(const SpectralExp& e) { return e[0] + e[1] + e[2]; }

/// Graded lexicographic order, largest first.
struct GrlexGreater {
    bool operator()(const SpectralExp& a, const SpectralExp& b) const
    {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// A variable renaming: variable v becomes variable map[v]. Must be injective.
using SpectralRenaming = std::array<int, kSpectralVars>;

/// Sparse polynomial in the spectral parameters with coefficients in C
/// (Rational for denominators, HbarSeries for numerators). Terms are kept in
/// graded-lex order with no zero coefficients.
template <class C>
class SpectralPoly {
public:
    using Term = std::pair<SpectralExp, C>;

    SpectralPoly() = default;

    static SpectralPoly constant(C c) { return monomial(SpectralExp{}, std::move(c)); }

    static SpectralPoly monomial(SpectralExp e, C c)
    {
        SpectralPoly p;
        for (int x : e)
            if (x < 0) throw ArgumentError("negative spectral exponent");
        if (!c.is_zero()) p.t_.emplace_back(e, std::move(c));
        return p;
    }

    /// Sorts and merges arbitrary terms.
    static SpectralPoly from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return GrlexGreater{}(a.first, b.first); });
        SpectralPoly p;
        for (auto& t : terms) {
            if (!p.t_.empty() && p.t_.back().first == t.first) {
                p.t_.back().second += t.second;
                if (p.t_.back().second.is_zero()) p.t_.pop_back();
            } else if (!t.second.is_zero()) {
                p.t_.push_back(std::move(t));
            }
        }
        return p;
    }

    [[nodiscard]] const std::vector<Term>& terms() const { return t_; }
    [[nodiscard]] bool is_zero() const { return t_.empty(); }
    [[nodiscard]] bool is_constant() const { return t_.empty() || (t_.size() == 1 && total_degree(t_[0].first) == 0); }
    [[nodiscard]] const Term& leading() const { return t_.front(); }

    [[nodiscard]] int degree_in(int var) const
    {
        int d = 0;
        for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<std::size_t>(var)]);
        return d;
    }

    /// Constant coefficient (zero if absent).
    [[nodiscard]] C constant_term() const
    {
        if (!t_.empty() && total_degree(t_.back().first) == 0) return t_.back().second;
        return C{};
    }

    SpectralPoly& operator+=(const SpectralPoly& o) { return *this = combine(*this, o, false); }
    SpectralPoly& operator-=(const SpectralPoly& o) { return *this = combine(*this, o, true); }

    friend SpectralPoly operator+(const SpectralPoly& a, const SpectralPoly& b) { return combine(a, b, false); }
    friend SpectralPoly operator-(const SpectralPoly& a, const SpectralPoly& b) { return combine(a, b, true); }
    friend SpectralPoly operator-(SpectralPoly a)
    {
        for (auto& t : a.t_) t.second = -t.second;
        return a;
    }

    friend SpectralPoly operator*(const SpectralPoly& a, const SpectralPoly& b)
    {
        if (a.t_.empty() || b.t_.empty()) return {};
        if (b.is_constant()) return a.scaled(b.t_[0].second);
        if (a.is_constant()) return b.scaled(a.t_[0].second);
        std::vector<Term> raw;
        raw.reserve(a.t_.size() * b.t_.size());
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_)
                raw.emplace_back(SpectralExp{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return from_terms(std::move(raw));
    }

    /// Multiplies every coefficient by s; drops coefficients that truncate to zero.
    template <class S>
    [[nodiscard]] SpectralPoly scaled(const S& s) const
    {
        SpectralPoly p;
        p.t_.reserve(t_.size());
        for (const auto& [e, c] : t_) {
            C v = c * s;
            if (!v.is_zero()) p.t_.emplace_back(e, std::move(v));
        }
        return p;
    }

    /// Applies f to every coefficient.
    template <class F>
    [[nodiscard]] auto map_coeffs(F&& f) const
    {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        std::vector<typename SpectralPoly<D>::Term> raw;
        raw.reserve(t_.size());
        for (const auto& [e, c] : t_) raw.emplace_back(e, f(c));
        return SpectralPoly<D>::from_terms(std::move(raw));
    }

    [[nodiscard]] SpectralPoly renamed(const SpectralRenaming& map) const
    {
        std::vector<Term> raw;
        raw.reserve(t_.size());
        for (const auto& [e, c] : t_) {
            SpectralExp r{};
            for (int v = 0; v < kSpectralVars; ++v) r[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])] += e[static_cast<std::size_t>(v)];
            raw.emplace_back(r, c);
        }
        return from_terms(std::move(raw));
    }

    friend bool operator==(const SpectralPoly& a, const SpectralPoly& b) { return a.t_ == b.t_; }

    /// Renders with the given coefficient printer; coefficients are parenthesised when compound.
    template <class P>
    [[nodiscard]] std::string str(P&& coeff_str) const
    {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : t_) {
            std::string cs = coeff_str(c);
            std::string mono;
            for (int v = 0; v < kSpectralVars; ++v) {
                int x = e[static_cast<std::size_t>(v)];
                if (x == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += kSpectralNames[static_cast<std::size_t>(v)];
                if (x > 1) mono += "^" + std::to_string(x);
            }
            bool compound = cs.find_first_of(" ") != std::string::npos;
            if (compound) cs = "(" + cs + ")";
            bool negative = !compound && cs.front() == '-';
            if (!out.empty()) {
                out += negative ? " - " : " + ";
                if (negative) cs.erase(0, 1);
            }
            if (mono.empty())
                out += cs;
            else if (cs == "1")
                out += mono;
            else if (cs == "-1")
                out += "-" + mono;
            else
                out += cs + "*" + mono;
        }
        return out;
    }

private:
    static SpectralPoly combine(const SpectralPoly& a, const SpectralPoly& b, bool subtract)
    {
        SpectralPoly r;
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        GrlexGreater greater;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() || (i < a.t_.size() && greater(a.t_[i].first, b.t_[j].first))) {
                r.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || greater(b.t_[j].first, a.t_[i].first)) {
                r.t_.emplace_back(b.t_[j].first, subtract ? C(-b.t_[j].second) : b.t_[j].second);
                ++j;
            } else {
                C c = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
                if (!c.is_zero()) r.t_.emplace_back(a.t_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> t_;
};

/// Polynomial in the spectral parameters with hbar-series coefficients.
using ParamPoly = SpectralPoly<HbarSeries>;
/// hbar-free polynomial with rational coefficients (denominator factors).
using DenPoly = SpectralPoly<Rational>;

/// The variable lambda_{var+1} as a ParamPoly.
[[nodiscard]] ParamPoly spectral_variable(int var, int order);
[[nodiscard]] DenPoly den_variable(int var);

[[nodiscard]] ParamPoly lift(const DenPoly& p, int order);

/// Truncation order of the first coefficient, or kUnsetOrder for zero.
[[nodiscard]] int order_of(const ParamPoly& p);

/// Exact quotient of f by a monic divisor, if the division leaves no remainder.
[[nodiscard]] bool try_divide(const ParamPoly& f, const DenPoly& monic_divisor, ParamPoly& quotient);

/// Lexicographic comparison of rational polynomials (for canonical factor order).
[[nodiscard]] std::strong_ordering compare(const DenPoly& a, const DenPoly& b);

[[nodiscard]] std::string to_string(const ParamPoly& p);
[[nodiscard]] std::string to_string(const DenPoly& p);

} // namespace starlax
