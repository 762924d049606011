#include "starlax/param_rat.hpp"

#include <algorithm>

namespace starlax {

namespace {

bool factor_less(const ParamRat::Factor& a, const ParamRat::Factor& b) { return compare(a.first, b.first) < 0; }

ParamPoly power_product(const std::vector<ParamRat::Factor>& factors, int order)
{
    ParamPoly p = ParamPoly::constant(HbarSeries(order, GaussRational(1)));
    for (const auto& [f, m] : factors) {
        ParamPoly lf = lift(f, order);
        for (int k = 0; k < m; ++k) p = p * lf;
    }
    return p;
}

/// Multiplicity-wise max/sum of two sorted factor lists.
std::vector<ParamRat::Factor> merge_factors(const std::vector<ParamRat::Factor>& a,
                                            const std::vector<ParamRat::Factor>& b, bool add)
{
    std::vector<ParamRat::Factor> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && factor_less(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || factor_less(b[j], a[i])) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, add ? a[i].second + b[j].second : std::max(a[i].second, b[j].second));
            ++i;
            ++j;
        }
    }
    return out;
}

/// Factors of `full` not covered by `part` (multiplicity difference).
std::vector<ParamRat::Factor> missing_factors(const std::vector<ParamRat::Factor>& full,
                                              const std::vector<ParamRat::Factor>& part)
{
    std::vector<ParamRat::Factor> out;
    std::size_t j = 0;
    for (const auto& f : full) {
        while (j < part.size() && factor_less(part[j], f)) ++j;
        int have = (j < part.size() && part[j].first == f.first) ? part[j].second : 0;
        if (f.second > have) out.emplace_back(f.first, f.second - have);
    }
    return out;
}

} // namespace

ParamRat::ParamRat(ParamPoly num) : num_(std::move(num)) {}

ParamRat::ParamRat(ParamPoly num, std::vector<Factor> den) : num_(std::move(num))
{
    for (auto& [f, m] : den) {
        if (f.is_zero()) throw ArgumentError("zero denominator factor");
        if (m < 0) throw ArgumentError("negative denominator multiplicity");
        if (m == 0) continue;
        Rational lc = f.leading().second;
        // num / (lc * f')^m = (num / lc^m) / f'^m
        GaussRational scale(Rational(1) / pow(lc, m));
        num_ = num_.scaled(scale);
        if (f.is_constant()) continue;
        DenPoly monic = f.scaled(Rational(1) / lc);
        den_ = merge_factors(den_, {{std::move(monic), m}}, true);
    }
    reduce();
}

ParamRat ParamRat::constant(const GaussRational& c, int order)
{
    return ParamRat(ParamPoly::constant(HbarSeries(order, c)));
}

ParamRat ParamRat::constant(HbarSeries c) { return ParamRat(ParamPoly::constant(std::move(c))); }

ParamRat ParamRat::variable(int var, int order) { return ParamRat(spectral_variable(var, order)); }

DenPoly ParamRat::den() const
{
    DenPoly p = DenPoly::constant(Rational(1));
    for (const auto& [f, m] : den_)
        for (int k = 0; k < m; ++k) p = p * f;
    return p;
}

void ParamRat::reduce()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& [f, m] : den_) {
        ParamPoly q;
        while (m > 0 && try_divide(num_, f, q)) {
            num_ = std::move(q);
            --m;
        }
    }
    std::erase_if(den_, [](const Factor& f) { return f.second == 0; });
}

ParamRat& ParamRat::operator+=(const ParamRat& o)
{
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        const int order = order_of(num_);
        auto lcm = merge_factors(den_, o.den_, false);
        num_ = num_ * power_product(missing_factors(lcm, den_), order) +
               o.num_ * power_product(missing_factors(lcm, o.den_), order);
        den_ = std::move(lcm);
    }
    reduce();
    return *this;
}

ParamRat& ParamRat::operator-=(const ParamRat& o) { return *this += -o; }

ParamRat operator*(const ParamRat& a, const ParamRat& b)
{
    ParamRat r;
    r.num_ = a.num_ * b.num_;
    if (r.num_.is_zero()) return r;
    if (a.den_.empty())
        r.den_ = b.den_;
    else if (b.den_.empty())
        r.den_ = a.den_;
    else
        r.den_ = merge_factors(a.den_, b.den_, true);
    if (!r.den_.empty()) r.reduce();
    return r;
}

ParamRat& ParamRat::operator*=(const ParamRat& o) { return *this = *this * o; }

ParamRat& ParamRat::operator*=(const HbarSeries& s)
{
    num_ = num_.scaled(s);
    if (num_.is_zero()) den_.clear();
    else if (!den_.empty() && !s.is_constant()) reduce();
    return *this;
}

ParamRat& ParamRat::operator*=(const GaussRational& c)
{
    num_ = num_.scaled(c);
    if (num_.is_zero()) den_.clear();
    return *this;
}

ParamRat operator-(ParamRat a)
{
    a.num_ = -a.num_;
    return a;
}

ParamRat ParamRat::conj() const
{
    ParamRat r = *this;
    r.num_ = num_.map_coeffs([](const HbarSeries& s) { return s.conj(); });
    return r;
}

ParamRat ParamRat::renamed(const SpectralRenaming& map) const
{
    std::vector<Factor> den;
    den.reserve(den_.size());
    for (const auto& [f, m] : den_) den.emplace_back(f.renamed(map), m);
    return ParamRat(num_.renamed(map), std::move(den));
}

std::string ParamRat::str() const
{
    std::string n = to_string(num_);
    if (den_.empty()) return n;
    std::string d;
    for (const auto& [f, m] : den_) {
        if (!d.empty()) d += "*";
        std::string fs = to_string(f);
        if (f.terms().size() > 1) fs = "(" + fs + ")";
        d += fs;
        if (m > 1) d += "^" + std::to_string(m);
    }
    return "(" + n + ")/(" + d + ")";
}

bool ratfun_eq(const ParamRat& a, const ParamRat& b)
{
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const int order = a.order();
    ParamPoly lhs = a.num() * lift(b.den(), order);
    ParamPoly rhs = b.num() * lift(a.den(), order);
    return (lhs - rhs).is_zero();
}

} // namespace starlax
