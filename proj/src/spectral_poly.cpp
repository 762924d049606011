#include "starlax/spectral_poly.hpp"

#include <map>

namespace starlax {

ParamPoly spectral_variable(int var, int order)
{
    if (var < 0 || var >= kSpectralVars) throw ArgumentError("spectral variable index out of range");
    SpectralExp e{};
    e[static_cast<std::size_t>(var)] = 1;
    return ParamPoly::monomial(e, HbarSeries(order, GaussRational(1)));
}

DenPoly den_variable(int var)
{
    if (var < 0 || var >= kSpectralVars) throw ArgumentError("spectral variable index out of range");
    SpectralExp e{};
    e[static_cast<std::size_t>(var)] = 1;
    return DenPoly::monomial(e, Rational(1));
}

ParamPoly lift(const DenPoly& p, int order)
{
    return p.map_coeffs([order](const Rational& c) { return HbarSeries(order, GaussRational(c)); });
}

int order_of(const ParamPoly& p)
{
    return p.is_zero() ? HbarSeries::kUnsetOrder : p.terms().front().second.order();
}

namespace {

bool divides(const SpectralExp& d, const SpectralExp& e)
{
    for (int v = 0; v < kSpectralVars; ++v)
        if (d[static_cast<std::size_t>(v)] > e[static_cast<std::size_t>(v)]) return false;
    return true;
}

} // namespace

bool try_divide(const ParamPoly& f, const DenPoly& divisor, ParamPoly& quotient)
{
    if (divisor.is_zero()) throw ArgumentError("division by zero polynomial");
    if (!divisor.leading().second.is_one()) throw ArgumentError("divisor must be monic");
    if (f.is_zero()) {
        quotient = ParamPoly{};
        return true;
    }
    const int order = order_of(f);
    std::map<SpectralExp, HbarSeries, GrlexGreater> rem;
    for (const auto& [e, c] : f.terms()) rem.emplace(e, c);
    const SpectralExp lead = divisor.leading().first;
    std::vector<ParamPoly::Term> q;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!divides(lead, it->first)) return false;
        SpectralExp shift{};
        for (int v = 0; v < kSpectralVars; ++v)
            shift[static_cast<std::size_t>(v)] = it->first[static_cast<std::size_t>(v)] - lead[static_cast<std::size_t>(v)];
        HbarSeries c = it->second;
        for (const auto& [de, dc] : divisor.terms()) {
            SpectralExp e{de[0] + shift[0], de[1] + shift[1], de[2] + shift[2]};
            HbarSeries sub = c * GaussRational(dc);
            auto [pos, inserted] = rem.try_emplace(e, HbarSeries(order));
            pos->second -= sub;
            if (pos->second.is_zero()) rem.erase(pos);
        }
        q.emplace_back(shift, std::move(c));
    }
    quotient = ParamPoly::from_terms(std::move(q));
    return true;
}

std::strong_ordering compare(const DenPoly& a, const DenPoly& b)
{
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    GrlexGreater greater;
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        if (ta[i].first != tb[i].first)
            return greater(ta[i].first, tb[i].first) ? std::strong_ordering::less : std::strong_ordering::greater;
        if (auto c = ta[i].second <=> tb[i].second; c != 0) return c;
    }
    return ta.size() <=> tb.size();
}

std::string to_string(const ParamPoly& p)
{
    return p.str([](const HbarSeries& s) { return s.str(); });
}

std::string to_string(const DenPoly& p)
{
    return p.str([](const Rational& r) { return r.str(); });
}

} // namespace starlax
