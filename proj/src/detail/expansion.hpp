#pragma once

// Per-particle differential expansion shared by the star products, the
// N-operator and the operator representations.

#include <map>
#include <utility>
#include <vector>

#include "starlax/phase_poly.hpp"

namespace starlax::detail {

/// One particle's factor q^qpow p^ppow exp(v q + u p).
struct Local {
    int qpow = 0;
    int ppow = 0;
    Rational v;
    Rational u;
};

inline Local local_of(const ParticleExp& e) { return {e.qpow, e.ppow, e.qlin, e.plin}; }

struct DerivTerm {
    int qpow;
    int ppow;
    Rational c;
};

/// d^a/dx^a (x^n exp(s x)) = sum_i C(a,i) n!/(n-i)! s^(a-i) x^(n-i) exp(s x).
inline std::vector<std::pair<int, Rational>> one_dim(int n, const Rational& s, int a)
{
    std::vector<std::pair<int, Rational>> out;
    for (int i = 0; i <= std::min(a, n); ++i) {
        if (a - i > 0 && s.is_zero()) continue;
        long long falling = 1;
        for (int t = 0; t < i; ++t) falling *= n - t;
        Rational c = binomial(a, i) * Rational(falling);
        if (a - i > 0) c *= pow(s, a - i);
        out.emplace_back(n - i, std::move(c));
    }
    return out;
}

inline std::vector<DerivTerm> derivative(const Local& f, int a, int b)
{
    std::vector<DerivTerm> out;
    auto dq = one_dim(f.qpow, f.v, a);
    if (dq.empty()) return out;
    auto dp = one_dim(f.ppow, f.u, b);
    for (const auto& [qp, cq] : dq)
        for (const auto& [pp, cp] : dp) out.push_back({qp, pp, cq * cp});
    return out;
}

/// One monomial of the expanded bidifferential operator: left slot gets
/// d^lq/dq d^lp/dp, right slot d^rq/dq d^rp/dp, weighted by scale * hbar^k.
struct StencilEntry {
    int lq, lp, rq, rp, k;
    GaussRational scale;
};

inline std::vector<StencilEntry> weyl_stencil(int order)
{
    // (1/k!) ((i hbar/2)(dq (x) dp - dp (x) dq))^k, expanded binomially
    std::vector<StencilEntry> st;
    const GaussRational half_i(Rational(0), Rational(1, 2));
    for (int a = 0; a <= order; ++a)
        for (int b = 0; a + b <= order; ++b) {
            GaussRational s = pow(half_i, a + b) * (Rational(b % 2 ? -1 : 1) / (factorial(a) * factorial(b)));
            st.push_back({a, b, b, a, a + b, s});
        }
    return st;
}

inline std::vector<StencilEntry> standard_stencil(int order)
{
    // (1/k!) (hbar/i)^k (dp (x) dq)^k
    std::vector<StencilEntry> st;
    const GaussRational minus_i(Rational(0), Rational(-1));
    for (int a = 0; a <= order; ++a) st.push_back({0, a, a, 0, a, pow(minus_i, a) * (Rational(1) / factorial(a))});
    return st;
}

struct LocalOut {
    int qpow;
    int ppow;
    HbarSeries s;
};

using Accumulator = std::map<std::pair<int, int>, std::vector<GaussRational>>;

inline std::vector<LocalOut> flush(Accumulator& acc, int order)
{
    std::vector<LocalOut> out;
    for (auto& [pw, coeffs] : acc) {
        HbarSeries s = HbarSeries::from_coeffs(order, std::move(coeffs));
        if (!s.is_zero()) out.push_back({pw.first, pw.second, std::move(s)});
    }
    return out;
}

inline std::vector<LocalOut> expand_pair(const Local& f, const Local& g, const std::vector<StencilEntry>& st, int order)
{
    Accumulator acc;
    for (const auto& e : st) {
        auto df = derivative(f, e.lq, e.lp);
        if (df.empty()) continue;
        auto dg = derivative(g, e.rq, e.rp);
        if (dg.empty()) continue;
        for (const auto& x : df)
            for (const auto& y : dg) {
                auto& slot = acc[{x.qpow + y.qpow, x.ppow + y.ppow}];
                if (slot.empty()) slot.resize(static_cast<std::size_t>(order) + 1);
                slot[static_cast<std::size_t>(e.k)] += e.scale * (x.c * y.c);
            }
    }
    return flush(acc, order);
}

/// Memo for per-particle expansions within one product call.
struct PairMemo {
    std::map<std::pair<ParticleExp, ParticleExp>, std::vector<LocalOut>> cache;
    const std::vector<StencilEntry>* stencil;
    int order;

    const std::vector<LocalOut>& get(ParticleExp a, ParticleExp b)
    {
        a.particle = 0;
        b.particle = 0;
        auto key = std::make_pair(std::move(a), std::move(b));
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto out = expand_pair(local_of(key.first), local_of(key.second), *stencil, order);
        return cache.emplace(std::move(key), std::move(out)).first->second;
    }
};

struct SharedFactor {
    int particle;
    Rational v;
    Rational u;
    const std::vector<LocalOut>* expansion;
};

/// Emits coeff * prod over shared particles of their expansions, with the rest of the key fixed.
inline void emit_products(const ParamRat& coeff, const PhaseKey& fixed, const std::vector<SharedFactor>& shared, int order,
                   std::vector<PhaseTerm>& raw)
{
    struct Partial {
        std::vector<std::pair<int, int>> powers;
        HbarSeries s;
    };
    std::vector<Partial> combos{{{}, HbarSeries(order, GaussRational(1))}};
    for (const auto& sf : shared) {
        std::vector<Partial> next;
        next.reserve(combos.size() * sf.expansion->size());
        for (const auto& c : combos)
            for (const auto& lo : *sf.expansion) {
                HbarSeries s = c.s * lo.s;
                if (s.is_zero()) continue;
                auto powers = c.powers;
                powers.emplace_back(lo.qpow, lo.ppow);
                next.push_back({std::move(powers), std::move(s)});
            }
        combos = std::move(next);
    }
    for (auto& c : combos) {
        PhaseKey key = fixed;
        for (std::size_t i = 0; i < shared.size(); ++i) {
            ParticleExp e{shared[i].particle, c.powers[i].first, c.powers[i].second, shared[i].v, shared[i].u};
            if (!e.is_trivial()) key.push_back(std::move(e));
        }
        std::sort(key.begin(), key.end(), [](const ParticleExp& a, const ParticleExp& b) { return a.particle < b.particle; });
        ParamRat cf = c.s.is_constant() ? coeff * c.s[0] : coeff * c.s;
        if (!cf.is_zero()) raw.push_back({std::move(cf), std::move(key)});
    }
}

} // namespace starlax::detail
