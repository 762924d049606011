#include "starlax/representation.hpp"

#include <algorithm>

#include "detail/expansion.hpp"

namespace starlax {

using namespace detail;

WaveFn::WaveFn(PhasePoly f) : f_(std::move(f))
{
    if (!f_.is_p_free()) throw ArgumentError("wavefunctions must not depend on momenta");
}

namespace {

/// [d^k/dp^k (p^m exp(u p))] at p = 0.
Rational momentum_value(int m, const Rational& u, int k)
{
    if (k < m) return Rational(0);
    if (k > m && u.is_zero()) return Rational(0);
    return binomial(k, m) * factorial(m) * pow(u, k - m);
}

} // namespace

WaveFn rho_standard(const PhasePoly& f, const WaveFn& psi)
{
    if (f.is_zero() || psi.is_zero()) return {};
    const int order = f.order();
    if (order != psi.poly().order()) throw ConfigurationError("truncation order mismatch in rho_standard");
    const GaussRational minus_i(Rational(0), Rational(-1));
    std::vector<PhaseTerm> raw;
    std::map<std::pair<ParticleExp, ParticleExp>, std::vector<LocalOut>> memo;
    for (const auto& tf : f.terms())
        for (const auto& tp : psi.poly().terms()) {
            ParamRat c = tf.coeff * tp.coeff;
            if (c.is_zero()) continue;
            PhaseKey fixed;
            std::vector<SharedFactor> acting;
            for (const auto& e : tp.key) {
                bool in_f = std::any_of(tf.key.begin(), tf.key.end(), [&](const ParticleExp& x) { return x.particle == e.particle; });
                if (!in_f) fixed.push_back(e);
            }
            for (const auto& e : tf.key) {
                ParticleExp w;
                w.particle = e.particle;
                for (const auto& x : tp.key)
                    if (x.particle == e.particle) w = x;
                ParticleExp fe = e, we = w;
                fe.particle = we.particle = 0;
                auto key = std::make_pair(fe, we);
                auto it = memo.find(key);
                if (it == memo.end()) {
                    Accumulator acc;
                    for (int k = 0; k <= order; ++k) {
                        Rational mv = momentum_value(e.ppow, e.plin, k);
                        if (mv.is_zero()) continue;
                        GaussRational scale = pow(minus_i, k) * (mv / factorial(k));
                        for (const auto& [qp, cq] : one_dim(w.qpow, w.qlin, k)) {
                            auto& slot = acc[{e.qpow + qp, 0}];
                            if (slot.empty()) slot.resize(static_cast<std::size_t>(order) + 1);
                            slot[static_cast<std::size_t>(k)] += scale * cq;
                        }
                    }
                    it = memo.emplace(key, flush(acc, order)).first;
                }
                acting.push_back({e.particle, e.qlin + w.qlin, Rational(0), &it->second});
            }
            emit_products(c, fixed, acting, order, raw);
        }
    return WaveFn(normalize(std::move(raw)));
}

WaveFn rho_weyl(const PhasePoly& f, const WaveFn& psi) { return rho_standard(n_transform(f, 1), psi); }

} // namespace starlax
