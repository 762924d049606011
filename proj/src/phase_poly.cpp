#include "starlax/phase_poly.hpp"

#include "detail/expansion.hpp"

#include <algorithm>
#include <map>

namespace starlax {

// ---------------------------------------------------------------- keys

ParticleExp& Mono::slot(int particle)
{
    if (particle < 1) throw ArgumentError("particle indices start at 1");
    auto it = std::lower_bound(key_.begin(), key_.end(), particle,
                               [](const ParticleExp& e, int j) { return e.particle < j; });
    if (it == key_.end() || it->particle != particle) {
        ParticleExp e;
        e.particle = particle;
        it = key_.insert(it, std::move(e));
    }
    return *it;
}

void Mono::prune()
{
    std::erase_if(key_, [](const ParticleExp& e) { return e.is_trivial(); });
}

Mono& Mono::q(int particle, int power)
{
    if (power < 0) throw ArgumentError("negative power");
    slot(particle).qpow += power;
    prune();
    return *this;
}

Mono& Mono::p(int particle, int power)
{
    if (power < 0) throw ArgumentError("negative power");
    slot(particle).ppow += power;
    prune();
    return *this;
}

Mono& Mono::exp_q(int particle, const Rational& coeff)
{
    slot(particle).qlin += coeff;
    prune();
    return *this;
}

Mono& Mono::exp_p(int particle, const Rational& coeff)
{
    slot(particle).plin += coeff;
    prune();
    return *this;
}

PhaseKey multiply_keys(const PhaseKey& a, const PhaseKey& b)
{
    PhaseKey out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].particle < b[j].particle)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].particle < a[i].particle) {
            out.push_back(b[j++]);
        } else {
            ParticleExp e{a[i].particle, a[i].qpow + b[j].qpow, a[i].ppow + b[j].ppow, a[i].qlin + b[j].qlin,
                          a[i].plin + b[j].plin};
            if (!e.is_trivial()) out.push_back(std::move(e));
            ++i;
            ++j;
        }
    }
    return out;
}

// ---------------------------------------------------------------- PhasePoly basics

PhasePoly::PhasePoly(ParamRat coeff, PhaseKey key)
{
    for (const auto& e : key)
        if (e.particle < 1 || e.qpow < 0 || e.ppow < 0) throw ArgumentError("malformed phase key");
    std::sort(key.begin(), key.end(), [](const ParticleExp& a, const ParticleExp& b) { return a.particle < b.particle; });
    for (std::size_t i = 1; i < key.size(); ++i)
        if (key[i].particle == key[i - 1].particle) throw ArgumentError("duplicate particle in phase key");
    std::erase_if(key, [](const ParticleExp& e) { return e.is_trivial(); });
    if (!coeff.is_zero()) terms_.push_back({std::move(coeff), std::move(key)});
}

PhasePoly PhasePoly::q(int particle, int order)
{
    return PhasePoly(ParamRat::constant(GaussRational(1), order), Mono{}.q(particle).key());
}

PhasePoly PhasePoly::p(int particle, int order)
{
    return PhasePoly(ParamRat::constant(GaussRational(1), order), Mono{}.p(particle).key());
}

int PhasePoly::order() const { return terms_.empty() ? HbarSeries::kUnsetOrder : terms_.front().coeff.order(); }

std::set<int> PhasePoly::particles() const
{
    std::set<int> out;
    for (const auto& t : terms_)
        for (const auto& e : t.key) out.insert(e.particle);
    return out;
}

bool PhasePoly::is_p_free() const
{
    for (const auto& t : terms_)
        for (const auto& e : t.key)
            if (e.ppow != 0 || !e.plin.is_zero()) return false;
    return true;
}

PhasePoly normalize(std::vector<PhaseTerm> raw)
{
    std::sort(raw.begin(), raw.end(), [](const PhaseTerm& a, const PhaseTerm& b) { return a.key < b.key; });
    PhasePoly out;
    out.terms_.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.terms_.empty() && out.terms_.back().key == t.key) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

namespace {

PhasePoly merge(const PhasePoly& a, const PhasePoly& b, bool subtract)
{
    std::vector<PhaseTerm> raw;
    raw.reserve(a.size() + b.size());
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].key < tb[j].key)) {
            raw.push_back(ta[i++]);
        } else if (i == ta.size() || tb[j].key < ta[i].key) {
            raw.push_back({subtract ? -tb[j].coeff : tb[j].coeff, tb[j].key});
            ++j;
        } else {
            ParamRat c = ta[i].coeff;
            if (subtract)
                c -= tb[j].coeff;
            else
                c += tb[j].coeff;
            if (!c.is_zero()) raw.push_back({std::move(c), ta[i].key});
            ++i;
            ++j;
        }
    }
    // already sorted and merged
    return normalize(std::move(raw));
}

} // namespace

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) { return *this = merge(*this, o, false); }
PhasePoly& PhasePoly::operator-=(const PhasePoly& o) { return *this = merge(*this, o, true); }
PhasePoly operator+(const PhasePoly& a, const PhasePoly& b) { return merge(a, b, false); }
PhasePoly operator-(const PhasePoly& a, const PhasePoly& b) { return merge(a, b, true); }

PhasePoly operator-(PhasePoly a)
{
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
}

PhasePoly& PhasePoly::operator*=(const ParamRat& c)
{
    for (auto& t : terms_) t.coeff *= c;
    std::erase_if(terms_, [](const PhaseTerm& t) { return t.coeff.is_zero(); });
    return *this;
}

PhasePoly& PhasePoly::operator*=(const GaussRational& c)
{
    for (auto& t : terms_) t.coeff *= c;
    std::erase_if(terms_, [](const PhaseTerm& t) { return t.coeff.is_zero(); });
    return *this;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b)
{
    std::vector<PhaseTerm> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            ParamRat c = ta.coeff * tb.coeff;
            if (!c.is_zero()) raw.push_back({std::move(c), multiply_keys(ta.key, tb.key)});
        }
    return normalize(std::move(raw));
}

bool operator==(const PhasePoly& a, const PhasePoly& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

PhasePoly PhasePoly::renamed_spectral(const SpectralRenaming& map) const
{
    std::vector<PhaseTerm> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) raw.push_back({t.coeff.renamed(map), t.key});
    return normalize(std::move(raw));
}

PhasePoly PhasePoly::hbar_coefficient(int k) const
{
    std::vector<PhaseTerm> raw;
    for (const auto& t : terms_) {
        const int order = t.coeff.order();
        ParamPoly num = t.coeff.num().map_coeffs(
            [&](const HbarSeries& s) { return HbarSeries(order, s[k]); });
        raw.push_back({ParamRat(std::move(num), t.coeff.den_factors()), t.key});
    }
    return normalize(std::move(raw));
}

namespace {

void append_linear(std::string& out, const Rational& c, const std::string& var)
{
    if (c.is_zero()) return;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (!mag.is_one()) out += mag.str() + "*";
    out += var;
}

std::string key_str(const PhaseKey& key)
{
    std::string mono;
    std::string expo;
    for (const auto& e : key) {
        std::string j = std::to_string(e.particle);
        if (e.qpow > 0) {
            if (!mono.empty()) mono += "*";
            mono += "q" + j + (e.qpow > 1 ? "^" + std::to_string(e.qpow) : "");
        }
        if (e.ppow > 0) {
            if (!mono.empty()) mono += "*";
            mono += "p" + j + (e.ppow > 1 ? "^" + std::to_string(e.ppow) : "");
        }
    }
    for (const auto& e : key) append_linear(expo, e.qlin, "q" + std::to_string(e.particle));
    for (const auto& e : key) append_linear(expo, e.plin, "p" + std::to_string(e.particle));
    if (!expo.empty()) {
        if (!mono.empty()) mono += "*";
        mono += "exp(" + expo + ")";
    }
    return mono;
}

} // namespace

std::string PhasePoly::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        std::string c = t.coeff.str();
        std::string k = key_str(t.key);
        bool simple = c.find(' ') == std::string::npos && c.find(")/(") == std::string::npos;
        bool negative = simple && c.front() == '-';
        if (!out.empty()) {
            out += negative ? " - " : " + ";
            if (negative) c.erase(0, 1);
        }
        if (k.empty()) {
            out += simple ? c : "(" + c + ")";
        } else if (c == "1") {
            out += k;
        } else if (c == "-1") {
            out += "-" + k;
        } else {
            out += (simple ? c : "(" + c + ")") + "*" + k;
        }
    }
    return out;
}

// ---------------------------------------------------------------- differential machinery

namespace {

using namespace detail;

int common_order(const PhasePoly& f, const PhasePoly& g)
{
    int a = f.order(), b = g.order();
    if (a != b) throw ConfigurationError("truncation order mismatch in star product");
    return a;
}

PhasePoly bidiff_product(const PhasePoly& f, const PhasePoly& g, const std::vector<StencilEntry>& st, int order)
{
    std::vector<PhaseTerm> raw;
    PairMemo memo{{}, &st, order};
    for (const auto& tf : f.terms())
        for (const auto& tg : g.terms()) {
            ParamRat c = tf.coeff * tg.coeff;
            if (c.is_zero()) continue;
            PhaseKey fixed;
            std::vector<SharedFactor> shared;
            const auto& a = tf.key;
            const auto& b = tg.key;
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < b.size()) {
                if (j == b.size() || (i < a.size() && a[i].particle < b[j].particle)) {
                    fixed.push_back(a[i++]);
                } else if (i == a.size() || b[j].particle < a[i].particle) {
                    fixed.push_back(b[j++]);
                } else {
                    shared.push_back({a[i].particle, a[i].qlin + b[j].qlin, a[i].plin + b[j].plin, &memo.get(a[i], b[j])});
                    ++i;
                    ++j;
                }
            }
            if (shared.empty())
                raw.push_back({std::move(c), std::move(fixed)});
            else
                emit_products(c, fixed, shared, order, raw);
        }
    return normalize(std::move(raw));
}

} // namespace

PhasePoly partial(const PhasePoly& f, PhaseVar var)
{
    std::vector<PhaseTerm> raw;
    for (const auto& t : f.terms()) {
        auto it = std::find_if(t.key.begin(), t.key.end(), [&](const ParticleExp& e) { return e.particle == var.particle; });
        if (it == t.key.end()) continue;
        const Local loc = local_of(*it);
        auto d = var.coord == Coord::q ? derivative(loc, 1, 0) : derivative(loc, 0, 1);
        for (const auto& dt : d) {
            PhaseKey key = t.key;
            auto& e = key[static_cast<std::size_t>(it - t.key.begin())];
            e.qpow = dt.qpow;
            e.ppow = dt.ppow;
            if (e.is_trivial()) key.erase(key.begin() + (it - t.key.begin()));
            raw.push_back({t.coeff * GaussRational(dt.c), std::move(key)});
        }
    }
    return normalize(std::move(raw));
}

PhasePoly poisson(const PhasePoly& f, const PhasePoly& g)
{
    std::set<int> ps = f.particles();
    std::set<int> pg = g.particles();
    PhasePoly out;
    for (int j : ps) {
        if (!pg.contains(j)) continue;
        out += partial(f, {Coord::q, j}) * partial(g, {Coord::p, j});
        out -= partial(f, {Coord::p, j}) * partial(g, {Coord::q, j});
    }
    return out;
}

PhasePoly star_weyl(const PhasePoly& f, const PhasePoly& g)
{
    if (f.is_zero() || g.is_zero()) return {};
    const int order = common_order(f, g);
    return bidiff_product(f, g, weyl_stencil(order), order);
}

PhasePoly star_standard(const PhasePoly& f, const PhasePoly& g)
{
    if (f.is_zero() || g.is_zero()) return {};
    const int order = common_order(f, g);
    return bidiff_product(f, g, standard_stencil(order), order);
}

PhasePoly n_transform(const PhasePoly& f, int direction)
{
    if (direction != 1 && direction != -1) throw ArgumentError("n_transform direction must be +1 or -1");
    if (f.is_zero()) return {};
    const int order = f.order();
    // (1/k!) (d * hbar/(2i))^k (dq dp)^k
    const GaussRational step(Rational(0), Rational(-direction, 2));
    std::map<ParticleExp, std::vector<LocalOut>> memo;
    std::vector<PhaseTerm> raw;
    for (const auto& t : f.terms()) {
        std::vector<SharedFactor> shared;
        for (const auto& e : t.key) {
            ParticleExp bare = e;
            bare.particle = 0;
            auto it = memo.find(bare);
            if (it == memo.end()) {
                Accumulator acc;
                const Local loc = local_of(e);
                for (int a = 0; a <= order; ++a) {
                    GaussRational s = pow(step, a) * (Rational(1) / factorial(a));
                    for (const auto& d : derivative(loc, a, a)) {
                        auto& slot = acc[{d.qpow, d.ppow}];
                        if (slot.empty()) slot.resize(static_cast<std::size_t>(order) + 1);
                        slot[static_cast<std::size_t>(a)] += s * d.c;
                    }
                }
                it = memo.emplace(bare, flush(acc, order)).first;
            }
            shared.push_back({e.particle, e.qlin, e.plin, &it->second});
        }
        emit_products(t.coeff, {}, shared, order, raw);
    }
    return normalize(std::move(raw));
}

PhasePoly conjugate(const PhasePoly& f)
{
    std::vector<PhaseTerm> raw;
    raw.reserve(f.size());
    for (const auto& t : f.terms()) raw.push_back({t.coeff.conj(), t.key});
    return normalize(std::move(raw));
}

PhasePoly parity(const PhasePoly& f)
{
    std::vector<PhaseTerm> raw;
    raw.reserve(f.size());
    for (const auto& t : f.terms()) {
        PhaseKey key = t.key;
        int sign = 1;
        for (auto& e : key) {
            e.plin = -e.plin;
            if (e.ppow % 2) sign = -sign;
        }
        raw.push_back({sign < 0 ? -t.coeff : t.coeff, std::move(key)});
    }
    return normalize(std::move(raw));
}

PhasePoly star_commutator(const PhasePoly& f, const PhasePoly& g) { return star_weyl(f, g) - star_weyl(g, f); }

PhasePoly star_power(const PhasePoly& f, int k, int order)
{
    if (k < 0) throw ArgumentError("negative star power");
    PhasePoly r = PhasePoly::constant(GaussRational(1), order);
    for (int i = 0; i < k; ++i) r = star_weyl(r, f);
    return r;
}

} // namespace starlax
