#include "starlax/lax_catalog.hpp"

#include <sstream>

namespace starlax {

namespace {

constexpr std::array<std::string_view, 7> kSystemNames{"A1", "A2", "B1", "B2", "B3", "C1", "C2"};

Rational parse_value(std::string_view key, std::string_view text)
{
    try {
        return Rational::parse(std::string(text));
    } catch (const std::exception&) {
        throw ArgumentError("parameter " + std::string(key) + ": expected an integer or a/b, got '" +
                            std::string(text) + "'");
    }
}

void require_nonzero(const Rational& x, const char* what)
{
    if (x.is_zero()) throw ArgumentError(std::string(what) + " must be nonzero");
}

struct Builder {
    int k;
    int order;

    [[nodiscard]] ParamRat c(const GaussRational& v) const { return ParamRat::constant(v, order); }
    [[nodiscard]] ParamRat lam() const { return ParamRat::variable(0, order); }
    [[nodiscard]] ParamRat inv_lam() const
    {
        return ParamRat(ParamPoly::constant(HbarSeries(order, GaussRational(1))), {{den_variable(0), 1}});
    }
    [[nodiscard]] PhasePoly t(ParamRat coeff, const PhaseKey& key = {}) const { return PhasePoly(std::move(coeff), key); }
    [[nodiscard]] PhasePoly t(const GaussRational& v, const PhaseKey& key = {}) const { return t(c(v), key); }
    [[nodiscard]] Mono m() const { return Mono{}; }
};

} // namespace

std::string_view name(SystemId s) { return kSystemNames[static_cast<std::size_t>(s)]; }

std::string_view name(RGroup g)
{
    switch (g) {
    case RGroup::A: return "A";
    case RGroup::B: return "B";
    case RGroup::C: return "C";
    }
    return "?";
}

SystemId parse_system(std::string_view s)
{
    for (auto id : kAllSystems)
        if (name(id) == s) return id;
    throw ArgumentError("unknown system '" + std::string(s) + "' (expected A1, A2, B1, B2, B3, C1 or C2)");
}

RGroup parse_group(std::string_view s)
{
    for (auto g : {RGroup::A, RGroup::B, RGroup::C})
        if (name(g) == s) return g;
    throw ArgumentError("unknown R group '" + std::string(s) + "' (expected A, B or C)");
}

RGroup group_of(SystemId s)
{
    switch (s) {
    case SystemId::A1:
    case SystemId::A2: return RGroup::A;
    case SystemId::B1:
    case SystemId::B2:
    case SystemId::B3: return RGroup::B;
    default: return RGroup::C;
    }
}

Params Params::parse(std::string_view text)
{
    Params out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) {
            if (comma == text.size()) break;
            continue;
        }
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ArgumentError("parameter '" + std::string(item) + "' lacks '='");
        auto key = item.substr(0, eq);
        auto value = parse_value(key, item.substr(eq + 1));
        if (key == "eps")
            out.eps = value;
        else if (key == "g")
            out.g = value;
        else if (key == "delta")
            out.delta = value;
        else
            throw ArgumentError("unknown parameter '" + std::string(key) + "' (expected eps, g or delta)");
    }
    return out;
}

std::string Params::str() const
{
    std::ostringstream os;
    os << "eps=" << eps.str() << ",g=" << g.str() << ",delta=" << delta.str();
    return os.str();
}

RingMatrix<PhasePoly> build_U(SystemId system, int k, const Params& params, int order)
{
    if (k < 1) throw ArgumentError("particle index must be >= 1");
    const Builder b{k, order};
    const GaussRational one(1);
    const PhasePoly p = PhasePoly::p(k, order);
    const PhasePoly e_q = b.t(one, b.m().exp_q(k, 1));
    const PhasePoly e_mq = b.t(one, b.m().exp_q(k, -1));
    const PhasePoly lam = b.t(b.lam());

    RingMatrix<PhasePoly> u(2);
    switch (system) {
    case SystemId::A1:
    case SystemId::A2:
        u(0, 0) = p - lam;
        u(0, 1) = -e_mq;
        if (system == SystemId::A1) {
            u(1, 0) = e_q;
        } else {
            u(1, 0) = b.t(one, b.m().p(k).exp_q(k, 1));
            u(1, 1) = b.t(one);
        }
        return u;
    case SystemId::B1:
    case SystemId::B2:
    case SystemId::B3: {
        const GaussRational g2(params.g * params.g);
        if (system != SystemId::B1) require_nonzero(params.g, "g");
        u(0, 0) = b.t(b.inv_lam()) - b.t(b.lam(), b.m().exp_p(k, 1));
        u(1, 0) = e_q;
        if (system == SystemId::B1) {
            u(0, 1) = -e_mq;
            u(1, 1) = -lam;
        } else if (system == SystemId::B2) {
            u(0, 1) = b.t(-g2, b.m().exp_q(k, -1).exp_p(k, 1));
        } else {
            const GaussRational delta(params.delta);
            u(0, 1) = b.t(-g2, b.m().exp_q(k, -1).exp_p(k, 1)) + b.t(-g2 * delta, b.m().exp_q(k, -1));
            u(1, 1) = lam * (-delta * g2);
        }
        return u;
    }
    case SystemId::C1:
    case SystemId::C2: {
        require_nonzero(params.eps, "eps");
        const GaussRational eps(params.eps);
        u(0, 0) = b.t(b.inv_lam()) - b.t(b.lam(), b.m().exp_p(k, params.eps));
        u(1, 0) = e_q * eps;
        if (system == SystemId::C1) {
            u(0, 1) = e_mq * (-eps);
            u(1, 1) = lam * (-eps * eps);
        } else {
            u(0, 1) = b.t(-one, b.m().exp_q(k, -1).exp_p(k, params.eps)) + e_mq;
            u(1, 1) = lam * eps;
        }
        return u;
    }
    }
    throw ArgumentError("unknown system");
}

RingMatrix<ParamRat> group_R(RGroup group, const Params& params, int order)
{
    switch (group) {
    case RGroup::A: return build_quantum_R(RKind::casimir_rational, rho_series(order) * GaussRational(2));
    case RGroup::B:
        return build_quantum_R(RKind::trigonometric_tilde,
                               series_func(SeriesFunction::tanh, GaussRational(Rational(0), Rational(1, 2)), order) *
                                   GaussRational(-2));
    case RGroup::C:
        require_nonzero(params.eps, "eps");
        return build_quantum_R(RKind::trigonometric_tilde,
                               series_func(SeriesFunction::tanh, GaussRational(Rational(0), params.eps / Rational(2)),
                                           order) *
                                   GaussRational(-2));
    }
    throw ArgumentError("unknown R group");
}

RingMatrix<ParamRat> matching_R(SystemId system, const Params& params, int order)
{
    return group_R(group_of(system), params, order);
}

RingMatrix<PhasePoly> build_classical_L(int n, int order)
{
    if (n < 1) throw ArgumentError("particle count must be >= 1");
    const auto un = static_cast<std::size_t>(n);
    RingMatrix<PhasePoly> l(un);
    for (int i = 1; i <= n; ++i) l(i - 1, i - 1) = PhasePoly::p(i, order);
    for (int i = 1; i < n; ++i) {
        PhasePoly e(ParamRat::constant(GaussRational(1), order), Mono{}.exp_q(i, Rational(1, 2)).exp_q(i + 1, Rational(-1, 2)));
        l(i - 1, i) = e;
        l(i, i - 1) = e;
    }
    return l;
}

PhasePoly hamiltonian(int n, int order)
{
    if (n < 1) throw ArgumentError("particle count must be >= 1");
    const GaussRational half(Rational(1, 2));
    PhasePoly h;
    for (int i = 1; i <= n; ++i) h += PhasePoly(ParamRat::constant(half, order), Mono{}.p(i, 2));
    for (int i = 1; i < n; ++i)
        h += PhasePoly(ParamRat::constant(GaussRational(1), order), Mono{}.exp_q(i, 1).exp_q(i + 1, -1));
    return h;
}

} // namespace starlax
