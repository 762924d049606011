#include "starlax/integrability.hpp"

#include <chrono>
#include <sstream>

#include "starlax/parallel.hpp"
#include "starlax/sampling.hpp"

namespace starlax {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CheckReport finish(std::string name, std::size_t residual, std::optional<std::string> witness, Clock::time_point start)
{
    CheckReport r;
    r.name = std::move(name);
    r.residual_terms = residual;
    r.pass = residual == 0;
    if (!r.pass) r.witness = std::move(witness);
    r.wall_time_ms = ms_since(start);
    return r;
}

RingMatrix<PhasePoly> identity_phase(std::size_t dim, int order)
{
    return RingMatrix<PhasePoly>::identity(dim, PhasePoly::constant(GaussRational(1), order));
}

RingMatrix<PhasePoly> at_mu(const RingMatrix<PhasePoly>& m)
{
    const SpectralRenaming swap{1, 0, 2};
    return m.map([&](const PhasePoly& x) { return x.renamed_spectral(swap); });
}

std::size_t lambda_terms(const LambdaPoly& f)
{
    std::size_t n = 0;
    for (const auto& [k, c] : f.coefficients()) n += c.size();
    return n;
}

std::optional<std::string> lambda_witness(const LambdaPoly& f)
{
    if (f.is_zero()) return std::nullopt;
    const auto& [k, c] = *f.coefficients().rbegin();
    return "lambda^" + std::to_string(k) + ": " + abbreviate(c);
}

GaussRational evaluate(const PhasePoly& f, const std::vector<Rational>& p, const std::vector<Rational>& e)
{
    GaussRational acc;
    for (const auto& t : f.terms()) {
        if (!t.coeff.is_polynomial() || !t.coeff.num().is_constant())
            throw ArgumentError("evaluation needs spectral-free coefficients");
        GaussRational v = t.coeff.num().constant_term()[0];
        Rational cumulative;
        for (const auto& x : t.key) {
            if (x.qpow != 0 || !x.plin.is_zero()) throw ArgumentError("evaluation needs exp(q)-polynomial terms");
            if (x.particle > static_cast<int>(p.size())) throw ArgumentError("particle out of range");
            if (x.ppow != 0) v *= GaussRational(pow(p[static_cast<std::size_t>(x.particle - 1)], x.ppow));
        }
        // exp(sum v_i q_i) = prod E_i^{k_i} with k_i = v_1 + ... + v_i
        std::vector<Rational> v_q(p.size());
        for (const auto& x : t.key) v_q[static_cast<std::size_t>(x.particle - 1)] = x.qlin;
        for (std::size_t i = 0; i < v_q.size(); ++i) {
            cumulative += v_q[i];
            if (cumulative.is_zero()) continue;
            if (i + 1 == v_q.size() || !cumulative.is_integer())
                throw ArgumentError("exponent is not an integer combination of q_i - q_{i+1}");
            v *= GaussRational(pow(e[i], static_cast<int>(cumulative.to_integer())));
        }
        acc += v;
    }
    return acc;
}

int rank_of(std::vector<std::vector<GaussRational>> m)
{
    int rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        auto r0 = static_cast<std::size_t>(rank);
        std::size_t pivot = r0;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r0]);
        GaussRational inv = m[r0][col].inverse();
        for (std::size_t r = r0 + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            GaussRational f = m[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[r0][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace

// --- LambdaPoly ---

LambdaPoly LambdaPoly::from_phase(const PhasePoly& f)
{
    const DenPoly lam = den_variable(0);
    LambdaPoly out;
    for (const auto& t : f.terms()) {
        int shift = 0;
        for (const auto& [factor, mult] : t.coeff.den_factors()) {
            if (!(factor == lam)) throw ArgumentError("coefficient is not a Laurent polynomial in lambda");
            shift = mult;
        }
        for (const auto& [e, c] : t.coeff.num().terms()) {
            if (e[1] != 0 || e[2] != 0) throw ArgumentError("coefficient depends on a spectral parameter other than lambda");
            LambdaPoly piece;
            piece.c_.emplace(e[0] - shift, PhasePoly(ParamRat::constant(c), t.key));
            out += piece;
        }
    }
    return out;
}

PhasePoly LambdaPoly::coefficient(int power) const
{
    auto it = c_.find(power);
    return it == c_.end() ? PhasePoly{} : it->second;
}

int LambdaPoly::min_power() const { return c_.empty() ? 0 : c_.begin()->first; }
int LambdaPoly::max_power() const { return c_.empty() ? 0 : c_.rbegin()->first; }

void LambdaPoly::set(int power, PhasePoly v)
{
    if (v.is_zero())
        c_.erase(power);
    else
        c_[power] = std::move(v);
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o)
{
    for (const auto& [k, v] : o.c_) set(k, coefficient(k) + v);
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o)
{
    for (const auto& [k, v] : o.c_) set(k, coefficient(k) - v);
    return *this;
}

LambdaPoly operator-(LambdaPoly a)
{
    for (auto& [k, v] : a.c_) v = -v;
    return a;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b)
{
    LambdaPoly out;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) out.set(ka + kb, out.coefficient(ka + kb) + va * vb);
    return out;
}

LambdaPoly operator*(LambdaPoly a, const GaussRational& c)
{
    LambdaPoly out;
    for (auto& [k, v] : a.c_) out.set(k, v * c);
    return out;
}

std::string LambdaPoly::str() const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        if (it->first != 0) os << "*lambda^" << it->first;
    }
    return os.str();
}

// --- characteristic functions and monodromy ---

LaxFactory lax_factory(SystemId system, const Params& params, int order)
{
    return [=](int k) { return build_U(system, k, params, order); };
}

std::string_view name(ChiVariant v) { return v == ChiVariant::plain ? "plain" : "tilde"; }

LambdaPoly chi(const LaxFactory& u, int n, ChiVariant variant)
{
    if (n < 1) throw ArgumentError("particle count must be >= 1");
    auto lift = [](const RingMatrix<PhasePoly>& m) { return m.map([](const PhasePoly& x) { return LambdaPoly::from_phase(x); }); };
    RingMatrix<LambdaPoly> prod = lift(u(n));
    for (int k = n - 1; k >= 1; --k) prod = prod * lift(u(k));
    return variant == ChiVariant::plain ? trace(prod) : prod(0, 0);
}

LambdaPoly chi(SystemId system, int n, ChiVariant variant, const Params& params, int order)
{
    return chi(lax_factory(system, params, order), n, variant);
}

RingMatrix<PhasePoly> monodromy(const LaxFactory& u, int n)
{
    if (n < 1) throw ArgumentError("particle count must be >= 1");
    RingMatrix<PhasePoly> t = u(n);
    for (int k = n - 1; k >= 1; --k) t = mat_mul(t, u(k), Product::star_weyl);
    return t;
}

// --- reports ---

std::string abbreviate(const PhasePoly& f, std::size_t max_terms)
{
    if (f.size() <= max_terms) return f.str();
    std::vector<PhaseTerm> head(f.terms().begin(), f.terms().begin() + static_cast<std::ptrdiff_t>(max_terms));
    return normalize(std::move(head)).str() + " + ... (" + std::to_string(f.size()) + " terms)";
}

std::optional<std::string> witness_of(const RingMatrix<PhasePoly>& residual)
{
    for (std::size_t i = 0; i < residual.dim(); ++i)
        for (std::size_t j = 0; j < residual.dim(); ++j)
            if (!residual(i, j).is_zero())
                return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + abbreviate(residual(i, j));
    return std::nullopt;
}

RingMatrix<PhasePoly> exchange_residual(const RingMatrix<ParamRat>& r, const RingMatrix<PhasePoly>& t)
{
    const int order = r(0, 0).order();
    const auto id = identity_phase(t.dim(), order);
    const auto t1 = kron(t, id), t2 = kron(id, at_mu(t));
    const auto rp = to_phase(r);
    return mat_mul(rp, mat_mul(t1, t2, Product::star_weyl), Product::pointwise) -
           mat_mul(mat_mul(t2, t1, Product::star_weyl), rp, Product::pointwise);
}

CheckReport check_rll(const std::string& name, const LaxFactory& u, const RingMatrix<ParamRat>& r)
{
    auto start = Clock::now();
    auto residual = exchange_residual(r, u(1));
    return finish(name, residual_terms(residual), witness_of(residual), start);
}

CheckReport check_rll(SystemId system, const Params& params, int order, std::optional<RGroup> r_override)
{
    std::string label = "rll." + std::string(name(system));
    if (r_override) label += "+R" + std::string(name(*r_override));
    auto r = r_override ? group_R(*r_override, params, order) : matching_R(system, params, order);
    return check_rll(label, lax_factory(system, params, order), r);
}

CheckReport check_rtt(const std::string& name, const LaxFactory& u, int n, const RingMatrix<ParamRat>& r)
{
    auto start = Clock::now();
    auto residual = exchange_residual(r, monodromy(u, n));
    return finish(name, residual_terms(residual), witness_of(residual), start);
}

CheckReport check_rtt(SystemId system, int n, const Params& params, int order, std::optional<RGroup> r_override)
{
    std::string label = "rtt." + std::string(name(system)) + ".n" + std::to_string(n);
    if (r_override) label += "+R" + std::string(name(*r_override));
    auto r = r_override ? group_R(*r_override, params, order) : matching_R(system, params, order);
    return check_rtt(label, lax_factory(system, params, order), n, r);
}

CheckReport check_commuting(const std::string& name, const std::vector<PhasePoly>& fs,
                            const std::vector<std::string>& labels, int jobs)
{
    auto start = Clock::now();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < fs.size(); ++a)
        for (std::size_t b = a + 1; b < fs.size(); ++b) pairs.emplace_back(a, b);
    auto comms = parallel_map(pairs.size(), jobs, [&](std::size_t i) {
        return star_commutator(fs[pairs[i].first], fs[pairs[i].second]);
    });
    std::size_t residual = 0;
    std::optional<std::string> witness;
    for (std::size_t i = 0; i < comms.size(); ++i) {
        residual += comms[i].size();
        if (!witness && !comms[i].is_zero())
            witness = "[" + labels[pairs[i].first] + ", " + labels[pairs[i].second] + "]: " + abbreviate(comms[i]);
    }
    return finish(name, residual, witness, start);
}

CheckReport check_char_commute(SystemId system, int n, ChiVariant variant, const Params& params, int order, int jobs)
{
    auto start = Clock::now();
    auto x = chi(system, n, variant, params, order);
    std::vector<PhasePoly> fs;
    std::vector<std::string> labels;
    for (const auto& [k, c] : x.coefficients()) {
        fs.push_back(c);
        labels.push_back("lambda^" + std::to_string(k));
    }
    auto report = check_commuting(
        "commute." + std::string(name(system)) + ".n" + std::to_string(n) + "." + std::string(name(variant)), fs, labels,
        jobs);
    report.wall_time_ms = ms_since(start);
    return report;
}

// --- classical Toda ---

std::vector<PhasePoly> toda_invariants(int n, int order)
{
    auto x = chi(SystemId::A1, n, ChiVariant::tilde, Params{}, order);
    const GaussRational sign(n % 2 == 0 ? 1 : -1);
    std::vector<PhasePoly> j;
    for (int k = 1; k <= n; ++k) j.push_back(x.coefficient(n - k) * sign);
    return j;
}

int independence_rank(int n, const std::vector<Rational>& p, const std::vector<Rational>& e)
{
    if (static_cast<int>(p.size()) != n || static_cast<int>(e.size()) != std::max(n - 1, 0))
        throw ArgumentError("sample needs n momenta and n-1 exponential values");
    for (const auto& x : e)
        if (x.is_zero()) throw ArgumentError("exponential sample values must be nonzero");
    auto j = toda_invariants(n, 0);
    std::vector<std::vector<GaussRational>> jac;
    for (const auto& f : j) {
        std::vector<GaussRational> row;
        for (Coord c : {Coord::q, Coord::p})
            for (int i = 1; i <= n; ++i) row.push_back(evaluate(partial(f, {c, i}), p, e));
        jac.push_back(std::move(row));
    }
    return rank_of(std::move(jac));
}

std::vector<CheckReport> classical_checks(int n, std::uint64_t seed)
{
    const int order = 0;
    const std::string suffix = ".n" + std::to_string(n);
    std::vector<CheckReport> out;

    {
        auto start = Clock::now();
        auto l = build_classical_L(n, order);
        RingMatrix<PhasePoly> m(l.dim());
        const PhasePoly lam(ParamRat::variable(0, order));
        for (std::size_t i = 0; i < l.dim(); ++i)
            for (std::size_t k = 0; k < l.dim(); ++k) m(i, k) = -parity(l(i, k));
        for (std::size_t i = 0; i < l.dim(); ++i) m(i, i) -= lam;
        auto diff = chi(SystemId::A1, n, ChiVariant::tilde, Params{}, order) - LambdaPoly::from_phase(determinant(m));
        out.push_back(finish("classical.charpoly" + suffix, lambda_terms(diff), lambda_witness(diff), start));
    }

    auto j = toda_invariants(n, order);
    {
        auto start = Clock::now();
        std::size_t residual = 0;
        std::optional<std::string> witness;
        for (std::size_t a = 0; a < j.size(); ++a)
            for (std::size_t b = a + 1; b < j.size(); ++b) {
                auto br = poisson(j[a], j[b]);
                residual += br.size();
                if (!witness && !br.is_zero())
                    witness = "{J" + std::to_string(a + 1) + ", J" + std::to_string(b + 1) + "}: " + abbreviate(br);
            }
        out.push_back(finish("classical.involution" + suffix, residual, witness, start));
    }
    {
        auto start = Clock::now();
        PhasePoly rhs = j[0] * j[0] * GaussRational(Rational(1, 2));
        if (n >= 2) rhs -= j[1];
        auto diff = hamiltonian(n, order) - rhs;
        out.push_back(finish("classical.hamiltonian" + suffix, diff.size(), abbreviate(diff), start));
    }
    {
        auto start = Clock::now();
        Sampler s(seed, order);
        int best = 0;
        std::string sample;
        for (int attempt = 0; attempt < 5 && best < n; ++attempt) {
            std::vector<Rational> p, e;
            for (int i = 0; i < n; ++i) p.push_back(s.rational(5));
            for (int i = 0; i + 1 < n; ++i) {
                Rational x;
                while (x.is_zero()) x = s.rational(5);
                e.push_back(x);
            }
            best = std::max(best, independence_rank(n, p, e));
        }
        out.push_back(finish("classical.independence" + suffix, static_cast<std::size_t>(n - best),
                             "Jacobian rank " + std::to_string(best) + " < " + std::to_string(n), start));
    }
    return out;
}

} // namespace starlax
