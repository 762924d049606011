#include "starlax/suite.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "starlax/parallel.hpp"
#include "starlax/representation.hpp"
#include "starlax/sampling.hpp"
#include "starlax/waring.hpp"

namespace starlax {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Accumulates residual terms and the first witness of one check.
class Tally {
public:
    explicit Tally(std::string name) : name_(std::move(name)), start_(Clock::now()) {}

    void add(const PhasePoly& diff, const std::string& label)
    {
        if (diff.is_zero()) return;
        residual_ += diff.size();
        if (!witness_) witness_ = label + ": " + abbreviate(diff);
    }

    void add(const RingMatrix<ParamRat>& m, const std::string& label)
    {
        std::size_t n = residual_terms(m);
        if (n == 0) return;
        residual_ += n;
        if (!witness_)
            for (std::size_t i = 0; i < m.dim() && !witness_; ++i)
                for (std::size_t j = 0; j < m.dim() && !witness_; ++j)
                    if (!m(i, j).is_zero())
                        witness_ = label + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   "): " + m(i, j).str();
    }

    void require(bool ok, const std::string& label)
    {
        if (ok) return;
        ++residual_;
        if (!witness_) witness_ = label;
    }

    [[nodiscard]] CheckReport done() const
    {
        CheckReport r;
        r.name = name_;
        r.residual_terms = residual_;
        r.pass = residual_ == 0;
        r.witness = witness_;
        r.wall_time_ms = ms_since(start_);
        return r;
    }

private:
    std::string name_;
    Clock::time_point start_;
    std::size_t residual_ = 0;
    std::optional<std::string> witness_;
};

HbarSeries tanh_of(const Rational& eps, int order)
{
    return series_func(SeriesFunction::tanh, GaussRational(Rational(0), eps / Rational(2)), order);
}

/// R12 R21 with R21_{(ik),(jl)} = R_{(ki),(lj)} at (mu, lambda), multiplied index by index.
RingMatrix<ParamRat> brute_unitarity_product(const RingMatrix<ParamRat>& r)
{
    const SpectralRenaming swap{1, 0, 2};
    auto idx = [](std::size_t a, std::size_t b) { return 2 * a + b; };
    RingMatrix<ParamRat> r21(4), out(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l) r21(idx(i, k), idx(j, l)) = r(idx(k, i), idx(l, j)).renamed(swap);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            ParamRat acc;
            for (std::size_t c = 0; c < 4; ++c) acc += r(a, c) * r21(c, b);
            out(a, b) = acc;
        }
    return out;
}

CheckReport unitarity_check(const std::string& name, const RingMatrix<ParamRat>& r, const ParamRat& expected)
{
    Tally t(name);
    auto outcome = check_unitarity(r);
    t.require(outcome.scalar.has_value(), "R12 R21 is not a multiple of the identity");
    if (outcome.scalar) t.require(ratfun_eq(*outcome.scalar, expected), "scalar " + outcome.scalar->str() + " != " + expected.str());
    t.add(outcome.product - brute_unitarity_product(r), "product vs index-level oracle");
    t.add(outcome.product - RingMatrix<ParamRat>::identity(4, ParamRat::constant(1, expected.order())).scaled(expected),
          "product vs closed-form scalar");
    return t.done();
}

std::vector<PhasePoly> random_list(Sampler& s, int count)
{
    std::vector<PhasePoly> out;
    for (int i = 0; i < count; ++i) out.push_back(s.phase_poly(2, 3));
    return out;
}

CheckReport negative_control(const CheckReport& r)
{
    CheckReport c;
    c.name = r.name + ".negative_control";
    c.pass = !r.pass && r.witness.has_value();
    c.residual_terms = c.pass ? 0 : 1;
    c.witness = c.pass ? r.witness : std::optional<std::string>("mismatched pair unexpectedly passed");
    c.wall_time_ms = r.wall_time_ms;
    return c;
}

std::string seconds(double ms)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(ms < 10000 ? 2 : 1) << ms / 1000.0 << " s";
    return os.str();
}

} // namespace

std::vector<CheckReport> cybe_reports(int order)
{
    std::vector<CheckReport> out;
    for (auto [kind, label] : {std::pair{RKind::casimir_rational, "cybe.r"}, std::pair{RKind::trigonometric_tilde, "cybe.rtilde"}}) {
        Tally t(label);
        t.add(check_cybe(build_classical_r(kind, order)), "residual");
        out.push_back(t.done());
    }
    return out;
}

std::vector<CheckReport> qybe_reports(int order, const Params& params, std::uint64_t seed, int random)
{
    std::vector<CheckReport> out;
    for (auto g : {RGroup::A, RGroup::B, RGroup::C}) {
        Tally t("qybe." + std::string(name(g)));
        t.add(check_qybe(group_R(g, params, order)), "residual");
        out.push_back(t.done());
    }
    Sampler s(seed, order);
    for (int i = 1; i <= random; ++i) {
        auto f = s.series_no_constant(3);
        Tally t("qybe.random" + std::to_string(i));
        t.add(check_qybe(build_quantum_R(RKind::casimir_rational, f)), "r, f = " + f.str());
        t.add(check_qybe(build_quantum_R(RKind::trigonometric_tilde, f)), "r~, f = " + f.str());
        out.push_back(t.done());
    }
    for (auto [kind, label] : {std::pair{RKind::casimir_rational, "qybe.cubic.r"}, std::pair{RKind::trigonometric_tilde, "qybe.cubic.rtilde"}}) {
        Tally t(label);
        t.add(qybe_cubic_term(build_classical_r(kind, order)), "r12 r13 r23 - r23 r13 r12");
        out.push_back(t.done());
    }
    return out;
}

std::vector<CheckReport> unitarity_reports(int order, const Params& params)
{
    const ParamRat one = ParamRat::constant(1, order);
    const DenPoly lam = den_variable(0), mu = den_variable(1);
    const ParamRat l = ParamRat::variable(0, order), m = ParamRat::variable(1, order);

    ParamRat a_expected = one + ParamRat(ParamPoly::constant(HbarSeries::monomial(order, 1, 2)), {{lam - mu, 2}});
    auto sum_sq = l * l + m * m;
    ParamRat ratio = ParamRat((sum_sq * sum_sq).num(), {{lam - mu, 2}, {lam + mu, 2}});
    auto tilde_expected = [&](const Rational& eps) {
        auto th = tanh_of(eps, order);
        return one - ratio * (th * th);
    };

    std::vector<CheckReport> out;
    out.push_back(unitarity_check("unitarity.A", group_R(RGroup::A, params, order), a_expected));
    out.push_back(unitarity_check("unitarity.B", group_R(RGroup::B, params, order), tilde_expected(Rational(1))));
    out.push_back(unitarity_check("unitarity.C", group_R(RGroup::C, params, order), tilde_expected(params.eps)));
    out.push_back(unitarity_check("unitarity.identity", RingMatrix<ParamRat>::identity(4, one), one));
    return out;
}

std::vector<CheckReport> representation_reports(int order, std::uint64_t seed, int triples)
{
    Sampler s(seed, order);
    Tally standard("repr.standard"), weyl("repr.weyl");
    for (int i = 0; i < triples; ++i) {
        auto f = s.phase_poly(2, 3), g = s.phase_poly(2, 3);
        WaveFn psi(s.wavefn(2, 2));
        const std::string label = "triple " + std::to_string(i);
        standard.add((rho_standard(star_standard(f, g), psi) - rho_standard(f, rho_standard(g, psi))).poly(), label);
        weyl.add((rho_weyl(star_weyl(f, g), psi) - rho_weyl(f, rho_weyl(g, psi))).poly(), label);
    }
    return {standard.done(), weyl.done()};
}

std::vector<CheckReport> foundation_reports(int order, std::uint64_t seed)
{
    std::vector<CheckReport> out;
    Sampler s(seed, order);
    {
        Tally weyl("star.associativity.weyl"), standard("star.associativity.standard");
        for (int i = 0; i < 50; ++i) {
            auto x = random_list(s, 3);
            const std::string label = "triple " + std::to_string(i);
            weyl.add(star_weyl(star_weyl(x[0], x[1]), x[2]) - star_weyl(x[0], star_weyl(x[1], x[2])), label);
            standard.add(star_standard(star_standard(x[0], x[1]), x[2]) - star_standard(x[0], star_standard(x[1], x[2])), label);
        }
        out.push_back(weyl.done());
        out.push_back(standard.done());
    }
    {
        Tally classical("star.classical_limit"), semi("star.semiclassical_limit");
        for (int i = 0; i < 50; ++i) {
            auto x = random_list(s, 2);
            const std::string label = "pair " + std::to_string(i);
            auto pointwise = (x[0] * x[1]).hbar_coefficient(0);
            classical.add(star_weyl(x[0], x[1]).hbar_coefficient(0) - pointwise, label + " (Weyl)");
            classical.add(star_standard(x[0], x[1]).hbar_coefficient(0) - pointwise, label + " (standard)");
            auto comm = star_commutator(x[0], x[1]);
            auto bracket = poisson(x[0].hbar_coefficient(0), x[1].hbar_coefficient(0)) * GaussRational::i();
            semi.add(comm.hbar_coefficient(0), label + " hbar^0");
            semi.add(comm.hbar_coefficient(1) - bracket, label + " hbar^1");
        }
        out.push_back(classical.done());
        out.push_back(semi.done());
    }
    {
        Tally t("star.n_intertwining");
        for (int i = 0; i < 50; ++i) {
            auto x = random_list(s, 2);
            const std::string label = "pair " + std::to_string(i);
            t.add(n_transform(star_weyl(x[0], x[1]), 1) - star_standard(n_transform(x[0], 1), n_transform(x[1], 1)), label);
            t.add(n_transform(n_transform(x[0], 1), -1) - x[0], label + " inverse");
        }
        out.push_back(t.done());
    }
    {
        Tally conj("star.conjugation"), par("star.parity");
        for (int i = 0; i < 50; ++i) {
            auto x = random_list(s, 2);
            const std::string label = "pair " + std::to_string(i);
            conj.add(conjugate(star_weyl(x[0], x[1])) - star_weyl(conjugate(x[1]), conjugate(x[0])), label);
            par.add(parity(star_weyl(x[0], x[1])) - star_weyl(parity(x[1]), parity(x[0])), label);
        }
        out.push_back(conj.done());
        out.push_back(par.done());
    }
    for (auto& r : representation_reports(order, seed + 1, 100)) out.push_back(std::move(r));
    return out;
}

std::vector<CheckReport> waring_reports(int max_n, int order)
{
    std::vector<CheckReport> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<PhasePoly> i, j = char_coeffs(n, n, order);
        for (int k = 1; k <= n; ++k) i.push_back(trace_poly(n, k, order));
        Tally fwd("waring.forward.n" + std::to_string(n)), bwd("waring.backward.n" + std::to_string(n)),
            trip("waring.roundtrip.n" + std::to_string(n));
        std::vector<PhasePoly> j_from_i, i_from_j;
        for (int k = 1; k <= n; ++k) {
            const auto uk = static_cast<std::size_t>(k - 1);
            const std::string label = "k=" + std::to_string(k);
            j_from_i.push_back(waring_forward(i, k));
            i_from_j.push_back(waring_backward(j, k, Product::pointwise));
            fwd.add(j_from_i[uk] - j[uk], label);
            bwd.add(i_from_j[uk] - i[uk], label);
        }
        for (int k = 1; k <= n; ++k) {
            const auto uk = static_cast<std::size_t>(k - 1);
            const std::string label = "k=" + std::to_string(k);
            trip.add(waring_backward(j_from_i, k, Product::pointwise) - i[uk], label + " I -> J -> I");
            trip.add(waring_forward(i_from_j, k) - j[uk], label + " J -> I -> J");
        }
        out.push_back(fwd.done());
        out.push_back(bwd.done());
        out.push_back(trip.done());
    }
    return out;
}

std::vector<CheckReport> correction_reports(int n, int order, const std::vector<int>& ks)
{
    std::vector<CheckReport> out;
    for (int k : ks) {
        Tally t("correction.n" + std::to_string(n) + ".k" + std::to_string(k));
        auto corr = quantum_correction(n, k, order);
        if (k <= 3)
            t.add(corr, "corrected minus classical");
        else
            t.add(corr - closed_form_correction(n, k, order), "computed minus closed form");
        out.push_back(t.done());
    }
    return out;
}

std::vector<CheckReport> quantum_integrability_reports(int max_n, int max_k, int order, int jobs)
{
    std::vector<CheckReport> out;
    for (int n = 1; n <= max_n; ++n) {
        auto start = Clock::now();
        std::vector<PhasePoly> fs;
        std::vector<std::string> labels;
        auto hats = parallel_map(static_cast<std::size_t>(max_k), jobs,
                                 [&](std::size_t k) { return corrected_trace_poly(n, static_cast<int>(k) + 1, order); });
        for (int k = 1; k <= max_k; ++k) {
            fs.push_back(hats[static_cast<std::size_t>(k - 1)]);
            labels.push_back("Ihat" + std::to_string(k));
        }
        fs.push_back(hamiltonian(n, order));
        labels.emplace_back("H");
        auto r = check_commuting("integrable.n" + std::to_string(n), fs, labels, jobs);
        r.wall_time_ms = ms_since(start);
        out.push_back(std::move(r));
    }
    return out;
}

CheckReport asymmetry_report(int max_k, int max_n, int order)
{
    auto start = Clock::now();
    auto w = find_quantum_asymmetry(max_k, max_n, order);
    CheckReport r;
    r.name = "asymmetry.search";
    r.pass = w.has_value();
    r.residual_terms = r.pass ? 0 : 1;
    if (w)
        r.witness = "n=" + std::to_string(w->n) + " [I" + std::to_string(w->j) + ", I" + std::to_string(w->k) +
                    "]: " + abbreviate(w->commutator);
    else
        r.witness = "all uncorrected pairs commute";
    r.wall_time_ms = ms_since(start);
    return r;
}

LaxFactory sign_corrected_a2(int order)
{
    return [order](int k) {
        auto u = build_U(SystemId::A2, k, Params{}, order);
        u(1, 1) = -u(1, 1);
        return u;
    };
}

std::vector<CheckReport> diagnostic_reports(int order, int jobs)
{
    const std::string tag = "diagnostic.A2_sign_corrected";
    auto u = sign_corrected_a2(order);
    auto r = matching_R(SystemId::A2, Params{}, order);
    std::vector<CheckReport> out;
    out.push_back(check_rll(tag + ".rll", u, r));
    out.push_back(check_rtt(tag + ".rtt.n2", u, 2, r));
    for (int n : {2, 3})
        for (auto v : {ChiVariant::plain, ChiVariant::tilde}) {
            auto start = Clock::now();
            auto x = chi(u, n, v);
            std::vector<PhasePoly> fs;
            std::vector<std::string> labels;
            for (const auto& [k, c] : x.coefficients()) {
                fs.push_back(c);
                labels.push_back("lambda^" + std::to_string(k));
            }
            auto rep = check_commuting(tag + ".commute.n" + std::to_string(n) + "." + std::string(name(v)), fs, labels, jobs);
            rep.wall_time_ms = ms_since(start);
            out.push_back(std::move(rep));
        }
    return out;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int jobs, const std::vector<int>& only)
{
    const Params base{}, alt = Params::parse("eps=2,g=3,delta=1/2");
    const std::vector<Params> bindings{base, alt};
    struct Criterion {
        int id;
        const char* title;
        double budget_s;
        std::function<std::vector<CheckReport>()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "CYBE: r and r~ exactly", 1, [] { return cybe_reports(8); }},
        {2, "QYBE to order 8: table R-matrices, 5 random f, cubic term", 10,
         [&] { return qybe_reports(8, alt, seed, 5); }},
        {3, "Unitarity scalars vs closed forms and product oracle", 5, [&] { return unitarity_reports(8, alt); }},
        {4, "RLL for all seven systems, both bindings, order 8; mismatched pair fails", 60,
         [&] {
             std::vector<std::pair<SystemId, Params>> jobs_list;
             for (const auto& b : bindings)
                 for (auto s : kAllSystems) jobs_list.emplace_back(s, b);
             auto reps = parallel_map(jobs_list.size(), jobs, [&](std::size_t i) {
                 auto r = check_rll(jobs_list[i].first, jobs_list[i].second, 8);
                 r.name += "[" + jobs_list[i].second.str() + "]";
                 return r;
             });
             reps.push_back(negative_control(check_rll(SystemId::A1, base, 8, RGroup::B)));
             return reps;
         }},
        {5, "RTT for all seven systems, n=2, order 6", 120,
         [&] {
             std::vector<std::pair<SystemId, Params>> jobs_list;
             for (const auto& b : bindings)
                 for (auto s : kAllSystems) jobs_list.emplace_back(s, b);
             return parallel_map(jobs_list.size(), jobs, [&](std::size_t i) {
                 auto r = check_rtt(jobs_list[i].first, 2, jobs_list[i].second, 6);
                 r.name += "[" + jobs_list[i].second.str() + "]";
                 return r;
             });
         }},
        {6, "Characteristic functions star-commute: n=2,3 both variants (n=4 for A1), order 6", 600,
         [&] {
             struct Job {
                 SystemId s;
                 int n;
                 ChiVariant v;
                 Params p;
             };
             std::vector<Job> jl;
             for (const auto& b : bindings)
                 for (auto s : kAllSystems)
                     for (int n : {2, 3})
                         for (auto v : {ChiVariant::plain, ChiVariant::tilde}) jl.push_back({s, n, v, b});
             for (auto v : {ChiVariant::plain, ChiVariant::tilde}) jl.push_back({SystemId::A1, 4, v, base});
             return parallel_map(jl.size(), jobs, [&](std::size_t i) {
                 auto r = check_char_commute(jl[i].s, jl[i].n, jl[i].v, jl[i].p, 6);
                 r.name += "[" + jl[i].p.str() + "]";
                 return r;
             });
         }},
        {7, "Classical Toda: char. polynomial, involution, Hamiltonian, rank (n<=4)", 10,
         [&] {
             std::vector<CheckReport> out;
             for (int n = 1; n <= 4; ++n)
                 for (auto& r : classical_checks(n, seed + static_cast<std::uint64_t>(n))) out.push_back(std::move(r));
             return out;
         }},
        {8, "Waring identities both directions and round trip (n<=5)", 30, [] { return waring_reports(5, 8); }},
        {9, "Quantum corrections reproduce the closed forms (n=4,5; order 8)", 300,
         [&] {
             std::vector<int> ns{4, 5};
             auto per_n = parallel_map(ns.size(), jobs, [&](std::size_t i) {
                 return correction_reports(ns[i], 8, {1, 2, 3, 4, 5, 6});
             });
             std::vector<CheckReport> out;
             for (auto& v : per_n)
                 for (auto& r : v) out.push_back(std::move(r));
             return out;
         }},
        {10, "Corrected quantities commute with each other and H (n<=5); asymmetry exists", 600,
         [&] {
             auto out = quantum_integrability_reports(5, 5, 8, jobs);
             out.push_back(asymmetry_report(6, 5, 8));
             return out;
         }},
        {11, "Star-product foundations (associativity, limits, N, conjugation, parity, representations)", 60,
         [&] { return foundation_reports(8, seed); }},
    };

    std::vector<CriterionResult> results;
    for (const auto& entry : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), entry.id) == only.end()) continue;
        CriterionResult c;
        c.id = entry.id;
        c.title = entry.title;
        c.budget_ms = entry.budget_s * 1000.0;
        auto start = Clock::now();
        c.checks = entry.run();
        c.wall_time_ms = ms_since(start);
        c.pass = c.wall_time_ms <= c.budget_ms;
        for (const auto& r : c.checks) c.pass = c.pass && r.pass;
        results.push_back(std::move(c));
    }
    return results;
}

std::string render_criterion(const CriterionResult& c, bool timing)
{
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : c.checks) passed += r.pass ? 1 : 0;
    os << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " -- " << passed << "/" << c.checks.size()
       << " checks";
    if (timing) os << " (" << seconds(c.wall_time_ms) << ", budget " << seconds(c.budget_ms) << ")";
    if (timing && c.wall_time_ms > c.budget_ms) os << " OVER BUDGET";
    for (const auto& r : c.checks)
        if (!r.pass) os << "\n    FAIL " << r.name << " residual_terms=" << r.residual_terms << " " << r.witness.value_or("");
    return os.str();
}

std::string emit_report(const std::vector<CheckReport>& reports, const RunConfig& config)
{
    if (config.format == OutputFormat::text) {
        if (reports.empty()) return "0 checks\n";
        std::ostringstream os;
        std::size_t width = 0;
        for (const auto& r : reports) width = std::max(width, r.name.size());
        for (const auto& r : reports) {
            os << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << (r.pass ? "PASS" : "FAIL")
               << "  residual_terms=" << r.residual_terms;
            if (config.timing) os << "  " << std::fixed << std::setprecision(1) << r.wall_time_ms << " ms";
            if (r.witness) os << "  " << *r.witness;
            os << "\n";
        }
        return os.str();
    }

    nlohmann::ordered_json cfg;
    cfg["order"] = config.order;
    cfg["params"] = config.params.str();
    cfg["seed"] = config.seed;
    cfg["systems"] = nlohmann::ordered_json::array();
    for (auto s : config.systems) cfg["systems"].push_back(std::string(name(s)));
    cfg["n_range"] = config.n_range;
    cfg["r_override"] = config.r_override ? nlohmann::ordered_json(std::string(name(*config.r_override))) : nullptr;

    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json o;
        o["schema"] = 1;
        o["name"] = r.name;
        o["pass"] = r.pass;
        o["residual_terms"] = r.residual_terms;
        o["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nullptr;
        o["wall_time_ms"] = config.timing ? nlohmann::ordered_json(r.wall_time_ms) : nullptr;
        o["config"] = cfg;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

} // namespace starlax
