#include "starlax/waring.hpp"

#include <map>
#include <numeric>

namespace starlax {

namespace {

PhasePoly one(int order) { return PhasePoly::constant(GaussRational(1), order); }

PhasePoly exp_diff(int i, int j, const Rational& c, int order)
{
    return PhasePoly(ParamRat::constant(GaussRational(1), order), Mono{}.exp_q(i, c).exp_q(j, -c));
}

int order_of_list(const std::vector<PhasePoly>& fs)
{
    for (const auto& f : fs)
        if (!f.is_zero()) return f.order();
    throw ArgumentError("all inputs are zero; order unknown");
}

void recurse(int i, int k, int rem, std::vector<int>& cur, std::vector<MultiIndex>& out)
{
    if (i > k) {
        if (rem == 0) out.push_back({cur});
        return;
    }
    for (int ri = 0; ri * i <= rem; ++ri) {
        cur.push_back(ri);
        recurse(i + 1, k, rem - ri * i, cur, out);
        cur.pop_back();
    }
}

} // namespace

int MultiIndex::size() const { return std::accumulate(r.begin(), r.end(), 0); }

Rational MultiIndex::factorial() const
{
    Rational f(1);
    for (int x : r) f *= starlax::factorial(x);
    return f;
}

int MultiIndex::weighted_degree() const
{
    int d = 0;
    for (std::size_t i = 0; i < r.size(); ++i) d += static_cast<int>(i + 1) * r[i];
    return d;
}

std::vector<MultiIndex> weighted_partitions(int k)
{
    if (k < 1) throw ArgumentError("k must be >= 1");
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    recurse(1, k, k, cur, out);
    return out;
}

PhasePoly trace_poly(int n, int k, int order)
{
    if (k < 1) throw ArgumentError("k must be >= 1");
    auto l = build_classical_L(n, order);
    auto power = l;
    for (int i = 1; i < k; ++i) power = power * l;
    return trace(power) * GaussRational(Rational(1, k));
}

std::vector<PhasePoly> char_coeffs(int n, int kmax, int order)
{
    auto l = build_classical_L(n, order);
    const PhasePoly lam(ParamRat::variable(0, order));
    RingMatrix<PhasePoly> m = -l;
    for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) += lam;
    auto poly = LambdaPoly::from_phase(determinant(m));
    std::vector<PhasePoly> j;
    for (int k = 1; k <= kmax; ++k) j.push_back(k <= n ? poly.coefficient(n - k) : PhasePoly{});
    return j;
}

PhasePoly char_coeff(int n, int k, int order)
{
    if (k < 1) throw ArgumentError("k must be >= 1");
    return char_coeffs(n, k, order).back();
}

PhasePoly waring_forward(const std::vector<PhasePoly>& I, int k)
{
    if (static_cast<int>(I.size()) < k) throw ArgumentError("waring_forward needs I_1..I_k");
    const int order = order_of_list(I);
    PhasePoly total;
    for (const auto& r : weighted_partitions(k)) {
        PhasePoly prod = one(order);
        for (std::size_t i = 0; i < r.r.size(); ++i)
            for (int e = 0; e < r.r[i]; ++e) prod = prod * I[i];
        Rational c = Rational(r.size() % 2 == 0 ? 1 : -1) / r.factorial();
        total += prod * GaussRational(c);
    }
    return total;
}

PhasePoly waring_backward(const std::vector<PhasePoly>& J, int k, Product multiply, FactorOrder factor_order)
{
    const int order = order_of_list(J);
    auto mul = [&](const PhasePoly& a, const PhasePoly& b) {
        return multiply == Product::pointwise ? a * b : star_weyl(a, b);
    };
    auto get = [&](int m) { return m <= static_cast<int>(J.size()) ? J[static_cast<std::size_t>(m - 1)] : PhasePoly{}; };
    std::map<std::pair<int, int>, PhasePoly> powers;
    auto power = [&](int m, int e) -> const PhasePoly& {
        powers.try_emplace({m, 1}, get(m));
        for (int x = 2; x <= e; ++x)
            if (!powers.contains({m, x})) powers.emplace(std::make_pair(m, x), mul(powers.at({m, x - 1}), get(m)));
        return powers.at({m, e});
    };

    PhasePoly total;
    for (const auto& r : weighted_partitions(k)) {
        bool vanishes = false;
        for (std::size_t i = 0; i < r.r.size(); ++i)
            if (r.r[i] > 0 && get(static_cast<int>(i + 1)).is_zero()) vanishes = true;
        if (vanishes) continue;
        const int n_factors = static_cast<int>(r.r.size());
        PhasePoly prod = one(order);
        for (int s = 0; s < n_factors; ++s) {
            int m = factor_order == FactorOrder::ascending ? s + 1 : n_factors - s;
            int e = r.r[static_cast<std::size_t>(m - 1)];
            if (e > 0) prod = mul(prod, power(m, e));
        }
        const int size = r.size();
        Rational c = Rational(size % 2 == 0 ? 1 : -1) / r.factorial() * starlax::factorial(size) / Rational(size);
        total += prod * GaussRational(c);
    }
    return total;
}

PhasePoly corrected_trace_poly(int n, int k, int order, FactorOrder factor_order)
{
    return waring_backward(char_coeffs(n, k, order), k, Product::star_weyl, factor_order);
}

PhasePoly quantum_correction(int n, int k, int order)
{
    return corrected_trace_poly(n, k, order) - trace_poly(n, k, order);
}

PhasePoly closed_form_correction(int n, int k, int order)
{
    if (k < 4 || k > 6) throw ArgumentError("closed-form corrections exist for k = 4, 5, 6 only");
    const auto rho2 = ParamRat::constant(HbarSeries::monomial(order, GaussRational(Rational(-1, 4)), 2));
    const auto rho4 = ParamRat::constant(HbarSeries::monomial(order, GaussRational(Rational(1, 16)), 4));
    PhasePoly out;
    for (int i = 1; i < n; ++i) {
        const PhasePoly e = exp_diff(i, i + 1, Rational(1), order);
        const PhasePoly pi = PhasePoly::p(i, order), pj = PhasePoly::p(i + 1, order);
        switch (k) {
        case 4: out += e * rho2; break;
        case 5: out += (pi + pj) * e * (rho2 * GaussRational(2)); break;
        default:
            out += exp_diff(i, i + 1, Rational(2), order) * (rho2 * GaussRational(Rational(8, 3)));
            out += (pi * pi + pi * pj + pj * pj) * e * (rho2 * GaussRational(Rational(10, 3)));
            out += e * rho4;
            if (i + 2 <= n) out += exp_diff(i, i + 2, Rational(1), order) * rho2;
        }
    }
    return out;
}

std::optional<AsymmetryWitness> find_quantum_asymmetry(int max_k, int max_n, int order)
{
    for (int n = 1; n <= max_n; ++n) {
        std::vector<PhasePoly> traces;
        for (int k = 1; k <= max_k; ++k) traces.push_back(trace_poly(n, k, order));
        for (int j = 1; j <= max_k; ++j)
            for (int k = j + 1; k <= max_k; ++k) {
                auto c = star_commutator(traces[static_cast<std::size_t>(j - 1)], traces[static_cast<std::size_t>(k - 1)]);
                if (!c.is_zero()) return AsymmetryWitness{n, j, k, std::move(c)};
            }
    }
    return std::nullopt;
}

} // namespace starlax
