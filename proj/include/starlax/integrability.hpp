#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starlax/lax_catalog.hpp"

namespace starlax {

/// Laurent polynomial in lambda with PhasePoly coefficients (lambda-free).
class LambdaPoly {
public:
    LambdaPoly() = default;

    /// Splits a PhasePoly whose coefficients are Laurent polynomials in lambda alone.
    static LambdaPoly from_phase(const PhasePoly& f);

    [[nodiscard]] const std::map<int, PhasePoly>& coefficients() const { return c_; }
    /// Coefficient of lambda^power (zero if absent).
    [[nodiscard]] PhasePoly coefficient(int power) const;
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] int min_power() const;
    [[nodiscard]] int max_power() const;

    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator-(LambdaPoly a);
    /// Pointwise product of coefficients.
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator*(LambdaPoly a, const GaussRational& c);
    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

    /// "(c_k)*lambda^k + ...", highest power first.
    [[nodiscard]] std::string str() const;

private:
    void set(int power, PhasePoly v);

    std::map<int, PhasePoly> c_;
};

/// Lax matrix of particle k as a function of k; entries may depend on lambda only.
using LaxFactory = std::function<RingMatrix<PhasePoly>(int k)>;

[[nodiscard]] LaxFactory lax_factory(SystemId system, const Params& params, int order);

enum class ChiVariant { plain, tilde };

[[nodiscard]] std::string_view name(ChiVariant v);

/// tr(U^n ... U^1) (plain) or tr(E11 U^n ... U^1) (tilde), organized by lambda-power.
[[nodiscard]] LambdaPoly chi(const LaxFactory& u, int n, ChiVariant variant);
[[nodiscard]] LambdaPoly chi(SystemId system, int n, ChiVariant variant, const Params& params, int order);

/// U^n * ... * U^1 with the Weyl star product.
[[nodiscard]] RingMatrix<PhasePoly> monodromy(const LaxFactory& u, int n);

/// Outcome of one verification. pass <=> residual_terms == 0.
struct CheckReport {
    std::string name;
    bool pass = false;
    std::size_t residual_terms = 0;
    std::optional<std::string> witness;
    double wall_time_ms = 0;
};

/// "entry (i,j): <first terms>" for the first nonzero entry (one-based), if any.
[[nodiscard]] std::optional<std::string> witness_of(const RingMatrix<PhasePoly>& residual);
/// The first few terms of f, with a count of the remainder.
[[nodiscard]] std::string abbreviate(const PhasePoly& f, std::size_t max_terms = 4);

/// R (T1(lambda) * T2(mu)) - (T2(mu) * T1(lambda)) R with T1 = T (x) 1, T2 = 1 (x) T.
[[nodiscard]] RingMatrix<PhasePoly> exchange_residual(const RingMatrix<ParamRat>& r, const RingMatrix<PhasePoly>& t);

/// RLL for one particle with the matching R-matrix, or the R of another group.
[[nodiscard]] CheckReport check_rll(SystemId system, const Params& params, int order,
                                    std::optional<RGroup> r_override = std::nullopt);
[[nodiscard]] CheckReport check_rll(const std::string& name, const LaxFactory& u, const RingMatrix<ParamRat>& r);

/// RTT for the n-particle monodromy.
[[nodiscard]] CheckReport check_rtt(SystemId system, int n, const Params& params, int order,
                                    std::optional<RGroup> r_override = std::nullopt);
[[nodiscard]] CheckReport check_rtt(const std::string& name, const LaxFactory& u, int n, const RingMatrix<ParamRat>& r);

/// All pairwise star-commutators of the lambda-coefficients of chi vanish.
[[nodiscard]] CheckReport check_char_commute(SystemId system, int n, ChiVariant variant, const Params& params,
                                             int order, int jobs = 1);
[[nodiscard]] CheckReport check_commuting(const std::string& name, const std::vector<PhasePoly>& fs,
                                          const std::vector<std::string>& labels, int jobs = 1);

/// J_1..J_n of the Toda chain read from chi(A1, n, tilde) after normalizing the
/// leading coefficient to +1 (index 0 holds J_1).
[[nodiscard]] std::vector<PhasePoly> toda_invariants(int n, int order);

/// Rank of the Jacobian of (J_1..J_n) with respect to (q, p) at the point given by
/// p_i = p[i-1] and exp(q_i - q_{i+1}) = e[i-1].
[[nodiscard]] int independence_rank(int n, const std::vector<Rational>& p, const std::vector<Rational>& e);

/// Classical Toda cross-checks: characteristic polynomial, involution, Hamiltonian, independence.
[[nodiscard]] std::vector<CheckReport> classical_checks(int n, std::uint64_t seed);

} // namespace starlax
