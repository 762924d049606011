#pragma once

#include <optional>
#include <vector>

#include "starlax/integrability.hpp"

namespace starlax {

/// r = (r_1..r_k): |r| = sum r_i, r! = prod r_i!, weighted degree sum i*r_i.
struct MultiIndex {
    std::vector<int> r;

    [[nodiscard]] int size() const;
    [[nodiscard]] Rational factorial() const;
    [[nodiscard]] int weighted_degree() const;
};

/// All r of length k with weighted degree k.
[[nodiscard]] std::vector<MultiIndex> weighted_partitions(int k);

/// I_k = tr(L^k)/k for the n-particle Toda matrix.
[[nodiscard]] PhasePoly trace_poly(int n, int k, int order);

/// J_k from det(lambda - L) = lambda^n + sum J_k lambda^{n-k}; zero for k > n.
[[nodiscard]] PhasePoly char_coeff(int n, int k, int order);
/// J_1..J_kmax (index 0 holds J_1).
[[nodiscard]] std::vector<PhasePoly> char_coeffs(int n, int kmax, int order);

/// J_k = sum_{r} (-1)^|r| / r! * I_1^r_1 ... I_k^r_k, I[0] holding I_1.
[[nodiscard]] PhasePoly waring_forward(const std::vector<PhasePoly>& I, int k);

/// Factor order for star monomials J_1^r_1 * ... * J_k^r_k.
enum class FactorOrder { ascending, descending };

/// I_k = sum_{r} (-1)^|r| / r! * (|r|!/|r|) * J_1^r_1 ... J_k^r_k, J[0] holding J_1;
/// missing J's are zero. With star_weyl this defines the corrected quantities.
[[nodiscard]] PhasePoly waring_backward(const std::vector<PhasePoly>& J, int k, Product multiply,
                                        FactorOrder factor_order = FactorOrder::ascending);

/// Star-Waring quantity built from the Toda J's.
[[nodiscard]] PhasePoly corrected_trace_poly(int n, int k, int order,
                                             FactorOrder factor_order = FactorOrder::ascending);

/// corrected_trace_poly - trace_poly.
[[nodiscard]] PhasePoly quantum_correction(int n, int k, int order);

/// Closed forms of the corrections for k = 4, 5, 6 with rho^2 = -hbar^2/4, rho^4 = hbar^4/16.
[[nodiscard]] PhasePoly closed_form_correction(int n, int k, int order);

struct AsymmetryWitness {
    int n;
    int j;
    int k;
    PhasePoly commutator;
};

/// First (n, j, k) in lexicographic order, j < k <= max_k, n <= max_n, whose
/// uncorrected trace polynomials fail to star-commute.
[[nodiscard]] std::optional<AsymmetryWitness> find_quantum_asymmetry(int max_k, int max_n, int order);

} // namespace starlax
