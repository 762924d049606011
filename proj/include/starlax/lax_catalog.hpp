#pragma once

#include <array>
#include <string>
#include <string_view>

#include "starlax/r_matrices.hpp"

namespace starlax {

/// The seven Lax matrices, in table order: A1 (Toda), A2, B1, B2, B3, C1, C2.
enum class SystemId { A1, A2, B1, B2, B3, C1, C2 };

inline constexpr std::array<SystemId, 7> kAllSystems{SystemId::A1, SystemId::A2, SystemId::B1, SystemId::B2,
                                                     SystemId::B3, SystemId::C1, SystemId::C2};

/// R-matrix families: A = 1 + 2 rho r, B = 1 - 2 tanh(rho) r~, C = 1 - 2 tanh(eps rho) r~.
enum class RGroup { A, B, C };

[[nodiscard]] std::string_view name(SystemId s);
[[nodiscard]] std::string_view name(RGroup g);
/// "A1".."C2"; throws ArgumentError otherwise.
[[nodiscard]] SystemId parse_system(std::string_view s);
/// "A", "B" or "C"; throws ArgumentError otherwise.
[[nodiscard]] RGroup parse_group(std::string_view s);
[[nodiscard]] RGroup group_of(SystemId s);

/// Rational system parameters. g enters only through g^2.
struct Params {
    Rational eps{1};
    Rational g{1};
    Rational delta{1};

    /// "eps=2,g=3,delta=1/2"; any subset, in any order. Integers or a/b only.
    static Params parse(std::string_view text);
    [[nodiscard]] std::string str() const;
    friend bool operator==(const Params&, const Params&) = default;
};

/// Lax matrix of particle k (>= 1) in the spectral parameter lambda.
[[nodiscard]] RingMatrix<PhasePoly> build_U(SystemId system, int k, const Params& params, int order);

/// Quantum R-matrix matching a group (eps is used by the C group only).
[[nodiscard]] RingMatrix<ParamRat> group_R(RGroup group, const Params& params, int order);
[[nodiscard]] RingMatrix<ParamRat> matching_R(SystemId system, const Params& params, int order);

/// Symmetric tridiagonal Toda matrix: p_i on the diagonal, exp((q_i - q_{i+1})/2) beside it.
[[nodiscard]] RingMatrix<PhasePoly> build_classical_L(int n, int order);

/// 1/2 sum p_i^2 + sum exp(q_i - q_{i+1}).
[[nodiscard]] PhasePoly hamiltonian(int n, int order);

} // namespace starlax
