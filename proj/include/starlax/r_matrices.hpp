#pragma once

#include <optional>

#include "starlax/ring_matrix.hpp"

namespace starlax {

enum class RKind { casimir_rational, trigonometric_tilde };

/// C = sum_ij E_ij (x) E_ji, the flip on C^2 (x) C^2.
[[nodiscard]] RingMatrix<ParamRat> casimir(int order);

/// r = C/(lambda - mu), or the trigonometric r~ with entries
/// (lambda^2 + mu^2)/(2(lambda^2 - mu^2)), -1/2, 1/2 and lambda*mu/(lambda^2 - mu^2).
[[nodiscard]] RingMatrix<ParamRat> build_classical_r(RKind kind, int order);

/// 1 (x) 1 + f * r.
[[nodiscard]] RingMatrix<ParamRat> build_quantum_R(RKind kind, const HbarSeries& f);

/// [r12, r13] + [r12, r23] + [r13, r23] on three legs.
[[nodiscard]] RingMatrix<ParamRat> check_cybe(const RingMatrix<ParamRat>& r);

/// R12 R13 R23 - R23 R13 R12 on three legs.
[[nodiscard]] RingMatrix<ParamRat> check_qybe(const RingMatrix<ParamRat>& R);

/// The part of the Yang-Baxter residual cubic in f: r12 r13 r23 - r23 r13 r12.
[[nodiscard]] RingMatrix<ParamRat> qybe_cubic_term(const RingMatrix<ParamRat>& r);

struct UnitarityOutcome {
    /// R12 R21 on two legs.
    RingMatrix<ParamRat> product;
    /// c with R12 R21 = c * identity, if the product is scalar.
    std::optional<ParamRat> scalar;
};

[[nodiscard]] UnitarityOutcome check_unitarity(const RingMatrix<ParamRat>& R);

} // namespace starlax
