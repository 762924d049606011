#pragma once

#include <string>

#include "starlax/phase_poly.hpp"

namespace starlax {

/// Test wavefunction: canonical sum of coeff * prod q_i^m_i * exp(sum v_i q_i).
/// Closed under d/dq and under multiplication by p-free observables.
class WaveFn {
public:
    WaveFn() = default;
    /// Throws ArgumentError if `f` depends on any momentum.
    explicit WaveFn(PhasePoly f);

    [[nodiscard]] const PhasePoly& poly() const { return f_; }
    [[nodiscard]] bool is_zero() const { return f_.is_zero(); }

    friend WaveFn operator+(const WaveFn& a, const WaveFn& b) { return WaveFn(a.f_ + b.f_); }
    friend WaveFn operator-(const WaveFn& a, const WaveFn& b) { return WaveFn(a.f_ - b.f_); }
    friend bool operator==(const WaveFn& a, const WaveFn& b) { return a.f_ == b.f_; }

    [[nodiscard]] std::string str() const { return f_.str(); }

private:
    PhasePoly f_;
};

/// Standard-ordered quantization: sum_k (1/k!)(hbar/i)^|k| (d^k F/dp^k)(q, 0) d^k psi/dq^k.
[[nodiscard]] WaveFn rho_standard(const PhasePoly& f, const WaveFn& psi);

/// Weyl-ordered quantization rho_S(N F).
[[nodiscard]] WaveFn rho_weyl(const PhasePoly& f, const WaveFn& psi);

} // namespace starlax
