#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "starlax/errors.hpp"
#include "starlax/phase_poly.hpp"

namespace starlax {

/// Square matrix over a ring T (ParamRat or PhasePoly). A default-constructed T is zero.
template <class T>
class RingMatrix {
public:
    RingMatrix() = default;
    explicit RingMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

    static RingMatrix identity(std::size_t dim, const T& one)
    {
        RingMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = one;
        return m;
    }

    /// Matrix unit E_ij (zero-based indices).
    static RingMatrix unit(std::size_t dim, std::size_t i, std::size_t j, const T& one)
    {
        RingMatrix m(dim);
        m(i, j) = one;
        return m;
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    T& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
    [[nodiscard]] const std::vector<T>& entries() const { return e_; }

    [[nodiscard]] bool is_zero() const
    {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    RingMatrix& operator+=(const RingMatrix& o)
    {
        check_dim(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    RingMatrix& operator-=(const RingMatrix& o)
    {
        check_dim(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) { return a += b; }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) { return a -= b; }
    friend RingMatrix operator-(RingMatrix a)
    {
        for (auto& x : a.e_) x = -x;
        return a;
    }

    /// Entry-wise scaling by a scalar s (entry * s).
    template <class S>
    [[nodiscard]] RingMatrix scaled(const S& s) const
    {
        RingMatrix m = *this;
        for (auto& x : m.e_) x = x * s;
        return m;
    }

    /// Applies f entry-wise, possibly changing the entry ring.
    template <class F>
    [[nodiscard]] auto map(F&& f) const
    {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        RingMatrix<U> m(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) { return a.dim_ == b.dim_ && a.e_ == b.e_; }

    void check_dim(const RingMatrix& o) const
    {
        if (o.dim_ != dim_) throw ArgumentError("matrix dimension mismatch");
    }

private:
    std::size_t dim_ = 0;
    std::vector<T> e_;
};

/// Matrix product with an arbitrary entry multiplication.
template <class T, class Mul>
[[nodiscard]] RingMatrix<T> mat_mul(const RingMatrix<T>& a, const RingMatrix<T>& b, Mul&& mul)
{
    a.check_dim(b);
    const std::size_t n = a.dim();
    RingMatrix<T> r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            T acc{};
            for (std::size_t j = 0; j < n; ++j) {
                if (a(i, j).is_zero() || b(j, k).is_zero()) continue;
                acc += mul(a(i, j), b(j, k));
            }
            r(i, k) = std::move(acc);
        }
    return r;
}

/// Ordinary (entry-commuting) matrix product.
template <class T>
[[nodiscard]] RingMatrix<T> operator*(const RingMatrix<T>& a, const RingMatrix<T>& b)
{
    return mat_mul(a, b, [](const T& x, const T& y) { return x * y; });
}

enum class Product { pointwise, star_weyl };

/// (M * K)_ik = sum_j M_ij * K_jk with pointwise or Weyl-star entry products.
[[nodiscard]] RingMatrix<PhasePoly> mat_mul(const RingMatrix<PhasePoly>& a, const RingMatrix<PhasePoly>& b, Product product);

/// Kronecker product: block (i, j) is a_ij * b.
template <class T>
[[nodiscard]] RingMatrix<T> kron(const RingMatrix<T>& a, const RingMatrix<T>& b)
{
    const std::size_t na = a.dim(), nb = b.dim();
    RingMatrix<T> r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) {
                    if (b(k, l).is_zero()) continue;
                    r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
                }
        }
    return r;
}

/// Sum of diagonal entries.
template <class T>
[[nodiscard]] T trace(const RingMatrix<T>& m)
{
    T acc{};
    for (std::size_t i = 0; i < m.dim(); ++i) acc += m(i, i);
    return acc;
}

/// A B - B A (entry-commuting product).
template <class T>
[[nodiscard]] RingMatrix<T> commutator(const RingMatrix<T>& a, const RingMatrix<T>& b)
{
    return a * b - b * a;
}

/// Places a two-leg matrix (4x4 over lambda, mu) on legs (a, b) of `legs` tensor
/// factors of C^2 (one-based, a != b): the first factor goes to leg a, the second
/// to leg b, and the spectral parameters become (lambda_a, lambda_b). Every other
/// leg carries the identity. Leg 1 is the most significant index.
[[nodiscard]] RingMatrix<ParamRat> embed(const RingMatrix<ParamRat>& m, int a, int b, int legs);

/// Determinant over commuting PhasePoly entries (Laplace expansion).
[[nodiscard]] PhasePoly determinant(const RingMatrix<PhasePoly>& m);

/// Lifts a matrix of spectral scalars to constant observables.
[[nodiscard]] RingMatrix<PhasePoly> to_phase(const RingMatrix<ParamRat>& m);

/// Total number of nonzero terms (PhasePoly) or nonzero entries (ParamRat).
[[nodiscard]] std::size_t residual_terms(const RingMatrix<PhasePoly>& m);
[[nodiscard]] std::size_t residual_terms(const RingMatrix<ParamRat>& m);

/// Row-major rendering "[[a, b], [c, d]]".
[[nodiscard]] std::string to_string(const RingMatrix<PhasePoly>& m);
[[nodiscard]] std::string to_string(const RingMatrix<ParamRat>& m);

} // namespace starlax
