#include "starlax/ring_matrix.hpp"

namespace starlax {

RingMatrix<PhasePoly> mat_mul(const RingMatrix<PhasePoly>& a, const RingMatrix<PhasePoly>& b, Product product)
{
    if (product == Product::pointwise) return a * b;
    return mat_mul(a, b, [](const PhasePoly& x, const PhasePoly& y) { return star_weyl(x, y); });
}

RingMatrix<ParamRat> embed(const RingMatrix<ParamRat>& m, int a, int b, int legs)
{
    if (m.dim() != 4) throw ArgumentError("embed expects a 4x4 two-leg matrix");
    if (legs < 2 || legs > kSpectralVars) throw ArgumentError("embed supports 2 or 3 legs");
    if (a == b) throw ArgumentError("embed needs two distinct legs");
    if (a < 1 || b < 1 || a > legs || b > legs) throw ArgumentError("leg index out of range");

    // lambda -> lambda_a, mu -> lambda_b; the remaining variable takes the free slot
    SpectralRenaming ren{};
    ren[0] = a - 1;
    ren[1] = b - 1;
    for (int v = 0; v < kSpectralVars; ++v)
        if (v != a - 1 && v != b - 1) ren[2] = v;

    const std::size_t dim = std::size_t{1} << legs;
    RingMatrix<ParamRat> out(dim);
    const int shift_a = legs - a, shift_b = legs - b;
    // m = sum E_ij (x) E_kl * m[(2i+k),(2j+l)]
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    const ParamRat& phi = m(2 * i + k, 2 * j + l);
                    if (phi.is_zero()) continue;
                    ParamRat value = phi.renamed(ren);
                    for (std::size_t row = 0; row < dim; ++row) {
                        if (((row >> shift_a) & 1U) != i || ((row >> shift_b) & 1U) != k) continue;
                        std::size_t col = row;
                        col = (col & ~(std::size_t{1} << shift_a)) | (j << shift_a);
                        col = (col & ~(std::size_t{1} << shift_b)) | (l << shift_b);
                        out(row, col) += value;
                    }
                }
    return out;
}

namespace {

PhasePoly det_rec(const RingMatrix<PhasePoly>& m, std::vector<std::size_t>& cols, std::size_t row)
{
    const std::size_t n = m.dim();
    if (row == n) return {};
    if (row + 1 == n) return m(row, cols[0]);
    PhasePoly acc;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const PhasePoly& x = m(row, cols[c]);
        if (x.is_zero()) continue;
        std::size_t col = cols[c];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
        PhasePoly minor = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
        PhasePoly term = x * minor;
        if (c % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

template <class T, class F>
std::string render(const RingMatrix<T>& m, F&& f)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.dim(); ++j) out += (j ? ", " : "") + f(m(i, j));
        out += "]";
    }
    return out + "]";
}

} // namespace

PhasePoly determinant(const RingMatrix<PhasePoly>& m)
{
    if (m.dim() == 0) throw ArgumentError("determinant of an empty matrix");
    std::vector<std::size_t> cols(m.dim());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return det_rec(m, cols, 0);
}

RingMatrix<PhasePoly> to_phase(const RingMatrix<ParamRat>& m)
{
    return m.map([](const ParamRat& x) { return PhasePoly::constant(x); });
}

std::size_t residual_terms(const RingMatrix<PhasePoly>& m)
{
    std::size_t n = 0;
    for (const auto& x : m.entries()) n += x.size();
    return n;
}

std::size_t residual_terms(const RingMatrix<ParamRat>& m)
{
    std::size_t n = 0;
    for (const auto& x : m.entries()) n += x.is_zero() ? 0 : 1;
    return n;
}

std::string to_string(const RingMatrix<PhasePoly>& m)
{
    return render(m, [](const PhasePoly& x) { return x.str(); });
}

std::string to_string(const RingMatrix<ParamRat>& m)
{
    return render(m, [](const ParamRat& x) { return x.str(); });
}

} // namespace starlax
