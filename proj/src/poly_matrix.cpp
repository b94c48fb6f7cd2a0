#include "freedist/poly_matrix.hpp"

#include "freedist/errors.hpp"

namespace freedist {

DeterminantAndAdjugate determinant_and_adjugate(const PolyMatrix& m)
{
    const std::size_t n = m.size();
    PolyMatrix a(n, std::vector<Polynomial>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = Polynomial(1);
    }
    Polynomial prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // Sparsest nonzero pivot keeps intermediate minors small.
        std::size_t best = n;
        for (std::size_t r = k; r < n; ++r)
            if (!a[r][k].is_zero() && (best == n || a[r][k].terms().size() < a[best][k].terms().size())) best = r;
        if (best == n) return {Polynomial(), {}};
        if (best != k) {
            std::swap(a[best], a[k]);
            sign = -sign;
        }
        const Polynomial pivot = a[k][k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Polynomial factor = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) {
                Polynomial v = pivot * a[i][j];
                if (!factor.is_zero() && !a[k][j].is_zero()) v -= factor * a[k][j];
                a[i][j] = v.exact_divide(prev);
            }
        }
        prev = pivot;
    }
    // Left block is now prev * I and the right block prev * m^{-1}.
    DeterminantAndAdjugate out;
    out.determinant = sign > 0 ? prev : -prev;
    out.adjugate.assign(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.adjugate[i][j] = sign > 0 ? a[i][n + j] : -a[i][n + j];
    return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b)
{
    const std::size_t n = a.size();
    const std::size_t p = b.empty() ? 0 : b[0].size();
    PolyMatrix c(n, std::vector<Polynomial>(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < a[i].size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < p; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

}  // namespace freedist
