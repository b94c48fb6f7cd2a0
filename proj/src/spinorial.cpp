#include "freedist/spinorial.hpp"

#include "freedist/errors.hpp"
#include "freedist/indexing.hpp"

#include <numeric>
#include <utility>

namespace freedist {

bool ScalarMatrix::is_skew() const
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

bool ScalarMatrix::is_symmetric() const
{
    return *this == transpose();
}

ScalarMatrix ScalarMatrix::transpose() const
{
    ScalarMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::size_t tangent_dimension(int l)
{
    return static_cast<std::size_t>(l) * static_cast<std::size_t>(l + 1) / 2;
}

ScalarMatrix tangent_to_skew(int l, const TangentVector& v, bool inverse_sqrt2)
{
    if (l < 1 || v.size() != tangent_dimension(l)) throw Error("tangent vector has wrong dimension");
    const PairIndexer pairs(l);
    const ExactScalar scale = inverse_sqrt2 ? ExactScalar::inv_sqrt2() : ExactScalar(1);
    ScalarMatrix m(static_cast<std::size_t>(l) + 1);
    for (int i = 1; i <= l; ++i) {
        m(0, i) = scale * v[single_slot(i)];
        m(i, 0) = -m(0, i);
    }
    for (std::size_t p = 0; p < pairs.count(); ++p) {
        const auto [i, j] = pairs.pair(p);
        m(i, j) = v[static_cast<std::size_t>(l) + p];
        m(j, i) = -m(i, j);
    }
    return m;
}

TangentVector skew_to_tangent(const ScalarMatrix& m, bool inverse_sqrt2)
{
    if (m.size() < 2 || !m.is_skew()) throw Error("expected a skew matrix of size at least 2");
    const int l = static_cast<int>(m.size()) - 1;
    const PairIndexer pairs(l);
    const ExactScalar scale = inverse_sqrt2 ? ExactScalar::sqrt2() : ExactScalar(1);
    TangentVector v(tangent_dimension(l));
    for (int i = 1; i <= l; ++i) v[single_slot(i)] = scale * m(0, i);
    for (std::size_t p = 0; p < pairs.count(); ++p) {
        const auto [i, j] = pairs.pair(p);
        v[static_cast<std::size_t>(l) + p] = m(i, j);
    }
    return v;
}

namespace {

// Pf of the principal submatrix on `rows`, expanded along its first row.
ExactScalar pfaffian_on(const ScalarMatrix& m, std::vector<std::size_t>& rows)
{
    if (rows.empty()) return ExactScalar(1);
    const std::size_t first = rows.front();
    ExactScalar total;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const ExactScalar& entry = m(first, rows[k]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(rows.size() - 2);
        for (std::size_t r = 1; r < rows.size(); ++r)
            if (r != k) rest.push_back(rows[r]);
        ExactScalar term = entry * pfaffian_on(m, rest);
        // Column k of the remaining rows sits at odd position k - 1 from the first.
        if (k % 2 == 0) term = -term;
        total += term;
    }
    return total;
}

}  // namespace

ExactScalar pfaffian(const ScalarMatrix& m)
{
    if (m.size() % 2 != 0)
        throw Unsupported("Pfaffian needs even size; the null cone exists only for odd l");
    if (!m.is_skew()) throw Error("Pfaffian of a non-skew matrix");
    std::vector<std::size_t> rows(m.size());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    return pfaffian_on(m, rows);
}

ExactScalar determinant(const ScalarMatrix& m)
{
    ScalarMatrix a = m;
    const std::size_t n = a.size();
    ExactScalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c).is_zero()) ++pivot;
        if (pivot == n) return ExactScalar(0);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        const ExactScalar inv = a(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero()) continue;
            const ExactScalar factor = a(r, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(r, j) -= factor * a(c, j);
        }
    }
    return det;
}

bool null_cone_member(int l, const TangentVector& v)
{
    if (l % 2 == 0) throw Unsupported("null cone requires odd l");
    return pfaffian(tangent_to_skew(l, v)).is_zero();
}

ScalarMatrix pfaffian_quadratic_form(int l)
{
    if (l != 3) throw Unsupported("quadratic Pfaffian form is defined for l = 3 only");
    const std::size_t n = tangent_dimension(l);
    auto pf = [&](std::size_t a, std::size_t b) {
        TangentVector v(n);
        v[a] += ExactScalar(1);
        v[b] += ExactScalar(1);
        return pfaffian(tangent_to_skew(l, v));
    };
    auto unit = [&](std::size_t a) {
        TangentVector v(n);
        v[a] = ExactScalar(1);
        return pfaffian(tangent_to_skew(l, v));
    };
    // Polarization of the quadratic form Pf = B(v,v)/2.
    ScalarMatrix b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i, i) = ExactScalar(2) * unit(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            b(i, j) = pf(i, j) - unit(i) - unit(j);
            b(j, i) = b(i, j);
        }
    }
    return b;
}

Signature signature(const ScalarMatrix& symmetric)
{
    if (!symmetric.is_symmetric()) throw Error("signature of a non-symmetric matrix");
    ScalarMatrix a = symmetric;
    const std::size_t n = a.size();
    Signature s;
    // Congruence a -> P a P^t applied as simultaneous row and column operations.
    auto add_multiple = [&](std::size_t target, std::size_t source, const ExactScalar& c) {
        for (std::size_t j = 0; j < n; ++j) a(target, j) += c * a(source, j);
        for (std::size_t i = 0; i < n; ++i) a(i, target) += c * a(i, source);
    };
    auto swap_index = [&](std::size_t x, std::size_t y) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t d = k;
        while (d < n && a(d, d).is_zero()) ++d;
        if (d == n) {
            // Zero diagonal: adding index j to i with a(i,j) != 0 makes a(i,i) = 2a(i,j).
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (!a(i, j).is_zero()) {
                        add_multiple(i, j, ExactScalar(1));
                        d = i;
                        found = true;
                    }
            if (!found) break;
        }
        if (d != k) swap_index(d, k);
        const ExactScalar inv = a(k, k).inverse();
        for (std::size_t r = k + 1; r < n; ++r)
            if (!a(r, k).is_zero()) add_multiple(r, k, -(a(r, k) * inv));
    }
    for (std::size_t k = 0; k < n; ++k) {
        const int sign = a(k, k).sign();
        if (sign > 0)
            ++s.positive;
        else if (sign < 0)
            ++s.negative;
        else
            ++s.zero;
    }
    return s;
}

std::vector<InclusionEntry> list_inclusions(int l)
{
    if (l < 3) throw Unsupported("spinorial inclusion needs l >= 3");
    const std::string rank = std::to_string(l);
    const std::string dim = std::to_string(tangent_dimension(l));
    return {
        {"Sp(2l,R) (C_l)", "P_{2..l}", "SL(2l,R) (A_{2l-1})", "RP^{2l-1}",
         "contact projective structure inducing a projective structure"},
        {"G2 (split)", "P_{2}", "SO(3,4) (B_3)", "Q5",
         "generic rank 2 distribution with growth (2,3,5) inducing conformal structure of signature (3,2)"},
        {"SO(" + rank + "," + std::to_string(l + 1) + ") (B_l)", "P_{1..l-1}",
         "SO(" + std::to_string(l + 1) + "," + std::to_string(l + 1) + ") (D_{l+1})",
         "isotropic Grassmannian of (l+1)-planes",
         "generic free distribution of rank " + rank + " with growth vector (" + rank + "," + dim +
             ") on a " + dim + "-dimensional manifold inducing an almost spinorial structure" +
             (l == 3 ? " (Bryant: conformal structure of signature (3,3))" : "")},
    };
}

}  // namespace freedist
