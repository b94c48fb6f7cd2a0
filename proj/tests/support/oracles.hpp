#pragma once

// Independent oracles for the harmonic curvature module in homogeneity one,
// written directly in tensor indices P^[rs]_{i[jk]} without the chain layer.

#include "freedist/linalg.hpp"

#include <cstddef>
#include <numeric>
#include <vector>

namespace oracle {

struct PairIndex {
    int l;
    int count() const { return l * (l - 1) / 2; }
    int operator()(int j, int k) const  // j < k, 1-based
    {
        int idx = 0;
        for (int a = 1; a < j; ++a) idx += l - a;
        return idx + (k - j - 1);
    }
};

// Column of P^[rs]_{i[jk]} with sign for unordered pairs; sign 0 for repeated indices.
struct PTensor {
    int l;
    PairIndex pairs{l};
    std::size_t columns() const { return static_cast<std::size_t>(l * pairs.count() * pairs.count()); }
    int column(int i, int j, int k, int r, int s, int& sign) const
    {
        sign = 1;
        if (j == k || r == s) {
            sign = 0;
            return 0;
        }
        if (j > k) std::swap(j, k), sign = -sign;
        if (r > s) std::swap(r, s), sign = -sign;
        return ((i - 1) * pairs.count() + pairs(j, k)) * pairs.count() + pairs(r, s);
    }
    void add(freedist::SparseRow& row, int i, int j, int k, int r, int s, long c = 1) const
    {
        int sign = 0;
        int col = column(i, j, k, r, s, sign);
        if (sign == 0) return;
        freedist::add_scaled(row, {{static_cast<std::size_t>(col), freedist::ExactScalar(1)}}, freedist::ExactScalar(sign * c));
    }
};

// Every contraction of an upper index against a lower one.
inline std::vector<freedist::SparseRow> contraction_rows(int l)
{
    PTensor p{l};
    std::vector<freedist::SparseRow> rows;
    for (int s = 1; s <= l; ++s)
        for (int j = 1; j <= l; ++j)
            for (int k = j + 1; k <= l; ++k) {
                freedist::SparseRow row;  // sum_i P^[is]_{i[jk]}
                for (int i = 1; i <= l; ++i) p.add(row, i, j, k, i, s);
                rows.push_back(row);
            }
    for (int i = 1; i <= l; ++i)
        for (int s = 1; s <= l; ++s)
            for (int k = 1; k <= l; ++k) {
                freedist::SparseRow row;  // sum_r P^[rs]_{i[rk]}
                for (int r = 1; r <= l; ++r) p.add(row, i, r, k, r, s);
                rows.push_back(row);
            }
    return rows;
}

// Complete antisymmetrization over the three lower indices.
inline std::vector<freedist::SparseRow> bianchi_rows(int l)
{
    PTensor p{l};
    std::vector<freedist::SparseRow> rows;
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            for (int k = j + 1; k <= l; ++k)
                for (int r = 1; r <= l; ++r)
                    for (int s = r + 1; s <= l; ++s) {
                        freedist::SparseRow row;
                        p.add(row, i, j, k, r, s);
                        p.add(row, j, k, i, r, s);
                        p.add(row, k, i, j, r, s);
                        rows.push_back(row);
                    }
    return rows;
}

inline std::size_t trace_free_dimension(int l)
{
    return PTensor{l}.columns() - freedist::rank(contraction_rows(l));
}

inline std::size_t trace_free_bianchi_dimension(int l)
{
    auto rows = contraction_rows(l);
    auto b = bianchi_rows(l);
    rows.insert(rows.end(), b.begin(), b.end());
    return PTensor{l}.columns() - freedist::rank(rows);
}

// Weyl dimension formula for sl(l) with highest weight pi_2 + pi_{l-2} + pi_{l-1}.
inline long weyl_dimension(int l)
{
    std::vector<long> lambda(static_cast<std::size_t>(l), 0);
    for (int m : {2, l - 2, l - 1})
        for (int a = 0; a < m; ++a) ++lambda[static_cast<std::size_t>(a)];
    long num = 1, den = 1;
    for (int a = 0; a < l; ++a)
        for (int b = a + 1; b < l; ++b) {
            num *= lambda[static_cast<std::size_t>(a)] - lambda[static_cast<std::size_t>(b)] + b - a;
            den *= b - a;
            long g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    return num / den;
}

}  // namespace oracle
