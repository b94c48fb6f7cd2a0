#include "freedist/linalg.hpp"

#include "freedist/errors.hpp"

namespace freedist {
namespace {

void axpy(SparseRow& y, const SparseRow& x, const ExactScalar& a)
{
    for (const auto& [c, v] : x) {
        auto it = y.find(c);
        if (it == y.end()) {
            y.emplace(c, v * a);
            continue;
        }
        it->second += v * a;
        if (it->second.is_zero()) y.erase(it);
    }
}

void scale(SparseRow& y, const ExactScalar& a)
{
    for (auto& [c, v] : y) v *= a;
}

}  // namespace

RowEchelon row_reduce(std::vector<SparseRow> rows)
{
    RowEchelon out;
    // Column-oriented elimination: process pivots in increasing column order.
    std::map<std::size_t, std::size_t> pivot_of_column;
    for (auto& row : rows) {
        for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
        // Reduce against existing pivots.
        bool changed = true;
        while (changed && !row.empty()) {
            changed = false;
            for (auto it = row.begin(); it != row.end(); ++it) {
                auto p = pivot_of_column.find(it->first);
                if (p == pivot_of_column.end()) continue;
                ExactScalar factor = -it->second;
                axpy(row, out.rows[p->second], factor);
                changed = true;
                break;
            }
        }
        if (row.empty()) continue;
        auto lead = row.begin();
        scale(row, lead->second.inverse());
        const std::size_t col = lead->first;
        // Keep earlier rows reduced in the new pivot column.
        for (auto& other : out.rows) {
            auto it = other.find(col);
            if (it != other.end()) axpy(other, row, -it->second);
        }
        pivot_of_column[col] = out.rows.size();
        out.rows.push_back(std::move(row));
        out.pivot_columns.push_back(col);
    }
    return out;
}

std::size_t rank(const std::vector<SparseRow>& rows)
{
    return row_reduce(rows).rank();
}

std::vector<SparseRow> kernel_basis(const std::vector<SparseRow>& rows, std::size_t columns)
{
    RowEchelon e = row_reduce(rows);
    std::vector<bool> is_pivot(columns, false);
    for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
    std::vector<SparseRow> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        SparseRow v{{free, ExactScalar(1)}};
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            auto it = e.rows[r].find(free);
            if (it != e.rows[r].end()) v[e.pivot_columns[r]] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

FactoredSystem::FactoredSystem(const std::vector<SparseRow>& equations, std::size_t unknowns)
    : unknowns_(unknowns), equations_(equations.size())
{
    // Augment each equation with a tag column unknowns + e tracking the combination.
    std::vector<SparseRow> rows;
    rows.reserve(equations.size());
    for (std::size_t e = 0; e < equations.size(); ++e) {
        SparseRow r = equations[e];
        for (const auto& [c, v] : r)
            if (c >= unknowns) throw Error("equation references an unknown out of range");
        r[unknowns + e] = ExactScalar(1);
        rows.push_back(std::move(r));
    }
    RowEchelon ech = row_reduce(std::move(rows));
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
        SparseRow comb;
        for (const auto& [c, v] : ech.rows[r])
            if (c >= unknowns) comb.emplace(c - unknowns, v);
        if (ech.pivot_columns[r] < unknowns) {
            // Row reads u_pivot + (free unknown terms) = comb . b.
            for (const auto& [c, v] : ech.rows[r])
                if (c < unknowns && c != ech.pivot_columns[r]) {
                    solution_rows_.clear();
                    throw InvariantViolation("normalization system is rank deficient");
                }
            solution_rows_.emplace_back(ech.pivot_columns[r], std::move(comb));
        } else {
            consistency_.push_back(std::move(comb));
        }
    }
}

std::vector<Polynomial> FactoredSystem::solve(const std::vector<Polynomial>& rhs) const
{
    if (rhs.size() != equations_) throw Error("right-hand side has the wrong length");
    if (!full_column_rank()) throw InvariantViolation("solution is not unique");
    for (const auto& comb : consistency_) {
        Polynomial check;
        for (const auto& [e, v] : comb)
            if (!rhs[e].is_zero()) check += rhs[e] * v;
        if (!check.is_zero()) throw InvariantViolation("inconsistent system, residual " + check.to_string());
    }
    std::vector<Polynomial> u(unknowns_);
    for (const auto& [col, comb] : solution_rows_) {
        Polynomial value;
        for (const auto& [e, v] : comb)
            if (!rhs[e].is_zero()) value += rhs[e] * v;
        u[col] = value;
    }
    return u;
}

}  // namespace freedist
