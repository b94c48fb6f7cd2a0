#pragma once

#include "freedist/polynomial.hpp"

#include <map>
#include <vector>

namespace freedist {

// Exact sparse linear algebra over Q(sqrt2).  Rows map column -> nonzero entry.
using SparseRow = std::map<std::size_t, ExactScalar>;

// Reduced row echelon form; pivot_columns[r] is the pivot of row r.
struct RowEchelon {
    std::vector<SparseRow> rows;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank() const { return rows.size(); }
};

RowEchelon row_reduce(std::vector<SparseRow> rows);
std::size_t rank(const std::vector<SparseRow>& rows);

// Basis of {v : row . v = 0 for every row}, one vector per free column.
std::vector<SparseRow> kernel_basis(const std::vector<SparseRow>& rows, std::size_t columns);

// Constant coefficient system M u = b, factored once and applied to many
// right-hand sides (possibly polynomial).  Requires full column rank.
class FactoredSystem {
public:
    FactoredSystem(const std::vector<SparseRow>& equations, std::size_t unknowns);

    std::size_t unknowns() const { return unknowns_; }
    std::size_t equations() const { return equations_; }
    std::size_t rank() const { return solution_rows_.size(); }
    bool full_column_rank() const { return rank() == unknowns_; }

    // Unique u with M u = b; throws InvariantViolation when b is inconsistent or
    // the solution is not unique.
    std::vector<Polynomial> solve(const std::vector<Polynomial>& rhs) const;

private:
    std::size_t unknowns_;
    std::size_t equations_;
    // Unknown index and its expression in the original equations.
    std::vector<std::pair<std::size_t, SparseRow>> solution_rows_;
    // Combinations of equations whose coefficient rows vanish.
    std::vector<SparseRow> consistency_;
};

}  // namespace freedist
