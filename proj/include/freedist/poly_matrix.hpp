#pragma once

#include "freedist/polynomial.hpp"

#include <vector>

namespace freedist {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Fraction-free Gauss-Jordan elimination: determinant and adjugate of a square
// polynomial matrix (adjugate = det * inverse).  Divisions are exact.
struct DeterminantAndAdjugate {
    Polynomial determinant;
    PolyMatrix adjugate;
};
DeterminantAndAdjugate determinant_and_adjugate(const PolyMatrix& m);

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace freedist
