#pragma once

#include "freedist/scalar.hpp"

#include <string>
#include <vector>

namespace freedist {

// Dense square matrix over Q(sqrt2), row-major.
class ScalarMatrix {
public:
    explicit ScalarMatrix(std::size_t n = 0) : n_(n), entries_(n * n) {}

    std::size_t size() const { return n_; }
    const ExactScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    ExactScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    bool is_skew() const;
    bool is_symmetric() const;
    ScalarMatrix transpose() const;

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    std::size_t n_;
    std::vector<ExactScalar> entries_;
};

// Tangent coordinates (v^1..v^l, v^[12], v^[13], ...), pairs in lexicographic order.
using TangentVector = std::vector<ExactScalar>;

std::size_t tangent_dimension(int l);

// E_i -> s0^si / sqrt2, E_[ij] -> si^sj; indices 0..l. Dropping the 1/sqrt2
// rescales the Pfaffian by a nonzero constant and leaves the cone unchanged.
ScalarMatrix tangent_to_skew(int l, const TangentVector& v, bool inverse_sqrt2 = true);
TangentVector skew_to_tangent(const ScalarMatrix& m, bool inverse_sqrt2 = true);

// First-row expansion; throws Unsupported for odd size.
ExactScalar pfaffian(const ScalarMatrix& m);
ExactScalar determinant(const ScalarMatrix& m);

// Pf(tangent_to_skew(v)) == 0; requires odd l.
bool null_cone_member(int l, const TangentVector& v);

// Symmetric B with Pf(tangent_to_skew(v)) = B(v,v)/2; l = 3 only.
ScalarMatrix pfaffian_quadratic_form(int l);

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Exact congruence diagonalization.
Signature signature(const ScalarMatrix& symmetric);

struct InclusionEntry {
    std::string small_group;
    std::string small_parabolic;
    std::string big_group;
    std::string model;
    std::string geometry;
};

// The three exceptional inclusions of parabolic geometries; row 3 is
// specialized to rank l.
std::vector<InclusionEntry> list_inclusions(int l = 3);

}  // namespace freedist
