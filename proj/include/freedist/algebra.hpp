#pragma once

#include "freedist/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace freedist {

// B: g = so(l, l+1) graded -2..2.  D: g~ = so(l+1, l+1) graded -1..1, indices 0..l.
enum class AlgebraKind { B, D };

struct BasisIndex {
    // E_[ij], E_i, E^i_j, E^i, E^[ij]
    enum class Type { LowerPair, Lower, Mixed, Upper, UpperPair };
    Type type = Type::Lower;
    int i = 0;
    int j = 0;

    std::string to_string(AlgebraKind kind = AlgebraKind::B) const;
    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

using Coefficients = std::map<std::size_t, ExactScalar>;

void add_scaled(Coefficients& into, const Coefficients& v, const ExactScalar& c);

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(AlgebraKind kind, int l);

    AlgebraKind kind() const { return kind_; }
    int l() const { return l_; }
    std::size_t size() const { return n_; }
    const ExactScalar& operator()(std::size_t r, std::size_t c) const { return m_[r * n_ + c]; }
    ExactScalar& operator()(std::size_t r, std::size_t c) { return m_[r * n_ + c]; }
    bool is_zero() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const ExactScalar& c, AlgebraElement a);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
    {
        return a.kind_ == b.kind_ && a.l_ == b.l_ && a.m_ == b.m_;
    }

    // Matrix product, used for commutators and traces.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    ExactScalar trace() const;
    AlgebraElement transpose() const;

private:
    AlgebraKind kind_ = AlgebraKind::B;
    int l_ = 0;
    std::size_t n_ = 0;
    std::vector<ExactScalar> m_;
};

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// Normalized pairing -tr(xy)/2, the Killing form up to a positive factor.
ExactScalar pairing(const AlgebraElement& x, const AlgebraElement& y);

// Invariant symmetric form J of the defining representation.
AlgebraElement invariant_form(AlgebraKind kind, int l);

class GradedAlgebra {
public:
    static std::shared_ptr<const GradedAlgebra> create(AlgebraKind kind, int l);

    AlgebraKind kind() const { return kind_; }
    int l() const { return l_; }
    std::size_t dimension() const { return basis_.size(); }
    std::size_t matrix_size() const { return n_; }

    const BasisIndex& index(std::size_t a) const { return basis_[a]; }
    const AlgebraElement& element(std::size_t a) const { return elements_[a]; }
    int grade(std::size_t a) const { return grades_[a]; }
    std::optional<std::size_t> find(const BasisIndex& b) const;
    std::size_t at(const BasisIndex& b) const;  // throws if absent

    // Basis helpers; pair helpers accept either order and report the sign.
    std::size_t lower(int i) const { return at({BasisIndex::Type::Lower, i, 0}); }
    std::size_t upper(int i) const { return at({BasisIndex::Type::Upper, i, 0}); }
    std::size_t mixed(int i, int j) const { return at({BasisIndex::Type::Mixed, i, j}); }
    std::size_t lower_pair(int i, int j) const { return at({BasisIndex::Type::LowerPair, i, j}); }
    std::size_t upper_pair(int i, int j) const { return at({BasisIndex::Type::UpperPair, i, j}); }

    // Structure constants [E_a, E_b] computed from matrix commutators.
    const Coefficients& bracket(std::size_t a, std::size_t b) const { return structure_[a * dimension() + b]; }
    Coefficients bracket(const Coefficients& x, const Coefficients& y) const;
    ExactScalar pairing(std::size_t a, std::size_t b) const;

    Coefficients coordinates(const AlgebraElement& x) const;  // throws if x is not in the algebra
    AlgebraElement to_element(const Coefficients& c) const;

    // p+ = positive grades, g- = negative grades; dual(a) is the pairing dual.
    const std::vector<std::size_t>& positive() const { return positive_; }
    const std::vector<std::size_t>& negative() const { return negative_; }
    std::size_t dual(std::size_t a) const { return dual_[a]; }

    int min_grade() const { return kind_ == AlgebraKind::B ? -2 : -1; }
    int max_grade() const { return -min_grade(); }

private:
    GradedAlgebra(AlgebraKind kind, int l);
    Coefficients sparse_coordinates(const std::map<std::size_t, ExactScalar>& entries,
                                    const std::vector<std::vector<std::tuple<std::size_t, std::size_t, ExactScalar>>>& sparse) const;

    AlgebraKind kind_;
    int l_;
    std::size_t n_;
    std::vector<BasisIndex> basis_;
    std::vector<AlgebraElement> elements_;
    std::vector<int> grades_;
    std::map<BasisIndex, std::size_t> lookup_;
    // Entry (r, c) where only basis element a is nonzero, and that value.
    std::vector<std::pair<std::size_t, ExactScalar>> pivots_;
    std::vector<Coefficients> structure_;
    std::vector<std::size_t> positive_;
    std::vector<std::size_t> negative_;
    std::vector<std::size_t> dual_;
};

}  // namespace freedist
