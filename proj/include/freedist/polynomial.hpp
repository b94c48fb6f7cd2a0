#pragma once

#include "freedist/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace freedist {

// Coordinate x_i or y_[jk] (j < k), indices 1-based.
struct Coordinate {
    enum class Kind { X, Y };
    Kind kind = Kind::X;
    int i = 1;
    int j = 0;

    static Coordinate x(int i) { return {Kind::X, i, 0}; }
    static Coordinate y(int j, int k);

    std::string to_string() const;
    friend bool operator==(const Coordinate&, const Coordinate&) = default;
    friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

// Chart on R^n, n = l + l(l-1)/2, coordinates x_1..x_l, y_[12],...,y_[l-1,l].
class Chart {
public:
    explicit Chart(int l = 0) : l_(l) {}
    int l() const { return l_; }
    std::size_t dimension() const { return static_cast<std::size_t>(l_ + l_ * (l_ - 1) / 2); }
    std::size_t index_of(const Coordinate& c) const;  // throws MissingCoordinate
    Coordinate coordinate(std::size_t index) const;
    bool contains(const Coordinate& c) const;

    friend bool operator==(const Chart&, const Chart&) = default;

private:
    int l_;
};

// Sparse polynomial with Q(sqrt2) coefficients.  A polynomial with chart l = 0
// is a chart-free constant and combines with any chart; otherwise mixing
// charts throws ChartMismatch.  Zero coefficients are never stored.
class Polynomial {
public:
    using Monomial = std::vector<std::uint16_t>;
    using Terms = std::map<Monomial, ExactScalar>;

    Polynomial() = default;
    Polynomial(ExactScalar c);  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(ExactScalar(c)) {}  // NOLINT(google-explicit-constructor)

    static Polynomial constant(const Chart& chart, const ExactScalar& c);
    static Polynomial variable(const Chart& chart, const Coordinate& c);

    Chart chart() const { return Chart(l_); }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    ExactScalar constant_value() const;  // constant term
    int degree() const;                  // -1 for zero

    Polynomial derivative(const Coordinate& c) const;
    Polynomial derivative(std::size_t coordinate_index) const;
    ExactScalar evaluate(const std::map<Coordinate, ExactScalar>& point) const;
    Polynomial pow(unsigned e) const;

    // Quotient when q divides *this exactly; throws InvariantViolation otherwise.
    Polynomial exact_divide(const Polynomial& q) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const ExactScalar& c);
    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, const ExactScalar& c) { return p *= c; }
    friend Polynomial operator*(const ExactScalar& c, Polynomial p) { return p *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& p, const Polynomial& q);
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    // Terms in descending lex order; parses back to an equal polynomial.
    std::string to_string() const;

private:
    int l_ = 0;
    Terms terms_;

    void bind(int l);
    static int unify(int a, int b);
    void add_term(const Monomial& m, const ExactScalar& c);
};

}  // namespace freedist
