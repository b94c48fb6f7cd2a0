#pragma once

#include "freedist/polynomial.hpp"

#include <map>
#include <string>

namespace freedist {

// Polynomial vector field sum_c v^c d/dc; zero coefficients are absent.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(const Chart& chart) : chart_(chart) {}

    static VectorField coordinate_field(const Chart& chart, const Coordinate& c);

    const Chart& chart() const { return chart_; }
    const std::map<std::size_t, Polynomial>& coefficients() const { return coeffs_; }
    Polynomial coefficient(std::size_t index) const;
    void set(std::size_t index, Polynomial value);
    bool is_zero() const { return coeffs_.empty(); }

    // Derivation action v(p).
    Polynomial apply(const Polynomial& p) const;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Polynomial& f, const VectorField& v);
    VectorField operator-() const;
    friend bool operator==(const VectorField& a, const VectorField& b) { return a.coeffs_ == b.coeffs_; }

    // Rendered with Dx<i> and Dy[j,k] atoms.
    std::string to_string() const;

private:
    Chart chart_;
    std::map<std::size_t, Polynomial> coeffs_;
};

VectorField lie_bracket(const VectorField& a, const VectorField& b);

}  // namespace freedist
