#include "freedist/vector_field.hpp"

#include "freedist/errors.hpp"

namespace freedist {

VectorField VectorField::coordinate_field(const Chart& chart, const Coordinate& c)
{
    VectorField v(chart);
    v.set(chart.index_of(c), Polynomial::constant(chart, 1));
    return v;
}

Polynomial VectorField::coefficient(std::size_t index) const
{
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Polynomial() : it->second;
}

void VectorField::set(std::size_t index, Polynomial value)
{
    if (index >= chart_.dimension()) throw MissingCoordinate("vector field component out of chart");
    if (value.is_zero())
        coeffs_.erase(index);
    else
        coeffs_[index] = std::move(value);
}

Polynomial VectorField::apply(const Polynomial& p) const
{
    Polynomial r;
    for (const auto& [c, v] : coeffs_) {
        Polynomial d = p.derivative(c);
        if (!d.is_zero()) r += v * d;
    }
    return r;
}

VectorField& VectorField::operator+=(const VectorField& o)
{
    if (chart_.l() == 0) chart_ = o.chart_;
    if (o.chart_.l() != 0 && !(o.chart_ == chart_)) throw ChartMismatch("vector fields on different charts");
    for (const auto& [c, v] : o.coeffs_) set(c, coefficient(c) + v);
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o)
{
    return *this += -o;
}

VectorField VectorField::operator-() const
{
    VectorField r = *this;
    for (auto& [c, v] : r.coeffs_) v = -v;
    return r;
}

VectorField operator*(const Polynomial& f, const VectorField& v)
{
    VectorField r(v.chart());
    for (const auto& [c, coeff] : v.coefficients()) r.set(c, f * coeff);
    return r;
}

std::string VectorField::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [c, v] : coeffs_) {
        Coordinate coord = chart_.coordinate(c);
        std::string atom = coord.kind == Coordinate::Kind::X
                               ? "Dx" + std::to_string(coord.i)
                               : "Dy[" + std::to_string(coord.i) + "," + std::to_string(coord.j) + "]";
        if (!out.empty()) out += " + ";
        if (v == Polynomial(1))
            out += atom;
        else
            out += "(" + v.to_string() + ")*" + atom;
    }
    return out;
}

VectorField lie_bracket(const VectorField& a, const VectorField& b)
{
    if (a.chart().l() != 0 && b.chart().l() != 0 && !(a.chart() == b.chart()))
        throw ChartMismatch("bracket of vector fields on different charts");
    VectorField r(a.chart().l() != 0 ? a.chart() : b.chart());
    for (std::size_t c = 0; c < r.chart().dimension(); ++c) {
        Polynomial v = a.apply(b.coefficient(c)) - b.apply(a.coefficient(c));
        if (!v.is_zero()) r.set(c, v);
    }
    return r;
}

}  // namespace freedist
