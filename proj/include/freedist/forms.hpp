#pragma once

#include "freedist/vector_field.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace freedist {

// Polynomial k-form sum_I p_I dx^I over strictly increasing coordinate tuples I.
class DifferentialForm {
public:
    using Key = std::vector<std::uint8_t>;

    DifferentialForm() = default;
    DifferentialForm(const Chart& chart, int degree) : chart_(chart), degree_(degree) {}

    static DifferentialForm coordinate_differential(const Chart& chart, std::size_t coordinate);

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    const std::map<Key, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds p * dx^{c_1} ^ ... ^ dx^{c_k} for an arbitrary index order.
    void add(std::vector<std::size_t> indices, const Polynomial& p);

    DifferentialForm exterior_derivative() const;
    Polynomial evaluate(const std::vector<VectorField>& fields) const;

    DifferentialForm& operator+=(const DifferentialForm& o);
    DifferentialForm& operator-=(const DifferentialForm& o);
    friend DifferentialForm operator*(const Polynomial& f, const DifferentialForm& w);
    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b)
    {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    Chart chart_;
    int degree_ = 0;
    std::map<Key, Polynomial> terms_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

}  // namespace freedist
