#include "freedist/forms.hpp"

#include "freedist/errors.hpp"

#include <algorithm>

namespace freedist {

DifferentialForm DifferentialForm::coordinate_differential(const Chart& chart, std::size_t coordinate)
{
    DifferentialForm w(chart, 1);
    w.add({coordinate}, Polynomial::constant(chart, 1));
    return w;
}

void DifferentialForm::add(std::vector<std::size_t> indices, const Polynomial& p)
{
    if (static_cast<int>(indices.size()) != degree_) throw Error("form degree mismatch");
    if (p.is_zero()) return;
    // Bubble sort to track the permutation sign; repeated index kills the term.
    int sign = 1;
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b + 1 < indices.size() - a; ++b) {
            if (indices[b] == indices[b + 1]) return;
            if (indices[b] > indices[b + 1]) {
                std::swap(indices[b], indices[b + 1]);
                sign = -sign;
            }
        }
    for (std::size_t b = 0; b + 1 < indices.size(); ++b)
        if (indices[b] == indices[b + 1]) return;
    Key key(indices.begin(), indices.end());
    Polynomial& slot = terms_[key];
    slot += sign > 0 ? p : -p;
    if (slot.is_zero()) terms_.erase(key);
}

DifferentialForm DifferentialForm::exterior_derivative() const
{
    DifferentialForm r(chart_, degree_ + 1);
    for (const auto& [key, p] : terms_)
        for (std::size_t c = 0; c < chart_.dimension(); ++c) {
            Polynomial dp = p.derivative(c);
            if (dp.is_zero()) continue;
            std::vector<std::size_t> idx{c};
            idx.insert(idx.end(), key.begin(), key.end());
            r.add(idx, dp);
        }
    return r;
}

namespace {

// det of the k x k matrix [v_s^{c_r}] by cofactor expansion (k <= 3 in practice).
Polynomial minor_det(const std::vector<std::vector<Polynomial>>& m, std::vector<std::size_t> rows, std::size_t col)
{
    if (rows.empty()) return Polynomial(1);
    Polynomial total;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Polynomial& entry = m[rows[r]][col];
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest = rows;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r));
        Polynomial sub = entry * minor_det(m, rest, col + 1);
        total += (r % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

Polynomial DifferentialForm::evaluate(const std::vector<VectorField>& fields) const
{
    if (static_cast<int>(fields.size()) != degree_) throw Error("form evaluated on wrong number of fields");
    Polynomial total;
    for (const auto& [key, p] : terms_) {
        std::vector<std::vector<Polynomial>> m(key.size(), std::vector<Polynomial>(fields.size()));
        bool zero_row = false;
        for (std::size_t r = 0; r < key.size(); ++r) {
            bool any = false;
            for (std::size_t s = 0; s < fields.size(); ++s) {
                m[r][s] = fields[s].coefficient(key[r]);
                any = any || !m[r][s].is_zero();
            }
            zero_row = zero_row || !any;
        }
        if (zero_row) continue;
        std::vector<std::size_t> rows(key.size());
        for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
        Polynomial d = minor_det(m, rows, 0);
        if (!d.is_zero()) total += p * d;
    }
    return total;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o)
{
    if (chart_.l() == 0) {
        chart_ = o.chart_;
        degree_ = o.degree_;
    }
    for (const auto& [key, p] : o.terms_) add(std::vector<std::size_t>(key.begin(), key.end()), p);
    return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o)
{
    return *this += Polynomial(-1) * o;
}

DifferentialForm operator*(const Polynomial& f, const DifferentialForm& w)
{
    DifferentialForm r(w.chart(), w.degree());
    for (const auto& [key, p] : w.terms()) r.add(std::vector<std::size_t>(key.begin(), key.end()), f * p);
    return r;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b)
{
    DifferentialForm r(a.chart().l() != 0 ? a.chart() : b.chart(), a.degree() + b.degree());
    for (const auto& [ka, pa] : a.terms())
        for (const auto& [kb, pb] : b.terms()) {
            std::vector<std::size_t> idx(ka.begin(), ka.end());
            idx.insert(idx.end(), kb.begin(), kb.end());
            r.add(idx, pa * pb);
        }
    return r;
}

}  // namespace freedist
