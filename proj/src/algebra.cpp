#include "freedist/algebra.hpp"

#include "freedist/errors.hpp"

#include <tuple>

namespace freedist {

std::string BasisIndex::to_string(AlgebraKind kind) const
{
    std::string e = kind == AlgebraKind::B ? "E" : "Et";
    auto pair = [&](const char* pos) { return e + pos + "[" + std::to_string(i) + std::to_string(j) + "]"; };
    switch (type) {
    case Type::LowerPair: return pair("_");
    case Type::Lower: return e + "_" + std::to_string(i);
    case Type::Mixed: return e + "^" + std::to_string(i) + "_" + std::to_string(j);
    case Type::Upper: return e + "^" + std::to_string(i);
    case Type::UpperPair: return pair("^");
    }
    return e;
}

void add_scaled(Coefficients& into, const Coefficients& v, const ExactScalar& c)
{
    if (c.is_zero()) return;
    for (const auto& [k, x] : v) {
        auto it = into.find(k);
        if (it == into.end()) {
            into.emplace(k, x * c);
            continue;
        }
        it->second += x * c;
        if (it->second.is_zero()) into.erase(it);
    }
}

AlgebraElement::AlgebraElement(AlgebraKind kind, int l)
    : kind_(kind), l_(l), n_(kind == AlgebraKind::B ? 2 * l + 1 : 2 * l + 2), m_(n_ * n_)
{
}

bool AlgebraElement::is_zero() const
{
    for (const auto& x : m_)
        if (!x.is_zero()) return false;
    return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
    if (n_ != o.n_ || kind_ != o.kind_) throw Error("adding elements of different algebras");
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] += o.m_[k];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
    if (n_ != o.n_ || kind_ != o.kind_) throw Error("subtracting elements of different algebras");
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] -= o.m_[k];
    return *this;
}

AlgebraElement operator*(const ExactScalar& c, AlgebraElement a)
{
    for (auto& x : a.m_) x *= c;
    return a;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.n_ != b.n_) throw Error("multiplying matrices of different size");
    AlgebraElement r = a;
    for (auto& x : r.m_) x = ExactScalar(0);
    const std::size_t n = a.n_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const ExactScalar& x = a.m_[i * n + k];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b.m_[k * n + j].is_zero()) r.m_[i * n + j] += x * b.m_[k * n + j];
        }
    return r;
}

ExactScalar AlgebraElement::trace() const
{
    ExactScalar t;
    for (std::size_t i = 0; i < n_; ++i) t += m_[i * n_ + i];
    return t;
}

AlgebraElement AlgebraElement::transpose() const
{
    AlgebraElement r = *this;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.m_[i * n_ + j] = m_[j * n_ + i];
    return r;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y)
{
    return x * y - y * x;
}

ExactScalar pairing(const AlgebraElement& x, const AlgebraElement& y)
{
    return (x * y).trace() * ExactScalar::rational(-1, 2);
}

AlgebraElement invariant_form(AlgebraKind kind, int l)
{
    AlgebraElement j(kind, l);
    if (kind == AlgebraKind::B) {
        for (int i = 0; i < l; ++i) {
            j(i, l + 1 + i) = 1;
            j(l + 1 + i, i) = 1;
        }
        j(l, l) = 1;
    } else {
        for (int a = 0; a <= l; ++a) {
            j(a, l + 1 + a) = 1;
            j(l + 1 + a, a) = 1;
        }
    }
    return j;
}

namespace {

using Entry = std::tuple<std::size_t, std::size_t, ExactScalar>;

std::vector<Entry> sparse_entries(const AlgebraElement& x)
{
    std::vector<Entry> out;
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t c = 0; c < x.size(); ++c)
            if (!x(r, c).is_zero()) out.emplace_back(r, c, x(r, c));
    return out;
}

// Matrix layouts.  B: rows 0..l-1 first block (p(i) = i-1), l the middle,
// l+i the dual block.  D: a in 0..l at position a, its dual at l+1+a.
struct Layout {
    AlgebraKind kind;
    int l;
    std::size_t p(int i) const { return kind == AlgebraKind::B ? static_cast<std::size_t>(i - 1) : static_cast<std::size_t>(i); }
    std::size_t q(int i) const { return kind == AlgebraKind::B ? static_cast<std::size_t>(l + i) : static_cast<std::size_t>(l + 1 + i); }
    std::size_t c() const { return static_cast<std::size_t>(l); }
};

AlgebraElement make_basis_element(const Layout& lay, const BasisIndex& b)
{
    AlgebraElement m(lay.kind, lay.l);
    using T = BasisIndex::Type;
    switch (b.type) {
    case T::Lower:  // X = e_i
        m(lay.p(b.i), lay.c()) = 1;
        m(lay.c(), lay.q(b.i)) = -1;
        break;
    case T::Upper:  // Z = e_i
        m(lay.q(b.i), lay.c()) = 1;
        m(lay.c(), lay.p(b.i)) = -1;
        break;
    case T::LowerPair:  // Y_ji = 1, Y_ij = -1, so that [E_i, E_j] = E_[ij]
        m(lay.p(b.j), lay.q(b.i)) = 1;
        m(lay.p(b.i), lay.q(b.j)) = -1;
        break;
    case T::UpperPair:  // T_ji = 1, T_ij = -1
        m(lay.q(b.j), lay.p(b.i)) = 1;
        m(lay.q(b.i), lay.p(b.j)) = -1;
        break;
    case T::Mixed: {  // A = e_j e_i^t; E~^i_0 carries the opposite sign
        ExactScalar s = (lay.kind == AlgebraKind::D && b.i >= 1 && b.j == 0) ? ExactScalar(-1) : ExactScalar(1);
        m(lay.p(b.j), lay.p(b.i)) = s;
        m(lay.q(b.i), lay.q(b.j)) = -s;
        break;
    }
    }
    return m;
}

}  // namespace

Coefficients GradedAlgebra::sparse_coordinates(const std::map<std::size_t, ExactScalar>& entries,
                                               const std::vector<std::vector<std::tuple<std::size_t, std::size_t, ExactScalar>>>& sparse) const
{
    Coefficients out;
    std::map<std::size_t, ExactScalar> rebuilt;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
        auto it = entries.find(pivots_[a].first);
        if (it == entries.end()) continue;
        ExactScalar c = it->second / pivots_[a].second;
        out.emplace(a, c);
        for (const auto& [r, col, v] : sparse[a]) rebuilt[r * n_ + col] += c * v;
    }
    for (auto it = rebuilt.begin(); it != rebuilt.end();)
        it = it->second.is_zero() ? rebuilt.erase(it) : std::next(it);
    if (rebuilt != entries) throw InvariantViolation("commutator left the algebra");
    return out;
}

GradedAlgebra::GradedAlgebra(AlgebraKind kind, int l) : kind_(kind), l_(l), n_(kind == AlgebraKind::B ? 2 * l + 1 : 2 * l + 2)
{
    if (l < 1) throw Error("algebra rank must be positive");
    using T = BasisIndex::Type;
    const int lo = kind == AlgebraKind::B ? 1 : 0;
    auto push = [&](BasisIndex b, int grade) {
        lookup_[b] = basis_.size();
        basis_.push_back(b);
        grades_.push_back(grade);
    };
    const bool is_b = kind == AlgebraKind::B;
    for (int i = lo; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) push({T::LowerPair, i, j}, is_b ? -2 : -1);
    if (is_b)
        for (int i = 1; i <= l; ++i) push({T::Lower, i, 0}, -1);
    for (int i = lo; i <= l; ++i)
        for (int j = lo; j <= l; ++j) push({T::Mixed, i, j}, 0);
    if (is_b)
        for (int i = 1; i <= l; ++i) push({T::Upper, i, 0}, 1);
    for (int i = lo; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) push({T::UpperPair, i, j}, is_b ? 2 : 1);

    Layout lay{kind, l};
    for (const auto& b : basis_) elements_.push_back(make_basis_element(lay, b));

    // Pivot entries: positions occupied by exactly one basis element.
    std::map<std::pair<std::size_t, std::size_t>, int> occupancy;
    std::vector<std::vector<Entry>> sparse;
    for (const auto& e : elements_) {
        sparse.push_back(sparse_entries(e));
        for (const auto& [r, c, v] : sparse.back()) ++occupancy[{r, c}];
    }
    for (const auto& entries : sparse) {
        bool found = false;
        for (const auto& [r, c, v] : entries)
            if (occupancy[{r, c}] == 1) {
                pivots_.emplace_back(r * n_ + c, v);
                found = true;
                break;
            }
        if (!found) throw InvariantViolation("basis element without a pivot entry");
    }

    const std::size_t dim = basis_.size();
    structure_.resize(dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            std::map<std::size_t, ExactScalar> prod;
            for (const auto& [r, k, x] : sparse[a])
                for (const auto& [k2, c, y] : sparse[b])
                    if (k == k2) prod[r * n_ + c] += x * y;
            for (const auto& [r, k, y] : sparse[b])
                for (const auto& [k2, c, x] : sparse[a])
                    if (k == k2) prod[r * n_ + c] -= y * x;
            for (auto it = prod.begin(); it != prod.end();)
                it = it->second.is_zero() ? prod.erase(it) : std::next(it);
            structure_[a * dim + b] = sparse_coordinates(prod, sparse);
        }

    for (std::size_t a = 0; a < dim; ++a) {
        if (grades_[a] > 0) positive_.push_back(a);
        if (grades_[a] < 0) negative_.push_back(a);
    }
    dual_.assign(dim, dim);
    for (std::size_t a : positive_)
        for (std::size_t b : negative_) {
            ExactScalar v = pairing(a, b);
            if (v.is_zero()) continue;
            if (v != ExactScalar(1) || dual_[a] != dim) throw InvariantViolation("p+ and g- bases are not dual");
            dual_[a] = b;
            dual_[b] = a;
        }
}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::create(AlgebraKind kind, int l)
{
    return std::shared_ptr<const GradedAlgebra>(new GradedAlgebra(kind, l));
}

std::optional<std::size_t> GradedAlgebra::find(const BasisIndex& b) const
{
    auto it = lookup_.find(b);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t GradedAlgebra::at(const BasisIndex& b) const
{
    auto r = find(b);
    if (!r) throw Error("no basis element " + b.to_string(kind_));
    return *r;
}

ExactScalar GradedAlgebra::pairing(std::size_t a, std::size_t b) const
{
    return freedist::pairing(elements_[a], elements_[b]);
}

Coefficients GradedAlgebra::coordinates(const AlgebraElement& x) const
{
    if (x.size() != n_) throw Error("matrix size does not match the algebra");
    Coefficients out;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
        const auto& [pos, v] = pivots_[a];
        const ExactScalar& entry = x(pos / n_, pos % n_);
        if (!entry.is_zero()) out.emplace(a, entry / v);
    }
    if (!(to_element(out) == x)) throw Error("matrix is not an element of the algebra");
    return out;
}

AlgebraElement GradedAlgebra::to_element(const Coefficients& c) const
{
    AlgebraElement m(kind_, l_);
    for (const auto& [a, v] : c) {
        const AlgebraElement& e = elements_[a];
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t col = 0; col < n_; ++col)
                if (!e(r, col).is_zero()) m(r, col) += v * e(r, col);
    }
    return m;
}

Coefficients GradedAlgebra::bracket(const Coefficients& x, const Coefficients& y) const
{
    Coefficients out;
    for (const auto& [a, u] : x)
        for (const auto& [b, v] : y) add_scaled(out, bracket(a, b), u * v);
    return out;
}

}  // namespace freedist
