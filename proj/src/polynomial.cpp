#include "freedist/polynomial.hpp"

#include "freedist/errors.hpp"
#include "freedist/indexing.hpp"

#include <algorithm>

namespace freedist {

Coordinate Coordinate::y(int j, int k)
{
    if (j >= k) throw Error("y coordinate requires j < k");
    return {Kind::Y, j, k};
}

std::string Coordinate::to_string() const
{
    if (kind == Kind::X) return "x" + std::to_string(i);
    return "y[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

bool Chart::contains(const Coordinate& c) const
{
    if (c.kind == Coordinate::Kind::X) return c.i >= 1 && c.i <= l_;
    return c.i >= 1 && c.i < c.j && c.j <= l_;
}

std::size_t Chart::index_of(const Coordinate& c) const
{
    if (!contains(c)) throw MissingCoordinate("coordinate " + c.to_string() + " not in chart l=" + std::to_string(l_));
    if (c.kind == Coordinate::Kind::X) return static_cast<std::size_t>(c.i - 1);
    return static_cast<std::size_t>(l_) + PairIndexer(l_).index(c.i, c.j);
}

Coordinate Chart::coordinate(std::size_t index) const
{
    if (index < static_cast<std::size_t>(l_)) return Coordinate::x(static_cast<int>(index) + 1);
    auto [j, k] = PairIndexer(l_).pair(index - l_);
    return Coordinate::y(j, k);
}

Polynomial::Polynomial(ExactScalar c)
{
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Polynomial Polynomial::constant(const Chart& chart, const ExactScalar& c)
{
    Polynomial p(c);
    p.bind(chart.l());
    return p;
}

Polynomial Polynomial::variable(const Chart& chart, const Coordinate& c)
{
    Polynomial p;
    p.l_ = chart.l();
    Monomial m(chart.dimension(), 0);
    m[chart.index_of(c)] = 1;
    p.terms_.emplace(std::move(m), ExactScalar(1));
    return p;
}

int Polynomial::unify(int a, int b)
{
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw ChartMismatch("polynomials on charts l=" + std::to_string(a) + " and l=" + std::to_string(b));
}

void Polynomial::bind(int l)
{
    if (l == l_ || l == 0) return;
    if (l_ != 0) unify(l_, l);
    // Only chart-free constants reach here.
    l_ = l;
    Terms rebound;
    for (auto& [m, c] : terms_) rebound.emplace(Monomial(Chart(l).dimension(), 0), c);
    terms_ = std::move(rebound);
}

void Polynomial::add_term(const Monomial& m, const ExactScalar& c)
{
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool Polynomial::is_constant() const
{
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint16_t e) { return e == 0; });
}

ExactScalar Polynomial::constant_value() const
{
    for (const auto& [m, c] : terms_)
        if (std::all_of(m.begin(), m.end(), [](std::uint16_t e) { return e == 0; })) return c;
    return ExactScalar(0);
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

Polynomial Polynomial::derivative(std::size_t index) const
{
    Polynomial r;
    r.l_ = l_;
    for (const auto& [m, c] : terms_) {
        if (index >= m.size() || m[index] == 0) continue;
        Monomial dm = m;
        --dm[index];
        r.add_term(dm, c * ExactScalar(static_cast<long>(m[index])));
    }
    return r;
}

Polynomial Polynomial::derivative(const Coordinate& c) const
{
    if (l_ == 0) return Polynomial();
    return derivative(Chart(l_).index_of(c));
}

ExactScalar Polynomial::evaluate(const std::map<Coordinate, ExactScalar>& point) const
{
    ExactScalar total;
    Chart chart(l_);
    for (const auto& [m, c] : terms_) {
        ExactScalar t = c;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            Coordinate coord = chart.coordinate(v);
            auto it = point.find(coord);
            if (it == point.end()) throw MissingCoordinate("no value for " + coord.to_string());
            for (unsigned e = 0; e < m[v]; ++e) t *= it->second;
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = Polynomial::constant(chart(), 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    int l = unify(l_, o.l_);
    bind(l);
    if (o.l_ == l) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
    } else {
        Polynomial t = o;
        t.bind(l);
        for (const auto& [m, c] : t.terms_) add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    return *this += -o;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    Polynomial r;
    r.l_ = Polynomial::unify(p.l_, q.l_);
    if (p.is_zero() || q.is_zero()) return r;
    Polynomial a = p;
    Polynomial b = q;
    a.bind(r.l_);
    b.bind(r.l_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Polynomial::Monomial m(ma.size());
            for (std::size_t v = 0; v < m.size(); ++v) m[v] = static_cast<std::uint16_t>(ma[v] + mb[v]);
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const ExactScalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

bool operator==(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.l_ == q.l_) return p.terms_ == q.terms_;
    if (p.l_ != 0 && q.l_ != 0) return false;
    Polynomial a = p;
    Polynomial b = q;
    int l = std::max(p.l_, q.l_);
    a.bind(l);
    b.bind(l);
    return a.terms_ == b.terms_;
}

Polynomial Polynomial::exact_divide(const Polynomial& q) const
{
    if (q.is_zero()) throw DivisionByZero();
    int l = unify(l_, q.l_);
    Polynomial rem = *this;
    Polynomial d = q;
    rem.bind(l);
    d.bind(l);
    Polynomial quot;
    quot.l_ = l;
    const auto& [lm, lc] = *d.terms_.rbegin();
    ExactScalar lc_inv = lc.inverse();
    while (!rem.is_zero()) {
        auto [rm, rc] = *rem.terms_.rbegin();
        Monomial m(rm.size());
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (rm[v] < lm[v]) throw InvariantViolation("polynomial division is not exact");
            m[v] = static_cast<std::uint16_t>(rm[v] - lm[v]);
        }
        ExactScalar c = rc * lc_inv;
        Polynomial t;
        t.l_ = l;
        t.terms_.emplace(m, c);
        quot.add_term(m, c);
        rem -= t * d;
    }
    return quot;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    Chart chart(l_);
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += chart.coordinate(v).to_string();
            if (m[v] > 1) mono += "^" + std::to_string(m[v]);
        }
        ExactScalar coeff = c;
        bool negative = coeff.is_rational() ? coeff.sign() < 0 : (sgn(coeff.rational_part()) == 0 && sgn(coeff.sqrt2_part()) < 0);
        if (negative) coeff = -coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (mono.empty())
            out += coeff.to_string();
        else if (coeff == ExactScalar(1))
            out += mono;
        else
            out += coeff.to_string() + "*" + mono;
    }
    return out;
}

}  // namespace freedist
