#include "freedist/inclusion.hpp"

namespace freedist {

Inclusion::Inclusion(int l)
    : g_(GradedAlgebra::create(AlgebraKind::B, l)), gt_(GradedAlgebra::create(AlgebraKind::D, l))
{
    for (std::size_t a = 0; a < g_->dimension(); ++a) alpha_.push_back(gt_->coordinates(alpha(g_->element(a))));
    // phi on the p+ block [[0,0,0],[-Z^t,0,0],[T,Z,0]]: T~_ij = T_ij, T~_i0 = sqrt2 Z_i, T~_0i = -sqrt2 Z_i.
    const std::size_t c = static_cast<std::size_t>(l);
    phi_.resize(g_->dimension());
    for (std::size_t a : g_->positive()) {
        const AlgebraElement& m = g_->element(a);
        AlgebraElement r(AlgebraKind::D, l);
        const std::size_t shift = static_cast<std::size_t>(l) + 1;
        for (int i = 1; i <= l; ++i) {
            const ExactScalar z = m(static_cast<std::size_t>(l + i), c);
            r(shift + i, 0) = ExactScalar::sqrt2() * z;
            r(shift, static_cast<std::size_t>(i)) = -(ExactScalar::sqrt2() * z);
            for (int j = 1; j <= l; ++j) r(shift + i, static_cast<std::size_t>(j)) = m(static_cast<std::size_t>(l + i), static_cast<std::size_t>(j - 1));
        }
        phi_[a] = gt_->coordinates(r);
    }
}

AlgebraElement Inclusion::alpha(const AlgebraElement& x) const
{
    const int l = g_->l();
    if (x.kind() != AlgebraKind::B || x.l() != l) throw Error("alpha expects an element of so(l,l+1)");
    const std::size_t c = static_cast<std::size_t>(l);
    auto p = [](int i) { return static_cast<std::size_t>(i - 1); };
    auto q = [l](int i) { return static_cast<std::size_t>(l + i); };
    auto P = [](int a) { return static_cast<std::size_t>(a); };
    auto Q = [l](int a) { return static_cast<std::size_t>(l + 1 + a); };
    const ExactScalar s = ExactScalar::inv_sqrt2();
    AlgebraElement r(AlgebraKind::D, l);
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            r(P(i), P(j)) = x(p(i), p(j));
            r(P(i), Q(j)) = x(p(i), q(j));
            r(Q(i), P(j)) = x(q(i), p(j));
            r(Q(i), Q(j)) = x(q(i), q(j));
        }
        const ExactScalar X = x(p(i), c);
        const ExactScalar Z = x(q(i), c);
        r(P(i), P(0)) = s * X;
        r(P(0), P(i)) = -(s * Z);
        r(P(i), Q(0)) = s * X;
        r(P(0), Q(i)) = -(s * X);
        r(Q(0), P(i)) = -(s * Z);
        r(Q(i), P(0)) = s * Z;
        r(Q(0), Q(i)) = -(s * X);
        r(Q(i), Q(0)) = s * Z;
    }
    return r;
}

Coefficients Inclusion::alpha(const Coefficients& x) const
{
    Coefficients out;
    for (const auto& [a, v] : x) add_scaled(out, alpha_[a], v);
    return out;
}

const Coefficients& Inclusion::phi(std::size_t a) const
{
    if (g_->grade(a) <= 0) throw Error("phi is defined on p+ only");
    return phi_[a];
}

Coefficients Inclusion::delta_upper(int i) const
{
    return {{gt_->upper_pair(0, i), ExactScalar(1)}, {gt_->mixed(i, 0), ExactScalar(-1)}};
}

Coefficients Inclusion::delta_lower(int i) const
{
    return {{gt_->lower_pair(0, i), ExactScalar(1)}, {gt_->mixed(0, i), ExactScalar(-1)}};
}

ScalarChain Inclusion::phi_chain(const ScalarChain& c) const
{
    if (c.g().kind() != AlgebraKind::B) throw Error("phi_chain expects a chain over so(l,l+1)");
    ScalarChain out(gt_, c.degree());
    for (const auto& [key, coef] : c.terms()) {
        // Expand the wedge of the phi images slot by slot.
        std::vector<std::pair<std::vector<std::size_t>, ExactScalar>> partial{{{}, coef}};
        for (std::size_t s : key.slots) {
            std::vector<std::pair<std::vector<std::size_t>, ExactScalar>> next;
            for (const auto& [slots, v] : partial)
                for (const auto& [t, w] : phi(s)) {
                    auto extended = slots;
                    extended.push_back(t);
                    next.emplace_back(std::move(extended), v * w);
                }
            partial = std::move(next);
        }
        for (const auto& [slots, v] : partial)
            for (const auto& [t, w] : alpha_[key.target]) out.add(slots, t, v * w);
    }
    return out;
}

ScalarChain Inclusion::commutator_operator(const ScalarChain& c) const
{
    if (c.degree() != 2) throw Error("commutator operator acts on 2-chains");
    return codifferential(phi_chain(c)) - phi_chain(codifferential(c));
}

ScalarChain Inclusion::commutator_closed_form(const ScalarChain& c) const
{
    if (c.degree() != 2) throw Error("commutator operator acts on 2-chains");
    const GradedAlgebra& g = *g_;
    const GradedAlgebra& gt = *gt_;
    ScalarChain out(gt_, 1);
    auto emit = [&](std::size_t slot, const Coefficients& value, const ExactScalar& scale) {
        for (const auto& [t, v] : value) out.add({slot}, t, v * scale);
    };
    for (const auto& [key, coef] : c.terms()) {
        const BasisIndex& a = g.index(key.slots[0]);
        const BasisIndex& b = g.index(key.slots[1]);
        const Coefficients ax = alpha_[key.target];
        if (a.type == BasisIndex::Type::UpperPair) continue;
        if (b.type == BasisIndex::Type::UpperPair) {
            Coefficients br = gt.bracket(delta_upper(a.i), ax);
            emit(gt.upper_pair(b.i, b.j), br, -(ExactScalar::inv_sqrt2() * coef));
            continue;
        }
        const int i = a.i;
        const int j = b.i;
        emit(gt.upper_pair(i, j), ax, coef);
        emit(gt.upper_pair(0, i), gt.bracket(delta_upper(j), ax), coef);
        emit(gt.upper_pair(0, j), gt.bracket(delta_upper(i), ax), -coef);
    }
    return out;
}

bool Inclusion::kappa11_normality_test(const ScalarChain& c) const
{
    return commutator_operator(c).is_zero();
}

}  // namespace freedist
