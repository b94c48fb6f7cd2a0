#include "freedist/battery.hpp"

#include "freedist/linalg.hpp"

#include <random>
#include <sstream>

namespace freedist {
namespace {

using Type = BasisIndex::Type;

CheckResult result(std::string name, std::size_t failures, std::size_t total)
{
    std::ostringstream os;
    os << (total - failures) << "/" << total << " cases";
    return {std::move(name), failures == 0 && total > 0, os.str()};
}

std::string prefix(const GradedAlgebra& g)
{
    return std::string(g.kind() == AlgebraKind::B ? "g" : "g~") + "(l=" + std::to_string(g.l()) + ") ";
}

// Assigns consecutive column numbers to chain keys as they appear.
struct KeyIndex {
    std::map<ChainKey, std::size_t> index;
    std::size_t operator()(const ChainKey& k)
    {
        auto [it, fresh] = index.emplace(k, index.size());
        return it->second;
    }
};

SparseRow to_row(const ScalarChain& c, KeyIndex& keys)
{
    SparseRow r;
    for (const auto& [k, v] : c.terms()) r.emplace(keys(k), v);
    return r;
}

ScalarChain basis_chain(const std::shared_ptr<const GradedAlgebra>& g, const ChainKey& k)
{
    ScalarChain c(g, static_cast<int>(k.slots.size()));
    c.add(k.slots, k.target, ExactScalar(1));
    return c;
}

ScalarChain vector_chain(const std::shared_ptr<const GradedAlgebra>& g, std::vector<std::size_t> slots, const Coefficients& target)
{
    ScalarChain c(g, static_cast<int>(slots.size()));
    for (const auto& [t, v] : target) c.add(slots, t, v);
    return c;
}

bool all_grades(const GradedAlgebra& g, const ChainKey& k, int grade)
{
    for (std::size_t s : k.slots)
        if (g.grade(s) != grade) return false;
    return true;
}

Coefficients scaled(const Coefficients& v, const ExactScalar& c)
{
    Coefficients out;
    add_scaled(out, v, c);
    return out;
}

}  // namespace

std::vector<CheckResult> check_basis(const GradedAlgebra& g)
{
    std::vector<CheckResult> out;
    const AlgebraElement J = invariant_form(g.kind(), g.l());
    std::size_t bad = 0;
    for (std::size_t a = 0; a < g.dimension(); ++a) {
        const AlgebraElement& x = g.element(a);
        if (!(x.transpose() * J + J * x).is_zero()) ++bad;
    }
    out.push_back(result(prefix(g) + "basis annihilates the invariant form", bad, g.dimension()));

    bad = 0;
    std::size_t total = 0;
    for (std::size_t a = 0; a < g.dimension(); ++a)
        for (std::size_t b = 0; b < g.dimension(); ++b) {
            ++total;
            const int h = g.grade(a) + g.grade(b);
            for (const auto& [c, v] : g.bracket(a, b))
                if (g.grade(c) != h) {
                    ++bad;
                    break;
                }
        }
    out.push_back(result(prefix(g) + "grade additivity of brackets", bad, total));

    if (g.kind() == AlgebraKind::B) {
        bad = 0;
        total = 0;
        for (int i = 1; i <= g.l(); ++i)
            for (int j = 1; j <= g.l(); ++j) {
                ++total;
                Coefficients expected;
                if (i < j) expected[g.lower_pair(i, j)] = ExactScalar(1);
                if (i > j) expected[g.lower_pair(j, i)] = ExactScalar(-1);
                if (g.bracket(g.lower(i), g.lower(j)) != expected) ++bad;
            }
        out.push_back(result(prefix(g) + "[E_i, E_j] = E_[ij]", bad, total));
    }

    bad = 0;
    total = 0;
    for (std::size_t a : g.positive())
        for (std::size_t b : g.negative()) {
            ++total;
            if (g.pairing(a, b) != ExactScalar(g.dual(a) == b ? 1 : 0)) ++bad;
        }
    out.push_back(result(prefix(g) + "p+ and g- are dual under -tr/2", bad, total));
    return out;
}

std::vector<CheckResult> check_trace_form(const GradedAlgebra& g)
{
    auto B = [&](std::size_t a, std::size_t b) { return (g.element(a) * g.element(b)).trace(); };
    std::size_t bad = 0;
    std::size_t total = 0;
    const int lo = g.kind() == AlgebraKind::B ? 1 : 0;
    for (int i = lo; i <= g.l(); ++i)
        for (int j = i + 1; j <= g.l(); ++j) {
            ++total;
            if (B(g.lower_pair(i, j), g.upper_pair(i, j)) != ExactScalar(-2)) ++bad;
        }
    std::vector<CheckResult> out{result(prefix(g) + "B(E_[ij], E^[ij]) = -2", bad, total)};
    if (g.kind() == AlgebraKind::B) {
        bad = total = 0;
        for (int i = 1; i <= g.l(); ++i) {
            ++total;
            if (B(g.lower(i), g.upper(i)) != ExactScalar(-2)) ++bad;
        }
        out.push_back(result(prefix(g) + "B(E_i, E^i) = -2", bad, total));
    }
    bad = total = 0;
    for (int i = lo; i <= g.l(); ++i)
        for (int j = lo; j <= g.l(); ++j) {
            ++total;
            // E~^i_0 carries a sign flip, so pairs with exactly one index 0 give -2.
            const bool flipped = (i == 0) != (j == 0);
            if (B(g.mixed(i, j), g.mixed(j, i)) != ExactScalar(flipped ? -2 : 2)) ++bad;
        }
    out.push_back(result(prefix(g) + (lo == 0 ? "B(E~^a_b, E~^b_a) = +-2" : "B(E^i_j, E^j_i) = 2"), bad, total));
    return out;
}

CheckResult check_alpha_homomorphism(const Inclusion& inc)
{
    const GradedAlgebra& g = *inc.g();
    const GradedAlgebra& gt = *inc.gt();
    std::size_t bad = 0;
    std::size_t total = 0;
    for (std::size_t a = 0; a < g.dimension(); ++a)
        for (std::size_t b = 0; b < g.dimension(); ++b) {
            ++total;
            AlgebraElement lhs = inc.alpha(bracket(g.element(a), g.element(b)));
            AlgebraElement rhs = bracket(inc.alpha(g.element(a)), inc.alpha(g.element(b)));
            if (!(lhs == rhs) || inc.alpha(g.bracket(a, b)) != gt.bracket(inc.alpha(a), inc.alpha(b))) ++bad;
        }
    return result("alpha is a bracket homomorphism (l=" + std::to_string(g.l()) + ")", bad, total);
}

CheckResult check_phi_duality(const Inclusion& inc)
{
    const GradedAlgebra& g = *inc.g();
    const GradedAlgebra& gt = *inc.gt();
    std::size_t bad = 0;
    std::size_t total = 0;
    for (std::size_t xi : g.positive())
        for (std::size_t x = 0; x < g.dimension(); ++x) {
            ++total;
            Coefficients lower;
            for (const auto& [t, v] : inc.alpha(x))
                if (gt.grade(t) < 0) lower[t] = v;
            Coefficients own;
            if (g.grade(x) < 0) own[x] = ExactScalar(1);
            ExactScalar lhs = pairing(gt.to_element(inc.phi(xi)), gt.to_element(lower));
            ExactScalar rhs = pairing(g.element(xi), g.to_element(own));
            if (lhs != rhs) ++bad;
        }
    return result("phi duality on all (xi, X) pairs (l=" + std::to_string(g.l()) + ")", bad, total);
}

std::vector<CheckResult> check_delta_relations(const Inclusion& inc)
{
    const GradedAlgebra& g = *inc.g();
    const GradedAlgebra& gt = *inc.gt();
    const int l = g.l();
    std::size_t bad[5] = {0, 0, 0, 0, 0};
    std::size_t total[5] = {0, 0, 0, 0, 0};
    auto check = [&](int which, std::size_t x, int i, const Coefficients& expected) {
        ++total[which];
        if (gt.bracket(inc.delta_upper(i), inc.alpha(x)) != expected) ++bad[which];
    };
    for (int i = 1; i <= l; ++i)
        for (std::size_t x = 0; x < g.dimension(); ++x) {
            const BasisIndex& b = g.index(x);
            switch (b.type) {
            case Type::Mixed:  // E^r_s -> delta^i_s Delta E~^r
                check(0, x, i, b.j == i ? inc.delta_upper(b.i) : Coefficients{});
                break;
            case Type::Lower:  // E_s -> sqrt2 delta^i_s E~^0_0
                check(1, x, i, b.i == i ? Coefficients{{gt.mixed(0, 0), ExactScalar::sqrt2()}} : Coefficients{});
                break;
            case Type::LowerPair: {  // E_[rs] -> delta^i_r Delta E~_s - delta^i_s Delta E~_r
                Coefficients e;
                if (b.i == i) add_scaled(e, inc.delta_lower(b.j), ExactScalar(1));
                if (b.j == i) add_scaled(e, inc.delta_lower(b.i), ExactScalar(-1));
                check(2, x, i, e);
                break;
            }
            case Type::Upper:
                check(3, x, i, {});
                break;
            case Type::UpperPair:
                check(4, x, i, {});
                break;
            }
        }
    const std::string suffix = " (l=" + std::to_string(l) + ")";
    return {result("[DE^i, a(E^r_s)] = d^i_s DE^r" + suffix, bad[0], total[0]),
            result("[DE^i, a(E_s)] = sqrt2 d^i_s E~^0_0" + suffix, bad[1], total[1]),
            result("[DE^i, a(E_[rs])] = d^i_r DE_s - d^i_s DE_r" + suffix, bad[2], total[2]),
            result("[DE^i, a(E^r)] = 0" + suffix, bad[3], total[3]),
            result("[DE^i, a(E^[rs])] = 0" + suffix, bad[4], total[4])};
}

std::vector<CheckResult> check_closed_forms(const Inclusion& inc)
{
    const auto& g = inc.g();
    std::size_t bad = 0;
    std::size_t total = 0;
    std::size_t bad22 = 0;
    std::size_t total22 = 0;
    for (const ChainKey& k : chain_basis(*g, 2)) {
        ScalarChain c = basis_chain(g, k);
        ScalarChain direct = inc.commutator_operator(c);
        ++total;
        if (!(direct == inc.commutator_closed_form(c))) ++bad;
        if (all_grades(*g, k, 2)) {
            ++total22;
            if (!direct.is_zero()) ++bad22;
        }
    }
    const std::string suffix = " (l=" + std::to_string(g->l()) + ")";
    return {result("[d*, phi] equals its closed forms on every basis 2-chain" + suffix, bad, total),
            result("[d*, phi] vanishes on Lambda^2 g2 (x) g" + suffix, bad22, total22)};
}

std::vector<CheckResult> check_operator_kernel(const Inclusion& inc)
{
    const auto& g = inc.g();
    const GradedAlgebra& gt = *inc.gt();
    const int l = g->l();
    const std::string suffix = " (l=" + std::to_string(l) + ")";
    std::vector<CheckResult> out;

    // h_i = ker(X -> [Delta E~^i, alpha X]); rows indexed by (i, g~ component).
    std::vector<SparseRow> all_rows;
    std::vector<std::vector<SparseRow>> h;
    for (int i = 1; i <= l; ++i) {
        std::map<std::size_t, SparseRow> rows;
        for (std::size_t x = 0; x < g->dimension(); ++x)
            for (const auto& [t, v] : gt.bracket(inc.delta_upper(i), inc.alpha(x))) rows[t][x] = v;
        std::vector<SparseRow> r;
        for (auto& [t, row] : rows) r.push_back(row);
        all_rows.insert(all_rows.end(), r.begin(), r.end());
        h.push_back(kernel_basis(r, g->dimension()));
    }
    auto meet = kernel_basis(all_rows, g->dimension());
    std::size_t positive = g->positive().size();
    bool inside = true;
    for (const auto& v : meet)
        for (const auto& [a, c] : v)
            if (g->grade(a) <= 0) inside = false;
    {
        std::ostringstream os;
        os << "dim = " << meet.size() << ", dim(g1+g2) = " << positive;
        out.push_back({"intersection of h_i equals g1 + g2" + suffix, inside && meet.size() == positive, os.str()});
    }

    // Item (b): E^i ^ E^[jk] (x) h_i lies in the kernel.
    std::size_t bad = 0;
    std::size_t total = 0;
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            for (int k = j + 1; k <= l; ++k)
                for (const auto& v : h[static_cast<std::size_t>(i - 1)]) {
                    ++total;
                    if (!inc.kappa11_normality_test(vector_chain(g, {g->upper(i), g->upper_pair(j, k)}, v))) ++bad;
                }
    out.push_back(result("kernel contains E^i ^ E^[jk] (x) h_i" + suffix, bad, total));

    bad = total = 0;
    for (const ChainKey& key : chain_basis(*g, 2)) {
        const bool mixed_block = g->grade(key.slots[0]) + g->grade(key.slots[1]) == 3;
        if (!mixed_block || g->grade(key.target) <= 0) continue;
        ++total;
        if (!inc.kappa11_normality_test(basis_chain(g, key))) ++bad;
    }
    out.push_back(result("kernel contains g1 (x) g2 (x) (g1 + g2)" + suffix, bad, total));

    KeyIndex keys;
    std::vector<SparseRow> images;
    for (const ChainKey& key : chain_basis(*g, 2))
        if (all_grades(*g, key, 1)) images.push_back(to_row(inc.commutator_operator(basis_chain(g, key)), keys));
    const std::size_t r = rank(images);
    std::ostringstream os;
    os << "rank " << r << " of " << images.size();
    out.push_back({"kernel meets Lambda^2 g1 (x) g trivially" + suffix, r == images.size(), os.str()});
    return out;
}

std::vector<CheckResult> check_complex_squares(const GradedAlgebra& g)
{
    auto shared = GradedAlgebra::create(g.kind(), g.l());
    std::vector<CheckResult> out;
    for (int k = 0; k <= 1; ++k) {
        std::size_t bad = 0;
        auto basis = chain_basis(g, k);
        for (const ChainKey& key : basis)
            if (!differential(differential(basis_chain(shared, key))).is_zero()) ++bad;
        out.push_back(result(prefix(g) + "d o d = 0 on all " + std::to_string(k) + "-chains", bad, basis.size()));
    }
    for (int k = 2; k <= 3; ++k) {
        std::size_t bad = 0;
        auto basis = chain_basis(g, k);
        for (const ChainKey& key : basis)
            if (!codifferential(codifferential(basis_chain(shared, key))).is_zero()) ++bad;
        out.push_back(result(prefix(g) + "d* o d* = 0 on all " + std::to_string(k) + "-chains", bad, basis.size()));
    }
    return out;
}

std::vector<CheckResult> algebra_battery(int l)
{
    Inclusion inc(l);
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    append(check_basis(*inc.g()));
    append(check_basis(*inc.gt()));
    append(check_trace_form(*inc.g()));
    append(check_trace_form(*inc.gt()));
    out.push_back(check_alpha_homomorphism(inc));
    out.push_back(check_phi_duality(inc));
    append(check_delta_relations(inc));
    append(check_closed_forms(inc));
    append(check_operator_kernel(inc));
    append(check_complex_squares(*inc.g()));
    return out;
}

Kappa11Suite kappa11_property_suite(const Inclusion& inc, std::size_t trials, std::uint64_t seed)
{
    const auto& g = inc.g();
    const int l = g->l();
    Kappa11Suite suite;
    suite.trials = trials;

    // Unknowns: coefficients on the g1^g2 and g2^g2 blocks.
    std::vector<ChainKey> columns;
    std::vector<ChainKey> block11;
    for (const ChainKey& key : chain_basis(*g, 2)) {
        if (all_grades(*g, key, 1))
            block11.push_back(key);
        else
            columns.push_back(key);
    }
    std::map<ChainKey, std::size_t> column_of;
    for (std::size_t c = 0; c < columns.size(); ++c) column_of[columns[c]] = c;

    // Side conditions as rows: (d c) on Lambda^3 g-1, pr1 d* c, and the trace patterns.
    std::map<ChainKey, SparseRow> bianchi;
    std::map<ChainKey, SparseRow> projected;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        ScalarChain b = basis_chain(g, columns[c]);
        const ScalarChain db = differential(b);
        const ScalarChain sb = codifferential(b);
        for (const auto& [k, v] : db.terms())
            if (all_grades(*g, k, 1)) bianchi[k][c] = v;
        for (const auto& [k, v] : sb.terms())
            if (all_grades(*g, k, 1)) projected[k][c] = v;
    }
    std::vector<SparseRow> rows;
    for (auto& [k, r] : bianchi) rows.push_back(r);
    for (auto& [k, r] : projected) rows.push_back(r);

    // Coefficient of E^i ^ E^[jk] (x) target, with antisymmetric pair handling.
    auto entry = [&](SparseRow& row, int i, int j, int k, std::size_t target, const ExactScalar& sign) {
        if (j == k) return;
        ExactScalar s = sign;
        if (j > k) {
            std::swap(j, k);
            s = -s;
        }
        ChainKey key{{g->upper(i), g->upper_pair(j, k)}, target};
        std::sort(key.slots.begin(), key.slots.end());
        add_scaled(row, SparseRow{{column_of.at(key), ExactScalar(1)}}, s);
    };
    auto lower_pair = [&](int r, int s, ExactScalar& sign) {
        if (r > s) {
            std::swap(r, s);
            sign = -sign;
        }
        return g->lower_pair(r, s);
    };
    for (int s = 1; s <= l; ++s)
        for (int j = 1; j <= l; ++j)
            for (int k = j + 1; k <= l; ++k) {
                // sum_i P^[is]_i[jk], sum_i S^i_i[jk], sum_i Z^i_i[jk]s
                SparseRow p, z;
                for (int i = 1; i <= l; ++i) {
                    if (i == s) continue;
                    ExactScalar sign(1);
                    std::size_t t = lower_pair(i, s, sign);
                    entry(p, i, j, k, t, sign);
                }
                for (int i = 1; i <= l; ++i) entry(z, i, j, k, g->mixed(s, i), ExactScalar(1));
                rows.push_back(p);
                rows.push_back(z);
                if (s == 1) {
                    SparseRow tr;
                    for (int i = 1; i <= l; ++i) entry(tr, i, j, k, g->lower(i), ExactScalar(1));
                    rows.push_back(tr);
                }
            }
    for (int i = 1; i <= l; ++i)
        for (int s = 1; s <= l; ++s)
            for (int k = 1; k <= l; ++k) {
                // sum_r P^[rs]_i[rk]
                SparseRow p;
                for (int r = 1; r <= l; ++r) {
                    if (r == s) continue;
                    ExactScalar sign(1);
                    std::size_t t = lower_pair(r, s, sign);
                    entry(p, i, r, k, t, sign);
                }
                rows.push_back(p);
            }
    const auto kernel = kernel_basis(rows, columns.size());
    suite.side_condition_dimension = kernel.size();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    auto random_scalar = [&] {
        long v = coef(rng);
        return v == 0 ? ExactScalar(1) : ExactScalar(v);
    };
    for (std::size_t trial = 0; trial < trials; ++trial) {
        // Sparse random combination of side-condition solutions.
        ScalarChain good(g, 2);
        if (!kernel.empty())
            for (int n = 0; n < 4; ++n) {
                const auto& v = kernel[rng() % kernel.size()];
                ExactScalar w = random_scalar();
                for (const auto& [c, x] : v) good.add(columns[c].slots, columns[c].target, x * w);
            }
        if (!kernel.empty() && inc.kappa11_normality_test(good)) ++suite.accepted_with_side_conditions;

        // Nonzero Lambda^2 g1 part plus arbitrary noise elsewhere.
        ScalarChain bad(g, 2);
        while (bad.is_zero())
            for (int n = 0; n < 3; ++n) {
                const ChainKey& k = block11[rng() % block11.size()];
                bad.add(k.slots, k.target, random_scalar());
            }
        for (int n = 0; n < 5; ++n) {
            const ChainKey& k = columns[rng() % columns.size()];
            bad.add(k.slots, k.target, random_scalar());
        }
        if (!inc.kappa11_normality_test(bad)) ++suite.rejected_with_kappa11;
    }
    return suite;
}

}  // namespace freedist
