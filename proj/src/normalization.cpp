#include "freedist/normalization.hpp"

#include "freedist/linalg.hpp"

#include <memory>
#include <mutex>

namespace freedist {
namespace {

Polynomial delta(int a, int b)
{
    return Polynomial(a == b ? 1 : 0);
}

// A^i_{kl} - A^i_{lk}.
Polynomial hat(const Tensor& A, int i, int k, int l)
{
    return A({i, k, l}) - A({i, l, k});
}

std::vector<std::pair<int, int>> all_pairs(int l)
{
    std::vector<std::pair<int, int>> out;
    for (int s = 1; s <= l; ++s)
        for (int t = s + 1; t <= l; ++t) out.emplace_back(s, t);
    return out;
}

// Structure functions with pair superscripts extended antisymmetrically.
struct FView {
    const StructureFunctions& f;
    int l() const { return f.l(); }
    std::optional<std::pair<std::size_t, int>> up(int a, int b) const
    {
        auto p = f.pairs().signed_index(a, b);
        if (!p) return std::nullopt;
        return std::make_pair(static_cast<std::size_t>(l()) + p->index, p->sign);
    }
    // f^[ab]_{r[st]}
    Polynomial pair_single_pair(int a, int b, int r, int s, int t) const
    {
        auto u = up(a, b);
        if (!u) return Polynomial();
        Polynomial v = f.single_pair(u->first, r, s, t);
        return u->second > 0 ? v : -v;
    }
    // f^[ab]_{[kl][rs]}
    Polynomial pair_pair_pair(int a, int b, int k, int l2, int r, int s) const
    {
        auto u = up(a, b);
        if (!u) return Polynomial();
        Polynomial v = f.pair_pair(u->first, k, l2, r, s);
        return u->second > 0 ? v : -v;
    }
    // f^i_{j[kl]}
    Polynomial single_single_pair(int i, int j, int k, int l2) const { return f.single_pair(single_slot(i), j, k, l2); }
};

// Degree-one equations: sum_i A^i_{ik}, sum_r P^[rj]_{r[st]}, sum_s P^[sj]_{r[st]}.
std::vector<Polynomial> degree1_equations(int l, const Tensor& A, const Tensor& P)
{
    std::vector<Polynomial> eq;
    for (int k = 1; k <= l; ++k) {
        Polynomial v;
        for (int i = 1; i <= l; ++i) v += A({i, i, k});
        eq.push_back(v);
    }
    for (int j = 1; j <= l; ++j)
        for (const auto& [s, t] : all_pairs(l)) {
            Polynomial v;
            for (int r = 1; r <= l; ++r)
                if (r != j) v += P({r, j, r, s, t});
            eq.push_back(v);
        }
    for (int r = 1; r <= l; ++r)
        for (int j = 1; j <= l; ++j)
            for (int t = 1; t <= l; ++t) {
                Polynomial v;
                for (int s = 1; s <= l; ++s)
                    if (s != j && s != t) v += P({s, j, r, s, t});
                eq.push_back(v);
            }
    return eq;
}

std::size_t a_unknown(int l, int i, int j, int k)
{
    return static_cast<std::size_t>(((i - 1) * l + (j - 1)) * l + (k - 1));
}

struct Degree2Layout {
    int l;
    std::vector<std::pair<int, int>> pairs;
    std::size_t e_count() const { return static_cast<std::size_t>(l * l) * pairs.size(); }
    std::size_t e_unknown(int i, int j, std::size_t p) const
    {
        return (static_cast<std::size_t>((i - 1) * l + (j - 1))) * pairs.size() + p;
    }
    std::vector<std::pair<int, int>> f_entries() const
    {
        std::vector<std::pair<int, int>> out;
        for (int a = 1; a <= l; ++a)
            for (int b = a; b <= l; ++b) out.emplace_back(a, b);
        return out;
    }
    std::size_t unknowns() const { return e_count() + f_entries().size(); }
};

template <class Build>
std::shared_ptr<const FactoredSystem> cached(std::map<int, std::shared_ptr<const FactoredSystem>>& cache, std::mutex& m,
                                             int l, Build build)
{
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(l);
        if (it != cache.end()) return it->second;
    }
    auto sys = std::make_shared<const FactoredSystem>(build());
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(l, sys).first->second;
}

SparseRow column_of(const std::vector<Polynomial>& eq)
{
    SparseRow col;
    for (std::size_t e = 0; e < eq.size(); ++e) {
        if (eq[e].is_zero()) continue;
        if (!eq[e].is_constant()) throw InvariantViolation("normalization coefficient is not constant");
        col.emplace(e, eq[e].constant_value());
    }
    return col;
}

// Transposes probe columns into equation rows.
std::vector<SparseRow> rows_from_columns(const std::vector<SparseRow>& columns, std::size_t equations)
{
    std::vector<SparseRow> rows(equations);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [e, v] : columns[c]) rows[e].emplace(c, v);
    return rows;
}

void require_supported(int l)
{
    if (l < 4) throw Unsupported("normalization requires l >= 4; the rank 3 case is excluded");
}

}  // namespace

std::string to_string(ExtensionVerdict v)
{
    return v == ExtensionVerdict::NormalAtComputedOrder ? "NormalAtComputedOrder" : "ObstructedByT";
}

Tensor tensor_P(const StructureFunctions& f, const Tensor& A)
{
    const int l = f.l();
    FView fv{f};
    Tensor P(5, {{0, 1}, {3, 4}});
    for (const auto& [i, j] : all_pairs(l))
        for (int r = 1; r <= l; ++r)
            for (const auto& [s, t] : all_pairs(l)) {
                Polynomial v = fv.pair_single_pair(i, j, r, s, t);
                if (i == s) v += A({j, r, t});
                if (j == s) v -= A({i, r, t});
                if (i == t) v -= A({j, r, s});
                if (j == t) v += A({i, r, s});
                if (i == r) v += hat(A, j, s, t);
                if (j == r) v -= hat(A, i, s, t);
                P.set({i, j, r, s, t}, v);
            }
    return P;
}

Tensor tensor_Q(int l, const Tensor& A, const Tensor& C)
{
    Tensor Q(3, {{1, 2}});
    for (int i = 1; i <= l; ++i)
        for (const auto& [j, k] : all_pairs(l)) Q.set({i, j, k}, C({i, j, k}) + hat(A, i, j, k));
    return Q;
}

void tensors_RST(const Frame& frame, const StructureFunctions& f, const ConnectionData& d, Curvature& out)
{
    const int l = f.l();
    FView fv{f};
    const auto pairs = all_pairs(l);
    const Tensor& A = d.A;
    const Tensor& E = d.E;
    const Tensor& F = d.F;
    auto X = [&](int k, const Polynomial& p) { return p.is_zero() ? p : frame.single(k).apply(p); };

    out.T = Tensor(4, {{2, 3}});
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            for (const auto& [k, m] : pairs) {
                Polynomial v = X(k, A({i, m, j})) - X(m, A({i, k, j})) + E({i, j, k, m});
                for (int n = 1; n <= l; ++n) {
                    v -= hat(A, n, k, m) * A({i, n, j});
                    v += A({i, k, n}) * A({n, m, j}) - A({i, m, n}) * A({n, k, j});
                }
                if (i == k) v -= F({m, j});
                if (i == m) v += F({k, j});
                out.T.set({i, j, k, m}, v);
            }

    out.S = Tensor(4, {{2, 3}});
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            for (const auto& [k, m] : pairs) {
                Polynomial v = fv.single_single_pair(i, j, k, m) - X(j, hat(A, i, k, m)) - E({i, j, k, m});
                for (const auto& [s, t] : pairs) {
                    Polynomial h = hat(A, i, s, t);
                    if (!h.is_zero()) v -= h * fv.pair_single_pair(s, t, j, k, m);
                }
                for (int n = 1; n <= l; ++n) v -= hat(A, n, k, m) * hat(A, i, j, n);
                if (i == k) v -= F({j, m});
                if (i == m) v += F({j, k});
                out.S.set({i, j, k, m}, v);
            }

    // G(P, Q) = d^a_s E^b_{t[Q]} - d^b_s E^a_{t[Q]} + d^b_t E^a_{s[Q]} - d^a_t E^b_{s[Q]} for P = [st].
    auto G = [&](int a, int b, int s, int t, int q1, int q2) {
        Polynomial v;
        if (a == s) v += E({b, t, q1, q2});
        if (b == s) v -= E({a, t, q1, q2});
        if (b == t) v += E({a, s, q1, q2});
        if (a == t) v -= E({b, s, q1, q2});
        return v;
    };
    out.R = Tensor(6, {{0, 1}, {2, 3}, {4, 5}}, true);
    for (const auto& [a, b] : pairs)
        for (std::size_t p = 0; p < pairs.size(); ++p)
            for (std::size_t q = p + 1; q < pairs.size(); ++q) {
                const auto [p1, p2] = pairs[p];
                const auto [q1, q2] = pairs[q];
                Polynomial v = fv.pair_pair_pair(a, b, p1, p2, q1, q2);
                for (int n = 1; n <= l; ++n) {
                    Polynomial hq = hat(A, n, q1, q2);
                    Polynomial hp = hat(A, n, p1, p2);
                    if (!hq.is_zero()) v -= hq * fv.pair_single_pair(a, b, n, p1, p2);
                    if (!hp.is_zero()) v += hp * fv.pair_single_pair(a, b, n, q1, q2);
                }
                v += hat(A, a, p1, p2) * hat(A, b, q1, q2) - hat(A, b, p1, p2) * hat(A, a, q1, q2);
                v -= G(a, b, p1, p2, q1, q2);
                v += G(a, b, q1, q2, p1, p2);
                out.R.set({a, b, p1, p2, q1, q2}, v);
            }
}

std::vector<Polynomial> degree2_residuals(int l, const Curvature& c)
{
    std::vector<Polynomial> eq;
    for (int a = 1; a <= l; ++a)
        for (int b = 1; b <= l; ++b) {
            Polynomial v;
            for (int i = 1; i <= l; ++i) v += c.S({i, a, i, b}) + c.T({i, b, i, a});
            eq.push_back(v);
        }
    for (int d = 1; d <= l; ++d)
        for (int b = 1; b <= l; ++b)
            for (const auto& [s, t] : all_pairs(l)) {
                Polynomial v = c.T({d, b, s, t}) - c.S({d, b, s, t});
                for (int x = 1; x <= l; ++x)
                    if (x != d && x != b) v += c.R({x, d, s, t, x, b});
                eq.push_back(v);
            }
    return eq;
}

void solve_degree1(const StructureFunctions& f, ConnectionData& data)
{
    const int l = f.l();
    require_supported(l);
    static std::map<int, std::shared_ptr<const FactoredSystem>> cache;
    static std::mutex mutex;
    const StructureFunctions zero_f(l);
    auto sys = cached(cache, mutex, l, [&] {
        std::vector<SparseRow> columns;
        std::size_t equations = 0;
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j)
                for (int k = 1; k <= l; ++k) {
                    Tensor A(3);
                    A.set({i, j, k}, Polynomial(1));
                    auto eq = degree1_equations(l, A, tensor_P(zero_f, A));
                    equations = eq.size();
                    columns.push_back(column_of(eq));
                }
        return FactoredSystem(rows_from_columns(columns, equations), columns.size());
    });
    if (!sys->full_column_rank()) throw InvariantViolation("degree one system is not uniquely solvable");
    const Tensor zero_A(3);
    std::vector<Polynomial> rhs = degree1_equations(l, zero_A, tensor_P(f, zero_A));
    for (auto& r : rhs) r = -r;
    std::vector<Polynomial> u = sys->solve(rhs);
    data.A = Tensor(3);
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            for (int k = 1; k <= l; ++k) data.A.set({i, j, k}, u[a_unknown(l, i, j, k)]);
    data.C = Tensor(3, {{1, 2}});
    for (int i = 1; i <= l; ++i)
        for (const auto& [j, k] : all_pairs(l)) data.C.set({i, j, k}, -hat(data.A, i, j, k));
}

void solve_degree2(const Frame& frame, const StructureFunctions& f, ConnectionData& data)
{
    const int l = f.l();
    require_supported(l);
    Degree2Layout layout{l, all_pairs(l)};
    static std::map<int, std::shared_ptr<const FactoredSystem>> cache;
    static std::mutex mutex;
    auto sys = cached(cache, mutex, l, [&] {
        const StructureFunctions zero_f(l);
        std::vector<SparseRow> columns;
        std::size_t equations = 0;
        auto probe = [&](const ConnectionData& d) {
            Curvature c;
            tensors_RST(frame, zero_f, d, c);
            auto eq = degree2_residuals(l, c);
            equations = eq.size();
            columns.push_back(column_of(eq));
        };
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j)
                for (const auto& [k, m] : layout.pairs) {
                    ConnectionData d;
                    d.E.set({i, j, k, m}, Polynomial(1));
                    probe(d);
                }
        for (const auto& [a, b] : layout.f_entries()) {
            ConnectionData d;
            d.F.set({a, b}, Polynomial(1));
            d.F.set({b, a}, Polynomial(1));
            probe(d);
        }
        return FactoredSystem(rows_from_columns(columns, equations), columns.size());
    });
    if (!sys->full_column_rank()) throw InvariantViolation("degree two system is not uniquely solvable");
    ConnectionData known = data;
    known.E = Tensor(4, {{2, 3}});
    known.F = Tensor(2);
    Curvature c;
    tensors_RST(frame, f, known, c);
    std::vector<Polynomial> rhs = degree2_residuals(l, c);
    for (auto& r : rhs) r = -r;
    std::vector<Polynomial> u = sys->solve(rhs);
    data.E = Tensor(4, {{2, 3}});
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            for (std::size_t p = 0; p < layout.pairs.size(); ++p)
                data.E.set({i, j, layout.pairs[p].first, layout.pairs[p].second}, u[layout.e_unknown(i, j, p)]);
    data.F = Tensor(2);
    std::size_t n = layout.e_count();
    for (const auto& [a, b] : layout.f_entries()) {
        data.F.set({a, b}, u[n]);
        data.F.set({b, a}, u[n]);
        ++n;
    }
}

Chain<Polynomial> curvature_chain(const std::shared_ptr<const GradedAlgebra>& g, const Curvature& c)
{
    Chain<Polynomial> out(g, 2);
    for (const auto& [idx, v] : c.P.entries())
        out.add({g->upper(idx[2]), g->upper_pair(idx[3], idx[4])}, g->lower_pair(idx[0], idx[1]), v);
    for (const auto& [idx, v] : c.Q.entries()) out.add({g->upper(idx[1]), g->upper(idx[2])}, g->lower(idx[0]), v);
    for (const auto& [idx, v] : c.R.entries())
        out.add({g->upper_pair(idx[2], idx[3]), g->upper_pair(idx[4], idx[5])}, g->lower_pair(idx[0], idx[1]), -v);
    for (const auto& [idx, v] : c.S.entries())
        out.add({g->upper(idx[1]), g->upper_pair(idx[2], idx[3])}, g->lower(idx[0]), -v);
    for (const auto& [idx, v] : c.T.entries())
        out.add({g->upper(idx[2]), g->upper(idx[3])}, g->mixed(idx[1], idx[0]), v);
    return out;
}

bool kappa11_normality(const Inclusion& inc, const Chain<Polynomial>& c)
{
    std::map<Polynomial::Monomial, ScalarChain> by_monomial;
    for (const auto& [key, p] : c.terms())
        for (const auto& [m, v] : p.terms()) {
            auto it = by_monomial.try_emplace(m, inc.g(), c.degree()).first;
            it->second.add(key.slots, key.target, v);
        }
    for (const auto& [m, chain] : by_monomial)
        if (!inc.kappa11_normality_test(chain)) return false;
    return true;
}

Analysis analyze(const Frame& frame)
{
    const int l = frame.l();
    require_supported(l);
    Analysis out;
    out.l = l;
    Coframe theta = dual_coframe(frame);
    out.f = structure_functions(frame, theta);
    solve_degree1(out.f, out.connection);
    solve_degree2(frame, out.f, out.connection);
    out.curvature.P = tensor_P(out.f, out.connection.A);
    out.curvature.Q = tensor_Q(l, out.connection.A, out.connection.C);
    tensors_RST(frame, out.f, out.connection, out.curvature);
    out.flat = out.curvature.P.is_zero();
    out.kappa11_deg2_zero = out.curvature.Q.is_zero() && out.curvature.T.is_zero();
    out.verdict = out.kappa11_deg2_zero ? ExtensionVerdict::NormalAtComputedOrder : ExtensionVerdict::ObstructedByT;
    return out;
}

}  // namespace freedist
