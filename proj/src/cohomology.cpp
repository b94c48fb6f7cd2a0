#include "freedist/cohomology.hpp"

#include "freedist/linalg.hpp"

namespace freedist {

HarmonicSpace harmonic_space(const std::shared_ptr<const GradedAlgebra>& g, int k, int h)
{
    if (k < 1 || k > 2) throw Unsupported("harmonic spaces are computed for k = 1, 2");
    HarmonicSpace out{g->l(), k, h, 0, {}};
    std::vector<ChainKey> columns;
    for (const ChainKey& key : chain_basis(*g, k)) {
        int hk = g->grade(key.target);
        for (std::size_t s : key.slots) hk += g->grade(s);
        if (hk == h) columns.push_back(key);
    }
    out.chain_dimension = columns.size();
    // Rows of d and d* keyed by their output basis chains.
    std::map<ChainKey, SparseRow> d_rows;
    std::map<ChainKey, SparseRow> s_rows;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        ScalarChain b(g, k);
        b.add(columns[c].slots, columns[c].target, ExactScalar(1));
        const ScalarChain db = differential(b);
        const ScalarChain sb = codifferential(b);
        for (const auto& [key, v] : db.terms()) d_rows[key][c] = v;
        for (const auto& [key, v] : sb.terms()) s_rows[key][c] = v;
    }
    std::vector<SparseRow> rows;
    for (auto& [key, r] : d_rows) rows.push_back(std::move(r));
    for (auto& [key, r] : s_rows) rows.push_back(std::move(r));
    for (const SparseRow& v : kernel_basis(rows, columns.size())) {
        ScalarChain chain(g, k);
        for (const auto& [c, x] : v) chain.add(columns[c].slots, columns[c].target, x);
        out.basis.push_back(std::move(chain));
    }
    return out;
}

HarmonicSpace harmonic_space(int l, int k, int h)
{
    return harmonic_space(GradedAlgebra::create(AlgebraKind::B, l), k, h);
}

std::vector<std::pair<int, std::size_t>> harmonic_scan(int l, int k, int h_min, int h_max)
{
    auto g = GradedAlgebra::create(AlgebraKind::B, l);
    std::vector<std::pair<int, std::size_t>> out;
    for (int h = h_min; h <= h_max; ++h) out.emplace_back(h, harmonic_space(g, k, h).dimension());
    return out;
}

}  // namespace freedist
