#include "freedist/indexing.hpp"

#include "freedist/errors.hpp"

namespace freedist {

PairIndexer::PairIndexer(int l) : l_(l), table_(l + 1, std::vector<std::size_t>(l + 1, 0))
{
    for (int j = 1; j <= l; ++j)
        for (int k = j + 1; k <= l; ++k) {
            table_[j][k] = pairs_.size();
            pairs_.emplace_back(j, k);
        }
}

std::size_t PairIndexer::index(int j, int k) const
{
    if (j < 1 || k > l_ || j >= k) throw Error("pair index out of range");
    return table_[j][k];
}

std::optional<PairIndexer::Signed> PairIndexer::signed_index(int j, int k) const
{
    if (j == k) return std::nullopt;
    if (j < k) return Signed{index(j, k), 1};
    return Signed{index(k, j), -1};
}

}  // namespace freedist
