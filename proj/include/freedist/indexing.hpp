#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace freedist {

// Index bookkeeping for the l singles and l(l-1)/2 pairs [jk], j<k, 1-based.
// Pairs are ordered lexicographically: [12],[13],...,[1l],[23],...
class PairIndexer {
public:
    explicit PairIndexer(int l);

    int l() const { return l_; }
    std::size_t count() const { return pairs_.size(); }
    std::size_t index(int j, int k) const;  // requires j < k
    std::pair<int, int> pair(std::size_t p) const { return pairs_[p]; }

    // Antisymmetric extension: [kj] = -[jk]; nullopt when j == k.
    struct Signed {
        std::size_t index;
        int sign;
    };
    std::optional<Signed> signed_index(int j, int k) const;

private:
    int l_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<std::size_t>> table_;
};

// Position of a frame or coframe element: singles 0..l-1, then pairs.
inline std::size_t single_slot(int i) { return static_cast<std::size_t>(i - 1); }

}  // namespace freedist
