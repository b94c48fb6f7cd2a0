#pragma once

#include "freedist/polynomial.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace freedist {

// Sparse polynomial tensor over 1-based indices.  Declared index pairs are
// antisymmetric ([kj] = -[jk]); with pair_swap the last two pairs are also
// exchanged antisymmetrically.  Only canonical, nonzero entries are stored.
class Tensor {
public:
    using Index = std::vector<int>;

    Tensor() = default;
    Tensor(int rank, std::vector<std::pair<int, int>> antisymmetric = {}, bool pair_swap = false)
        : rank_(rank), antisymmetric_(std::move(antisymmetric)), pair_swap_(pair_swap)
    {
    }

    int rank() const { return rank_; }
    const std::map<Index, Polynomial>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Polynomial operator()(const Index& idx) const;
    void add(const Index& idx, const Polynomial& value);
    void set(const Index& idx, const Polynomial& value);

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.entries_ == b.entries_; }

private:
    // Canonical index and sign, or nullopt when the entry is forced to zero.
    std::optional<std::pair<Index, int>> canonical(Index idx) const;

    int rank_ = 0;
    std::vector<std::pair<int, int>> antisymmetric_;
    bool pair_swap_ = false;
    std::map<Index, Polynomial> entries_;
};

}  // namespace freedist
