#include "freedist/tensor.hpp"

#include "freedist/errors.hpp"

namespace freedist {

std::optional<std::pair<Tensor::Index, int>> Tensor::canonical(Index idx) const
{
    if (static_cast<int>(idx.size()) != rank_) throw Error("tensor index of wrong rank");
    int sign = 1;
    for (const auto& [a, b] : antisymmetric_) {
        if (idx[a] == idx[b]) return std::nullopt;
        if (idx[a] > idx[b]) {
            std::swap(idx[a], idx[b]);
            sign = -sign;
        }
    }
    if (pair_swap_) {
        const std::size_t n = idx.size();
        auto p = std::make_pair(idx[n - 4], idx[n - 3]);
        auto q = std::make_pair(idx[n - 2], idx[n - 1]);
        if (p == q) return std::nullopt;
        if (p > q) {
            idx[n - 4] = q.first;
            idx[n - 3] = q.second;
            idx[n - 2] = p.first;
            idx[n - 1] = p.second;
            sign = -sign;
        }
    }
    return std::make_pair(std::move(idx), sign);
}

Polynomial Tensor::operator()(const Index& idx) const
{
    auto c = canonical(idx);
    if (!c) return Polynomial();
    auto it = entries_.find(c->first);
    if (it == entries_.end()) return Polynomial();
    return c->second > 0 ? it->second : -it->second;
}

void Tensor::add(const Index& idx, const Polynomial& value)
{
    if (value.is_zero()) return;
    auto c = canonical(idx);
    if (!c) throw InvariantViolation("nonzero value on a vanishing tensor entry");
    auto [it, fresh] = entries_.emplace(c->first, Polynomial());
    if (c->second > 0)
        it->second += value;
    else
        it->second -= value;
    if (it->second.is_zero()) entries_.erase(it);
}

void Tensor::set(const Index& idx, const Polynomial& value)
{
    auto c = canonical(idx);
    if (!c) {
        if (!value.is_zero()) throw InvariantViolation("nonzero value on a vanishing tensor entry");
        return;
    }
    if (value.is_zero()) {
        entries_.erase(c->first);
        return;
    }
    entries_[c->first] = c->second > 0 ? value : -value;
}

}  // namespace freedist
