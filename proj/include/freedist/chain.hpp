#pragma once

#include "freedist/algebra.hpp"
#include "freedist/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace freedist {

// Basis term xi_1 ^ ... ^ xi_k (x) X; slots are strictly increasing p+ indices.
struct ChainKey {
    std::vector<std::size_t> slots;
    std::size_t target = 0;
    friend bool operator==(const ChainKey&, const ChainKey&) = default;
    friend auto operator<=>(const ChainKey&, const ChainKey&) = default;
};

// Element of Lambda^k p+ (x) g with coefficients in Coef (ExactScalar or Polynomial).
template <class Coef>
class Chain {
public:
    Chain() = default;
    Chain(std::shared_ptr<const GradedAlgebra> algebra, int degree) : algebra_(std::move(algebra)), degree_(degree) {}

    const std::shared_ptr<const GradedAlgebra>& algebra() const { return algebra_; }
    const GradedAlgebra& g() const { return *algebra_; }
    int degree() const { return degree_; }
    const std::map<ChainKey, Coef>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds coef * xi_{s_1} ^ ... ^ xi_{s_k} (x) E_target for slots in any order.
    void add(std::vector<std::size_t> slots, std::size_t target, const Coef& coef)
    {
        if (static_cast<int>(slots.size()) != degree_) throw Error("chain degree mismatch");
        if (is_zero_coef(coef)) return;
        for (std::size_t s : slots)
            if (algebra_->grade(s) <= 0) throw Error("chain slot outside p+");
        int sign = 1;
        for (std::size_t a = 1; a < slots.size(); ++a)
            for (std::size_t b = a; b > 0 && slots[b - 1] >= slots[b]; --b) {
                if (slots[b - 1] == slots[b]) return;
                std::swap(slots[b - 1], slots[b]);
                sign = -sign;
            }
        ChainKey key{std::move(slots), target};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), sign > 0 ? coef : -coef);
            return;
        }
        if (sign > 0)
            it->second += coef;
        else
            it->second -= coef;
        if (is_zero_coef(it->second)) terms_.erase(it);
    }

    Coef coefficient(const ChainKey& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coef() : it->second;
    }

    int homogeneity(const ChainKey& key) const
    {
        int h = algebra_->grade(key.target);
        for (std::size_t s : key.slots) h += algebra_->grade(s);
        return h;
    }

    Chain filtered(const std::function<bool(const ChainKey&)>& keep) const
    {
        Chain out(algebra_, degree_);
        for (const auto& [k, c] : terms_)
            if (keep(k)) out.terms_.emplace(k, c);
        return out;
    }

    Chain homogeneous_part(int h) const
    {
        return filtered([&](const ChainKey& k) { return homogeneity(k) == h; });
    }

    Chain& operator+=(const Chain& o)
    {
        adopt(o);
        for (const auto& [k, c] : o.terms_) add(k.slots, k.target, c);
        return *this;
    }
    Chain& operator-=(const Chain& o)
    {
        adopt(o);
        for (const auto& [k, c] : o.terms_) add(k.slots, k.target, -c);
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const ExactScalar& s, const Chain& a)
    {
        Chain out(a.algebra_, a.degree_);
        if (s.is_zero()) return out;
        for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, c * s);
        return out;
    }
    friend bool operator==(const Chain& a, const Chain& b) { return a.degree_ == b.degree_ && a.terms_ == b.terms_; }

private:
    std::shared_ptr<const GradedAlgebra> algebra_;
    int degree_ = 0;
    std::map<ChainKey, Coef> terms_;

    static bool is_zero_coef(const Coef& c) { return c.is_zero(); }

    void adopt(const Chain& o)
    {
        if (!algebra_) {
            algebra_ = o.algebra_;
            degree_ = o.degree_;
        }
        if (o.algebra_ && (o.algebra_->kind() != algebra_->kind() || o.algebra_->l() != algebra_->l()))
            throw Error("chains over different algebras");
        if (o.degree_ != degree_ && !o.is_zero()) throw Error("chains of different degree");
    }
};

// Codifferential on Lambda^k p+ (x) g:
//   d*(Z_0 ^ ... ^ Z_{k-1} (x) X) = sum_i (-1)^{i+1} ..^Z_i^.. (x) [Z_i, X]
//                                 + sum_{i<j} (-1)^{i+j} [Z_i, Z_j] ^ ..^Z_i^..^Z_j^.. (x) X
// so for k = 2: Z_0 (x) [Z_1, X] - Z_1 (x) [Z_0, X] - [Z_0, Z_1] (x) X.
template <class Coef>
Chain<Coef> codifferential(const Chain<Coef>& c)
{
    if (c.degree() < 1) throw Error("codifferential of a 0-chain");
    const GradedAlgebra& g = c.g();
    Chain<Coef> out(c.algebra(), c.degree() - 1);
    for (const auto& [key, coef] : c.terms()) {
        const auto& z = key.slots;
        const std::size_t k = z.size();
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::size_t> rest;
            for (std::size_t m = 0; m < k; ++m)
                if (m != i) rest.push_back(z[m]);
            ExactScalar sign((i % 2 == 0) ? -1 : 1);
            for (const auto& [t, v] : g.bracket(z[i], key.target)) out.add(rest, t, coef * (sign * v));
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                std::vector<std::size_t> rest;
                for (std::size_t m = 0; m < k; ++m)
                    if (m != i && m != j) rest.push_back(z[m]);
                ExactScalar sign(((i + j) % 2 == 0) ? 1 : -1);
                for (const auto& [s, v] : g.bracket(z[i], z[j])) {
                    std::vector<std::size_t> slots{s};
                    slots.insert(slots.end(), rest.begin(), rest.end());
                    out.add(slots, key.target, coef * (sign * v));
                }
            }
    }
    return out;
}

using ScalarChain = Chain<ExactScalar>;

// Value of a scalar k-chain on g- basis elements (indices into the algebra basis).
Coefficients evaluate_chain(const ScalarChain& c, const std::vector<std::size_t>& args);

// Lie algebra differential d: Lambda^k p+ (x) g -> Lambda^{k+1} p+ (x) g, chains read
// as alternating maps on g- through the pairing:
//   (d phi)(X_0..X_k) = -sum_i (-1)^i [X_i, phi(..^X_i^..)]
//                       - sum_{i<j} (-1)^{i+j} phi([X_i, X_j], ..^X_i^..^X_j^..)
ScalarChain differential(const ScalarChain& c);

// Every basis chain of the given degree, optionally restricted to one homogeneity.
std::vector<ChainKey> chain_basis(const GradedAlgebra& g, int degree);

}  // namespace freedist
