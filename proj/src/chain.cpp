#include "freedist/chain.hpp"

namespace freedist {
namespace {

// Sorts the dual slots of the arguments; returns sign 0 on a repeated slot.
std::pair<std::vector<std::size_t>, int> sorted_duals(const GradedAlgebra& g, const std::vector<std::size_t>& args)
{
    std::vector<std::size_t> slots;
    for (std::size_t a : args) slots.push_back(g.dual(a));
    int sign = 1;
    for (std::size_t a = 1; a < slots.size(); ++a)
        for (std::size_t b = a; b > 0 && slots[b - 1] >= slots[b]; --b) {
            if (slots[b - 1] == slots[b]) return {{}, 0};
            std::swap(slots[b - 1], slots[b]);
            sign = -sign;
        }
    return {slots, sign};
}

// Chain regrouped by slot tuple for repeated evaluation.
using Grouped = std::map<std::vector<std::size_t>, Coefficients>;

Grouped group(const ScalarChain& c)
{
    Grouped out;
    for (const auto& [key, v] : c.terms()) out[key.slots][key.target] += v;
    return out;
}

Coefficients evaluate_grouped(const GradedAlgebra& g, const Grouped& grouped, const std::vector<std::size_t>& args)
{
    auto [slots, sign] = sorted_duals(g, args);
    if (sign == 0) return {};
    auto it = grouped.find(slots);
    if (it == grouped.end()) return {};
    Coefficients out;
    add_scaled(out, it->second, ExactScalar(sign));
    return out;
}

}  // namespace

Coefficients evaluate_chain(const ScalarChain& c, const std::vector<std::size_t>& args)
{
    if (static_cast<int>(args.size()) != c.degree()) throw Error("chain evaluated on wrong number of arguments");
    for (std::size_t a : args)
        if (c.g().grade(a) >= 0) throw Error("chain evaluated outside g-");
    return evaluate_grouped(c.g(), group(c), args);
}

ScalarChain differential(const ScalarChain& c)
{
    const GradedAlgebra& g = c.g();
    const int k = c.degree();
    ScalarChain out(c.algebra(), k + 1);
    Grouped grouped = group(c);
    const auto& neg = g.negative();
    // Increasing tuples of g- basis elements of length k+1.
    std::vector<std::size_t> pick(static_cast<std::size_t>(k + 1));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == pick.size()) {
            std::vector<std::size_t> v;
            for (std::size_t p : pick) v.push_back(neg[p]);
            Coefficients value;
            for (std::size_t i = 0; i < v.size(); ++i) {
                std::vector<std::size_t> rest;
                for (std::size_t m = 0; m < v.size(); ++m)
                    if (m != i) rest.push_back(v[m]);
                Coefficients inner = evaluate_grouped(g, grouped, rest);
                if (inner.empty()) continue;
                Coefficients br = g.bracket(Coefficients{{v[i], ExactScalar(1)}}, inner);
                add_scaled(value, br, ExactScalar(i % 2 == 0 ? -1 : 1));
            }
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j) {
                    std::vector<std::size_t> rest;
                    for (std::size_t m = 0; m < v.size(); ++m)
                        if (m != i && m != j) rest.push_back(v[m]);
                    ExactScalar sign((i + j) % 2 == 0 ? -1 : 1);
                    for (const auto& [t, w] : g.bracket(v[i], v[j])) {
                        std::vector<std::size_t> args{t};
                        args.insert(args.end(), rest.begin(), rest.end());
                        add_scaled(value, evaluate_grouped(g, grouped, args), sign * w);
                    }
                }
            if (value.empty()) return;
            auto [slots, sign] = sorted_duals(g, v);
            for (const auto& [t, w] : value) out.add(slots, t, w * ExactScalar(sign));
            return;
        }
        for (std::size_t s = start; s < neg.size(); ++s) {
            pick[pos] = s;
            rec(pos + 1, s + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<ChainKey> chain_basis(const GradedAlgebra& g, int degree)
{
    std::vector<ChainKey> out;
    const auto& pos = g.positive();
    std::vector<std::size_t> pick(static_cast<std::size_t>(degree));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t d, std::size_t start) {
        if (d == pick.size()) {
            std::vector<std::size_t> slots;
            for (std::size_t p : pick) slots.push_back(pos[p]);
            for (std::size_t t = 0; t < g.dimension(); ++t) out.push_back({slots, t});
            return;
        }
        for (std::size_t s = start; s < pos.size(); ++s) {
            pick[d] = s;
            rec(d + 1, s + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace freedist
