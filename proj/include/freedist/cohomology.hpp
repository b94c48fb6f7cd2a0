#pragma once

#include "freedist/chain.hpp"

#include <utility>
#include <vector>

namespace freedist {

// Basis of ker d ∩ ker d* among k-chains of homogeneity h.
struct HarmonicSpace {
    int l = 0;
    int k = 0;
    int h = 0;
    std::size_t chain_dimension = 0;  // size of the homogeneous chain space
    std::vector<ScalarChain> basis;
    std::size_t dimension() const { return basis.size(); }
};

HarmonicSpace harmonic_space(const std::shared_ptr<const GradedAlgebra>& g, int k, int h);
HarmonicSpace harmonic_space(int l, int k, int h);

// (h, dimension) for harmonic k-chains, h in [h_min, h_max].
std::vector<std::pair<int, std::size_t>> harmonic_scan(int l, int k, int h_min, int h_max);

}  // namespace freedist
