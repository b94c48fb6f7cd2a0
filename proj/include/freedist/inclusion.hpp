#pragma once

#include "freedist/chain.hpp"

#include <memory>

namespace freedist {

// The embedding alpha: so(l,l+1) -> so(l+1,l+1) and the induced
// phi: p+ -> p~+ (phi(E^[kl]) = E~^[kl], phi(E^l) = sqrt2 E~^[0l]).
class Inclusion {
public:
    explicit Inclusion(int l);

    int l() const { return g_->l(); }
    const std::shared_ptr<const GradedAlgebra>& g() const { return g_; }
    const std::shared_ptr<const GradedAlgebra>& gt() const { return gt_; }

    AlgebraElement alpha(const AlgebraElement& x) const;  // matrix map
    const Coefficients& alpha(std::size_t a) const { return alpha_[a]; }
    Coefficients alpha(const Coefficients& x) const;
    const Coefficients& phi(std::size_t a) const;  // a in p+

    // Delta E~^i = E~^[0i] - E~^i_0 and Delta E~_i = E~_[0i] - E~^0_i.
    Coefficients delta_upper(int i) const;
    Coefficients delta_lower(int i) const;

    // Lambda^k phi on slots, alpha on the value.
    ScalarChain phi_chain(const ScalarChain& c) const;

    // [d*, phi](c) = d*(phi(c)) - phi(d*(c)) on scalar 2-chains.
    ScalarChain commutator_operator(const ScalarChain& c) const;

    // Same operator from its block formulas:
    //   E^[ij]^E^[kl] (x) X -> 0
    //   E^i^E^[jk] (x) X    -> -1/sqrt2 E~^[jk] (x) [Delta E~^i, alpha X]
    //   E^i^E^j (x) X       -> E~^[ij] (x) alpha X + E~^[0i] (x) [Delta E~^j, alpha X] - E~^[0j] (x) [Delta E~^i, alpha X]
    ScalarChain commutator_closed_form(const ScalarChain& c) const;

    // True iff [d*, phi] annihilates c; polynomial coefficients are not accepted here.
    bool kappa11_normality_test(const ScalarChain& c) const;

private:
    std::shared_ptr<const GradedAlgebra> g_;
    std::shared_ptr<const GradedAlgebra> gt_;
    std::vector<Coefficients> alpha_;
    std::vector<Coefficients> phi_;
};

}  // namespace freedist
