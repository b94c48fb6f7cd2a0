#pragma once

#include "freedist/inclusion.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace freedist {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Self-check battery of the graded algebra layer; every comparison is exact.
std::vector<CheckResult> check_basis(const GradedAlgebra& g);
std::vector<CheckResult> check_trace_form(const GradedAlgebra& g);
CheckResult check_alpha_homomorphism(const Inclusion& inc);
CheckResult check_phi_duality(const Inclusion& inc);
std::vector<CheckResult> check_delta_relations(const Inclusion& inc);
std::vector<CheckResult> check_closed_forms(const Inclusion& inc);
std::vector<CheckResult> check_operator_kernel(const Inclusion& inc);
std::vector<CheckResult> check_complex_squares(const GradedAlgebra& g);

std::vector<CheckResult> algebra_battery(int l);

// Random chains against kappa11_normality_test: chains with a nonzero
// Lambda^2 g1 part must fail it; chains in the g1^g2 + g2^g2 blocks that satisfy
// the curvature side conditions must pass it.
struct Kappa11Suite {
    std::size_t trials = 0;
    std::size_t rejected_with_kappa11 = 0;
    std::size_t accepted_with_side_conditions = 0;
    std::size_t side_condition_dimension = 0;
    bool passed() const
    {
        return trials > 0 && rejected_with_kappa11 == trials && accepted_with_side_conditions == trials &&
               side_condition_dimension > 0;
    }
};

Kappa11Suite kappa11_property_suite(const Inclusion& inc, std::size_t trials, std::uint64_t seed);

}  // namespace freedist
