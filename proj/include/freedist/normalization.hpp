#pragma once

#include "freedist/frame.hpp"
#include "freedist/inclusion.hpp"
#include "freedist/tensor.hpp"

#include <string>

namespace freedist {

// Normalization unknowns.  The connection reads, modulo homogeneity >= 3,
//   omega^i   = theta^i + C^i_[jk] theta^[jk],   omega^[jk] = theta^[jk],
//   omega^i_j = A^i_{kj} omega^k + E^i_{j[kl]} omega^[kl],   omega_i = F_{ij} omega^j.
struct ConnectionData {
    Tensor A{3};                 // A^i_{jk}
    Tensor C{3, {{1, 2}}};       // C^i_[jk] = -(A^i_{jk} - A^i_{kj})
    Tensor E{4, {{2, 3}}};       // E^i_{j[kl]}
    Tensor F{2};                 // F_{ij} = F_{ji}
};

struct Curvature {
    Tensor P{5, {{0, 1}, {3, 4}}};                  // P^[ij]_{r[st]}
    Tensor Q{3, {{1, 2}}};                          // Q^i_[jk]
    Tensor R{6, {{0, 1}, {2, 3}, {4, 5}}, true};    // R^[ab]_{[kl][rs]}
    Tensor S{4, {{2, 3}}};                          // S^i_{j[kl]}
    Tensor T{4, {{2, 3}}};                          // T^i_{j[kl]}
};

enum class ExtensionVerdict { NormalAtComputedOrder, ObstructedByT };
std::string to_string(ExtensionVerdict v);

struct Analysis {
    int l = 0;
    StructureFunctions f{0};
    ConnectionData connection;
    Curvature curvature;
    bool flat = false;
    bool kappa11_deg2_zero = false;
    ExtensionVerdict verdict = ExtensionVerdict::NormalAtComputedOrder;
};

// P from the structure functions and A.
Tensor tensor_P(const StructureFunctions& f, const Tensor& A);
// Q^i_[jk] = C^i_[jk] + A^i_{jk} - A^i_{kj}.
Tensor tensor_Q(int l, const Tensor& A, const Tensor& C);
// R, S, T from the frame, structure functions and connection data.
void tensors_RST(const Frame& frame, const StructureFunctions& f, const ConnectionData& data, Curvature& out);

// Degree one: A with sum_i A^i_{ik} = 0 and P totally trace-free; sets A, C.
// Throws Unsupported for l < 4.
void solve_degree1(const StructureFunctions& f, ConnectionData& data);
// Degree two: E and symmetric F from the normality conditions
//   sum_i S^i_{a[ib]} + sum_i T^i_{b[ia]} = 0,
//   sum_x R^[xd]_{[P][xb]} - S^d_{b[P]} + T^d_{b[P]} = 0.
void solve_degree2(const Frame& frame, const StructureFunctions& f, ConnectionData& data);

// Residuals of the two degree-two normality conditions, in equation order.
std::vector<Polynomial> degree2_residuals(int l, const Curvature& c);

// Homogeneity 1 and 2 part of the curvature function as a chain in Lambda^2 p+ (x) g:
//   P E^r^E^V (x) E_U + Q E^i^E^j (x) E_m - R E^P^E^Q (x) E_U - S E^j^E^P (x) E_i + T E^k^E^l (x) E^j_i
Chain<Polynomial> curvature_chain(const std::shared_ptr<const GradedAlgebra>& g, const Curvature& c);

// [d*, phi] applied coefficientwise to a polynomial chain.
bool kappa11_normality(const Inclusion& inc, const Chain<Polynomial>& c);

// Full pipeline on a built frame.  Requires l >= 4.
Analysis analyze(const Frame& frame);

}  // namespace freedist
