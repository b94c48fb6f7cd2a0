#pragma once

#include "freedist/forms.hpp"
#include "freedist/indexing.hpp"
#include "freedist/poly_matrix.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace freedist {

// Frame X_1..X_l, X_[jk] = -[X_j, X_k] (j < k); slots are singles then pairs.
class Frame {
public:
    Frame(std::vector<VectorField> distribution);

    int l() const { return indexer_.l(); }
    const Chart& chart() const { return chart_; }
    const PairIndexer& pairs() const { return indexer_; }
    std::size_t size() const { return fields_.size(); }

    const std::vector<VectorField>& fields() const { return fields_; }
    const VectorField& single(int i) const { return fields_[single_slot(i)]; }
    const VectorField& pair(int j, int k) const { return fields_[pair_slot(j, k)]; }
    std::size_t pair_slot(int j, int k) const { return static_cast<std::size_t>(l()) + indexer_.index(j, k); }

    // Rows are frame fields, columns coordinates.
    PolyMatrix matrix() const;

private:
    Chart chart_;
    PairIndexer indexer_;
    std::vector<VectorField> fields_;
};

// Unimodular: determinant a nonzero constant polynomial.
bool check_nondegenerate(const Frame& frame);

// Assembles and validates.  Determinant vanishing identically or at the base
// point throws DegenerateFrame; any other non-constant determinant throws
// UnsupportedFrame.  The base point defaults to the origin.
Frame build_frame(std::vector<VectorField> distribution, const std::map<Coordinate, ExactScalar>& base_point = {});

// Dual one-forms theta^a with theta^a(X_b) = delta^a_b, same slot order as the frame.
class Coframe {
public:
    explicit Coframe(std::vector<DifferentialForm> forms) : forms_(std::move(forms)) {}
    const std::vector<DifferentialForm>& forms() const { return forms_; }
    const DifferentialForm& operator[](std::size_t a) const { return forms_[a]; }
    std::size_t size() const { return forms_.size(); }

    // theta^a(v) for every a.
    std::vector<Polynomial> coordinates(const VectorField& v) const;

private:
    std::vector<DifferentialForm> forms_;
};

Coframe dual_coframe(const Frame& frame);

// f^a_{bc} = d theta^a(X_b, X_c) for b < c, with the mandated term
// theta^r ^ theta^s of d theta^[rs] stripped; single-single entries are not stored.
class StructureFunctions {
public:
    StructureFunctions(int l) : indexer_(l) {}

    int l() const { return indexer_.l(); }
    const PairIndexer& pairs() const { return indexer_; }

    // Antisymmetric accessor over frame slots; single-single pairs read as zero.
    Polynomial operator()(std::size_t a, std::size_t b, std::size_t c) const;
    void set(std::size_t a, std::size_t b, std::size_t c, const Polynomial& value);

    // f^a_{i[jk]} and f^a_{[jk][mn]} with antisymmetric extension of the pair indices.
    Polynomial single_pair(std::size_t a, int i, int j, int k) const;
    Polynomial pair_pair(std::size_t a, int j, int k, int m, int n) const;

    const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Polynomial>& entries() const { return entries_; }

private:
    PairIndexer indexer_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Polynomial> entries_;
};

StructureFunctions structure_functions(const Frame& frame, const Coframe& coframe);

}  // namespace freedist
