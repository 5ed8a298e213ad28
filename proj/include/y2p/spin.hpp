#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "y2p/matrix.hpp"

namespace y2p {

// Growing subspace kept in row echelon form; insertions reduce against the
// current rows with the mod-p kernels.
class SpanBasis {
public:
    SpanBasis(const FieldSpec& f, size_t dim);

    // reduce v against the basis; grow and return true when independent
    bool insert(RowVec v);
    bool contains(RowVec v) const;
    size_t size() const { return rows_.size(); }
    size_t dim() const { return dim_; }
    bool full() const { return rows_.size() == dim_; }
    Matrix as_matrix() const; // rows = basis

private:
    void reduce(RowVec& v) const;
    FieldSpec f_;
    size_t dim_;
    std::vector<RowVec> rows_;
    std::vector<size_t> pivots_; // entry index of the leading 1 per row
};

// Smallest subspace containing v and closed under every operator.
SpanBasis spin_closure(const std::vector<Matrix>& ops, const RowVec& v);

// Canonical projective representatives (leading coordinate 1), visited in a
// fixed order; fn returning false stops the walk.
void for_each_projective_point(const FieldSpec& f, size_t dim,
                               const std::function<bool(const RowVec&)>& fn);

enum class IrrVerdict {
    Irreducible,              // certified by exhaustive projective spinning
    IrreducibleProbabilistic, // seeded spins found nothing; flagged, not certified
    Reducible,                // witness subspace attached, verified invariant
};

struct IrrResult {
    IrrVerdict verdict;
    std::optional<Matrix> witness; // rows span a proper nonzero invariant subspace
    bool irreducible() const { return verdict != IrrVerdict::Reducible; }
};

struct SpinBudget {
    uint64_t exhaustive_points = 300000; // use exhaustion while q^dim stays below
    int random_spins = 100;              // per side (module and transpose)
};

// All vectors spin to the whole space <=> no proper nonzero invariant
// subspace.  Past the exhaustive budget: seeded random spins on the module
// and on the transpose module (a proper transpose-closure orthocomplements
// to a proper submodule).
IrrResult irreducibility(const std::vector<Matrix>& ops, uint64_t seed,
                         const SpinBudget& budget = {});

bool is_invariant_subspace(const std::vector<Matrix>& ops, const Matrix& rows);

RowVec random_nonzero_vector(const FieldSpec& f, size_t dim, std::mt19937_64& rng);

} // namespace y2p
