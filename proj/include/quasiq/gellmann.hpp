#pragma once

#include <utility>
#include <vector>

#include "quasiq/state.hpp"

namespace quasiq {

// Orthonormal Hermitian basis of the N x N matrices under the trace inner
// product: the scaled identity followed by the symmetric, antisymmetric and
// diagonal traceless families.
//
// Flat ordering for dimension N (indices 0 .. N^2-1):
//   0                          identity / sqrt(N)
//   1 .. N(N-1)/2              symmetric (i,j) pairs, lexicographic
//   N(N-1)/2+1 .. N(N-1)      antisymmetric (i,j) pairs, lexicographic
//   N(N-1)+1 .. N^2-1          diagonal, level p = 2 .. N
// Pair labels (i,j) and levels p are 1-based: (1,2), (1,3), ..., (N-1,N).
enum class BasisKind { Identity, Symmetric, Antisymmetric, Diagonal };

class BasisIndex {
public:
    static BasisIndex from_flat(int dim, int flat);

    int dim() const noexcept { return dim_; }
    int flat() const noexcept { return flat_; }
    BasisKind kind() const;
    // (i,j) for the symmetric/antisymmetric families
    std::pair<int, int> pair() const;
    // p for the diagonal family
    int level() const;

private:
    BasisIndex(int dim, int flat) : dim_(dim), flat_(flat) {}
    int dim_;
    int flat_;
};

ComplexMatrix basis_element(const BasisIndex& idx);

// All N^2 basis elements in flat order. Cached per dimension; the returned
// reference stays valid for the process lifetime. Thread-safe.
const std::vector<ComplexMatrix>& basis_list(int dim);

} // namespace quasiq
