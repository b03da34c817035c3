#pragma once

#include <vector>

#include "quasiq/gellmann.hpp"
#include "quasiq/state.hpp"

namespace quasiq {

// Real expansion coefficients of a state in the tensor-product basis built
// from the per-subsystem Hermitian bases, identity component included. For a
// valid state the component at the all-identity index is 1/sqrt(prod dims)
// and the squared norm equals the purity.
class ExpandedCoherenceVector {
public:
    ExpandedCoherenceVector(std::vector<int> dims, RealVector data);

    const std::vector<int>& dims() const noexcept { return dims_; }
    const RealVector& data() const noexcept { return data_; }
    long size() const noexcept { return data_.size(); }

private:
    std::vector<int> dims_;
    RealVector data_;
};

// Row-major flattening of per-subsystem basis indices; subsystem 0 is the
// most significant digit and each digit ranges over [0, dims[k]^2).
int flatten_index(const std::vector<int>& dims, const std::vector<int>& multi);
std::vector<int> unflatten_index(const std::vector<int>& dims, int flat);

// Tensor-product basis elements in flat order, cached per dims. The reference
// stays valid for the process lifetime. Thread-safe.
const std::vector<ComplexMatrix>& product_basis(const std::vector<int>& dims);

ExpandedCoherenceVector encode(const DensityMatrix& rho);

// Reconstruction. Hermiticity and unit trace are always verified; positivity
// only when strict is set, because arbitrary coefficient vectors of the right
// normalization need not describe a physical state.
DensityMatrix decode(const ExpandedCoherenceVector& v, const Tolerances& tol = {},
                     bool strict = false);

} // namespace quasiq
