#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quasiq/state.hpp"

namespace quasiq {

// n-qubit |GHZ> = (|0...0> + |1...1>)/sqrt(2), as a density matrix. n >= 2.
DensityMatrix ghz(int qubits);

// Two-qubit Werner family rho(phi) = I/4 - (2 phi + 1)/12 * sum_k sigma_k (x) sigma_k,
// phi in [-1, 1]. phi = 1 is the singlet projector, phi = -1/2 the completely
// mixed state.
DensityMatrix werner(double phi);

// I / prod(dims) on the given layout.
DensityMatrix completely_mixed(const std::vector<int>& dims);

// Haar-random pure state on the layout; deterministic in the seed.
DensityMatrix random_pure(const std::vector<int>& dims, std::uint64_t seed);

// Random rank-`rank` mixed state: normalized Gram accumulation of `rank`
// independent Gaussian vectors. rank in [1, total dimension].
DensityMatrix random_density(const std::vector<int>& dims, int rank, std::uint64_t seed);

// A convex mixture of product states together with the ingredients that built
// it, so callers can certify separability by reassembly.
struct SeparableEnsemble {
    std::vector<int> dims;
    std::vector<double> weights;                          // one per term, sums to 1
    std::vector<std::vector<Eigen::VectorXcd>> factors;   // [term][subsystem], unit vectors

    DensityMatrix assemble() const;
};

std::pair<DensityMatrix, SeparableEnsemble>
random_separable(const std::vector<int>& dims, int terms, std::uint64_t seed);

} // namespace quasiq
