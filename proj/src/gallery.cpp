#include "quasiq/gallery.hpp"

#include <cmath>
#include <stdexcept>

#include "quasiq/rng.hpp"

namespace quasiq {

namespace {

ComplexMatrix pauli(int which) {
    ComplexMatrix m(2, 2);
    switch (which) {
        case 0: m << 0, 1, 1, 0; break;
        case 1: m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0); break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

Eigen::VectorXcd normalized_gaussian(int dim, std::mt19937_64& gen) {
    Eigen::VectorXcd v = rng::gaussian_vector(dim, gen);
    const double norm = v.norm();
    if (norm == 0.0) throw std::runtime_error("degenerate random draw");
    return v / norm;
}

} // namespace

DensityMatrix ghz(int qubits) {
    if (qubits < 2) throw std::invalid_argument("GHZ needs at least two qubits");
    const std::vector<int> dims(static_cast<std::size_t>(qubits), 2);
    const long total = 1L << qubits;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(total);
    const double amp = 1.0 / std::sqrt(2.0);
    psi(0) = amp;
    psi(total - 1) = amp;
    return validate_density(psi * psi.adjoint(), dims);
}

DensityMatrix werner(double phi) {
    if (!(phi >= -1.0 && phi <= 1.0))
        throw std::invalid_argument("Werner parameter outside [-1, 1]");
    ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
    const double c = (2.0 * phi + 1.0) / 12.0;
    for (int k = 0; k < 3; ++k) {
        const ComplexMatrix s = pauli(k);
        m -= c * kron(s, s);
    }
    return validate_density(m, {2, 2});
}

DensityMatrix completely_mixed(const std::vector<int>& dims) {
    const long total = total_dimension(dims);
    return validate_density(ComplexMatrix::Identity(total, total) / static_cast<double>(total),
                            dims);
}

DensityMatrix random_pure(const std::vector<int>& dims, std::uint64_t seed) {
    const long total = total_dimension(dims);
    std::mt19937_64 gen = rng::engine(seed, 0);
    const Eigen::VectorXcd psi = normalized_gaussian(static_cast<int>(total), gen);
    return validate_density(psi * psi.adjoint(), dims);
}

DensityMatrix random_density(const std::vector<int>& dims, int rank, std::uint64_t seed) {
    const long total = total_dimension(dims);
    if (rank < 1 || rank > total)
        throw std::invalid_argument("rank outside [1, total dimension]");
    ComplexMatrix acc = ComplexMatrix::Zero(total, total);
    for (int i = 0; i < rank; ++i) {
        std::mt19937_64 gen = rng::engine(seed, static_cast<std::uint64_t>(i));
        const Eigen::VectorXcd v = rng::gaussian_vector(static_cast<int>(total), gen);
        acc += v * v.adjoint();
    }
    acc /= acc.trace().real();
    return validate_density(acc, dims);
}

DensityMatrix SeparableEnsemble::assemble() const {
    const long total = total_dimension(dims);
    ComplexMatrix acc = ComplexMatrix::Zero(total, total);
    for (std::size_t t = 0; t < weights.size(); ++t) {
        ComplexMatrix psi = factors[t][0];
        for (std::size_t k = 1; k < factors[t].size(); ++k) psi = kron(psi, factors[t][k]);
        acc += weights[t] * (psi * psi.adjoint());
    }
    return validate_density(acc, dims);
}

std::pair<DensityMatrix, SeparableEnsemble>
random_separable(const std::vector<int>& dims, int terms, std::uint64_t seed) {
    if (terms < 1) throw std::invalid_argument("need at least one product term");

    SeparableEnsemble ens;
    ens.dims = dims;
    {
        std::mt19937_64 gen = rng::engine(seed, rng::tag("weights"));
        ens.weights = rng::simplex_weights(terms, gen);
    }
    for (int t = 0; t < terms; ++t) {
        std::vector<Eigen::VectorXcd> row;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            std::mt19937_64 gen =
                rng::engine(seed, rng::derive(rng::tag("factor"), static_cast<std::uint64_t>(t),
                                              static_cast<std::uint64_t>(k)));
            row.push_back(normalized_gaussian(dims[k], gen));
        }
        ens.factors.push_back(std::move(row));
    }
    DensityMatrix rho = ens.assemble();
    return {std::move(rho), std::move(ens)};
}

} // namespace quasiq
