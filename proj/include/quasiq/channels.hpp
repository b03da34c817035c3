#pragma once

#include <cstdint>
#include <vector>

#include "quasiq/state.hpp"

namespace quasiq {

// Product unitary acting factor-by-factor on the subsystems.
class LocalUnitary {
public:
    LocalUnitary(std::vector<int> dims, std::vector<ComplexMatrix> factors);

    const std::vector<int>& dims() const noexcept { return dims_; }
    const std::vector<ComplexMatrix>& factors() const noexcept { return factors_; }
    ComplexMatrix full_matrix() const;

private:
    std::vector<int> dims_;
    std::vector<ComplexMatrix> factors_;
};

// Product channel given by one Kraus list per subsystem. Construction checks
// per-subsystem completeness (sum L'L = I within 1e-9). The channel counts as
// a generalized measurement in the sense used here when every Kraus operator
// is normal ([L, L'] = 0 within 1e-9).
class LocalKrausChannel {
public:
    LocalKrausChannel(std::vector<int> dims, std::vector<std::vector<ComplexMatrix>> factors);

    const std::vector<int>& dims() const noexcept { return dims_; }
    const std::vector<std::vector<ComplexMatrix>>& factors() const noexcept { return factors_; }
    bool is_povm() const noexcept { return povm_; }

private:
    std::vector<int> dims_;
    std::vector<std::vector<ComplexMatrix>> factors_;
    bool povm_ = false;
};

// Pure diagnosis of a per-subsystem Kraus family; never throws.
struct PovmDiagnosis {
    std::vector<double> completeness_defect;          // per subsystem
    std::vector<std::vector<double>> normality_defect; // per subsystem, per operator
    double max_completeness_defect = 0.0;
    double max_normality_defect = 0.0;
    bool complete = false; // within 1e-9
    bool povm = false;     // complete and all operators normal within 1e-9
};

PovmDiagnosis validate_povm(const std::vector<int>& dims,
                            const std::vector<std::vector<ComplexMatrix>>& factors);
PovmDiagnosis validate_povm(const LocalKrausChannel& ch);

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const LocalUnitary& u);
DensityMatrix apply_local_kraus(const DensityMatrix& rho, const LocalKrausChannel& ch);

// The channel's real matrix on expansion coefficients, built column by column
// by pushing each product-basis element through the channel. Trace
// preservation forces the first row to (1, 0, ..., 0); the first column is
// unconstrained for general channels and collapses to the same pattern
// exactly when the channel is unital.
struct CoherenceSuperoperator {
    std::vector<int> dims;
    Eigen::MatrixXd matrix;
};

CoherenceSuperoperator coherence_superoperator(const LocalUnitary& u);
CoherenceSuperoperator coherence_superoperator(const LocalKrausChannel& ch);

// Haar-distributed product unitary: per-factor complex Gaussian matrix,
// orthonormalized by QR with the phases of the triangular diagonal fixed.
LocalUnitary random_local_unitary(const std::vector<int>& dims, std::uint64_t seed);

// lambda-mixture of a rotated projective measurement with the identity
// channel: operators sqrt(lambda) V P_i V' for each level plus
// sqrt(1-lambda) I. Complete for every lambda in [0,1]; all operators are
// Hermitian, hence normal.
LocalKrausChannel projective_mixture_povm(int dim, const ComplexMatrix& v, double lambda);

// The above with Haar V and uniform lambda, on a single subsystem.
LocalKrausChannel random_povm(int dim, std::uint64_t seed);

// Independent random POVM factors on every subsystem.
LocalKrausChannel random_local_povm(const std::vector<int>& dims, std::uint64_t seed);

} // namespace quasiq
