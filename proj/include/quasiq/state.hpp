#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "quasiq/errors.hpp"

namespace quasiq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Acceptance thresholds for state validation and picture cross-checks.
struct Tolerances {
    double herm = 1e-9;   // max |A - A'| entry
    double trace = 1e-9;  // |tr A - 1|
    double psd = 1e-9;    // admissible negative eigenvalue magnitude
    double eq = 1e-9;     // cross-picture agreement
};

long total_dimension(const std::vector<int>& dims);

// A density matrix together with its subsystem factorization.
// Instances are produced by validate_density (full checks) or, for callers
// that guarantee or deliberately skip the numeric checks, by unchecked()
// (shape check only).
class DensityMatrix {
public:
    static DensityMatrix unchecked(std::vector<int> dims, ComplexMatrix m);

    const std::vector<int>& dims() const noexcept { return dims_; }
    int subsystem_count() const noexcept { return static_cast<int>(dims_.size()); }
    long total_dim() const noexcept { return mat_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return mat_; }

private:
    DensityMatrix(std::vector<int> dims, ComplexMatrix m)
        : dims_(std::move(dims)), mat_(std::move(m)) {}

    std::vector<int> dims_;
    ComplexMatrix mat_;

    friend DensityMatrix validate_density(const ComplexMatrix&, const std::vector<int>&,
                                          const Tolerances&);
};

// Checks, in order: shape against dims, Hermiticity, unit trace, positive
// semidefiniteness. Throws ValidationError with the matching defect kind.
DensityMatrix validate_density(const ComplexMatrix& m, const std::vector<int>& dims,
                               const Tolerances& tol = {});

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Raw partial-trace engine: m lives on the full tensor space described by dims,
// keep is an ascending 0-based subsystem subset. No validation of the result.
ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, const std::vector<int>& dims,
                                   const std::vector<int>& keep);

// Trace out a single subsystem / re-insert an identity factor at one slot.
// The two are used to apply one-sided superoperators without touching the
// rest. Tracing out the only subsystem of a single-factor layout yields the
// 1x1 scalar trace, and inserting into it rebuilds trace * identity.
ComplexMatrix trace_out_subsystem(const ComplexMatrix& m, const std::vector<int>& dims, int k);
ComplexMatrix insert_identity_factor(const ComplexMatrix& a, const std::vector<int>& dims, int k);

// Reduced state over the kept subsystems (ascending original order), revalidated.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

double purity(const DensityMatrix& rho);

} // namespace quasiq
