#include "quasiq/state.hpp"

#include <algorithm>
#include <sstream>

namespace quasiq {

namespace {

void check_dims(const std::vector<int>& dims) {
    if (dims.empty())
        throw ValidationError(ValidationDefect::DimensionMismatch, "empty subsystem list");
    for (int d : dims) {
        if (d < 2) {
            std::ostringstream os;
            os << "subsystem dimension " << d << " is below 2";
            throw ValidationError(ValidationDefect::DimensionMismatch, os.str());
        }
    }
}

// Mixed-radix offset table: offsets[i] is the flat row index of the i-th joint
// assignment of the listed subsystems, all remaining subsystem indices at zero.
std::vector<long> offset_table(const std::vector<int>& dims, const std::vector<int>& subsystems) {
    std::vector<long> strides(dims.size(), 1);
    for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
        strides[k] = strides[k + 1] * dims[k + 1];

    long count = 1;
    for (int s : subsystems) count *= dims[s];

    std::vector<long> offsets(count, 0);
    std::vector<int> digit(subsystems.size(), 0);
    for (long i = 0; i < count; ++i) {
        long off = 0;
        for (std::size_t j = 0; j < subsystems.size(); ++j)
            off += digit[j] * strides[subsystems[j]];
        offsets[i] = off;
        for (int j = static_cast<int>(subsystems.size()) - 1; j >= 0; --j) {
            if (++digit[j] < dims[subsystems[j]]) break;
            digit[j] = 0;
        }
    }
    return offsets;
}

} // namespace

long total_dimension(const std::vector<int>& dims) {
    check_dims(dims);
    long total = 1;
    for (int d : dims) total *= d;
    return total;
}

DensityMatrix DensityMatrix::unchecked(std::vector<int> dims, ComplexMatrix m) {
    check_dims(dims);
    long total = 1;
    for (int d : dims) total *= d;
    if (m.rows() != total || m.cols() != total) {
        std::ostringstream os;
        os << "matrix is " << m.rows() << "x" << m.cols() << " but subsystem dimensions need "
           << total << "x" << total;
        throw ValidationError(ValidationDefect::DimensionMismatch, os.str());
    }
    return DensityMatrix(std::move(dims), std::move(m));
}

DensityMatrix validate_density(const ComplexMatrix& m, const std::vector<int>& dims,
                               const Tolerances& tol) {
    check_dims(dims);
    long total = 1;
    for (int d : dims) total *= d;
    if (m.rows() != total || m.cols() != total) {
        std::ostringstream os;
        os << "matrix is " << m.rows() << "x" << m.cols() << " but subsystem dimensions need "
           << total << "x" << total;
        throw ValidationError(ValidationDefect::DimensionMismatch, os.str());
    }

    const double herm_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > tol.herm) {
        std::ostringstream os;
        os << "Hermiticity defect " << herm_defect << " exceeds " << tol.herm;
        throw ValidationError(ValidationDefect::NotHermitian, os.str());
    }

    const double trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
    if (trace_defect > tol.trace) {
        std::ostringstream os;
        os << "trace deviates from 1 by " << trace_defect;
        throw ValidationError(ValidationDefect::TraceNotOne, os.str());
    }

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()),
                                                        Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol.psd) {
        std::ostringstream os;
        os << "smallest eigenvalue " << min_eig << " is below -" << tol.psd;
        throw ValidationError(ValidationDefect::NotPositive, os.str());
    }

    return DensityMatrix(dims, m);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, const std::vector<int>& dims,
                                   const std::vector<int>& keep) {
    check_dims(dims);
    const int n = static_cast<int>(dims.size());
    if (keep.empty())
        throw std::invalid_argument("keep set is empty");
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
        throw std::invalid_argument("keep set contains a duplicate subsystem index");
    if (kept.front() < 0 || kept.back() >= n)
        throw std::invalid_argument("keep set contains an out-of-range subsystem index");

    long total = 1;
    for (int d : dims) total *= d;
    if (m.rows() != total || m.cols() != total)
        throw std::invalid_argument("matrix size does not match subsystem dimensions");

    std::vector<int> traced;
    for (int k = 0; k < n; ++k)
        if (!std::binary_search(kept.begin(), kept.end(), k)) traced.push_back(k);

    const std::vector<long> keep_off = offset_table(dims, kept);
    const std::vector<long> traced_off = offset_table(dims, traced);

    const long dk = static_cast<long>(keep_off.size());
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (long r = 0; r < dk; ++r)
        for (long c = 0; c < dk; ++c) {
            Complex acc(0.0, 0.0);
            for (long t : traced_off) acc += m(keep_off[r] + t, keep_off[c] + t);
            out(r, c) = acc;
        }
    return out;
}

ComplexMatrix trace_out_subsystem(const ComplexMatrix& m, const std::vector<int>& dims, int k) {
    if (k < 0 || k >= static_cast<int>(dims.size()))
        throw std::invalid_argument("slot index out of range");
    std::vector<int> kept;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i)
        if (i != k) kept.push_back(i);
    if (kept.empty()) {
        // tracing out the only subsystem leaves the scalar trace
        ComplexMatrix out(1, 1);
        out(0, 0) = m.trace();
        return out;
    }
    return partial_trace_matrix(m, dims, kept);
}

ComplexMatrix insert_identity_factor(const ComplexMatrix& a, const std::vector<int>& dims, int k) {
    check_dims(dims);
    const int n = static_cast<int>(dims.size());
    if (k < 0 || k >= n)
        throw std::invalid_argument("slot index out of range");

    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (i != k) rest.push_back(i);

    long rest_total = 1;
    for (int i : rest) rest_total *= dims[i];
    if (a.rows() != rest_total || a.cols() != rest_total)
        throw std::invalid_argument("matrix size does not match the remaining subsystems");

    long total = rest_total * dims[k];
    std::vector<long> strides(n, 1);
    for (int i = n - 2; i >= 0; --i) strides[i] = strides[i + 1] * dims[i + 1];

    const std::vector<long> rest_off = offset_table(dims, rest);
    ComplexMatrix out = ComplexMatrix::Zero(total, total);
    for (long r = 0; r < rest_total; ++r)
        for (long c = 0; c < rest_total; ++c) {
            if (a(r, c) == Complex(0.0, 0.0)) continue;
            for (int s = 0; s < dims[k]; ++s)
                out(rest_off[r] + s * strides[k], rest_off[c] + s * strides[k]) = a(r, c);
        }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    ComplexMatrix reduced = partial_trace_matrix(rho.matrix(), rho.dims(), kept);
    std::vector<int> new_dims;
    for (int k : kept) new_dims.push_back(rho.dims()[k]);
    return validate_density(reduced, new_dims);
}

double purity(const DensityMatrix& rho) {
    // tr(rho^2) equals the squared Frobenius norm for Hermitian rho
    return rho.matrix().squaredNorm();
}

} // namespace quasiq
