#include "quasiq/coherence.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace quasiq {

namespace {

constexpr double kImagResidueTol = 1e-10;

long component_count(const std::vector<int>& dims) {
    long count = 1;
    for (int d : dims) {
        if (d < 2)
            throw std::invalid_argument("subsystem dimension below 2");
        count *= static_cast<long>(d) * d;
    }
    return count;
}

} // namespace

ExpandedCoherenceVector::ExpandedCoherenceVector(std::vector<int> dims, RealVector data)
    : dims_(std::move(dims)), data_(std::move(data)) {
    if (dims_.empty())
        throw std::invalid_argument("empty subsystem list");
    if (data_.size() != component_count(dims_)) {
        std::ostringstream os;
        os << "coefficient vector has " << data_.size() << " entries, expected "
           << component_count(dims_);
        throw std::invalid_argument(os.str());
    }
}

int flatten_index(const std::vector<int>& dims, const std::vector<int>& multi) {
    if (dims.empty() || multi.size() != dims.size())
        throw std::invalid_argument("multi-index length does not match subsystem count");
    long flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const long radix = static_cast<long>(dims[k]) * dims[k];
        if (multi[k] < 0 || multi[k] >= radix) {
            std::ostringstream os;
            os << "component " << k << " is " << multi[k] << ", valid range [0, " << radix << ")";
            throw std::invalid_argument(os.str());
        }
        flat = flat * radix + multi[k];
    }
    return static_cast<int>(flat);
}

std::vector<int> unflatten_index(const std::vector<int>& dims, int flat) {
    const long count = component_count(dims);
    if (flat < 0 || flat >= count)
        throw std::invalid_argument("flat index out of range");
    std::vector<int> multi(dims.size());
    long rest = flat;
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        const long radix = static_cast<long>(dims[k]) * dims[k];
        multi[k] = static_cast<int>(rest % radix);
        rest /= radix;
    }
    return multi;
}

const std::vector<ComplexMatrix>& product_basis(const std::vector<int>& dims) {
    static std::mutex mutex;
    static std::map<std::vector<int>, std::vector<ComplexMatrix>> cache;

    const long count = component_count(dims);

    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(dims);
    if (it == cache.end()) {
        std::vector<ComplexMatrix> list;
        list.reserve(count);
        for (long flat = 0; flat < count; ++flat) {
            const std::vector<int> multi = unflatten_index(dims, static_cast<int>(flat));
            ComplexMatrix acc = basis_list(dims[0])[multi[0]];
            for (std::size_t k = 1; k < dims.size(); ++k)
                acc = kron(acc, basis_list(dims[k])[multi[k]]);
            list.push_back(std::move(acc));
        }
        it = cache.emplace(dims, std::move(list)).first;
    }
    return it->second;
}

ExpandedCoherenceVector encode(const DensityMatrix& rho) {
    const auto& basis = product_basis(rho.dims());
    RealVector out(static_cast<long>(basis.size()));
    double worst_residue = 0.0;
    for (std::size_t c = 0; c < basis.size(); ++c) {
        // tr(rho * B) as an entrywise contraction; B is Hermitian
        const Complex val = basis[c].conjugate().cwiseProduct(rho.matrix()).sum();
        worst_residue = std::max(worst_residue, std::abs(val.imag()));
        out(static_cast<long>(c)) = val.real();
    }
    if (worst_residue > kImagResidueTol) {
        std::ostringstream os;
        os << "imaginary residue " << worst_residue << " while projecting onto the Hermitian basis";
        throw ValidationError(ValidationDefect::ImaginaryResidue, os.str());
    }
    return ExpandedCoherenceVector(rho.dims(), std::move(out));
}

DensityMatrix decode(const ExpandedCoherenceVector& v, const Tolerances& tol, bool strict) {
    const auto& dims = v.dims();
    const long total = total_dimension(dims);
    const double expected_head = 1.0 / std::sqrt(static_cast<double>(total));
    if (std::abs(v.data()(0) - expected_head) > tol.eq) {
        std::ostringstream os;
        os << "identity component is " << v.data()(0) << ", a unit-trace state needs "
           << expected_head;
        throw ValidationError(ValidationDefect::TraceNotOne, os.str());
    }

    const auto& basis = product_basis(dims);
    ComplexMatrix m = ComplexMatrix::Zero(total, total);
    for (std::size_t c = 0; c < basis.size(); ++c)
        m += v.data()(static_cast<long>(c)) * basis[c];

    if (strict)
        return validate_density(m, dims, tol);

    const double herm_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > tol.herm)
        throw ValidationError(ValidationDefect::NotHermitian, "reconstruction is not Hermitian");
    const double trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
    if (trace_defect > tol.trace)
        throw ValidationError(ValidationDefect::TraceNotOne, "reconstruction trace is off 1");
    return DensityMatrix::unchecked(dims, std::move(m));
}

} // namespace quasiq
