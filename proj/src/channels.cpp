#include "quasiq/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "quasiq/coherence.hpp"
#include "quasiq/rng.hpp"

namespace quasiq {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kCompletenessTol = 1e-9;
constexpr double kNormalityTol = 1e-9;
constexpr double kResidueTol = 1e-10;

void check_layout(const std::vector<int>& dims, std::size_t factor_count) {
    if (dims.empty())
        throw std::invalid_argument("empty subsystem list");
    for (int d : dims)
        if (d < 2) throw std::invalid_argument("subsystem dimension below 2");
    if (factor_count != dims.size())
        throw std::invalid_argument("factor count does not match subsystem count");
}

// apply the product channel to an arbitrary matrix of matching size
ComplexMatrix push_through(const std::vector<int>& dims,
                           const std::vector<std::vector<ComplexMatrix>>& factors,
                           const ComplexMatrix& x) {
    const int n = static_cast<int>(dims.size());
    std::vector<int> counts(n);
    for (int k = 0; k < n; ++k) counts[k] = static_cast<int>(factors[k].size());

    ComplexMatrix acc = ComplexMatrix::Zero(x.rows(), x.cols());
    std::vector<int> choice(n, 0);
    while (true) {
        ComplexMatrix a = factors[0][choice[0]];
        for (int k = 1; k < n; ++k) a = kron(a, factors[k][choice[k]]);
        acc += a * x * a.adjoint();

        int k = n - 1;
        while (k >= 0 && ++choice[k] == counts[k]) choice[k--] = 0;
        if (k < 0) break;
    }
    return acc;
}

CoherenceSuperoperator superoperator_from(const std::vector<int>& dims, auto&& channel_action) {
    const auto& basis = product_basis(dims);
    const long size = static_cast<long>(basis.size());
    Eigen::MatrixXd d(size, size);
    for (long c = 0; c < size; ++c) {
        const ComplexMatrix image = channel_action(basis[c]);
        for (long r = 0; r < size; ++r) {
            const Complex val = basis[r].conjugate().cwiseProduct(image).sum();
            if (std::abs(val.imag()) > kResidueTol)
                throw ValidationError(ValidationDefect::ImaginaryResidue,
                                      "channel image left the Hermitian span");
            d(r, c) = val.real();
        }
    }
    return {dims, std::move(d)};
}

ComplexMatrix haar_unitary(int dim, std::mt19937_64& gen) {
    const ComplexMatrix g = rng::gaussian_matrix(dim, dim, gen);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < dim; ++c) {
        const Complex rd = r(c, c);
        const double mag = std::abs(rd);
        const Complex phase = mag > 0.0 ? rd / mag : Complex(1.0, 0.0);
        q.col(c) *= phase;
    }
    return q;
}

} // namespace

LocalUnitary::LocalUnitary(std::vector<int> dims, std::vector<ComplexMatrix> factors)
    : dims_(std::move(dims)), factors_(std::move(factors)) {
    check_layout(dims_, factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        const ComplexMatrix& u = factors_[k];
        if (u.rows() != dims_[k] || u.cols() != dims_[k])
            throw std::invalid_argument("unitary factor size does not match its subsystem");
        const double defect =
            (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
        if (defect > kUnitaryTol) {
            std::ostringstream os;
            os << "factor " << k << " unitarity defect " << defect;
            throw std::invalid_argument(os.str());
        }
    }
}

ComplexMatrix LocalUnitary::full_matrix() const {
    ComplexMatrix acc = factors_[0];
    for (std::size_t k = 1; k < factors_.size(); ++k) acc = kron(acc, factors_[k]);
    return acc;
}

LocalKrausChannel::LocalKrausChannel(std::vector<int> dims,
                                     std::vector<std::vector<ComplexMatrix>> factors)
    : dims_(std::move(dims)), factors_(std::move(factors)) {
    check_layout(dims_, factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (factors_[k].empty())
            throw std::invalid_argument("subsystem has no Kraus operators");
        for (const ComplexMatrix& l : factors_[k])
            if (l.rows() != dims_[k] || l.cols() != dims_[k])
                throw std::invalid_argument("Kraus operator size does not match its subsystem");
    }
    const PovmDiagnosis diag = validate_povm(dims_, factors_);
    if (!diag.complete) {
        std::ostringstream os;
        os << "Kraus completeness defect " << diag.max_completeness_defect << " exceeds "
           << kCompletenessTol;
        throw std::invalid_argument(os.str());
    }
    povm_ = diag.povm;
}

PovmDiagnosis validate_povm(const std::vector<int>& dims,
                            const std::vector<std::vector<ComplexMatrix>>& factors) {
    PovmDiagnosis out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const int d = dims[k];
        ComplexMatrix sum = ComplexMatrix::Zero(d, d);
        std::vector<double> normality;
        for (const ComplexMatrix& l : factors[k]) {
            sum += l.adjoint() * l;
            const double defect = (l * l.adjoint() - l.adjoint() * l).cwiseAbs().maxCoeff();
            normality.push_back(defect);
            out.max_normality_defect = std::max(out.max_normality_defect, defect);
        }
        const double comp = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
        out.completeness_defect.push_back(comp);
        out.normality_defect.push_back(std::move(normality));
        out.max_completeness_defect = std::max(out.max_completeness_defect, comp);
    }
    out.complete = out.max_completeness_defect <= kCompletenessTol;
    out.povm = out.complete && out.max_normality_defect <= kNormalityTol;
    return out;
}

PovmDiagnosis validate_povm(const LocalKrausChannel& ch) {
    return validate_povm(ch.dims(), ch.factors());
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const LocalUnitary& u) {
    if (rho.dims() != u.dims())
        throw std::invalid_argument("state and unitary subsystem layouts differ");
    const ComplexMatrix full = u.full_matrix();
    return validate_density(full * rho.matrix() * full.adjoint(), rho.dims());
}

DensityMatrix apply_local_kraus(const DensityMatrix& rho, const LocalKrausChannel& ch) {
    if (rho.dims() != ch.dims())
        throw std::invalid_argument("state and channel subsystem layouts differ");
    ComplexMatrix out = push_through(ch.dims(), ch.factors(), rho.matrix());
    const double trace_defect = std::abs(out.trace() - Complex(1.0, 0.0));
    if (trace_defect > kResidueTol)
        throw ValidationError(ValidationDefect::TraceNotOne, "channel output trace drifted off 1");
    return validate_density(out, rho.dims());
}

CoherenceSuperoperator coherence_superoperator(const LocalUnitary& u) {
    const ComplexMatrix full = u.full_matrix();
    return superoperator_from(u.dims(), [&](const ComplexMatrix& x) -> ComplexMatrix {
        return full * x * full.adjoint();
    });
}

CoherenceSuperoperator coherence_superoperator(const LocalKrausChannel& ch) {
    return superoperator_from(ch.dims(), [&](const ComplexMatrix& x) -> ComplexMatrix {
        return push_through(ch.dims(), ch.factors(), x);
    });
}

LocalUnitary random_local_unitary(const std::vector<int>& dims, std::uint64_t seed) {
    std::vector<ComplexMatrix> factors;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        std::mt19937_64 gen = rng::engine(seed, rng::derive(rng::tag("local-unitary"), k));
        factors.push_back(haar_unitary(dims[k], gen));
    }
    return LocalUnitary(dims, std::move(factors));
}

LocalKrausChannel projective_mixture_povm(int dim, const ComplexMatrix& v, double lambda) {
    if (dim < 2)
        throw std::invalid_argument("subsystem dimension below 2");
    if (lambda < 0.0 || lambda > 1.0)
        throw std::invalid_argument("mixture weight outside [0,1]");
    if (v.rows() != dim || v.cols() != dim)
        throw std::invalid_argument("rotation size does not match dimension");

    std::vector<ComplexMatrix> ops;
    const double sl = std::sqrt(lambda);
    for (int i = 0; i < dim; ++i) {
        ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
        p(i, i) = 1.0;
        ops.push_back(sl * (v * p * v.adjoint()));
    }
    ops.push_back(std::sqrt(1.0 - lambda) * ComplexMatrix::Identity(dim, dim));
    return LocalKrausChannel({dim}, {std::move(ops)});
}

LocalKrausChannel random_povm(int dim, std::uint64_t seed) {
    std::mt19937_64 gen = rng::engine(seed, rng::tag("povm"));
    const ComplexMatrix v = haar_unitary(dim, gen);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    const double lambda = dist(gen);
    return projective_mixture_povm(dim, v, lambda);
}

LocalKrausChannel random_local_povm(const std::vector<int>& dims, std::uint64_t seed) {
    std::vector<std::vector<ComplexMatrix>> factors;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        LocalKrausChannel one = random_povm(dims[k], rng::derive(seed, rng::tag("factor"), k));
        factors.push_back(one.factors()[0]);
    }
    return LocalKrausChannel(dims, std::move(factors));
}

} // namespace quasiq
