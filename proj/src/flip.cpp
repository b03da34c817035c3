#include "quasiq/flip.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace quasiq {

namespace {

void check_pair(int dim, int i, int j) {
    if (dim < 2)
        throw std::invalid_argument("generator dimension must be at least 2");
    if (i < 1 || j <= i || j > dim) {
        std::ostringstream os;
        os << "pair (" << i << "," << j << ") invalid for dimension " << dim;
        throw std::invalid_argument(os.str());
    }
}

// all flip generators of one subsystem, pairs in lexicographic order
const std::vector<ComplexMatrix>& flip_generators(int dim) {
    static std::mutex mutex;
    static std::map<int, std::vector<ComplexMatrix>> cache;

    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(dim);
    if (it == cache.end()) {
        std::vector<ComplexMatrix> list;
        for (int i = 1; i < dim; ++i)
            for (int j = i + 1; j <= dim; ++j)
                list.push_back(flip_generator({dim, i, j, PairGeneratorKind::Flip}));
        it = cache.emplace(dim, std::move(list)).first;
    }
    return it->second;
}

} // namespace

ComplexMatrix flip_generator(const FlipGeneratorIndex& g) {
    check_pair(g.dim, g.i, g.j);
    const double scale = 1.0 / std::sqrt(g.dim - 1.0);
    ComplexMatrix m = ComplexMatrix::Zero(g.dim, g.dim);
    if (g.kind == PairGeneratorKind::Flip) {
        m(g.i - 1, g.j - 1) = Complex(0.0, -scale);
        m(g.j - 1, g.i - 1) = Complex(0.0, scale);
    } else {
        m(g.i - 1, g.i - 1) = scale;
        m(g.j - 1, g.j - 1) = scale;
    }
    return m;
}

ComplexMatrix flip(const DensityMatrix& rho) {
    const auto& dims = rho.dims();
    const int n = rho.subsystem_count();
    const ComplexMatrix conj = rho.matrix().conjugate();

    std::vector<const std::vector<ComplexMatrix>*> gens(n);
    std::vector<int> counts(n);
    for (int k = 0; k < n; ++k) {
        gens[k] = &flip_generators(dims[k]);
        counts[k] = static_cast<int>(gens[k]->size());
    }

    ComplexMatrix acc = ComplexMatrix::Zero(rho.total_dim(), rho.total_dim());
    std::vector<int> choice(n, 0);
    while (true) {
        ComplexMatrix a = (*gens[0])[choice[0]];
        for (int k = 1; k < n; ++k) a = kron(a, (*gens[k])[choice[k]]);
        acc += a * conj * a;

        int k = n - 1;
        while (k >= 0 && ++choice[k] == counts[k]) choice[k--] = 0;
        if (k < 0) break;
    }
    return acc;
}

ComplexMatrix unflip(const DensityMatrix& rho) {
    const auto& dims = rho.dims();
    ComplexMatrix m = rho.matrix();
    for (int k = 0; k < rho.subsystem_count(); ++k) {
        const double nk = dims[k];
        const double keep = 1.0 / (nk - 1.0);
        const double feed = (nk - 2.0) / (nk * (nk - 1.0));
        if (feed == 0.0) continue; // two-level subsystems are left untouched
        ComplexMatrix traced = trace_out_subsystem(m, dims, k);
        m = keep * m + feed * insert_identity_factor(traced, dims, k);
    }
    return m;
}

double flip_weight(const std::vector<int>& dims, const std::vector<int>& multi) {
    if (multi.size() != dims.size())
        throw std::invalid_argument("multi-index length does not match subsystem count");
    double w = 1.0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const long radix = static_cast<long>(dims[k]) * dims[k];
        if (multi[k] < 0 || multi[k] >= radix)
            throw std::invalid_argument("basis index out of range");
        if (multi[k] != 0) w *= -1.0 / (dims[k] - 1.0);
    }
    return w;
}

double unflip_weight(const std::vector<int>& dims, const std::vector<int>& multi) {
    if (multi.size() != dims.size())
        throw std::invalid_argument("multi-index length does not match subsystem count");
    double w = 1.0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const long radix = static_cast<long>(dims[k]) * dims[k];
        if (multi[k] < 0 || multi[k] >= radix)
            throw std::invalid_argument("basis index out of range");
        if (multi[k] != 0) w *= 1.0 / (dims[k] - 1.0);
    }
    return w;
}

double g_weight(const std::vector<int>& dims, const std::vector<int>& multi) {
    return flip_weight(dims, multi) + unflip_weight(dims, multi);
}

ComplexMatrix universal_inverter(const DensityMatrix& rho) {
    if (rho.subsystem_count() != 2)
        throw std::invalid_argument("the closed inverter form needs exactly two subsystems");
    const int n1 = rho.dims()[0];
    const int n2 = rho.dims()[1];

    const ComplexMatrix rho1 = partial_trace_matrix(rho.matrix(), rho.dims(), {0});
    const ComplexMatrix rho2 = partial_trace_matrix(rho.matrix(), rho.dims(), {1});
    const ComplexMatrix eye1 = ComplexMatrix::Identity(n1, n1);
    const ComplexMatrix eye2 = ComplexMatrix::Identity(n2, n2);

    const double tr = rho.matrix().trace().real();
    ComplexMatrix out = tr * ComplexMatrix::Identity(rho.total_dim(), rho.total_dim());
    out -= kron(rho1, eye2);
    out -= kron(eye1, rho2);
    out += rho.matrix();
    out /= static_cast<double>(n1 - 1) * (n2 - 1);
    return out;
}

} // namespace quasiq
