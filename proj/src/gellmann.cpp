#include "quasiq/gellmann.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace quasiq {

namespace {

std::pair<int, int> pair_from_rank(int dim, int rank) {
    // rank in [0, dim(dim-1)/2), lexicographic (1,2), (1,3), ..., (dim-1,dim)
    int i = 1;
    int remaining = rank;
    while (remaining >= dim - i) {
        remaining -= dim - i;
        ++i;
    }
    return {i, i + 1 + remaining};
}

} // namespace

BasisIndex BasisIndex::from_flat(int dim, int flat) {
    if (dim < 2)
        throw std::invalid_argument("basis dimension must be at least 2");
    if (flat < 0 || flat >= dim * dim) {
        std::ostringstream os;
        os << "flat basis index " << flat << " out of range for dimension " << dim;
        throw std::invalid_argument(os.str());
    }
    return BasisIndex(dim, flat);
}

BasisKind BasisIndex::kind() const {
    const int pairs = dim_ * (dim_ - 1) / 2;
    if (flat_ == 0) return BasisKind::Identity;
    if (flat_ <= pairs) return BasisKind::Symmetric;
    if (flat_ <= 2 * pairs) return BasisKind::Antisymmetric;
    return BasisKind::Diagonal;
}

std::pair<int, int> BasisIndex::pair() const {
    const int pairs = dim_ * (dim_ - 1) / 2;
    switch (kind()) {
    case BasisKind::Symmetric:
        return pair_from_rank(dim_, flat_ - 1);
    case BasisKind::Antisymmetric:
        return pair_from_rank(dim_, flat_ - 1 - pairs);
    default:
        throw std::logic_error("basis element has no (i,j) pair");
    }
}

int BasisIndex::level() const {
    if (kind() != BasisKind::Diagonal)
        throw std::logic_error("basis element has no diagonal level");
    return flat_ - dim_ * (dim_ - 1) + 1;
}

ComplexMatrix basis_element(const BasisIndex& idx) {
    const int n = idx.dim();
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    switch (idx.kind()) {
    case BasisKind::Identity:
        m = ComplexMatrix::Identity(n, n) / std::sqrt(static_cast<double>(n));
        break;
    case BasisKind::Symmetric: {
        auto [i, j] = idx.pair();
        const double v = 1.0 / std::sqrt(2.0);
        m(i - 1, j - 1) = v;
        m(j - 1, i - 1) = v;
        break;
    }
    case BasisKind::Antisymmetric: {
        auto [i, j] = idx.pair();
        const Complex v(0.0, 1.0 / std::sqrt(2.0));
        m(i - 1, j - 1) = -v;
        m(j - 1, i - 1) = v;
        break;
    }
    case BasisKind::Diagonal: {
        const int p = idx.level();
        const double head = 1.0 / std::sqrt(static_cast<double>(p) * (p - 1));
        for (int r = 1; r < p; ++r) m(r - 1, r - 1) = head;
        m(p - 1, p - 1) = -std::sqrt((p - 1.0) / p);
        break;
    }
    }
    return m;
}

const std::vector<ComplexMatrix>& basis_list(int dim) {
    if (dim < 2)
        throw std::invalid_argument("basis dimension must be at least 2");

    static std::mutex mutex;
    static std::map<int, std::vector<ComplexMatrix>> cache;

    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(dim);
    if (it == cache.end()) {
        std::vector<ComplexMatrix> list;
        list.reserve(static_cast<std::size_t>(dim) * dim);
        for (int flat = 0; flat < dim * dim; ++flat)
            list.push_back(basis_element(BasisIndex::from_flat(dim, flat)));
        it = cache.emplace(dim, std::move(list)).first;
    }
    return it->second;
}

} // namespace quasiq
