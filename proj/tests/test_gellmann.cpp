#include "doctest.h"

#include <cmath>

#include "quasiq/gellmann.hpp"
#include "quasiq/rng.hpp"

#include "test_helpers.hpp"

using namespace quasiq;
using namespace testutil;

TEST_CASE("two-level basis reduces to the scaled Pauli set") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(basis_element(BasisIndex::from_flat(2, 0)), s * identity(2)) < 1e-15);
    CHECK(max_abs_diff(basis_element(BasisIndex::from_flat(2, 1)), s * pauli_x()) < 1e-15);
    CHECK(max_abs_diff(basis_element(BasisIndex::from_flat(2, 2)), s * pauli_y()) < 1e-15);
    CHECK(max_abs_diff(basis_element(BasisIndex::from_flat(2, 3)), s * pauli_z()) < 1e-15);
}

TEST_CASE("three-level reference elements") {
    // symmetric (1,2) element
    ComplexMatrix x12 = ComplexMatrix::Zero(3, 3);
    x12(0, 1) = x12(1, 0) = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(basis_element(BasisIndex::from_flat(3, 1)), x12) < 1e-15);

    // first diagonal element, level p = 2
    ComplexMatrix z2 = ComplexMatrix::Zero(3, 3);
    z2(0, 0) = 1.0 / std::sqrt(2.0);
    z2(1, 1) = -1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(basis_element(BasisIndex::from_flat(3, 7)), z2) < 1e-15);

    // antisymmetric (1,2) element
    ComplexMatrix y12 = ComplexMatrix::Zero(3, 3);
    y12(0, 1) = Complex(0.0, -1.0 / std::sqrt(2.0));
    y12(1, 0) = Complex(0.0, 1.0 / std::sqrt(2.0));
    CHECK(max_abs_diff(basis_element(BasisIndex::from_flat(3, 4)), y12) < 1e-15);
}

TEST_CASE("flat index decodes into family, pair and level") {
    // N=3 layout: 0 identity, 1-3 symmetric, 4-6 antisymmetric, 7-8 diagonal
    CHECK(BasisIndex::from_flat(3, 0).kind() == BasisKind::Identity);
    CHECK(BasisIndex::from_flat(3, 1).kind() == BasisKind::Symmetric);
    CHECK(BasisIndex::from_flat(3, 1).pair() == std::pair<int, int>{1, 2});
    CHECK(BasisIndex::from_flat(3, 3).pair() == std::pair<int, int>{2, 3});
    CHECK(BasisIndex::from_flat(3, 4).kind() == BasisKind::Antisymmetric);
    CHECK(BasisIndex::from_flat(3, 4).pair() == std::pair<int, int>{1, 2});
    CHECK(BasisIndex::from_flat(3, 7).kind() == BasisKind::Diagonal);
    CHECK(BasisIndex::from_flat(3, 7).level() == 2);
    CHECK(BasisIndex::from_flat(3, 8).level() == 3);

    CHECK_THROWS_AS(BasisIndex::from_flat(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(BasisIndex::from_flat(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(BasisIndex::from_flat(1, 0), std::invalid_argument);
}

TEST_CASE("basis sizes and trace structure") {
    CHECK(basis_list(2).size() == 4);
    CHECK(basis_list(3).size() == 9);
    const auto& b5 = basis_list(5);
    CHECK(b5.size() == 25);
    for (std::size_t i = 0; i < b5.size(); ++i) {
        const double tr = b5[i].trace().real();
        if (i == 0)
            CHECK(std::abs(tr - std::sqrt(5.0)) < 1e-14);
        else
            CHECK(std::abs(tr) < 1e-14);
    }
}

TEST_CASE("orthonormality under the trace inner product") {
    for (int n : {2, 3, 4, 5}) {
        const auto& basis = basis_list(n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) {
                const double ip = (basis[i].adjoint() * basis[j]).trace().real();
                const double expected = i == j ? 1.0 : 0.0;
                CHECK(std::abs(ip - expected) <= 1e-12);
            }
    }
}

TEST_CASE("every element is Hermitian") {
    for (int n : {2, 3, 4, 5})
        for (const ComplexMatrix& b : basis_list(n))
            CHECK(max_abs_diff(b, b.adjoint()) < 1e-15);
}

TEST_CASE("random Hermitian operators reconstruct from their expansion") {
    for (int n : {2, 3, 4}) {
        std::mt19937_64 gen = rng::engine(21, n);
        const ComplexMatrix g = rng::gaussian_matrix(n, n, gen);
        const ComplexMatrix h = 0.5 * (g + g.adjoint());
        ComplexMatrix rebuilt = ComplexMatrix::Zero(n, n);
        for (const ComplexMatrix& b : basis_list(n))
            rebuilt += (b.adjoint() * h).trace().real() * b;
        CHECK(max_abs_diff(rebuilt, h) < 1e-10);
    }
}

TEST_CASE("basis_list rejects dimensions below 2") {
    CHECK_THROWS_AS(basis_list(1), std::invalid_argument);
    CHECK_THROWS_AS(basis_list(0), std::invalid_argument);
}
