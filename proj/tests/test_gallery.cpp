#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "quasiq/gallery.hpp"
#include "quasiq/measure.hpp"

#include "test_helpers.hpp"

using namespace quasiq;
using namespace testutil;

TEST_CASE("GHZ family") {
    const DensityMatrix bell = ghz(2);
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
    CHECK(max_abs_diff(bell.matrix(), expected) < 1e-15);

    const DensityMatrix g3 = ghz(3);
    CHECK(g3.dims() == std::vector<int>{2, 2, 2});
    CHECK(std::abs(purity(g3) - 1.0) < 1e-14);
    CHECK(std::abs(g3.matrix()(0, 7).real() - 0.5) < 1e-15);

    CHECK_THROWS_AS(ghz(1), std::invalid_argument);
    CHECK_THROWS_AS(ghz(0), std::invalid_argument);
}

TEST_CASE("Werner family") {
    // parameter 1: the antisymmetric projector
    ComplexMatrix singlet = ComplexMatrix::Zero(4, 4);
    singlet(1, 1) = singlet(2, 2) = 0.5;
    singlet(1, 2) = singlet(2, 1) = -0.5;
    CHECK(max_abs_diff(werner(1.0).matrix(), singlet) < 1e-15);

    // parameter -1/2: the fully mixed state
    CHECK(max_abs_diff(werner(-0.5).matrix(), completely_mixed({2, 2}).matrix()) < 1e-15);

    // parameter -1: uniform on the symmetric subspace
    const DensityMatrix w = werner(-1.0);
    CHECK(std::abs(purity(w) - 1.0 / 3.0) < 1e-14);
    Eigen::VectorXcd psi_minus = Eigen::VectorXcd::Zero(4);
    psi_minus(1) = 1.0 / std::sqrt(2.0);
    psi_minus(2) = -1.0 / std::sqrt(2.0);
    CHECK((w.matrix() * psi_minus).norm() < 1e-14);

    // marginals are fully mixed across the family
    for (double phi : {-1.0, -0.3, 0.2, 0.9}) {
        const DensityMatrix r = werner(phi);
        CHECK(max_abs_diff(partial_trace(r, {0}).matrix(), identity(2) / 2.0) < 1e-14);
        CHECK(max_abs_diff(partial_trace(r, {1}).matrix(), identity(2) / 2.0) < 1e-14);
    }

    CHECK_THROWS_AS(werner(1.5), std::invalid_argument);
    CHECK_THROWS_AS(werner(-1.0001), std::invalid_argument);
}

TEST_CASE("fully mixed states") {
    for (const std::vector<int>& dims :
         {std::vector<int>{2}, std::vector<int>{2, 3}, std::vector<int>{3, 3}}) {
        const DensityMatrix m = completely_mixed(dims);
        CHECK(std::abs(purity(m) - 1.0 / total_dimension(dims)) < 1e-15);
        CHECK(m.dims() == dims);
    }
}

TEST_CASE("random pure states") {
    const DensityMatrix a = random_pure({2, 3}, 123);
    CHECK(std::abs(purity(a) - 1.0) < 1e-12);
    CHECK(std::abs(a.matrix().trace().real() - 1.0) < 1e-12);

    const DensityMatrix b = random_pure({2, 3}, 123);
    CHECK(max_abs_diff(a.matrix(), b.matrix()) == 0.0);
    const DensityMatrix c = random_pure({2, 3}, 124);
    CHECK(max_abs_diff(a.matrix(), c.matrix()) > 1e-3);
}

TEST_CASE("random mixed states of chosen rank") {
    const DensityMatrix r1 = random_density({2, 2}, 1, 55);
    CHECK(max_abs_diff(r1.matrix(), random_pure({2, 2}, 55).matrix()) < 1e-12);

    const DensityMatrix full = random_density({2, 2}, 4, 56);
    CHECK(purity(full) < 1.0 - 1e-6);

    // ranks nest: the same seed reuses the leading Gaussian draws
    const DensityMatrix r2 = random_density({2, 2}, 2, 57);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(r2.matrix());
    int nonzero = 0;
    for (int i = 0; i < 4; ++i)
        if (es.eigenvalues()(i) > 1e-12) ++nonzero;
    CHECK(nonzero == 2);

    CHECK_THROWS_AS(random_density({2, 2}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_density({2, 2}, 5, 1), std::invalid_argument);
}

TEST_CASE("random separable mixtures come with a product-term certificate") {
    const auto [rho, ens] = random_separable({2, 3}, 4, 77);

    CHECK(ens.weights.size() == 4);
    const double wsum = std::accumulate(ens.weights.begin(), ens.weights.end(), 0.0);
    CHECK(std::abs(wsum - 1.0) < 1e-12);
    for (double w : ens.weights) CHECK(w > 0.0);

    for (const auto& row : ens.factors) {
        REQUIRE(row.size() == 2);
        CHECK(row[0].size() == 2);
        CHECK(row[1].size() == 3);
        CHECK(std::abs(row[0].norm() - 1.0) < 1e-12);
        CHECK(std::abs(row[1].norm() - 1.0) < 1e-12);
    }

    // the certificate reassembles the state
    CHECK(max_abs_diff(ens.assemble().matrix(), rho.matrix()) < 1e-12);

    // determinism
    const auto [rho2, ens2] = random_separable({2, 3}, 4, 77);
    CHECK(max_abs_diff(rho.matrix(), rho2.matrix()) == 0.0);

    // one product term is a pure product state: the measure sits at zero
    const auto [prod, prod_ens] = random_separable({2, 3}, 1, 78);
    CHECK(std::abs(eq_measure(prod).f) < 1e-10);

    CHECK_THROWS_AS(random_separable({2, 2}, 0, 1), std::invalid_argument);
}

TEST_CASE("random pure draws cover entangled and weakly entangled states") {
    // across many draws the mean marginal purity settles near the known
    // two-qubit value of 4/5
    const int draws = 2000;
    double acc = 0.0;
    for (int t = 0; t < draws; ++t)
        acc += purity(partial_trace(random_pure({2, 2}, 30000 + t), {0}));
    const double mean = acc / draws;
    CHECK(mean < 0.9);
    CHECK(std::abs(mean - 0.8) < 0.05);
}
