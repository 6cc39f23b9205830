#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcoh/matops.hpp"
#include "test_util.hpp"

#include <cmath>
#include <string>

using namespace qcoh;

TEST_CASE("tensor: identity and projector cases") {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    CHECK((tensor(i2, i2) - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() ==
          0.0);

    ComplexMatrix p = ComplexMatrix::Zero(2, 2);
    p(0, 0) = 1.0;
    const ComplexMatrix pp = tensor(p, p);
    ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
    expect(0, 0) = 1.0;
    CHECK((pp - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("tensor: qubit symmetric generator squared is the anti-diagonal") {
    ComplexMatrix sx(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;
    const ComplexMatrix k = tensor(sx, sx);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(k(i, j) == Complex(i + j == 3 ? 1.0 : 0.0, 0.0));
}

TEST_CASE("tensor: associativity, bilinearity, trace multiplicativity") {
    RngStream rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = qt::random_hermitian(2, rng);
        const ComplexMatrix b = qt::random_hermitian(3, rng);
        const ComplexMatrix c = qt::random_hermitian(2, rng);

        CHECK((tensor(tensor(a, b), c) - tensor(a, tensor(b, c)))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
        CHECK((tensor(2.0 * a + 0.5 * c, b) -
               (2.0 * tensor(a, b) + 0.5 * tensor(c, b)))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
        CHECK_NEAR(tensor(a, b).trace().real(),
                   a.trace().real() * b.trace().real(), 1e-12);
    }
}

TEST_CASE("hermitian_eigenvalues: known spectra, ascending") {
    ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
    diag(0, 0) = 0.3;
    diag(1, 1) = 0.7;
    auto ev = hermitian_eigenvalues(diag);
    REQUIRE(ev.size() == 2);
    CHECK_NEAR(ev[0], 0.3, 1e-14);
    CHECK_NEAR(ev[1], 0.7, 1e-14);

    ComplexMatrix sx(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;
    ev = hermitian_eigenvalues(sx);
    CHECK_NEAR(ev[0], -1.0, 1e-14);
    CHECK_NEAR(ev[1], 1.0, 1e-14);

    // rho_w at w = 1/2: diagonal 1/3, off-diagonal 1/6
    ComplexMatrix rw = ComplexMatrix::Constant(3, 3, Complex(1.0 / 6.0, 0.0));
    rw.diagonal().setConstant(Complex(1.0 / 3.0, 0.0));
    ev = hermitian_eigenvalues(rw);
    REQUIRE(ev.size() == 3);
    CHECK_NEAR(ev[0], 1.0 / 6.0, 1e-13);
    CHECK_NEAR(ev[1], 1.0 / 6.0, 1e-13);
    CHECK_NEAR(ev[2], 2.0 / 3.0, 1e-13);
}

TEST_CASE("hermitian_eigenvalues: rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m << 1.0, 1.0, 0.0, 1.0;
    CHECK_THROWS_AS((void)hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues: sum equals trace on random input") {
    RngStream rng(11);
    for (int d : {2, 3, 5}) {
        const ComplexMatrix h = qt::random_hermitian(d, rng);
        double sum = 0.0;
        for (double lam : hermitian_eigenvalues(h)) sum += lam;
        CHECK_NEAR(sum, h.trace().real(), 1e-10);
    }
}

TEST_CASE("vn_entropy: mixed, pure, and rho_w(1/2)") {
    CHECK_NEAR(vn_entropy(qt::maximally_mixed({2})), 1.0, 1e-12);
    CHECK_NEAR(vn_entropy(qt::plus_qubit()), 0.0, 1e-12);
    CHECK_NEAR(vn_entropy(qt::basis_projector(3, 1)), 0.0, 1e-12);

    ComplexMatrix rw = ComplexMatrix::Constant(3, 3, Complex(1.0 / 6.0, 0.0));
    rw.diagonal().setConstant(Complex(1.0 / 3.0, 0.0));
    const double expected = -2.0 * (1.0 / 6.0) * std::log2(1.0 / 6.0) -
                            (2.0 / 3.0) * std::log2(2.0 / 3.0);
    CHECK_NEAR(vn_entropy(DensityMatrix({3}, rw)), expected, 1e-12);
    CHECK_NEAR(expected, 1.2516, 1e-4);
}

TEST_CASE("vn_entropy: additive under tensor products") {
    RngStream rng(23);
    for (int d : {2, 3}) {
        for (int rep = 0; rep < 25; ++rep) {
            const DensityMatrix rho = random_density(d, rng);
            CHECK_NEAR(vn_entropy(qt::two_copies(rho)), 2.0 * vn_entropy(rho),
                       1e-9);
        }
    }
}

TEST_CASE("purity: pure, mixed, rho_w(1/2)") {
    CHECK_NEAR(purity(qt::plus_qubit()), 1.0, 1e-12);
    CHECK_NEAR(purity(qt::maximally_mixed({3})), 1.0 / 3.0, 1e-12);

    ComplexMatrix rw = ComplexMatrix::Constant(3, 3, Complex(1.0 / 6.0, 0.0));
    rw.diagonal().setConstant(Complex(1.0 / 3.0, 0.0));
    CHECK_NEAR(purity(DensityMatrix({3}, rw)), 0.5, 1e-12);
}

TEST_CASE("random_density: invariants hold and spectra are physical") {
    RngStream rng(99);
    for (int d : {2, 3, 5}) {
        for (int rep = 0; rep < 50; ++rep) {
            const DensityMatrix rho = random_density(d, rng);
            CHECK(rho.check().ok());
            const auto ev = hermitian_eigenvalues(rho.mat());
            double sum = 0.0;
            for (double lam : ev) {
                CHECK(lam >= -1e-10);
                CHECK(lam <= 1.0 + 1e-10);
                sum += lam;
            }
            CHECK_NEAR(sum, 1.0, 1e-10);
            const double p = purity(rho);
            CHECK(p >= 1.0 / d - 1e-12);
            CHECK(p <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("random_density: identical seed gives bit-identical matrices") {
    RngStream a = substream(42, 7);
    RngStream b = substream(42, 7);
    const DensityMatrix ra = random_density(4, a);
    const DensityMatrix rb = random_density(4, b);
    CHECK((ra.mat() - rb.mat()).cwiseAbs().maxCoeff() == 0.0);

    RngStream c = substream(42, 8);
    const DensityMatrix rc = random_density(4, c);
    CHECK((ra.mat() - rc.mat()).cwiseAbs().maxCoeff() > 0.0);
}

// Hilbert-Schmidt-measure mean purity: exactly 2d/(d^2+1), i.e. 4/5 for
// qubits and 3/5 for qutrits (regression band frozen from brute-force runs).
TEST_CASE("random_density: mean purity matches the HS-measure value") {
    RngStream rng(2024);
    double acc = 0.0;
    const int n2 = 100000;
    for (int i = 0; i < n2; ++i) acc += purity(random_density(2, rng));
    CHECK_NEAR(acc / n2, 0.8, 0.01);

    acc = 0.0;
    const int n3 = 30000;
    for (int i = 0; i < n3; ++i) acc += purity(random_density(3, rng));
    CHECK_NEAR(acc / n3, 0.6, 0.01);
}

TEST_CASE("random_pure: unit purity and zero entropy") {
    RngStream rng(5);
    for (int d : {2, 3, 4}) {
        const DensityMatrix psi = random_pure(d, rng);
        CHECK(psi.check().ok());
        CHECK_NEAR(purity(psi), 1.0, 1e-12);
        CHECK_NEAR(vn_entropy(psi), 0.0, 1e-9);
    }
}

TEST_CASE("DensityMatrix: violations are rejected naming the invariant") {
    ComplexMatrix bad_trace = ComplexMatrix::Zero(2, 2);
    bad_trace(0, 0) = 0.5;
    bad_trace(1, 1) = 0.4;
    CHECK_THROWS_WITH_AS((void)DensityMatrix({2}, bad_trace),
                         doctest::Contains("trace"), std::invalid_argument);

    ComplexMatrix non_herm(2, 2);
    non_herm << 0.5, 0.2, 0.1, 0.5;
    CHECK_THROWS_WITH_AS((void)DensityMatrix({2}, non_herm),
                         doctest::Contains("hermiticity"), std::invalid_argument);

    ComplexMatrix indefinite = ComplexMatrix::Zero(2, 2);
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_WITH_AS((void)DensityMatrix({2}, indefinite),
                         doctest::Contains("positivity"), std::invalid_argument);

    CHECK_THROWS_AS((void)DensityMatrix({3}, ComplexMatrix::Identity(2, 2) / 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)DensityMatrix({1}, ComplexMatrix::Identity(1, 1)),
                    std::invalid_argument);
}
