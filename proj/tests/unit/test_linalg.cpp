#include <doctest.h>

#include "ptp/linalg/decompositions.hpp"
#include "ptp/linalg/multiset.hpp"
#include "ptp/linalg/poly.hpp"

#include "../support/random.hpp"

#include <cmath>
#include <numbers>

using namespace ptp::linalg;
using ptp::testing::random_complex_matrix;
using ptp::testing::random_int_matrix;
using ptp::testing::random_real_matrix;
using ptp::testing::random_size;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) {
    std::vector<BigInt> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

// H↑σ for the partitioned 5-cycle 0-1-4-3-2-0 with V0 = {0, 1}, V1 = {2, 3, 4}.
DenseMatrix five_cycle_arrow(Complex s) {
    return DenseMatrix{{0, 1, s, 0, 0},
                       {1, 0, 0, 0, s},
                       {s, 0, 0, 1, 0},
                       {0, 0, 1, 0, 1},
                       {0, s, 0, 1, 0}};
}

}  // namespace

TEST_CASE("matrix basics") {
    const DenseMatrix a{{1, 2}, {3, 4}};
    const DenseMatrix i2 = DenseMatrix::identity(2);
    CHECK(max_abs_diff(a * i2, a) == 0.0);
    CHECK(a.transpose()(0, 1) == Complex(3));
    CHECK(a.trace() == Complex(5));
    CHECK(kron(i2, a).rows() == 4);
    CHECK(kron(i2, a)(3, 2) == Complex(3));
    CHECK(a.is_integer());
    CHECK_FALSE((0.5 * a).is_integer());
    CHECK_THROWS_AS(a * DenseMatrix(3, 3), std::invalid_argument);

    const IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(m.without(1) == IntMatrix{{1, 3}, {7, 9}});
    CHECK(DenseMatrix(m).to_integer() == m);
}

TEST_CASE("char_poly exact: identity and frozen values") {
    CHECK(char_poly(DenseMatrix::identity(3), CharPolyMode::exact).exact_coeffs() ==
          big({-1, 3, -3, 1}));
    CHECK(char_poly(DenseMatrix(0, 0), CharPolyMode::exact).exact_coeffs() == big({1}));

    // Frozen from sympy: (λ²+λ−σ²)(λ³−λ²−(2+σ²)λ+2) at σ = 0, 1, 2.
    CHECK(char_poly(five_cycle_arrow(0.0), CharPolyMode::exact).exact_coeffs() ==
          big({0, 2, 0, -3, 0, 1}));
    CHECK(char_poly(five_cycle_arrow(1.0), CharPolyMode::exact).exact_coeffs() ==
          big({-2, 5, 0, -5, 0, 1}));
    CHECK(char_poly(five_cycle_arrow(2.0), CharPolyMode::exact).exact_coeffs() ==
          big({-8, 26, 0, -11, 0, 1}));

    const IntMatrix m{{1, -2, 2, -4, -3, 4},  {-3, 1, -4, 4, -1, -4}, {-3, 2, 2, -3, -1, -3},
                      {4, 2, -4, -3, -1, -4}, {2, -4, -1, -4, 4, -2}, {0, 2, -2, 4, -3, 0}};
    CHECK(char_poly(m).exact_coeffs() == big({-5451, -4982, -490, 105, 10, -5, 1}));
}

TEST_CASE("char_poly errors") {
    CHECK_THROWS_AS(char_poly(DenseMatrix(2, 3), CharPolyMode::exact), std::invalid_argument);
    CHECK_THROWS_AS(char_poly(DenseMatrix(2, 3), CharPolyMode::floating), std::invalid_argument);
    CHECK_THROWS_AS(char_poly(DenseMatrix{{0.5}}, CharPolyMode::exact), std::invalid_argument);
}

TEST_CASE("char_poly: exact and floating agree on integer matrices up to 10x10") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = random_size(rng, 1, 10);
        const DenseMatrix m(random_int_matrix(rng, n, n, -3, 3));
        const Poly exact = char_poly(m, CharPolyMode::exact);
        const Poly fl = char_poly(m, CharPolyMode::floating);
        REQUIRE(exact.degree() == n);
        REQUIRE(fl.degree() == n);
        for (std::size_t k = 0; k <= n; ++k) {
            const double c = exact.coeffs()[k].real();
            CHECK(std::abs(fl.coeffs()[k] - c) <= 1e-7 * std::max(1.0, std::abs(c)));
        }
    }
}

TEST_CASE("char_poly is similarity invariant") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = random_size(rng, 2, 7);
        const DenseMatrix m(random_int_matrix(rng, n, n, -2, 2));
        // Well-conditioned P: identity plus a small perturbation.
        DenseMatrix p = DenseMatrix::identity(n) + 0.3 * random_real_matrix(rng, n, n);
        const DenseMatrix similar = inverse(p) * m * p;
        CHECK(poly_eq(char_poly(similar, CharPolyMode::floating),
                      char_poly(m, CharPolyMode::exact), 1e-7));
    }
}

TEST_CASE("poly arithmetic") {
    const Poly p = Poly::exact(big({2, -3, 1}));
    CHECK(poly_mul(p, Poly()) == p);
    CHECK(poly_pow(Poly::exact(big({-1, 1})), 2).exact_coeffs() == big({1, -2, 1}));
    CHECK(poly_pow(p, 0) == Poly());
    CHECK(poly_eq(poly_mul(p, Poly::floating({1.0})), p));
    CHECK_THROWS_AS(poly_eq(p, Poly()), std::invalid_argument);
    CHECK(zero_root_multiplicity(Poly::exact(big({0, 0, 3, 1}))) == 2);
    CHECK(p(Complex(2.0)) == Complex(0.0));
    CHECK(p.to_string() == "x^2 - 3x + 2");

    // (λ²+λ−σ²)(λ³−λ²−(2+σ²)λ+2) at σ = 1 equals p(5-cycle↑1).
    const Poly quad = Poly::exact(big({-1, 1, 1}));
    const Poly cubic = Poly::exact(big({2, -3, -1, 1}));
    CHECK(poly_mul(quad, cubic) == char_poly(five_cycle_arrow(1.0), CharPolyMode::exact));

    // Tolerance is relative to the largest coefficient.
    const Poly a = Poly::floating({1000.0, 1.0});
    const Poly b = Poly::floating({1000.0 + 1e-6, 1.0});
    CHECK(poly_eq(a, b, 1e-8));
    CHECK_FALSE(poly_eq(a, b, 1e-10));
}

TEST_CASE("eigenvalues") {
    const std::vector<Complex> diag{1.0, 2.0, 3.0};
    CHECK(multisets_close(eigenvalues(DenseMatrix::diagonal(diag)), diag, 1e-12));

    // C4 against the circulant formula 2cos(2πl/4).
    const DenseMatrix c4{{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}};
    std::vector<Complex> expected;
    for (int l = 0; l < 4; ++l) expected.emplace_back(2.0 * std::cos(2.0 * std::numbers::pi * l / 4));
    CHECK(multisets_close(eigenvalues(c4), expected, 1e-12));

    // Jordan block: all eigenvalues zero.
    const DenseMatrix jordan{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    for (auto e : eigenvalues(jordan)) CHECK(std::abs(e) < 1e-12);

    // Rotation: ±i.
    CHECK(multisets_close(eigenvalues(DenseMatrix{{0, -1}, {1, 0}}),
                          std::vector<Complex>{{0, 1}, {0, -1}}, 1e-14));
    CHECK_THROWS_AS(eigenvalues(DenseMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("eigenvalues reproduce the characteristic polynomial") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = random_size(rng, 1, 12);
        const DenseMatrix m = random_complex_matrix(rng, n, n);
        const auto eig = eigenvalues(m);
        REQUIRE(eig.size() == n);
        // Each eigenvalue makes λI − M singular.
        for (const auto& e : eig) {
            DenseMatrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= e;
            CHECK(smallest_singular_vector(shifted).residual < 1e-9 * (1.0 + m.frobenius_norm()));
        }
        // Trace and determinant identities.
        Complex sum = 0.0, prod = 1.0;
        for (const auto& e : eig) {
            sum += e;
            prod *= e;
        }
        CHECK(std::abs(sum - m.trace()) < 1e-9 * (1.0 + std::abs(m.trace())));
        const Complex det = LuDecomposition(m).determinant();
        CHECK(std::abs(prod - det) < 1e-8 * (1.0 + std::abs(det)));
    }
}

TEST_CASE("svd: closed forms") {
    for (auto [m, n] : {std::pair{2, 3}, {3, 2}, {4, 4}, {1, 5}}) {
        const DenseMatrix ones(m, n, 1.0);
        const Svd s = svd(ones);
        REQUIRE(s.sigmas.size() == static_cast<std::size_t>(std::min(m, n)));
        CHECK(s.sigmas[0] == doctest::Approx(std::sqrt(m * n)).epsilon(1e-12));
        for (std::size_t j = 1; j < s.sigmas.size(); ++j) CHECK(s.sigmas[j] < 1e-12);
    }
    const Svd z = svd(DenseMatrix(3, 2));
    for (double v : z.sigmas) CHECK(v == 0.0);

    // G01 of P3 split U0 = {ends}, U1 = {center}: σ² = eigenvalue of G01ᵀG01 = 2.
    const Svd p3 = svd(DenseMatrix{{1}, {1}});
    REQUIRE(p3.sigmas.size() == 1);
    CHECK(p3.sigmas[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(svd(DenseMatrix{{Complex(1, 1)}}), std::invalid_argument);
}

TEST_CASE("svd: reconstruction and orthogonality") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = random_size(rng, 1, 7);
        const std::size_t n = random_size(rng, 1, 7);
        const DenseMatrix a = trial % 2 ? DenseMatrix(random_int_matrix(rng, m, n, 0, 2))
                                        : random_real_matrix(rng, m, n);
        const Svd s = svd(a);
        std::vector<Complex> diag(s.sigmas.begin(), s.sigmas.end());
        DenseMatrix sm(m, n);
        for (std::size_t j = 0; j < diag.size(); ++j) sm(j, j) = diag[j];
        CHECK((a - s.q * sm * s.r.transpose()).frobenius_norm() <= 1e-9 * (1 + a.frobenius_norm()));
        CHECK(max_abs_diff(s.q.transpose() * s.q, DenseMatrix::identity(m)) <= 1e-10);
        CHECK(max_abs_diff(s.r.transpose() * s.r, DenseMatrix::identity(n)) <= 1e-10);
        for (std::size_t j = 0; j + 1 < s.sigmas.size(); ++j) CHECK(s.sigmas[j] >= s.sigmas[j + 1]);
        CHECK(s.q.is_real());
    }
}

TEST_CASE("svd of a bipartite block gives the nonnegative eigenvalues of the bipartite graph") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = random_size(rng, 1, 5);
        const std::size_t n = random_size(rng, 1, 5);
        const DenseMatrix g01(random_int_matrix(rng, m, n, 0, 2));
        const DenseMatrix full = block2x2(DenseMatrix(m, m), g01, g01.transpose(), DenseMatrix(n, n));
        auto eig = eigenvalues(full);
        std::vector<double> real_eig;
        for (auto e : eig) real_eig.push_back(e.real());
        std::sort(real_eig.rbegin(), real_eig.rend());
        const Svd s = svd(g01);
        for (std::size_t j = 0; j < s.sigmas.size(); ++j)
            CHECK(std::abs(s.sigmas[j] - real_eig[j]) <= 1e-8);
    }
}

TEST_CASE("null space and completion") {
    const DenseMatrix a{{1, 1, 0}, {0, 0, 1}};
    const DenseMatrix ns = null_space(a, 1e-12);
    REQUIRE(ns.cols() == 1);
    const auto v = ns.column(0);
    CHECK(norm(a * std::span<const Complex>(v)) < 1e-14);

    std::mt19937 rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = random_size(rng, 1, 6);
        const auto x = random_complex_matrix(rng, n, 1).column(0);
        const DenseMatrix u = unitary_completion(x);
        CHECK(max_abs_diff(u.adjoint() * u, DenseMatrix::identity(n)) < 1e-13);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(u(i, 0) - x[i] / norm(x)) < 1e-14);
    }
    CHECK_THROWS_AS(unitary_completion(std::vector<Complex>(3, 0.0)), std::invalid_argument);
}

TEST_CASE("LU") {
    const DenseMatrix a{{2, 1}, {4, 3}};
    CHECK(std::abs(LuDecomposition(a).determinant() - 2.0) < 1e-14);
    CHECK(max_abs_diff(a * inverse(a), DenseMatrix::identity(2)) < 1e-14);
    LuDecomposition singular(DenseMatrix{{1, 2}, {2, 4}});
    CHECK(singular.singular());
    CHECK_THROWS_AS(singular.solve(std::vector<Complex>{1.0, 1.0}), NumericalError);
}

TEST_CASE("principal square root") {
    CHECK(principal_sqrt(4.0) == Complex(2.0));
    CHECK(principal_sqrt(Complex(-4.0, -0.0)) == Complex(0.0, 2.0));
    CHECK(principal_sqrt(Complex(-4.0, 0.0)) == Complex(0.0, 2.0));
    CHECK(principal_sqrt(Complex(0.0, -2.0)).real() > 0.0);
}

TEST_CASE("multiset distance") {
    const std::vector<Complex> a{1.0, 2.0, 2.0};
    const std::vector<Complex> b{2.0, 1.0 + 1e-9, 2.0};
    CHECK(multisets_close(a, b, 1e-8));
    CHECK(multiset_distance(a, b) == doctest::Approx(1e-9).epsilon(1e-3));
    CHECK_FALSE(multisets_close(a, std::vector<Complex>{1.0, 1.0, 2.0}, 0.5));
    CHECK(std::isinf(multiset_distance(a, std::vector<Complex>{1.0})));
}
