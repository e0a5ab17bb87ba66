#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadrant/error.hpp"
#include "quadrant/rng.hpp"
#include "quadrant/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

using namespace quadrant;

namespace {

RealMatrix random_symmetric(std::size_t n, CounterRng& rng) {
    RealMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = rng.uniform(-1, 1);
    return a;
}

RealMatrix random_projection(std::size_t n, std::size_t rank, CounterRng& rng) {
    RealMatrix v(n, rank);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rank; ++j) v(i, j) = rng.uniform(-1, 1);
    Eigen::HouseholderQR<RealMatrix> qr(v);
    const RealMatrix q = qr.householderQ() * RealMatrix::Identity(n, rank);
    return q * q.transpose();
}

}  // namespace

TEST_CASE("eigenvalues agree with a reference solver") {
    CounterRng rng(3);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u, 24u}) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto a = random_symmetric(n, rng);
            const auto mine = spectral_decomposition(a);
            Eigen::SelfAdjointEigenSolver<RealMatrix> reference(a);
            std::vector<double> ref(reference.eigenvalues().data(), reference.eigenvalues().data() + n);
            std::sort(ref.rbegin(), ref.rend());
            REQUIRE(mine.eigenvalues.size() == n);
            for (std::size_t i = 0; i < n; ++i) CHECK(mine.eigenvalues[i] == doctest::Approx(ref[i]).epsilon(1e-10));
            CHECK(std::is_sorted(mine.eigenvalues.rbegin(), mine.eigenvalues.rend()));
            CHECK((mine.reconstruct() - a).norm() < 1e-10 * std::max(1.0, a.norm()));
            const RealMatrix gram = mine.eigenvectors.transpose() * mine.eigenvectors;
            CHECK((gram - RealMatrix::Identity(n, n)).norm() < 1e-10);
        }
    }
}

TEST_CASE("repeated eigenvalues") {
    RealMatrix a = RealMatrix::Identity(6, 6) * 2.0;
    a(0, 0) = 5;
    const auto s = spectral_decomposition(a);
    CHECK(s.eigenvalues.front() == doctest::Approx(5));
    for (std::size_t i = 1; i < 6; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(2));
    CHECK(spectral_decomposition(RealMatrix::Zero(4, 4)).eigenvalues == std::vector<double>(4, 0.0));
}

TEST_CASE("rejects nonsymmetric input and reports nonconvergence") {
    RealMatrix a(2, 2);
    a << 1, 2, 3, 4;
    CHECK_FALSE(is_symmetric(a));
    CHECK_THROWS_AS(spectral_decomposition(a), DomainError);
    CounterRng rng(5);
    JacobiOptions no_sweeps;
    no_sweeps.max_sweeps = 0;
    CHECK_THROWS_AS(spectral_decomposition(random_symmetric(5, rng), no_sweeps), ConsistencyError);
}

TEST_CASE("eta") {
    CHECK(eta(0) == 0);
    CHECK(eta(1) == 0);
    CHECK(eta(0.5) == doctest::Approx(0.5 * std::log(2.0)));
    CHECK(eta(1 / std::exp(1.0)) == doctest::Approx(1 / std::exp(1.0)));
}

TEST_CASE("eta trace of projections and scalars") {
    CounterRng rng(9);
    const auto p = random_projection(6, 2, rng);
    CHECK(eta_trace(p) == doctest::Approx(0).scale(1));
    const RealMatrix half = RealMatrix::Identity(4, 4) * 0.5;
    CHECK(eta_trace(half) == doctest::Approx(0.5 * std::log(2.0)));
    const RealMatrix negative = RealMatrix::Identity(3, 3) * -0.1;
    CHECK_THROWS_AS(eta_trace(negative), DomainError);
    const RealMatrix tiny = RealMatrix::Identity(3, 3) * -1e-8;
    CHECK(eta_trace(tiny) == 0);
}

TEST_CASE("norms and extreme eigenvalues") {
    RealMatrix a(2, 2);
    a << 2, 1, 1, 2;
    CHECK(operator_norm(a) == doctest::Approx(3));
    CHECK(min_eigenvalue(a) == doctest::Approx(1));
    RealMatrix b(2, 2);
    b << 0, 1, 1, 0;
    CHECK(operator_norm(b) == doctest::Approx(1));
    CHECK(min_eigenvalue(b) == doctest::Approx(-1));
    DenseOperator d(2);
    d(0, 0) = make_rational(1, 3);
    d(1, 1) = make_rational(-2, 3);
    CHECK(operator_norm(d) == doctest::Approx(2.0 / 3));
}

TEST_CASE("projection join") {
    CounterRng rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        const auto p = random_projection(7, 2, rng);
        const auto q = random_projection(7, 3, rng);
        const auto j = projection_join(p, q);
        CHECK((j * j - j).norm() < 1e-9);
        CHECK((j * p - p).norm() < 1e-9);
        CHECK((j * q - q).norm() < 1e-9);
        CHECK(j.trace() == doctest::Approx(5));  // generic ranges are independent
    }
    const auto p = DenseOperator::diagonal_projection(4, std::vector<std::size_t>{0, 1});
    const auto q = DenseOperator::diagonal_projection(4, std::vector<std::size_t>{1, 2});
    const auto j = projection_join(p, q);
    CHECK(j.trace() == doctest::Approx(3));
    CHECK(j(3, 3) == doctest::Approx(0));
    RealMatrix not_projection = RealMatrix::Identity(2, 2) * 0.5;
    CHECK_THROWS_AS(projection_join(not_projection, not_projection), DomainError);
}

TEST_CASE("inverse square root") {
    CounterRng rng(21);
    for (int rep = 0; rep < 10; ++rep) {
        RealMatrix v = random_symmetric(5, rng);
        const RealMatrix a = v * v.transpose() + RealMatrix::Identity(5, 5) * 0.1;
        const auto r = inverse_sqrt(a);
        CHECK((r * a * r - RealMatrix::Identity(5, 5)).norm() < 1e-9);
    }
    RealMatrix singular = RealMatrix::Zero(3, 3);
    singular(0, 0) = 4;
    const auto r = inverse_sqrt(singular);
    CHECK(r(0, 0) == doctest::Approx(0.5));
    CHECK(r(1, 1) == 0);
}

TEST_CASE("functional calculus") {
    RealMatrix a(2, 2);
    a << 2, 1, 1, 2;
    const auto s = spectral_decomposition(a);
    const RealMatrix sq = s.apply([](double t) { return t * t; });
    CHECK((sq - a * a).norm() < 1e-12);
}
