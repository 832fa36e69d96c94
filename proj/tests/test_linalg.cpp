#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <mlrisk/linalg.hpp>
#include <mlrisk/normal.hpp>

using namespace mlrisk;

namespace {
// the experiment's covariance: C_11 = 0.3, row/column 1 otherwise zero,
// C_ij = 0.3 * 0.98^|i-j| among the remaining assets
std::vector<double> experiment_cov(std::size_t d) {
    std::vector<double> C(d * d, 0.0);
    C[0] = 0.3;
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 1; j < d; ++j)
            C[i * d + j] = 0.3 * std::pow(0.98, std::abs(static_cast<double>(i) -
                                                         static_cast<double>(j)));
    return C;
}

double max_reconstruction_error(const LowerTriangular& L, const std::vector<double>& C) {
    double worst = 0.0;
    for (std::size_t i = 0; i < L.d; ++i)
        for (std::size_t j = 0; j < L.d; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < L.d; ++k)
                s += L.at(i, k) * L.at(j, k);
            worst = std::max(worst, std::abs(s - C[i * L.d + j]));
        }
    return worst;
}
} // namespace

TEST_CASE("cholesky of 1x1 and identity", "[linalg]") {
    const auto L1 = cholesky({0.3}, 1);
    CHECK(L1.at(0, 0) == Catch::Approx(std::sqrt(0.3)).epsilon(1e-15));

    std::vector<double> I(9, 0.0);
    I[0] = I[4] = I[8] = 1.0;
    const auto L3 = cholesky(I, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(L3.at(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("cholesky reproduces the experiment covariance", "[linalg]") {
    const auto C = experiment_cov(4);
    const auto L = cholesky(C, 4);
    CHECK(max_reconstruction_error(L, C) < 1e-12);

    // cross-checked factor entries
    CHECK(L.at(0, 0) == Catch::Approx(0.54772255750516607).epsilon(1e-13));
    CHECK(L.at(2, 1) == Catch::Approx(0.53676810635506278).epsilon(1e-13));
    CHECK(L.at(2, 2) == Catch::Approx(0.10899541274750971).epsilon(1e-13));
    CHECK(L.at(3, 3) == Catch::Approx(0.10899541274750971).epsilon(1e-13));

    // separability: the first asset is driven only by the first factor
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(L.at(i, 0) == 0.0);
        CHECK(L.at(0, i) == 0.0);
    }
    // every marginal volatility is sqrt(0.3)
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(L.row_norm(i) == Catch::Approx(std::sqrt(0.3)).epsilon(1e-13));
}

TEST_CASE("cholesky round trip on random SPD matrices", "[linalg]") {
    RngStream s(31337, stream_purpose::generic, 0, 0);
    for (const std::size_t d : {3u, 8u, 16u}) {
        // A*A^T + d*I is comfortably positive definite
        std::vector<double> A(d * d);
        for (auto& x : A)
            x = draw_normal(s);
        std::vector<double> C(d * d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                double v = 0.0;
                for (std::size_t k = 0; k < d; ++k)
                    v += A[i * d + k] * A[j * d + k];
                C[i * d + j] = v + (i == j ? static_cast<double>(d) : 0.0);
            }
        const auto L = cholesky(C, d);
        CHECK(max_reconstruction_error(L, C) < 1e-10);
        for (std::size_t i = 0; i < d; ++i)
            CHECK(L.at(i, i) > 0.0);
    }
}

TEST_CASE("cholesky reports the failing pivot", "[linalg]") {
    // indefinite: second pivot goes negative
    CHECK_THROWS_WITH(cholesky({1.0, 2.0, 2.0, 1.0}, 2),
                      Catch::Matchers::ContainsSubstring("pivot 1"));
    CHECK_THROWS_AS(cholesky({1.0, 0.0}, 2), std::invalid_argument);
}

TEST_CASE("lower-triangular apply matches manual product", "[linalg]") {
    auto L = LowerTriangular(3);
    L.at(0, 0) = 2.0;
    L.at(1, 0) = 0.5;
    L.at(1, 1) = 1.5;
    L.at(2, 0) = -1.0;
    L.at(2, 1) = 0.25;
    L.at(2, 2) = 3.0;
    const double z[3] = {1.0, -2.0, 0.5};
    double y[3];
    L.apply(z, y);
    CHECK(y[0] == Catch::Approx(2.0));
    CHECK(y[1] == Catch::Approx(0.5 - 3.0));
    CHECK(y[2] == Catch::Approx(-1.0 - 0.5 + 1.5));
}
