#pragma once
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Just enough dense linear algebra for the factor model: a lower-triangular
// volatility factor and the Cholesky routine that produces it.
namespace mlrisk {

struct LowerTriangular {
    std::size_t d = 0;
    std::vector<double> a; // row-major d x d, entries above the diagonal zero

    LowerTriangular() = default;
    explicit LowerTriangular(std::size_t d_) : d(d_), a(d_ * d_, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a[i * d + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * d + j]; }

    // Euclidean norm of row i: the marginal volatility of asset i under the
    // factor model.
    double row_norm(std::size_t i) const {
        double s = 0.0;
        for (std::size_t j = 0; j <= i; ++j)
            s += at(i, j) * at(i, j);
        return std::sqrt(s);
    }

    // y = L * z for a length-d vector z.
    void apply(const double* z, double* y) const {
        for (std::size_t i = 0; i < d; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j <= i; ++j)
                s += at(i, j) * z[j];
            y[i] = s;
        }
    }
};

// Symmetric matrix in row-major order; only the lower part is read.
inline LowerTriangular cholesky(const std::vector<double>& C, std::size_t d) {
    if (C.size() != d * d)
        throw std::invalid_argument("cholesky: matrix size does not match dimension");
    LowerTriangular L(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = C[i * d + j];
            for (std::size_t k = 0; k < j; ++k)
                s -= L.at(i, k) * L.at(j, k);
            if (i == j) {
                if (s <= 0.0)
                    throw std::domain_error("cholesky: matrix not positive definite (pivot " +
                                            std::to_string(i) + ")");
                L.at(i, i) = std::sqrt(s);
            } else {
                L.at(i, j) = s / L.at(j, j);
            }
        }
    }
    return L;
}

} // namespace mlrisk
