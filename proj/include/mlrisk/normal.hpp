#pragma once
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "philox.hpp"

// Standard normal distribution kernels. The inverse CDF is the single
// transport map shared by pseudo-random and quasi-random sampling, so its
// accuracy bounds the agreement between those two paths.
namespace mlrisk {

inline double std_normal_pdf(double x) {
    return 0.3989422804014326779 * std::exp(-0.5 * x * x);
}

// Phi via erfc keeps full relative accuracy deep into the left tail.
inline double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.70710678118654752440);
}

namespace detail {
// Acklam's rational approximation to Phi^{-1} (peak relative error ~1.15e-9),
// used as the starting point for one Halley step.
inline double inv_cdf_seed(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    static constexpr double plow = 0.02425;

    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}
} // namespace detail

inline double std_normal_inv_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("std_normal_inv_cdf: p must lie in (0,1)");
    double x = detail::inv_cdf_seed(p);
    // One Halley step on Phi(x) - p drives the round-trip error to rounding level.
    const double e = std_normal_cdf(x) - p;
    const double u = e * 2.5066282746310005024 * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

inline double draw_normal(RngStream& stream) {
    return std_normal_inv_cdf(stream.next_uniform());
}

inline std::vector<double> normal_vector(RngStream stream, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("normal_vector: n must be >= 1");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = draw_normal(stream);
    return out;
}

} // namespace mlrisk
