#pragma once
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "detail/sobol_directions.hpp"
#include "philox.hpp"

// Base-2 digital nets (Sobol' direction numbers) with per-set randomization:
// a linear matrix scramble in GF(2) followed by a digital shift. Both
// operations preserve the net's dyadic equidistribution, so every randomized
// set keeps the one-point-per-interval property in each coordinate.
namespace mlrisk {

enum class point_kind { pseudo_random, scrambled_net };

struct PointSet {
    std::size_t m = 0; // number of points
    std::size_t s = 0; // dimension
    point_kind kind = point_kind::pseudo_random;
    std::uint64_t scramble_seed = 0;
    std::vector<double> pts; // row-major m x s, all coordinates in (0,1)

    double at(std::size_t i, std::size_t j) const { return pts[i * s + j]; }
};

namespace detail {

// Unscrambled 30-bit integer Sobol' points in Gray-code order; the first 2^j
// points of any prefix form a digital net in their own right.
inline std::vector<std::uint32_t> sobol_points_raw(std::size_t m, std::size_t s) {
    if (s == 0 || s > static_cast<std::size_t>(sobol_max_dim))
        throw std::invalid_argument("sobol_points_raw: dimension out of range");
    std::vector<std::uint32_t> out(m * s, 0);
    for (std::size_t i = 1; i < m; ++i) {
        const int j = std::countr_zero(i);
        for (std::size_t t = 0; t < s; ++t)
            out[i * s + t] = out[(i - 1) * s + t] ^ sobol_directions[t][j];
    }
    return out;
}

// Random lower-triangular GF(2) matrix with unit diagonal, applied to a
// 30-bit column vector. Row r of the matrix touches only columns 0..r, which
// keeps every leading minor nonsingular -- the scramble cannot destroy
// stratification.
struct lms_matrix {
    std::uint32_t rows[sobol_bit_count];

    static lms_matrix draw(RngStream& stream) {
        lms_matrix m{};
        for (int r = 0; r < sobol_bit_count; ++r) {
            // bit position 29-c holds column c; keep random bits strictly left
            // of the diagonal, force the diagonal to 1
            const std::uint32_t rnd = static_cast<std::uint32_t>(stream.next_u64() >> 34);
            const std::uint32_t above = r == 0 ? 0u : (~0u << (30 - r)) & 0x3FFFFFFFu;
            m.rows[r] = (rnd & above) | (1u << (29 - r));
        }
        return m;
    }

    std::uint32_t apply(std::uint32_t v) const {
        std::uint32_t y = 0;
        for (int r = 0; r < sobol_bit_count; ++r)
            y |= static_cast<std::uint32_t>(std::popcount(rows[r] & v) & 1) << (29 - r);
        return y;
    }
};

} // namespace detail

inline bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

// Randomized digital net: m must be a power of 2 (m <= 2^30). Distinct
// scramble seeds give independent randomizations of the same underlying net.
inline PointSet scrambled_net(std::size_t m, std::size_t s, std::uint64_t scramble_seed) {
    if (!is_power_of_two(m) || m > (std::size_t{1} << 30))
        throw std::invalid_argument("scrambled_net: point count must be a power of 2 (<= 2^30)");
    if (s == 0 || s > static_cast<std::size_t>(detail::sobol_max_dim))
        throw std::invalid_argument("scrambled_net: dimension out of range");

    // Scrambled direction numbers: scrambling a linear generator is the same
    // as scrambling every generated point.
    std::vector<std::uint32_t> dirs(s * detail::sobol_bit_count);
    std::vector<std::uint64_t> shift(s);
    for (std::size_t t = 0; t < s; ++t) {
        RngStream ms(scramble_seed, stream_purpose::scramble, 0, t);
        const auto lms = detail::lms_matrix::draw(ms);
        for (int j = 0; j < detail::sobol_bit_count; ++j)
            dirs[t * detail::sobol_bit_count + j] = lms.apply(detail::sobol_directions[t][j]);
        RngStream ss(scramble_seed, stream_purpose::shift, 0, t);
        shift[t] = ss.next_u64();
    }

    PointSet set;
    set.m = m;
    set.s = s;
    set.kind = point_kind::scrambled_net;
    set.scramble_seed = scramble_seed;
    set.pts.resize(m * s);

    std::vector<std::uint32_t> x(s, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0) {
            const int j = std::countr_zero(i);
            for (std::size_t t = 0; t < s; ++t)
                x[t] ^= dirs[t * detail::sobol_bit_count + j];
        }
        for (std::size_t t = 0; t < s; ++t) {
            // net bits occupy the top 30 positions; the shift fills the rest
            const std::uint64_t word = (static_cast<std::uint64_t>(x[t]) << 34) ^ shift[t];
            double u = static_cast<double>(word >> 11) * 0x1.0p-53;
            if (u == 0.0)
                u = 0x1.0p-54;
            set.pts[i * s + t] = u;
        }
    }
    return set;
}

// I.i.d. uniforms in the same container, for transport-map comparisons.
inline PointSet pseudo_random_points(std::size_t m, std::size_t s, RngStream stream) {
    if (s == 0)
        throw std::invalid_argument("pseudo_random_points: dimension out of range");
    PointSet set;
    set.m = m;
    set.s = s;
    set.kind = point_kind::pseudo_random;
    set.scramble_seed = 0;
    set.pts.resize(m * s);
    for (auto& u : set.pts)
        u = stream.next_uniform();
    return set;
}

} // namespace mlrisk
