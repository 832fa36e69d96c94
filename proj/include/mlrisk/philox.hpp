#pragma once
#include <cstdint>
#include <stdexcept>

// Counter-based RNG (Philox 4x64, 10 rounds). Every draw is a pure function of
// (seed, stream id, draw index), so any worker can address any stream position
// directly -- no sequential fast-forward, bit-exact replay for free.
namespace mlrisk {

struct philox_block {
    std::uint64_t w[4];
};

namespace detail {
inline constexpr std::uint64_t philox_m0 = 0xD2E7470EE14C6C93ULL;
inline constexpr std::uint64_t philox_m1 = 0xCA5A826395121157ULL;
inline constexpr std::uint64_t philox_w0 = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t philox_w1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
    const __uint128_t p = static_cast<__uint128_t>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    return static_cast<std::uint64_t>(p);
}
} // namespace detail

inline philox_block philox4x64(philox_block c, std::uint64_t k0, std::uint64_t k1) {
    for (int r = 0; r < 10; ++r) {
        std::uint64_t hi0, hi1;
        const std::uint64_t lo0 = detail::mulhilo(detail::philox_m0, c.w[0], hi0);
        const std::uint64_t lo1 = detail::mulhilo(detail::philox_m1, c.w[2], hi1);
        c = philox_block{{hi1 ^ c.w[1] ^ k0, lo1, hi0 ^ c.w[3] ^ k1, lo0}};
        k0 += detail::philox_w0;
        k1 += detail::philox_w1;
    }
    return c;
}

// Stream ids pack (purpose, level, outer index) so that every logical consumer
// of randomness in a run owns a distinct, addressable stream.
enum class stream_purpose : std::uint64_t {
    generic  = 0,
    outer    = 1, // outer scenario draws
    inner    = 2, // inner payoff batches
    scramble = 3, // digital-net scrambling matrices
    shift    = 4, // digital-net shifts
};

inline constexpr std::uint64_t pack_stream_id(stream_purpose p, unsigned level,
                                              std::uint64_t index) {
    // 8 bits purpose | 8 bits level | 48 bits index
    return (static_cast<std::uint64_t>(p) << 56) |
           (static_cast<std::uint64_t>(level & 0xFFu) << 48) |
           (index & 0xFFFFFFFFFFFFULL);
}

struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
    std::uint64_t draw = 0; // index of the next 64-bit word

    RngStream() = default;
    RngStream(std::uint64_t seed_, std::uint64_t stream_id_)
        : seed(seed_), stream_id(stream_id_) {}
    RngStream(std::uint64_t seed_, stream_purpose p, unsigned level, std::uint64_t index)
        : seed(seed_), stream_id(pack_stream_id(p, level, index)) {}

    std::uint64_t next_u64() {
        const std::uint64_t block = draw >> 2;
        if (block != cached_block_) {
            buf_ = philox4x64(philox_block{{block, 0, 0, 0}}, seed, stream_id);
            cached_block_ = block;
        }
        return buf_.w[draw++ & 3];
    }

    // Uniform on the open interval (0,1): 53 leading bits plus a half-ulp
    // offset, so inverse-CDF transforms never see 0 or 1.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    void seek(std::uint64_t draw_index) { draw = draw_index; }

private:
    philox_block buf_{};
    std::uint64_t cached_block_ = ~0ULL;
};

} // namespace mlrisk
