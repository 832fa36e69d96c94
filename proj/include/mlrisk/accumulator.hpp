#pragma once
#include <cmath>
#include <cstdint>
#include <stdexcept>

// Streaming moment accumulation for level-difference samples. Raw power sums
// up to Y^4 are kept with Neumaier-compensated addition: the fourth-moment
// sums cancel brutally once level variances shrink, and the compensation is
// what keeps merge order irrelevant to ~1e-12.
namespace mlrisk {

namespace detail {
struct comp_sum {
    double s = 0.0; // running sum
    double c = 0.0; // compensation

    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    void add(const comp_sum& o) {
        add(o.s);
        c += o.c;
    }
    double value() const { return s + c; }
};
} // namespace detail

struct LevelSample {
    double y = 0.0;          // the level-difference sample
    std::uint64_t cost = 0;  // inner payoffs + root/quadrature charges
};

struct LevelAccumulator {
    unsigned level = 0;
    std::uint64_t n = 0;
    std::uint64_t cost_units = 0;

    explicit LevelAccumulator(unsigned level_ = 0) : level(level_) {}

    void add(double y, std::uint64_t cost) {
        if (!std::isfinite(y))
            throw std::invalid_argument("LevelAccumulator: non-finite sample rejected");
        ++n;
        cost_units += cost;
        s1_.add(y);
        const double y2 = y * y;
        s2_.add(y2);
        s3_.add(y2 * y);
        s4_.add(y2 * y2);
    }
    void add(const LevelSample& s) { add(s.y, s.cost); }

    void merge(const LevelAccumulator& o) {
        if (o.level != level)
            throw std::invalid_argument("LevelAccumulator: merging different levels");
        n += o.n;
        cost_units += o.cost_units;
        s1_.add(o.s1_);
        s2_.add(o.s2_);
        s3_.add(o.s3_);
        s4_.add(o.s4_);
    }

    double sum() const { return s1_.value(); }
    double mean() const { return n ? s1_.value() / static_cast<double>(n) : 0.0; }

    // Unbiased sample variance; 0 until two samples exist.
    double variance() const {
        if (n < 2)
            return 0.0;
        const double nn = static_cast<double>(n);
        const double m = mean();
        const double v = (s2_.value() - nn * m * m) / (nn - 1.0);
        return v > 0.0 ? v : 0.0;
    }

    double std_error() const {
        return n ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
    }

    // Deep levels yield too few samples for a meaningful 4th moment, and a
    // (near-)degenerate sample makes the ratio blow up; report availability
    // separately so callers can say "unavailable" instead of printing noise.
    bool kurtosis_available() const {
        if (n < 100)
            return false;
        const double m = mean();
        return variance() > 1e-12 * (m * m + 1e-30);
    }

    // Population kurtosis M4 / M2^2 (Gaussian = 3).
    double kurtosis() const {
        const double nn = static_cast<double>(n);
        const double m = mean();
        const double m2 = s2_.value() / nn - m * m;
        if (!(m2 > 0.0))
            return std::nan("");
        const double m4 = s4_.value() / nn - 4.0 * m * s3_.value() / nn +
                          6.0 * m * m * s2_.value() / nn - 3.0 * m * m * m * m;
        return m4 / (m2 * m2);
    }

    double mean_cost() const { return n ? static_cast<double>(cost_units) / static_cast<double>(n) : 0.0; }

private:
    detail::comp_sum s1_, s2_, s3_, s4_;
};

inline void accumulate(LevelAccumulator& acc, const LevelSample& s) { acc.add(s); }

inline LevelAccumulator merge(LevelAccumulator a, const LevelAccumulator& b) {
    a.merge(b);
    return a;
}

} // namespace mlrisk
