#pragma once
// Level-difference samplers for every method variant. One coupled sample at
// level l draws a fresh scenario, evaluates the fine estimator on m_l inner
// payoffs and the coarse one on the first half (antithetic: both halves) of
// the same batch. Inner batches are plain normal draws or, for the QMC
// variants, a scrambled digital net pushed through the inverse normal CDF.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <mlrisk/accumulator.hpp>
#include <mlrisk/model.hpp>
#include <mlrisk/philox.hpp>
#include <mlrisk/smoothing.hpp>
#include <mlrisk/sobol.hpp>

namespace mlrisk {

enum class MethodKind {
    NestedMC,
    StdMLMC,
    SmoothedMLMC,
    SmoothedAMLMC,
    SmoothedMLQMC,
    SmoothedAMLQMC,
};

inline const char* method_name(MethodKind k) {
    switch (k) {
    case MethodKind::NestedMC: return "nested";
    case MethodKind::StdMLMC: return "std_mlmc";
    case MethodKind::SmoothedMLMC: return "smoothed_mlmc";
    case MethodKind::SmoothedAMLMC: return "smoothed_amlmc";
    case MethodKind::SmoothedMLQMC: return "smoothed_mlqmc";
    case MethodKind::SmoothedAMLQMC: return "smoothed_amlqmc";
    }
    return "unknown";
}

// inner-batch schedule m_l = m0 * 2^l
inline std::size_t level_inner_count(int level, std::size_t m0 = 32) {
    return m0 << static_cast<unsigned>(level);
}

// Evaluate the preintegrated indicator in the configured mode. The numerical
// mode frames the root search in the standardized factor variable with the
// closed-form first-asset price as the smooth proxy.
inline SmoothedIndicator smoothed_eval(const ModelSpec& spec, double loss_rest,
                                       const SmoothingParams& params, double psi_hint = 0.0) {
    if (params.mode == smoothing_mode::analytic)
        return analytic_smoothed_indicator_ex(spec, loss_rest, params, psi_hint);
    if (!(loss_rest > 0.0))
        return {0.0, 0, true, false, 0.0, 0.0};
    const double k = spec.K[0], r = spec.mu0;
    const double sig = spec.vol(0);
    const double tt = spec.T - spec.tau;
    const double srt = sig * std::sqrt(spec.tau);
    const double m_drift = std::log(spec.S0[0]) + (spec.mu - 0.5 * sig * sig) * spec.tau;
    const double llr = std::log(loss_rest);
    const auto price_at = [&](double z) {
        return bs_call_price(std::exp(m_drift + srt * z), k, r, sig, tt);
    };
    auto out = numerical_smoothed_indicator_ex(
        [&](double z) { return price_at(z) < loss_rest ? 1.0 : 0.0; },
        [&](double z) { return std::log(price_at(z)) - llr; }, StdNormalDensity{},
        [&](double z) {
            const double s = std::exp(m_drift + srt * z);
            return srt * s * bs_call_delta(s, k, r, sig, tt) / price_at(z);
        },
        0.0, params);
    return out;
}

inline std::uint64_t smoothing_charge(const SmoothedIndicator& si, const SmoothingParams& p) {
    const auto quad = p.mode == smoothing_mode::numerical ? static_cast<std::uint64_t>(p.m_lag) : 0u;
    return static_cast<std::uint64_t>(si.newton_iterations) + quad;
}

namespace detail {

// fine and coarse terms of one coupled level sample (level 0: coarse = 0)
struct LevelTerms {
    double fine = 0.0;
    double coarse = 0.0;
    std::uint64_t cost = 0;
};

inline LevelTerms level_terms_std(const InnerKernel& kern, int level, std::uint64_t outer_index,
                                  std::uint64_t seed, std::size_t m0 = 32) {
    const ModelSpec& spec = kern.spec;
    RngStream os(seed, stream_purpose::outer, static_cast<unsigned>(level), outer_index);
    const Scenario scen = sample_outer(spec, os);
    RngStream ws(seed, stream_purpose::inner, static_cast<unsigned>(level), outer_index);
    const std::size_t mf = level_inner_count(level, m0);
    const std::size_t mc = level > 0 ? mf / 2 : 0;
    double w[64];
    comp_sum sum;
    double coarse_sum = 0.0;
    for (std::size_t j = 0; j < mf; ++j) {
        for (std::size_t i = 0; i < spec.d; ++i)
            w[i] = draw_normal(ws);
        sum.add(kern.payoff(scen, w));
        if (j + 1 == mc)
            coarse_sum = sum.value();
    }
    LevelTerms t;
    t.fine = kern.v0 - sum.value() / static_cast<double>(mf) > spec.c ? 1.0 : 0.0;
    if (level > 0)
        t.coarse = kern.v0 - coarse_sum / static_cast<double>(mc) > spec.c ? 1.0 : 0.0;
    t.cost = mf;
    return t;
}

inline LevelTerms level_terms_smoothed(const InnerKernel& kern, int level,
                                       std::uint64_t outer_index, std::uint64_t seed,
                                       const SmoothingParams& params, std::size_t m0 = 32) {
    const ModelSpec& spec = kern.spec;
    RngStream os(seed, stream_purpose::outer, static_cast<unsigned>(level), outer_index);
    const Scenario scen = sample_outer(spec, os);
    RngStream ws(seed, stream_purpose::inner, static_cast<unsigned>(level), outer_index);
    const std::size_t mf = level_inner_count(level, m0);
    const std::size_t mc = level > 0 ? mf / 2 : 0;
    double w[64];
    comp_sum sum;
    double coarse_sum = 0.0;
    for (std::size_t j = 0; j < mf; ++j) {
        for (std::size_t i = 0; i + 1 < spec.d; ++i)
            w[i] = draw_normal(ws);
        sum.add(kern.payoff_rest(scen, w));
        if (j + 1 == mc)
            coarse_sum = sum.value();
    }
    LevelTerms t;
    t.cost = mf;
    double hint = 0.0;
    if (level > 0) {
        const double lr_c = kern.v0 - coarse_sum / static_cast<double>(mc) - spec.c;
        const auto hc = smoothed_eval(spec, lr_c, params);
        t.coarse = hc.value;
        t.cost += smoothing_charge(hc, params);
        hint = hc.psi; // roots drift O(m^-1/2) between levels
    }
    const double lr_f = kern.v0 - sum.value() / static_cast<double>(mf) - spec.c;
    const auto hf = smoothed_eval(spec, lr_f, params, hint);
    t.fine = hf.value;
    t.cost += smoothing_charge(hf, params);
    return t;
}

inline LevelTerms level_terms_antithetic(const InnerKernel& kern, int level,
                                         std::uint64_t outer_index, std::uint64_t seed,
                                         const SmoothingParams& params, std::size_t m0 = 32) {
    if (level == 0)
        return level_terms_smoothed(kern, 0, outer_index, seed, params, m0);
    const ModelSpec& spec = kern.spec;
    RngStream os(seed, stream_purpose::outer, static_cast<unsigned>(level), outer_index);
    const Scenario scen = sample_outer(spec, os);
    RngStream ws(seed, stream_purpose::inner, static_cast<unsigned>(level), outer_index);
    const std::size_t mf = level_inner_count(level, m0);
    const std::size_t mc = mf / 2;
    double w[64];
    comp_sum sum;
    double half1 = 0.0;
    for (std::size_t j = 0; j < mf; ++j) {
        for (std::size_t i = 0; i + 1 < spec.d; ++i)
            w[i] = draw_normal(ws);
        sum.add(kern.payoff_rest(scen, w));
        if (j + 1 == mc)
            half1 = sum.value();
    }
    const double half2 = sum.value() - half1;
    const auto h1 = smoothed_eval(spec, kern.v0 - half1 / static_cast<double>(mc) - spec.c, params);
    const auto h2 = smoothed_eval(spec, kern.v0 - half2 / static_cast<double>(mc) - spec.c, params,
                                  h1.psi);
    const auto hf = smoothed_eval(spec, kern.v0 - sum.value() / static_cast<double>(mf) - spec.c,
                                  params, h1.psi);
    LevelTerms t;
    t.fine = hf.value;
    t.coarse = 0.5 * (h1.value + h2.value);
    t.cost = mf + smoothing_charge(h1, params) + smoothing_charge(h2, params) +
             smoothing_charge(hf, params);
    return t;
}

inline std::uint64_t derive_scramble_seed(std::uint64_t seed, int level, std::uint64_t outer_index) {
    const philox_block c{outer_index, 0, 0, 0};
    return philox4x64(c, seed,
                      pack_stream_id(stream_purpose::scramble, static_cast<unsigned>(level), 0))
        .w[0];
}

inline LevelTerms level_terms_qmc(const InnerKernel& kern, int level, std::uint64_t outer_index,
                                  std::uint64_t seed, const SmoothingParams& params,
                                  bool antithetic, std::size_t m0 = 32,
                                  point_kind kind = point_kind::scrambled_net) {
    const ModelSpec& spec = kern.spec;
    RngStream os(seed, stream_purpose::outer, static_cast<unsigned>(level), outer_index);
    const Scenario scen = sample_outer(spec, os);
    const std::size_t mf = level_inner_count(level, m0);
    const std::size_t mc = level > 0 ? mf / 2 : 0;
    const auto net =
        kind == point_kind::scrambled_net
            ? scrambled_net(mf, spec.d, derive_scramble_seed(seed, level, outer_index))
            : pseudo_random_points(mf, spec.d,
                                   RngStream(seed, stream_purpose::inner,
                                             static_cast<unsigned>(level), outer_index));
    double w[64];
    comp_sum sum;
    double half1 = 0.0;
    for (std::size_t j = 0; j < mf; ++j) {
        for (std::size_t i = 1; i < spec.d; ++i)
            w[i - 1] = std_normal_inv_cdf(net.at(j, i));
        sum.add(kern.payoff_rest(scen, w));
        if (j + 1 == mc)
            half1 = sum.value();
    }
    LevelTerms t;
    t.cost = mf;
    double hint = 0.0;
    if (level > 0) {
        const auto h1 =
            smoothed_eval(spec, kern.v0 - half1 / static_cast<double>(mc) - spec.c, params);
        t.cost += smoothing_charge(h1, params);
        hint = h1.psi;
        if (antithetic) {
            const double half2 = sum.value() - half1;
            const auto h2 = smoothed_eval(
                spec, kern.v0 - half2 / static_cast<double>(mc) - spec.c, params, h1.psi);
            t.coarse = 0.5 * (h1.value + h2.value);
            t.cost += smoothing_charge(h2, params);
        } else {
            t.coarse = h1.value;
        }
    }
    const auto hf =
        smoothed_eval(spec, kern.v0 - sum.value() / static_cast<double>(mf) - spec.c, params, hint);
    t.fine = hf.value;
    t.cost += smoothing_charge(hf, params);
    return t;
}

inline LevelTerms level_terms(const InnerKernel& kern, MethodKind method, int level,
                              std::uint64_t outer_index, std::uint64_t seed,
                              const SmoothingParams& params, std::size_t m0 = 32) {
    switch (method) {
    case MethodKind::StdMLMC:
        return level_terms_std(kern, level, outer_index, seed, m0);
    case MethodKind::SmoothedMLMC:
        return level_terms_smoothed(kern, level, outer_index, seed, params, m0);
    case MethodKind::SmoothedAMLMC:
        return level_terms_antithetic(kern, level, outer_index, seed, params, m0);
    case MethodKind::SmoothedMLQMC:
        return level_terms_qmc(kern, level, outer_index, seed, params, false, m0);
    case MethodKind::SmoothedAMLQMC:
        return level_terms_qmc(kern, level, outer_index, seed, params, true, m0);
    case MethodKind::NestedMC:
        break;
    }
    throw std::invalid_argument("level_terms: method has no level sampler");
}

} // namespace detail

inline LevelSample level_sample_std(const InnerKernel& kern, int level, std::uint64_t outer_index,
                                    std::uint64_t seed) {
    const auto t = detail::level_terms_std(kern, level, outer_index, seed);
    return {t.fine - t.coarse, t.cost};
}
inline LevelSample level_sample_std(const ModelSpec& spec, int level, std::uint64_t outer_index,
                                    std::uint64_t seed) {
    return level_sample_std(InnerKernel(spec), level, outer_index, seed);
}

inline LevelSample level_sample_smoothed(const InnerKernel& kern, int level,
                                         std::uint64_t outer_index, std::uint64_t seed,
                                         const SmoothingParams& params) {
    const auto t = detail::level_terms_smoothed(kern, level, outer_index, seed, params);
    return {t.fine - t.coarse, t.cost};
}
inline LevelSample level_sample_smoothed(const ModelSpec& spec, int level,
                                         std::uint64_t outer_index, std::uint64_t seed,
                                         const SmoothingParams& params) {
    return level_sample_smoothed(InnerKernel(spec), level, outer_index, seed, params);
}

inline LevelSample level_sample_antithetic(const InnerKernel& kern, int level,
                                           std::uint64_t outer_index, std::uint64_t seed,
                                           const SmoothingParams& params) {
    const auto t = detail::level_terms_antithetic(kern, level, outer_index, seed, params);
    return {t.fine - t.coarse, t.cost};
}
inline LevelSample level_sample_antithetic(const ModelSpec& spec, int level,
                                           std::uint64_t outer_index, std::uint64_t seed,
                                           const SmoothingParams& params) {
    return level_sample_antithetic(InnerKernel(spec), level, outer_index, seed, params);
}

inline LevelSample level_sample_qmc(const InnerKernel& kern, int level, std::uint64_t outer_index,
                                    std::uint64_t seed, const SmoothingParams& params,
                                    bool antithetic = false,
                                    point_kind kind = point_kind::scrambled_net) {
    const auto t =
        detail::level_terms_qmc(kern, level, outer_index, seed, params, antithetic, 32, kind);
    return {t.fine - t.coarse, t.cost};
}
inline LevelSample level_sample_qmc(const ModelSpec& spec, int level, std::uint64_t outer_index,
                                    std::uint64_t seed, const SmoothingParams& params,
                                    bool antithetic = false,
                                    point_kind kind = point_kind::scrambled_net) {
    return level_sample_qmc(InnerKernel(spec), level, outer_index, seed, params, antithetic, kind);
}

struct NestedResult {
    double estimate = 0.0;
    double half_width = 0.0; // 3 binomial standard errors
    std::uint64_t cost = 0;
};

// Plain nested estimator: n scenarios, m inner payoffs each, indicator of the
// estimated loss exceeding the threshold.
inline NestedResult nested_estimate(const ModelSpec& spec, std::size_t n, std::size_t m,
                                    RngStream& stream) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("nested_estimate: n and m must be >= 1");
    const InnerKernel kern(spec);
    double w[64];
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Scenario scen = sample_outer(spec, stream);
        detail::comp_sum sum;
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < spec.d; ++k)
                w[k] = draw_normal(stream);
            sum.add(kern.payoff(scen, w));
        }
        if (kern.v0 - sum.value() / static_cast<double>(m) > spec.c)
            ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return {p, 3.0 * se, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m)};
}

struct TelescopeResult {
    double raw = 0.0;     // plain sum of level means
    double clamped = 0.0; // reported probability, in [0,1]
};

inline TelescopeResult telescope(const std::vector<double>& level_means) {
    if (level_means.empty())
        throw std::invalid_argument("telescope: at least one level required");
    detail::comp_sum s;
    for (const double m : level_means)
        s.add(m);
    const double raw = s.value();
    return {raw, std::min(1.0, std::max(0.0, raw))};
}

} // namespace mlrisk
