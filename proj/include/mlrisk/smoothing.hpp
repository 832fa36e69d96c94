#pragma once
// Preintegration of the loss indicator over the first factor. Two paths:
//  - analytic: safeguarded Newton for the discontinuity location + closed-form
//    normal CDF (separable log-normal model);
//  - numerical: same Newton + a two-sided Gauss-Laguerre rule anchored at the
//    root, usable for any factor density with a smooth monotone loss.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <mlrisk/accumulator.hpp>
#include <mlrisk/model.hpp>
#include <mlrisk/normal.hpp>

namespace mlrisk {

enum class smoothing_mode { analytic, numerical };

struct SmoothingParams {
    double newton_tol = 1e-10;
    int max_iterations = 50;
    int m_lag = 32;
    smoothing_mode mode = smoothing_mode::analytic;
};

struct RootResult {
    double root = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0; // Newton/bisection steps taken (bracket probes excluded)
    bool converged = false;
    double residual = std::numeric_limits<double>::infinity();
    bool bracket_found = false; // false: no sign change, the event is one-sided
};

// Safeguarded Newton for strictly monotone f: expand a geometric bracket
// around x0 (factor 2 per step), then iterate, falling back near the violated
// edge or to bisection whenever a step leaves the bracket or df degenerates.
template <class F, class DF>
RootResult newton_root(F&& f, DF&& df, double x0, const SmoothingParams& params,
                       double initial_width = 0.0) {
    RootResult out;
    double w = initial_width > 0.0 ? initial_width : 0.5 * std::max(1.0, std::abs(x0));
    double a = x0 - w, b = x0 + w;
    double fa = f(a), fb = f(b);
    for (int expansions = 0; !(fa == 0.0 || fb == 0.0 || (fa < 0.0) != (fb < 0.0));) {
        if (++expansions > 90) {
            out.root = x0;
            return out; // no sign change anywhere reachable
        }
        w *= 2.0;
        a = x0 - w;
        b = x0 + w;
        fa = f(a);
        fb = f(b);
    }
    out.bracket_found = true;
    if (fa == 0.0 || fb == 0.0) {
        out.root = fa == 0.0 ? a : b;
        out.residual = 0.0;
        out.converged = true;
        return out;
    }
    const double sgn = fb > fa ? 1.0 : -1.0; // normalize to increasing through 0
    if (sgn < 0.0)
        std::swap(fa, fb);
    double x = std::clamp(x0, a, b);
    int last_exit = 0; // which edge the previous Newton step violated
    for (int it = 0; it < params.max_iterations; ++it) {
        const double fx = sgn * f(x);
        out.root = x;
        out.residual = std::abs(fx);
        out.iterations = it;
        if (out.residual <= params.newton_tol) {
            out.converged = true;
            return out;
        }
        if (fx < 0.0)
            a = x;
        else
            b = x;
        if (b - a <= 1e-15 * std::max(1.0, std::abs(x)))
            return out; // bracket at machine width, tolerance unreachable
        const double d = sgn * df(x);
        double xn = 0.0;
        const bool usable = std::isfinite(d) && std::abs(d) > 1e-14;
        if (usable)
            xn = x - fx / d;
        if (!usable || !(xn > a && xn < b)) {
            const int side = !usable ? 0 : (xn <= a ? -1 : +1);
            if (side != 0 && side != last_exit) {
                // first violation on this side: the root often sits near that
                // edge, so probe just inside it instead of halving
                const double lam = 0.02 * (b - a);
                xn = side < 0 ? a + lam : b - lam;
            } else {
                xn = 0.5 * (a + b);
            }
            last_exit = side;
        } else {
            last_exit = 0;
        }
        x = xn;
    }
    out.iterations = params.max_iterations;
    return out;
}

namespace detail {
// Nodes/weights of the m-point Gauss-Laguerre rule (weight e^{-t} on (0,inf)):
// Newton on the recurrence from the classic initial guesses.
struct laguerre_table {
    std::vector<double> x, w;
};
inline laguerre_table gauss_laguerre(int m) {
    if (m < 1 || m > 128)
        throw std::invalid_argument("gauss_laguerre: order out of range [1,128]");
    laguerre_table t;
    t.x.resize(static_cast<std::size_t>(m));
    t.w.resize(static_cast<std::size_t>(m));
    const double n = m;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) *
                 (z - t.x[static_cast<std::size_t>(i - 2)]);
        }
        double p1 = 0.0, p2 = 0.0, pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            p1 = 1.0;
            p2 = 0.0;
            for (int j = 1; j <= m; ++j) { // upward recurrence for L_j(z)
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (p1 - p2) / z; // L_m'(z)
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) <= 1e-14 * std::max(1.0, z))
                break;
        }
        t.x[static_cast<std::size_t>(i)] = z;
        t.w[static_cast<std::size_t>(i)] = -1.0 / (pp * n * p2);
    }
    return t;
}
} // namespace detail

struct QuadratureRule {
    // nodes[0] = root with weight 0; then m_lag nodes right of the root,
    // then m_lag nodes left of it; weights absorb the factor density
    std::vector<double> nodes, weights;
    int m_lag = 0;

    template <class G>
    double apply(G&& g) const {
        detail::comp_sum acc;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            acc.add(weights[k] * static_cast<double>(g(nodes[k])));
        return acc.value();
    }
};

// Two-sided rule for ∫ g(x) rho(x) dx split at `root`: per side, Laguerre
// nodes mapped by x = root ± t with weights e^t rho(root ± t) w_GL assembled
// in log space (the raw products under/overflow), then rescaled so each side
// carries its exact probability mass — the raw rule leaks ~1e-3 (m=16) to
// ~5e-6 (m=32) of mass, which both the mass contract and indicator integrands
// would inherit.
template <class Density>
QuadratureRule laguerre_rule(const Density& rho, double root, int m_lag) {
    if (m_lag < 1)
        throw std::invalid_argument("laguerre_rule: m_lag must be >= 1");
    const auto gl = detail::gauss_laguerre(m_lag);
    const auto m = static_cast<std::size_t>(m_lag);
    QuadratureRule q;
    q.m_lag = m_lag;
    q.nodes.assign(2 * m + 1, 0.0);
    q.weights.assign(2 * m + 1, 0.0);
    q.nodes[0] = root;
    const double mass_left = rho.cdf(root);
    const double mass_right = 1.0 - mass_left;
    for (int side = 0; side < 2; ++side) {
        const double sgn = side == 0 ? 1.0 : -1.0;
        const std::size_t base = side == 0 ? 1 : m + 1;
        const double mass = side == 0 ? mass_right : mass_left;
        detail::comp_sum raw;
        for (std::size_t j = 0; j < m; ++j) {
            const double x = root + sgn * gl.x[j];
            q.nodes[base + j] = x;
            const double lw = std::log(gl.w[j]) + gl.x[j] + rho.log_pdf(x);
            const double wj = std::isfinite(lw) ? std::exp(lw) : 0.0;
            q.weights[base + j] = wj;
            raw.add(wj);
        }
        const double s = raw.value();
        const double scale = (s > 0.0 && mass > 0.0) ? mass / s : 0.0;
        for (std::size_t j = 0; j < m; ++j)
            q.weights[base + j] *= scale;
    }
    return q;
}

struct StdNormalDensity {
    double log_pdf(double x) const { return -0.5 * x * x - 0.91893853320467274; }
    double cdf(double x) const { return std_normal_cdf(x); }
    double median() const { return 0.0; }
    double scale() const { return 1.0; } // bracket width for root searches
};

struct SmoothedIndicator {
    double value = 0.0;
    int newton_iterations = 0;
    bool converged = true;
    bool degenerate = false; // no root: event one-sided in the first factor
    double overshoot = 0.0;  // clamped quadrature excess (numerical path)
    double psi = 0.0;        // analytic path: the root in price units (warm-start hint)
};

// P(omega_1 <= psi | rest) where psi solves first_asset_price(psi) = loss_rest.
// loss_rest <= 0 means no root exists (call prices are positive): probability 0.
// The inversion runs in log-spot with the log of the price: both sides are then
// defined on all of R and near-linear, which keeps the step count small even
// for targets deep in either tail.
inline SmoothedIndicator analytic_smoothed_indicator_ex(const ModelSpec& spec, double loss_rest,
                                                        const SmoothingParams& params,
                                                        double psi_hint = 0.0) {
    if (!(loss_rest > 0.0))
        return {0.0, 0, true, false, 0.0, 0.0};
    const double s0 = spec.S0[0], k = spec.K[0], r = spec.mu0;
    const double sig = spec.vol(0);
    const double tt = spec.T - spec.tau;
    const double srt = sig * std::sqrt(spec.tau);
    const double llr = std::log(loss_rest);
    const auto fl = [&](double y) { return std::log(bs_call_price(std::exp(y), k, r, sig, tt)) - llr; };
    const auto dfl = [&](double y) {
        const double s = std::exp(y);
        return s * bs_call_delta(s, k, r, sig, tt) / bs_call_price(s, k, r, sig, tt);
    };
    const double y0 = std::log(psi_hint > 0.0 ? psi_hint : s0);
    const auto rr = newton_root(fl, dfl, y0, params, srt);
    const double z = (rr.root - std::log(s0) - (spec.mu - 0.5 * sig * sig) * spec.tau) / srt;
    return {std_normal_cdf(z), rr.iterations, rr.converged, false, 0.0, std::exp(rr.root)};
}

inline double analytic_smoothed_indicator(const ModelSpec& spec, double loss_rest,
                                          const SmoothingParams& params) {
    return analytic_smoothed_indicator_ex(spec, loss_rest, params).value;
}

// Generic path: find the discontinuity of g_hat as the root of the smooth
// proxy f_hat (df_proxy its derivative), quadrature the indicator against the
// factor density with the rule anchored there. No root means the indicator is
// constant over the support: report its value at the median, flagged.
template <class G, class F, class DF, class Density>
SmoothedIndicator numerical_smoothed_indicator_ex(G&& g_hat, F&& f_hat, const Density& rho,
                                                  DF&& df_proxy, double x0,
                                                  const SmoothingParams& params) {
    const auto rr = newton_root(f_hat, df_proxy, x0, params, rho.scale());
    SmoothedIndicator out;
    out.newton_iterations = rr.iterations;
    out.converged = rr.converged;
    if (!rr.bracket_found) {
        out.degenerate = true;
        out.value = static_cast<double>(g_hat(rho.median()));
        return out;
    }
    const auto rule = laguerre_rule(rho, rr.root, params.m_lag);
    double v = rule.apply(g_hat);
    if (v < 0.0) {
        out.overshoot = -v;
        v = 0.0;
    } else if (v > 1.0) {
        out.overshoot = v - 1.0;
        v = 1.0;
    }
    out.value = v;
    return out;
}

template <class G, class F, class DF, class Density>
double numerical_smoothed_indicator(G&& g_hat, F&& f_hat, const Density& rho, DF&& df_proxy,
                                    double x0, const SmoothingParams& params) {
    return numerical_smoothed_indicator_ex(g_hat, f_hat, rho, df_proxy, x0, params).value;
}

} // namespace mlrisk
