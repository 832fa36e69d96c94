#pragma once
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "normal.hpp"
#include "philox.hpp"
#include "sobol.hpp"

// The portfolio model: d European calls on correlated lognormal assets.
// Outer scenarios evolve the assets to the risk horizon tau under the
// real-world drift; inner samples revalue the portfolio at maturity T under
// the risk-neutral measure. The first asset is driven only by the first
// factor (separability), which is what makes the indicator preintegrable in
// closed form.
namespace mlrisk {

struct ModelSpec {
    std::size_t d = 0;
    std::vector<double> S0; // initial prices
    std::vector<double> K;  // strikes
    double mu = 0.0;        // real-world drift
    double mu0 = 0.0;       // risk-free rate
    LowerTriangular Sigma;  // volatility factor matrix
    double T = 0.0;         // maturity
    double tau = 0.0;       // risk horizon
    double c = 0.0;         // loss threshold

    double vol(std::size_t i) const { return Sigma.row_norm(i); }

    void validate() const {
        if (d == 0)
            throw std::invalid_argument("ModelSpec: d >= 1 required");
        if (S0.size() != d || K.size() != d || Sigma.d != d)
            throw std::invalid_argument("ModelSpec: S0, K, Sigma must have dimension d");
        if (!(tau > 0.0) || !(tau < T))
            throw std::invalid_argument("ModelSpec: tau < T violated (need 0 < tau < T)");
        for (std::size_t i = 0; i < d; ++i) {
            if (!(S0[i] > 0.0))
                throw std::invalid_argument("ModelSpec: S0 must be positive");
            if (!(K[i] > 0.0))
                throw std::invalid_argument("ModelSpec: K must be positive");
        }
        if (!(Sigma.at(0, 0) > 0.0))
            throw std::invalid_argument("ModelSpec: Sigma[0][0] > 0 required");
        for (std::size_t i = 1; i < d; ++i)
            if (Sigma.at(0, i) != 0.0 || Sigma.at(i, 0) != 0.0)
                throw std::invalid_argument(
                    "ModelSpec: separability violated (Sigma row/column 1 must be zero off-diagonal)");
    }
};

// Covariance for the reference experiment: C_11 = 0.3, zeros elsewhere in
// row/column 1 (separability), C_ij = 0.3 * 0.98^|i-j| among assets 2..d.
inline std::vector<double> experiment_covariance(std::size_t d) {
    std::vector<double> C(d * d, 0.0);
    C[0] = 0.3;
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 1; j < d; ++j)
            C[i * d + j] = 0.3 * std::pow(0.98, i > j ? double(i - j) : double(j - i));
    return C;
}

inline ModelSpec experiment_spec(std::size_t d, double loss_threshold = 15.0) {
    ModelSpec spec;
    spec.d = d;
    spec.S0.assign(d, 100.0);
    spec.K.assign(d, 95.0);
    spec.mu = 0.08;
    spec.mu0 = 0.05;
    spec.T = 0.1;
    spec.tau = 0.02;
    spec.c = loss_threshold;
    spec.Sigma = cholesky(experiment_covariance(d), d);
    spec.validate();
    return spec;
}

struct Scenario {
    std::vector<double> z;     // outer standard normals
    std::vector<double> omega; // asset prices at the risk horizon

    double omega1() const { return omega[0]; }
};

// omega_i = S0_i * exp{(mu - vol_i^2/2) tau + sqrt(tau) (Sigma z)_i}
inline void outer_map(const ModelSpec& spec, const double* z, double* omega) {
    const double sq = std::sqrt(spec.tau);
    std::vector<double> y(spec.d);
    spec.Sigma.apply(z, y.data());
    for (std::size_t i = 0; i < spec.d; ++i) {
        const double v = spec.vol(i);
        omega[i] = spec.S0[i] * std::exp((spec.mu - 0.5 * v * v) * spec.tau + sq * y[i]);
    }
}

inline Scenario sample_outer(const ModelSpec& spec, RngStream& stream) {
    Scenario scen;
    scen.z.resize(spec.d);
    for (auto& zi : scen.z)
        zi = draw_normal(stream);
    scen.omega.resize(spec.d);
    outer_map(spec, scen.z.data(), scen.omega.data());
    return scen;
}

// One discounted portfolio payoff at maturity, conditional on the scenario:
// S_T^i = omega_i * exp{(mu0 - vol_i^2/2)(T-tau) + sqrt(T-tau) (Sigma w)_i},
// X = e^{-mu0 (T-tau)} sum_i (S_T^i - K_i)^+
inline double inner_payoff(const ModelSpec& spec, const Scenario& scen, const double* w) {
    const double tt = spec.T - spec.tau;
    const double sq = std::sqrt(tt);
    std::vector<double> y(spec.d);
    spec.Sigma.apply(w, y.data());
    double sum = 0.0;
    for (std::size_t i = 0; i < spec.d; ++i) {
        const double v = spec.vol(i);
        const double st = scen.omega[i] * std::exp((spec.mu0 - 0.5 * v * v) * tt + sq * y[i]);
        if (st > spec.K[i])
            sum += st - spec.K[i];
    }
    return std::exp(-spec.mu0 * tt) * sum;
}

inline double bs_call_price(double s, double k, double r, double vol, double t) {
    if (!(s > 0.0) || !(k > 0.0) || !(t > 0.0) || vol < 0.0)
        throw std::domain_error("bs_call_price: need s, k, t > 0 and vol >= 0");
    if (vol == 0.0) {
        const double fwd = s - k * std::exp(-r * t);
        return fwd > 0.0 ? fwd : 0.0;
    }
    const double sq = vol * std::sqrt(t);
    const double d1 = (std::log(s / k) + (r + 0.5 * vol * vol) * t) / sq;
    return s * std_normal_cdf(d1) - k * std::exp(-r * t) * std_normal_cdf(d1 - sq);
}

inline double bs_call_delta(double s, double k, double r, double vol, double t) {
    if (!(s > 0.0) || !(k > 0.0) || !(t > 0.0) || vol < 0.0)
        throw std::domain_error("bs_call_delta: need s, k, t > 0 and vol >= 0");
    if (vol == 0.0)
        return s > k * std::exp(-r * t) ? 1.0 : 0.0;
    const double sq = vol * std::sqrt(t);
    const double d1 = (std::log(s / k) + (r + 0.5 * vol * vol) * t) / sq;
    return std_normal_cdf(d1);
}

// Time-0 portfolio value: each call priced at full maturity with the
// marginal volatility of its asset.
inline double initial_value(const ModelSpec& spec) {
    double v = 0.0;
    for (std::size_t i = 0; i < spec.d; ++i)
        v += bs_call_price(spec.S0[i], spec.K[i], spec.mu0, spec.vol(i), spec.T);
    return v;
}

struct InnerBatch {
    std::vector<double> payoffs;
    std::size_t m = 0;
    point_kind source = point_kind::pseudo_random;
};

// phi-hat = V0 - mean(payoffs): the simulated portfolio loss at the horizon.
inline double inner_loss_estimate(const ModelSpec& spec, const Scenario&, const InnerBatch& batch) {
    if (batch.payoffs.empty())
        throw std::invalid_argument("inner_loss_estimate: empty batch");
    double s = 0.0;
    for (const double x : batch.payoffs)
        s += x;
    return initial_value(spec) - s / static_cast<double>(batch.payoffs.size());
}

// Exact conditional loss phi(omega) = V0 - sum_i C_BS(omega_i, K_i, mu0,
// vol_i, T - tau); the m -> infinity limit of inner_loss_estimate, used as a
// ground-truth oracle and for diagnostics.
inline double conditional_loss(const ModelSpec& spec, const Scenario& scen) {
    double cond = 0.0;
    for (std::size_t i = 0; i < spec.d; ++i)
        cond += bs_call_price(scen.omega[i], spec.K[i], spec.mu0, spec.vol(i), spec.T - spec.tau);
    return initial_value(spec) - cond;
}

// Precomputed per-spec constants for the hot inner loops. The rest-of-
// portfolio variant (assets 2..d) is what the preintegrated estimators
// simulate: asset 1's conditional price is closed-form and never sampled.
struct InnerKernel {
    const ModelSpec& spec;
    double tt, sq_tt, disc, v0;
    std::vector<double> drift; // (mu0 - vol_i^2/2)(T - tau)

    explicit InnerKernel(const ModelSpec& s)
        : spec(s),
          tt(s.T - s.tau),
          sq_tt(std::sqrt(s.T - s.tau)),
          disc(std::exp(-s.mu0 * (s.T - s.tau))),
          v0(initial_value(s)),
          drift(s.d) {
        if (s.d > 64)
            throw std::invalid_argument("InnerKernel: d > 64 unsupported");
        for (std::size_t i = 0; i < s.d; ++i) {
            const double v = s.vol(i);
            drift[i] = (s.mu0 - 0.5 * v * v) * tt;
        }
    }

    // full-portfolio payoff; w has length d (d capped so the factor image
    // fits on the stack in the per-payoff hot path)
    double payoff(const Scenario& scen, const double* w) const {
        double y[64];
        spec.Sigma.apply(w, y);
        double sum = 0.0;
        for (std::size_t i = 0; i < spec.d; ++i) {
            const double st = scen.omega[i] * std::exp(drift[i] + sq_tt * y[i]);
            if (st > spec.K[i])
                sum += st - spec.K[i];
        }
        return disc * sum;
    }

    // rest-of-portfolio payoff over assets 2..d; w has length d-1 and drives
    // factors 2..d (asset 1's factor never enters rows 2..d by separability)
    double payoff_rest(const Scenario& scen, const double* w) const {
        double sum = 0.0;
        for (std::size_t i = 1; i < spec.d; ++i) {
            double y = 0.0;
            for (std::size_t j = 1; j <= i; ++j)
                y += spec.Sigma.at(i, j) * w[j - 1];
            const double st = scen.omega[i] * std::exp(drift[i] + sq_tt * y);
            if (st > spec.K[i])
                sum += st - spec.K[i];
        }
        return disc * sum;
    }
};

} // namespace mlrisk
