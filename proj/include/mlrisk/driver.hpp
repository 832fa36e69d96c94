#pragma once

// Adaptive multilevel control loop: sample allocation against a split error
// budget, bias-convergence testing with weak-rate refit, level extension, and
// rate fitting.  A run is a deterministic function of (model, config).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <mlrisk/estimators.hpp>

namespace mlrisk {

struct RunConfig {
    MethodKind method = MethodKind::SmoothedMLMC;
    double tol = 1e-2;
    double omega_split = 0.16; // fraction of the squared error budget given to bias
    int L0 = 2;                // initial deepest level
    std::size_t N_star = 20000;
    std::size_t m0 = 32;
    double alpha = 1.0; // assumed weak rate when a refit is not possible
    std::uint64_t seed = 1;
    int max_level_cap = 7;
    SmoothingParams smoothing;

    void validate() const {
        if (!(tol > 0.0))
            throw std::invalid_argument("RunConfig: tol > 0 violated");
        if (!(omega_split > 0.0 && omega_split < 1.0))
            throw std::invalid_argument("RunConfig: 0 < omega_split < 1 violated");
        if (N_star < 2)
            throw std::invalid_argument("RunConfig: N_star >= 2 violated");
        if (m0 < 1)
            throw std::invalid_argument("RunConfig: m0 >= 1 violated");
        if (L0 < 0 || max_level_cap < L0)
            throw std::invalid_argument("RunConfig: 0 <= L0 <= max_level_cap violated");
        if (!(alpha > 0.0))
            throw std::invalid_argument("RunConfig: alpha > 0 violated");
    }
};

struct LevelRecord {
    int level = 0;
    std::uint64_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
    double kurtosis = 0.0;
    bool kurtosis_ok = false;
    double cost_per_sample = 0.0;
    std::uint64_t cost_units = 0; // total charged at this level
    double std_error() const {
        return n ? std::sqrt(variance / static_cast<double>(n)) : 0.0;
    }
};

struct RateFit {
    double alpha_hat = 0.0; // slope of log2|mean_l| vs l (decay reported negative)
    double beta_hat = 0.0;  // slope of log2 variance vs l
    double gamma_hat = 0.0; // slope of log2 cost vs l
    bool ok = false;
    std::string note;
};

struct RunReport {
    MethodKind method = MethodKind::SmoothedMLMC;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::vector<LevelRecord> levels;
    int final_level = 0;
    double estimate = 0.0;     // clamped telescoped sum
    double raw_estimate = 0.0; // before clamping to [0,1]
    RateFit rates;
    std::uint64_t total_cost = 0;
    double wall_seconds = 0.0;
    bool converged = false;
    std::string diagnostic;
};

struct Allocation {
    std::vector<std::uint64_t> n;
    bool degenerate = false; // all variances vanished; floor allocation returned
};

namespace detail {

// real-valued optimal sample counts before ceiling and flooring
inline std::vector<double> allocation_real(const std::vector<double>& variances,
                                           const std::vector<double>& costs, double tol,
                                           double omega) {
    double cross = 0.0;
    for (std::size_t l = 0; l < variances.size(); ++l)
        cross += std::sqrt(variances[l] * costs[l]);
    const double scale = cross / ((1.0 - omega) * tol * tol);
    std::vector<double> out(variances.size());
    for (std::size_t l = 0; l < variances.size(); ++l)
        out[l] = scale * std::sqrt(variances[l] / costs[l]);
    return out;
}

// least-squares slope of y against x
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace detail

inline Allocation optimal_allocation(const std::vector<double>& variances,
                                     const std::vector<double>& costs, double tol, double omega) {
    if (variances.size() != costs.size() || variances.empty())
        throw std::invalid_argument("optimal_allocation: need matching nonempty inputs");
    if (!(tol > 0.0) || !(omega > 0.0 && omega < 1.0))
        throw std::invalid_argument("optimal_allocation: tol > 0 and 0 < omega < 1 required");
    for (std::size_t l = 0; l < variances.size(); ++l) {
        if (variances[l] < 0.0 || !(costs[l] > 0.0))
            throw std::invalid_argument("optimal_allocation: V >= 0 and C > 0 required");
    }
    Allocation a;
    a.n.assign(variances.size(), 2);
    const auto real = detail::allocation_real(variances, costs, tol, omega);
    a.degenerate = true;
    for (std::size_t l = 0; l < real.size(); ++l) {
        if (variances[l] > 0.0)
            a.degenerate = false;
        const double v = std::ceil(real[l]);
        if (v > 2.0)
            a.n[l] = static_cast<std::uint64_t>(v);
    }
    return a;
}

// |last level mean| / (2^alpha - 1) <= sqrt(omega) * tol, with the weak rate
// refit from the level means themselves when enough informative levels exist
inline bool bias_converged(const std::vector<double>& level_means, double alpha, double tol,
                           double omega, const std::vector<double>& std_errors = {}) {
    if (level_means.empty())
        throw std::invalid_argument("bias_converged: need at least one level mean");
    std::vector<double> ls, logs;
    for (std::size_t l = 1; l < level_means.size(); ++l) {
        const double m = std::abs(level_means[l]);
        if (m <= 0.0)
            continue;
        if (l < std_errors.size() && m <= 3.0 * std_errors[l])
            continue; // level mean indistinguishable from zero: useless for the refit
        ls.push_back(static_cast<double>(l));
        logs.push_back(std::log2(m));
    }
    double a = alpha;
    if (ls.size() >= 3) {
        const double slope = detail::ls_slope(ls, logs);
        a = std::min(2.0, std::max(0.5, -slope));
    }
    const double remainder = std::abs(level_means.back()) / (std::exp2(a) - 1.0);
    return remainder <= std::sqrt(omega) * tol;
}

inline RateFit fit_rates(const std::vector<LevelRecord>& levels) {
    std::vector<double> ls, lm, lv, lc;
    for (const auto& r : levels) {
        if (r.level == 0 || r.n < 100)
            continue;
        const double x = static_cast<double>(r.level);
        if (std::abs(r.mean) > 0.0) {
            ls.push_back(x);
            lm.push_back(std::log2(std::abs(r.mean)));
        }
        if (r.variance > 0.0) {
            lv.push_back(std::log2(r.variance));
            lc.push_back(std::log2(r.cost_per_sample));
        }
    }
    RateFit f;
    if (ls.size() < 3 || lv.size() < 3) {
        f.note = "insufficient levels";
        return f;
    }
    f.alpha_hat = detail::ls_slope(ls, lm);
    std::vector<double> lsv(lv.size());
    {
        std::size_t i = 0;
        for (const auto& r : levels)
            if (r.level != 0 && r.n >= 100 && r.variance > 0.0)
                lsv[i++] = static_cast<double>(r.level);
    }
    f.beta_hat = detail::ls_slope(lsv, lv);
    f.gamma_hat = detail::ls_slope(lsv, lc);
    f.ok = true;
    return f;
}

inline RateFit fit_rates(const RunReport& report) { return fit_rates(report.levels); }

namespace detail {

// allocation variances with a geometric floor for sparsely sampled levels,
// extrapolated from the deepest level holding at least 100 samples
inline std::vector<double> allocation_variances(const std::vector<LevelAccumulator>& acc) {
    std::vector<double> v(acc.size());
    for (std::size_t l = 0; l < acc.size(); ++l)
        v[l] = acc[l].variance();
    int deep = -1;
    for (std::size_t l = 1; l < acc.size(); ++l)
        if (acc[l].n >= 100)
            deep = static_cast<int>(l);
    if (deep < 2)
        return v;
    std::vector<double> ls, lv;
    for (int l = 1; l <= deep; ++l)
        if (acc[l].variance() > 0.0) {
            ls.push_back(l);
            lv.push_back(std::log2(acc[l].variance()));
        }
    if (ls.size() < 2)
        return v;
    const double beta = std::min(-0.1, ls_slope(ls, lv));
    for (std::size_t l = deep + 1; l < acc.size(); ++l) {
        if (acc[l].n >= 100)
            continue;
        const double floor_v = acc[deep].variance() *
                               std::exp2(beta * (static_cast<double>(l) - deep));
        v[l] = std::max(v[l], floor_v);
    }
    return v;
}

} // namespace detail

inline RunReport run_mlmc(const ModelSpec& spec, const RunConfig& config) {
    config.validate();
    if (config.method == MethodKind::NestedMC)
        throw std::invalid_argument("run_mlmc: NestedMC has its own driver (run_nested)");
    const auto t0 = std::chrono::steady_clock::now();
    const InnerKernel kern(spec);

    std::vector<LevelAccumulator> acc;
    auto ensure = [&](std::size_t level, std::uint64_t target) {
        auto& a = acc[level];
        for (std::uint64_t i = a.n; i < target; ++i) {
            const auto t = detail::level_terms(kern, config.method, static_cast<int>(level), i,
                                               config.seed, config.smoothing, config.m0);
            a.add(t.fine - t.coarse, t.cost);
        }
    };
    for (int l = 0; l <= config.L0; ++l)
        acc.emplace_back(static_cast<unsigned>(l));
    for (int l = 0; l <= config.L0; ++l)
        ensure(static_cast<std::size_t>(l), config.N_star);

    RunReport rep;
    rep.method = config.method;
    rep.tol = config.tol;
    rep.seed = config.seed;

    bool converged = false;
    std::string diagnostic;
    for (int iter = 0; iter < 1000; ++iter) {
        const auto variances = detail::allocation_variances(acc);
        std::vector<double> costs(acc.size());
        for (std::size_t l = 0; l < acc.size(); ++l)
            costs[l] = std::max(1.0, acc[l].mean_cost());
        const auto alloc = optimal_allocation(variances, costs, config.tol, config.omega_split);
        bool drew = false;
        for (std::size_t l = 0; l < acc.size(); ++l) {
            if (alloc.n[l] > acc[l].n) {
                ensure(l, alloc.n[l]);
                drew = true;
            }
        }
        if (drew)
            continue; // variances moved; re-derive the allocation before testing bias
        std::vector<double> means(acc.size()), ses(acc.size());
        for (std::size_t l = 0; l < acc.size(); ++l) {
            means[l] = acc[l].mean();
            ses[l] = acc[l].std_error();
        }
        if (bias_converged(means, config.alpha, config.tol, config.omega_split, ses)) {
            converged = true;
            break;
        }
        if (static_cast<int>(acc.size()) - 1 >= config.max_level_cap) {
            diagnostic = "bias not converged at cap";
            break;
        }
        acc.emplace_back(static_cast<unsigned>(acc.size()));
        ensure(acc.size() - 1, config.N_star);
    }
    if (!converged && diagnostic.empty())
        diagnostic = "allocation loop did not settle";

    std::vector<double> means;
    for (const auto& a : acc) {
        LevelRecord r;
        r.level = static_cast<int>(a.level);
        r.n = a.n;
        r.mean = a.mean();
        r.variance = a.variance();
        r.kurtosis_ok = a.kurtosis_available();
        r.kurtosis = r.kurtosis_ok ? a.kurtosis() : 0.0;
        r.cost_per_sample = a.mean_cost();
        r.cost_units = a.cost_units;
        rep.levels.push_back(r);
        rep.total_cost += a.cost_units;
        means.push_back(r.mean);
    }
    const auto t = telescope(means);
    rep.raw_estimate = t.raw;
    rep.estimate = t.clamped;
    rep.final_level = static_cast<int>(acc.size()) - 1;
    rep.rates = fit_rates(rep.levels);
    rep.converged = converged;
    rep.diagnostic = diagnostic;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

struct NestedRun {
    double estimate = 0.0;
    double half_width = 0.0; // three standard errors
    std::uint64_t cost = 0;  // pilot + main run, in inner-payoff units
    std::size_t n = 0;
    std::size_t m = 0;
    bool converged = false;
};

// single-level baseline: inner size found by doubling until the coupled bias
// proxy passes the split budget, outer size from the indicator variance bound
inline NestedRun run_nested(const ModelSpec& spec, const RunConfig& config) {
    config.validate();
    const InnerKernel kern(spec);
    const double bias_budget = std::sqrt(config.omega_split) * config.tol;
    const std::uint64_t n_pilot = std::max<std::uint64_t>(1000, config.N_star);
    NestedRun out;
    double p_hat = 0.5;
    int level = 1;
    for (; level <= config.max_level_cap + 1; ++level) {
        detail::comp_sum diff, fine;
        std::uint64_t cost = 0;
        for (std::uint64_t i = 0; i < n_pilot; ++i) {
            const auto t = detail::level_terms_std(kern, level, i, config.seed, config.m0);
            diff.add(t.fine - t.coarse);
            fine.add(t.fine);
            cost += t.cost;
        }
        out.cost += cost;
        p_hat = fine.value() / static_cast<double>(n_pilot);
        const double remainder =
            std::abs(diff.value() / static_cast<double>(n_pilot)) /
            (std::exp2(config.alpha) - 1.0);
        if (remainder <= bias_budget) {
            out.converged = true;
            break;
        }
    }
    out.m = level_inner_count(std::min(level, config.max_level_cap + 1), config.m0);
    const double var_bound = std::max(p_hat * (1.0 - p_hat), 1e-4);
    out.n = static_cast<std::size_t>(
        std::ceil(var_bound / ((1.0 - config.omega_split) * config.tol * config.tol)));
    RngStream stream(config.seed, stream_purpose::generic, 0, 1);
    const auto r = nested_estimate(spec, out.n, out.m, stream);
    out.estimate = r.estimate;
    out.half_width = r.half_width;
    out.cost += r.cost;
    return out;
}

struct CostTolRow {
    MethodKind method = MethodKind::SmoothedMLMC;
    double tol = 0.0;
    std::uint64_t total_cost = 0;
    double estimate = 0.0;
    bool converged = false;
};

struct CostTolStudy {
    std::vector<CostTolRow> rows;
    std::vector<std::pair<MethodKind, double>> exponents; // log cost vs log tol slope
};

// slope of log(cost) against log(tol)
inline double fit_cost_exponent(const std::vector<double>& tols,
                                const std::vector<double>& costs) {
    if (tols.size() != costs.size() || tols.size() < 2)
        throw std::invalid_argument("fit_cost_exponent: need matching inputs, >= 2 points");
    std::vector<double> lx(tols.size()), ly(tols.size());
    for (std::size_t i = 0; i < tols.size(); ++i) {
        lx[i] = std::log(tols[i]);
        ly[i] = std::log(costs[i]);
    }
    return detail::ls_slope(lx, ly);
}

inline CostTolStudy cost_vs_tol_study(const ModelSpec& spec,
                                      const std::vector<MethodKind>& methods,
                                      const std::vector<double>& tol_list,
                                      const RunConfig& base) {
    if (tol_list.size() < 3)
        throw std::invalid_argument("cost_vs_tol_study: need at least 3 tolerances");
    double lo = tol_list.front(), hi = tol_list.front();
    for (double t : tol_list) {
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    if (hi / lo < 8.0 * (1.0 - 1e-12))
        throw std::invalid_argument("cost_vs_tol_study: tolerances must span a factor >= 8");
    CostTolStudy study;
    for (const auto method : methods) {
        std::vector<double> tols, costs;
        for (const double tol : tol_list) {
            RunConfig cfg = base;
            cfg.method = method;
            cfg.tol = tol;
            CostTolRow row;
            row.method = method;
            row.tol = tol;
            if (method == MethodKind::NestedMC) {
                const auto r = run_nested(spec, cfg);
                row.total_cost = r.cost;
                row.estimate = r.estimate;
                row.converged = r.converged;
            } else {
                const auto r = run_mlmc(spec, cfg);
                row.total_cost = r.total_cost;
                row.estimate = r.estimate;
                row.converged = r.converged;
            }
            study.rows.push_back(row);
            tols.push_back(tol);
            costs.push_back(static_cast<double>(row.total_cost));
        }
        study.exponents.emplace_back(method, fit_cost_exponent(tols, costs));
    }
    return study;
}

} // namespace mlrisk
