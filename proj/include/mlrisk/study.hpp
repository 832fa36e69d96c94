#pragma once

// Study orchestration: strict config parsing, the (method, d, TOL) experiment
// grid, and plot-ready CSV/JSON artifacts with atomic writes.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <mlrisk/driver.hpp>

namespace mlrisk {

enum class StudyProfile { desk, paper };

struct StudySpec {
    // model overrides applied on top of the standard basket family per dimension
    double spot = 100.0;
    double strike_first = 95.0;
    double strike_rest = 95.0;
    double drift = 0.08;
    double rate = 0.05;
    double maturity = 0.1;
    double horizon = 0.02;
    double threshold = 15.0;
    double rest_vol_scale = 1.0; // scales the non-integrated block's volatility rows

    std::vector<MethodKind> methods{MethodKind::SmoothedMLMC};
    std::vector<std::size_t> dims{4};
    std::vector<double> tol_list{0.01};
    StudyProfile profile = StudyProfile::desk;
    std::uint64_t seed = 1;
    std::string out_dir = "mlrisk_out";

    SmoothingParams smoothing;
    double omega = 0.16;
    int initial_levels = 2;
    std::size_t n_star = 0; // 0: resolved from the profile
    std::size_t m0 = 32;
    double alpha = 1.0;
    int level_cap = 0; // 0: resolved from the profile

    std::vector<std::string> warnings;

    std::size_t resolved_n_star() const {
        if (n_star)
            return n_star;
        return profile == StudyProfile::desk ? 20000 : 200000;
    }
    int resolved_level_cap() const {
        if (level_cap)
            return level_cap;
        return profile == StudyProfile::desk ? 7 : 10;
    }

    ModelSpec model(std::size_t d) const {
        auto spec = experiment_spec(d);
        spec.S0.assign(d, spot);
        spec.K.assign(d, strike_rest);
        spec.K[0] = strike_first;
        spec.mu = drift;
        spec.mu0 = rate;
        spec.T = maturity;
        spec.tau = horizon;
        spec.c = threshold;
        for (std::size_t i = 1; i < d; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                spec.Sigma.at(i, j) *= rest_vol_scale;
        spec.validate();
        return spec;
    }

    RunConfig run_config(MethodKind method, double tol) const {
        RunConfig cfg;
        cfg.method = method;
        cfg.tol = tol;
        cfg.omega_split = omega;
        cfg.L0 = initial_levels;
        cfg.N_star = resolved_n_star();
        cfg.m0 = m0;
        cfg.alpha = alpha;
        cfg.seed = seed;
        cfg.max_level_cap = resolved_level_cap();
        cfg.smoothing = smoothing;
        return cfg;
    }

    void validate() const {
        if (methods.empty() || dims.empty() || tol_list.empty())
            throw std::invalid_argument("StudySpec: methods, dims, tol_list must be non-empty");
        for (const double t : tol_list)
            if (!(t > 0.0))
                throw std::invalid_argument("StudySpec: tolerances must be positive");
        for (const std::size_t d : dims)
            model(d); // surfaces every model invariant at parse time
        run_config(methods.front(), tol_list.front()).validate();
    }
};

inline MethodKind parse_method(const std::string& name) {
    for (const auto m :
         {MethodKind::NestedMC, MethodKind::StdMLMC, MethodKind::SmoothedMLMC,
          MethodKind::SmoothedAMLMC, MethodKind::SmoothedMLQMC, MethodKind::SmoothedAMLQMC}) {
        if (name == method_name(m))
            return m;
    }
    throw std::invalid_argument("unknown method '" + name + "'");
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

inline double parse_real(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != v.size())
        throw std::invalid_argument(key + ": expected a real number, got '" + v + "'");
    return x;
}

inline std::uint64_t parse_uint(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    unsigned long long x = 0;
    try {
        x = std::stoull(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != v.size() || v.find('-') != std::string::npos)
        throw std::invalid_argument(key + ": expected a non-negative integer, got '" + v + "'");
    return x;
}

// 17 significant digits: round-trips any double exactly
inline std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot open '" + tmp + "' for writing");
        f << content;
        if (!f.flush())
            throw std::runtime_error("short write to '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

} // namespace detail

inline StudySpec parse_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("config file '" + path + "' not found");
    StudySpec spec;
    std::string line, section;
    int lineno = 0;
    bool methods_set = false;
    while (std::getline(f, line)) {
        ++lineno;
        const auto bare = detail::trim(line.substr(0, std::min(line.find('#'), line.find(';'))));
        if (bare.empty())
            continue;
        const auto where = path + ":" + std::to_string(lineno);
        if (bare.front() == '[') {
            if (bare.back() != ']')
                throw std::invalid_argument(where + ": malformed section header '" + bare + "'");
            section = bare.substr(1, bare.size() - 2);
            if (section != "model" && section != "study" && section != "smoothing" &&
                section != "algorithm1")
                throw std::invalid_argument(where + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = bare.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(where + ": expected key = value, got '" + bare + "'");
        const auto key = detail::trim(bare.substr(0, eq));
        const auto value = detail::trim(bare.substr(eq + 1));
        if (section.empty())
            throw std::invalid_argument(where + ": key '" + key + "' outside any section");
        const auto qualified = section + "." + key;
        try {
            if (section == "model") {
                if (key == "spot")
                    spec.spot = detail::parse_real(qualified, value);
                else if (key == "strike_first")
                    spec.strike_first = detail::parse_real(qualified, value);
                else if (key == "strike_rest")
                    spec.strike_rest = detail::parse_real(qualified, value);
                else if (key == "drift")
                    spec.drift = detail::parse_real(qualified, value);
                else if (key == "rate")
                    spec.rate = detail::parse_real(qualified, value);
                else if (key == "maturity")
                    spec.maturity = detail::parse_real(qualified, value);
                else if (key == "horizon")
                    spec.horizon = detail::parse_real(qualified, value);
                else if (key == "threshold")
                    spec.threshold = detail::parse_real(qualified, value);
                else if (key == "rest_vol_scale")
                    spec.rest_vol_scale = detail::parse_real(qualified, value);
                else
                    throw std::invalid_argument("unknown key '" + qualified + "'");
            } else if (section == "study") {
                if (key == "methods") {
                    if (!methods_set) {
                        spec.methods.clear();
                        methods_set = true;
                    }
                    for (const auto& name : detail::split_list(value)) {
                        const auto m = parse_method(name);
                        bool dup = false;
                        for (const auto e : spec.methods)
                            dup = dup || e == m;
                        if (dup)
                            spec.warnings.push_back("duplicate method '" + name + "' ignored");
                        else
                            spec.methods.push_back(m);
                    }
                } else if (key == "dims") {
                    spec.dims.clear();
                    for (const auto& ds : detail::split_list(value))
                        spec.dims.push_back(detail::parse_uint(qualified, ds));
                } else if (key == "tolerances") {
                    spec.tol_list.clear();
                    for (const auto& ts : detail::split_list(value))
                        spec.tol_list.push_back(detail::parse_real(qualified, ts));
                } else if (key == "profile") {
                    if (value == "desk")
                        spec.profile = StudyProfile::desk;
                    else if (value == "paper")
                        spec.profile = StudyProfile::paper;
                    else
                        throw std::invalid_argument(qualified + ": expected desk|paper, got '" +
                                                    value + "'");
                } else if (key == "seed") {
                    spec.seed = detail::parse_uint(qualified, value);
                } else if (key == "out_dir") {
                    spec.out_dir = value;
                } else {
                    throw std::invalid_argument("unknown key '" + qualified + "'");
                }
            } else if (section == "smoothing") {
                if (key == "mode") {
                    if (value == "analytic")
                        spec.smoothing.mode = smoothing_mode::analytic;
                    else if (value == "numerical")
                        spec.smoothing.mode = smoothing_mode::numerical;
                    else
                        throw std::invalid_argument(
                            qualified + ": expected analytic|numerical, got '" + value + "'");
                } else if (key == "m_lag") {
                    spec.smoothing.m_lag = static_cast<int>(detail::parse_uint(qualified, value));
                } else if (key == "newton_tol") {
                    spec.smoothing.newton_tol = detail::parse_real(qualified, value);
                } else if (key == "max_iterations") {
                    spec.smoothing.max_iterations =
                        static_cast<int>(detail::parse_uint(qualified, value));
                } else {
                    throw std::invalid_argument("unknown key '" + qualified + "'");
                }
            } else { // algorithm1
                if (key == "omega")
                    spec.omega = detail::parse_real(qualified, value);
                else if (key == "initial_levels")
                    spec.initial_levels = static_cast<int>(detail::parse_uint(qualified, value));
                else if (key == "n_star")
                    spec.n_star = detail::parse_uint(qualified, value);
                else if (key == "m0")
                    spec.m0 = detail::parse_uint(qualified, value);
                else if (key == "alpha")
                    spec.alpha = detail::parse_real(qualified, value);
                else if (key == "level_cap")
                    spec.level_cap = static_cast<int>(detail::parse_uint(qualified, value));
                else
                    throw std::invalid_argument("unknown key '" + qualified + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
    spec.validate();
    return spec;
}

struct StudyCell {
    MethodKind method = MethodKind::SmoothedMLMC;
    std::size_t d = 0;
    double tol = 0.0;
    bool ran = false;
    bool converged = false;
    std::string status; // "ok", "bias not converged at cap", or "error: ..."
    RunReport report;   // MLMC methods
    NestedRun nested;   // NestedMC
    std::uint64_t total_cost = 0;
    double estimate = 0.0;
};

struct StudyResult {
    StudySpec spec;
    std::vector<StudyCell> cells;
    int exit_status = 0;
};

namespace detail {

inline std::string cell_dir_name(const StudyCell& cell) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s_d%zu_tol%g", method_name(cell.method), cell.d, cell.tol);
    return buf;
}

inline std::string levels_csv(const StudyCell& cell, std::size_t m0) {
    std::string out = "level,m_l,N_l,mean,variance,kurtosis,cost_units\n";
    if (cell.method == MethodKind::NestedMC) {
        const auto& r = cell.nested;
        const double p = r.estimate;
        out += "0," + std::to_string(r.m) + "," + std::to_string(r.n) + "," + g17(p) + "," +
               g17(p * (1.0 - p)) + ",nan," + std::to_string(r.cost) + "\n";
        return out;
    }
    for (const auto& rec : cell.report.levels) {
        out += std::to_string(rec.level) + "," +
               std::to_string(level_inner_count(rec.level, m0)) + "," + std::to_string(rec.n) +
               "," + g17(rec.mean) + "," + g17(rec.variance) + "," +
               (rec.kurtosis_ok ? g17(rec.kurtosis) : std::string("nan")) + "," +
               std::to_string(rec.cost_units) + "\n";
    }
    return out;
}

inline nlohmann::json config_echo(const StudySpec& spec) {
    nlohmann::json j;
    j["model"] = {{"spot", spec.spot},       {"strike_first", spec.strike_first},
                  {"strike_rest", spec.strike_rest}, {"drift", spec.drift},
                  {"rate", spec.rate},       {"maturity", spec.maturity},
                  {"horizon", spec.horizon}, {"threshold", spec.threshold},
                  {"rest_vol_scale", spec.rest_vol_scale}};
    j["smoothing"] = {
        {"mode", spec.smoothing.mode == smoothing_mode::analytic ? "analytic" : "numerical"},
        {"m_lag", spec.smoothing.m_lag},
        {"newton_tol", spec.smoothing.newton_tol},
        {"max_iterations", spec.smoothing.max_iterations}};
    j["algorithm1"] = {{"omega", spec.omega},         {"initial_levels", spec.initial_levels},
                       {"n_star", spec.resolved_n_star()}, {"m0", spec.m0},
                       {"alpha", spec.alpha},         {"level_cap", spec.resolved_level_cap()}};
    j["profile"] = spec.profile == StudyProfile::desk ? "desk" : "paper";
    j["seed"] = spec.seed;
    return j;
}

inline std::string summary_json(const StudyCell& cell, const StudySpec& spec) {
    nlohmann::json j;
    j["method"] = method_name(cell.method);
    j["d"] = cell.d;
    j["tol"] = cell.tol;
    j["status"] = cell.status;
    j["converged"] = cell.converged;
    j["estimate"] = cell.estimate;
    j["total_cost"] = cell.total_cost;
    j["seed"] = spec.seed;
    j["config"] = config_echo(spec);
    if (cell.method == MethodKind::NestedMC) {
        j["n_outer"] = cell.nested.n;
        j["m_inner"] = cell.nested.m;
        j["half_width"] = cell.nested.half_width;
    } else {
        const auto& r = cell.report;
        j["final_level"] = r.final_level;
        j["wall_seconds"] = r.wall_seconds;
        j["rates"] = {{"alpha_hat", r.rates.alpha_hat},
                      {"beta_hat", r.rates.beta_hat},
                      {"gamma_hat", r.rates.gamma_hat},
                      {"ok", r.rates.ok}};
        auto levels = nlohmann::json::array();
        for (const auto& rec : r.levels) {
            levels.push_back({{"level", rec.level},
                              {"m_l", level_inner_count(rec.level, spec.m0)},
                              {"n", rec.n},
                              {"mean", rec.mean},
                              {"variance", rec.variance},
                              {"kurtosis", rec.kurtosis_ok ? rec.kurtosis : 0.0},
                              {"kurtosis_ok", rec.kurtosis_ok},
                              {"cost_units", rec.cost_units}});
        }
        j["levels"] = levels;
    }
    return j.dump(2) + "\n";
}

} // namespace detail

inline StudyResult run_study(const StudySpec& spec) {
    spec.validate();
    namespace fs = std::filesystem;
    fs::create_directories(spec.out_dir);
    StudyResult result;
    result.spec = spec;
    std::string cost_csv = "method,d,tol,total_cost,estimate\n";
    for (const auto method : spec.methods) {
        for (const auto d : spec.dims) {
            for (const double tol : spec.tol_list) {
                StudyCell cell;
                cell.method = method;
                cell.d = d;
                cell.tol = tol;
                try {
                    const auto model = spec.model(d);
                    const auto cfg = spec.run_config(method, tol);
                    if (method == MethodKind::NestedMC) {
                        cell.nested = run_nested(model, cfg);
                        cell.converged = cell.nested.converged;
                        cell.total_cost = cell.nested.cost;
                        cell.estimate = cell.nested.estimate;
                        cell.status = cell.converged ? "ok" : "bias not converged at cap";
                    } else {
                        cell.report = run_mlmc(model, cfg);
                        cell.converged = cell.report.converged;
                        cell.total_cost = cell.report.total_cost;
                        cell.estimate = cell.report.estimate;
                        cell.status = cell.converged ? "ok" : cell.report.diagnostic;
                    }
                    cell.ran = true;
                } catch (const std::exception& e) {
                    cell.status = std::string("error: ") + e.what();
                }
                const fs::path dir = fs::path(spec.out_dir) / detail::cell_dir_name(cell);
                fs::create_directories(dir);
                if (cell.ran)
                    detail::atomic_write(dir / "levels.csv", detail::levels_csv(cell, spec.m0));
                detail::atomic_write(dir / "summary.json", detail::summary_json(cell, spec));
                cost_csv += std::string(method_name(method)) + "," + std::to_string(d) + "," +
                            detail::g17(tol) + "," + std::to_string(cell.total_cost) + "," +
                            detail::g17(cell.estimate) + "\n";
                if (!cell.ran || !cell.converged)
                    result.exit_status = 1;
                result.cells.push_back(std::move(cell));
            }
        }
    }
    detail::atomic_write(fs::path(spec.out_dir) / "cost_vs_tol.csv", cost_csv);
    return result;
}

inline std::string emit_rate_table(const StudyResult& result) {
    std::string out = "method,d,alpha_hat,beta_hat,cost_exponent,max_kurtosis,deepest_kurtosis,"
                      "status\n";
    for (const auto method : result.spec.methods) {
        for (const auto d : result.spec.dims) {
            // deepest diagnostics come from the tightest-tolerance cell
            const StudyCell* best = nullptr;
            std::vector<double> tols, costs;
            bool complete = true;
            for (const auto& cell : result.cells) {
                if (cell.method != method || cell.d != d)
                    continue;
                if (!cell.ran || !cell.converged)
                    complete = false;
                if (!cell.ran)
                    continue;
                tols.push_back(cell.tol);
                costs.push_back(static_cast<double>(cell.total_cost));
                if (!best || cell.tol < best->tol)
                    best = &cell;
            }
            std::string alpha = "nan", beta = "nan", expo = "nan", kmax = "nan", kdeep = "nan";
            if (best && method != MethodKind::NestedMC) {
                if (best->report.rates.ok) {
                    alpha = detail::g17(best->report.rates.alpha_hat);
                    beta = detail::g17(best->report.rates.beta_hat);
                }
                double mk = 0.0, dk = 0.0;
                bool any = false;
                for (const auto& rec : best->report.levels) {
                    if (!rec.kurtosis_ok || rec.level == 0)
                        continue;
                    mk = std::max(mk, rec.kurtosis);
                    dk = rec.kurtosis;
                    any = true;
                }
                if (any) {
                    kmax = detail::g17(mk);
                    kdeep = detail::g17(dk);
                }
            }
            if (tols.size() >= 2)
                expo = detail::g17(fit_cost_exponent(tols, costs));
            out += std::string(method_name(method)) + "," + std::to_string(d) + "," + alpha +
                   "," + beta + "," + expo + "," + kmax + "," + kdeep + "," +
                   (complete ? "ok" : "incomplete") + "\n";
        }
    }
    return out;
}

inline void write_rate_table(const StudyResult& result) {
    detail::atomic_write(std::filesystem::path(result.spec.out_dir) / "rates.csv",
                         emit_rate_table(result));
}

} // namespace mlrisk
