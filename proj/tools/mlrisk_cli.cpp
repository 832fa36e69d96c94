// command-line front end: single runs, study grids, rate tables, and the
// brute-force oracle, all deterministic functions of (config, seed)

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <mlrisk/study.hpp>

namespace {

using namespace mlrisk;

std::string resolve_out(const std::string& flag_value, const std::string& config_value) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("MLRISK_OUT"); env && *env)
        return env;
    return config_value;
}

void print_cell(const StudyCell& cell) {
    std::printf("%-16s d=%-3zu tol=%-8g estimate=%-10.6g cost=%llu %s\n",
                method_name(cell.method), cell.d, cell.tol, cell.estimate,
                static_cast<unsigned long long>(cell.total_cost), cell.status.c_str());
}

int do_run_or_study(StudySpec spec) {
    for (const auto& w : spec.warnings)
        std::fprintf(stderr, "warning: %s\n", w.c_str());
    const auto result = run_study(spec);
    for (const auto& cell : result.cells)
        print_cell(cell);
    write_rate_table(result);
    std::printf("outputs in %s\n", spec.out_dir.c_str());
    return result.exit_status;
}

// rebuild a rate table from the summary.json files a finished study left behind
int do_rates(const std::string& out_dir) {
    namespace fs = std::filesystem;
    StudyResult result;
    result.spec.out_dir = out_dir;
    result.spec.methods.clear();
    result.spec.dims.clear();
    std::vector<std::string> dirs;
    for (const auto& e : fs::directory_iterator(out_dir))
        if (e.is_directory() && fs::exists(e.path() / "summary.json"))
            dirs.push_back(e.path().string());
    std::sort(dirs.begin(), dirs.end());
    for (const auto& dir : dirs) {
        std::ifstream f(dir + "/summary.json");
        nlohmann::json j;
        f >> j;
        StudyCell cell;
        cell.method = parse_method(j.at("method").get<std::string>());
        cell.d = j.at("d").get<std::size_t>();
        cell.tol = j.at("tol").get<double>();
        cell.status = j.at("status").get<std::string>();
        cell.converged = j.at("converged").get<bool>();
        cell.estimate = j.at("estimate").get<double>();
        cell.total_cost = j.at("total_cost").get<std::uint64_t>();
        cell.ran = cell.status.rfind("error:", 0) != 0;
        if (cell.method != MethodKind::NestedMC && j.contains("rates")) {
            cell.report.rates.alpha_hat = j["rates"].at("alpha_hat").get<double>();
            cell.report.rates.beta_hat = j["rates"].at("beta_hat").get<double>();
            cell.report.rates.gamma_hat = j["rates"].at("gamma_hat").get<double>();
            cell.report.rates.ok = j["rates"].at("ok").get<bool>();
            for (const auto& lj : j.at("levels")) {
                LevelRecord rec;
                rec.level = lj.at("level").get<int>();
                rec.n = lj.at("n").get<std::uint64_t>();
                rec.mean = lj.at("mean").get<double>();
                rec.variance = lj.at("variance").get<double>();
                rec.kurtosis = lj.at("kurtosis").get<double>();
                rec.kurtosis_ok = lj.at("kurtosis_ok").get<bool>();
                rec.cost_units = lj.at("cost_units").get<std::uint64_t>();
                cell.report.levels.push_back(rec);
            }
        }
        bool seen_m = false, seen_d = false;
        for (const auto m : result.spec.methods)
            seen_m = seen_m || m == cell.method;
        for (const auto d : result.spec.dims)
            seen_d = seen_d || d == cell.d;
        if (!seen_m)
            result.spec.methods.push_back(cell.method);
        if (!seen_d)
            result.spec.dims.push_back(cell.d);
        result.cells.push_back(std::move(cell));
    }
    if (result.cells.empty()) {
        std::fprintf(stderr, "no summary.json files under %s\n", out_dir.c_str());
        return 2;
    }
    const auto table = emit_rate_table(result);
    detail::atomic_write(fs::path(out_dir) / "rates.csv", table);
    std::fputs(table.c_str(), stdout);
    return 0;
}

int do_oracle(std::size_t d, std::size_t n, std::size_t m, std::uint64_t seed, double threshold,
              const std::string& out_file) {
    auto spec = experiment_spec(d);
    spec.c = threshold;
    RngStream stream(seed, stream_purpose::generic, 0, 0);
    const auto r = nested_estimate(spec, n, m, stream);
    nlohmann::json j;
    j["estimate"] = r.estimate;
    j["std_error"] = r.half_width / 3.0;
    j["half_width"] = r.half_width;
    j["n_outer"] = n;
    j["m_inner"] = m;
    j["seed"] = seed;
    j["d"] = d;
    j["c"] = spec.c;
    const auto text = j.dump(2) + "\n";
    if (!out_file.empty())
        detail::atomic_write(out_file, text);
    std::fputs(text.c_str(), stdout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilevel loss-probability estimator"};
    app.require_subcommand(1);

    std::string config_path, out_flag, method_name_flag = "smoothed_mlmc", profile_flag;
    std::uint64_t seed_flag = 0;
    double tol_flag = 0.01, threshold_flag = 15.0;
    std::size_t d_flag = 4, n_flag = 2000000, m_flag = 16384;
    std::string oracle_out;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed_flag, "RNG seed");
        cmd->add_option("--out", out_flag, "output directory (overrides MLRISK_OUT and config)");
        cmd->add_option("--profile", profile_flag, "desk|paper scale")
            ->check(CLI::IsMember({"desk", "paper"}));
    };

    auto* run = app.add_subcommand("run", "single estimate at one tolerance");
    run->add_option("--config", config_path, "INI config file");
    run->add_option("--method", method_name_flag, "estimator kind");
    run->add_option("--tol", tol_flag, "target RMS accuracy");
    run->add_option("--d", d_flag, "portfolio dimension");
    add_common(run);

    auto* study = app.add_subcommand("study", "full study from a config file");
    study->add_option("--config", config_path, "INI config file")->required();
    add_common(study);

    auto* rates = app.add_subcommand("rates", "variance/bias rate table from study outputs");
    rates->add_option("--out", out_flag, "study output directory");

    auto* oracle = app.add_subcommand("oracle", "brute-force reference value");
    oracle->add_option("--d", d_flag, "portfolio dimension");
    oracle->add_option("--n", n_flag, "outer scenarios");
    oracle->add_option("--m", m_flag, "inner samples per scenario");
    oracle->add_option("--threshold", threshold_flag, "loss threshold");
    oracle->add_option("--seed", seed_flag, "RNG seed");
    oracle->add_option("--out-file", oracle_out, "JSON destination (stdout always printed)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rates->parsed()) {
            const auto dir = resolve_out(out_flag, "mlrisk_out");
            return do_rates(dir);
        }
        if (oracle->parsed())
            return do_oracle(d_flag, n_flag, m_flag, oracle->count("--seed") ? seed_flag : 20260822,
                             threshold_flag, oracle_out);

        StudySpec spec = config_path.empty() ? StudySpec{} : parse_config(config_path);
        if (run->parsed()) {
            spec.methods = {parse_method(method_name_flag)};
            spec.dims = {d_flag};
            spec.tol_list = {tol_flag};
        }
        if (!profile_flag.empty())
            spec.profile = profile_flag == "desk" ? StudyProfile::desk : StudyProfile::paper;
        if (seed_flag || run->count("--seed") || study->count("--seed"))
            spec.seed = seed_flag;
        spec.out_dir = resolve_out(out_flag, spec.out_dir);
        spec.validate();
        return do_run_or_study(std::move(spec));
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
