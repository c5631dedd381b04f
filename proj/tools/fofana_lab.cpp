// fofana-lab: experiment runner for the amalgam-norm / maximal-operator /
// Cauchy-Riemann verification suites.
//
//   fofana-lab run --config cfg.json --suite all --out results/ [--seed N]
//   fofana-lab diff old/summary.json new/summary.json
//
// Exit codes: 0 all checks pass, 1 check failure or band drift, 2 config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fofana/experiment.hpp"

namespace {

int do_run(const std::string& config_path, const std::string& suite, const std::string& out_dir,
           bool has_seed, std::uint64_t seed) {
    fofana::ExperimentConfig cfg = fofana::ExperimentConfig::load(config_path);
    if (has_seed) cfg.seed = seed;

    std::vector<std::string> suites;
    if (suite == "all") {
        suites = fofana::suite_names();
    } else {
        const auto& known = fofana::suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
            throw fofana::ConfigError("unknown suite '" + suite + "'");
        suites.push_back(suite);
    }
    const int rc = fofana::run_experiment(cfg, suites, out_dir);
    std::cout << (rc == 0 ? "all checks passed" : "CHECK FAILURES (see CSV output)") << "\n";
    return rc;
}

int do_diff(const std::string& old_path, const std::string& new_path) {
    auto load = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw fofana::ConfigError("diff: cannot open " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw fofana::ConfigError(std::string("diff: parse error: ") + e.what());
        }
        return j;
    };
    const auto rows = fofana::diff_summaries(load(old_path), load(new_path));
    bool flagged = false;
    for (const auto& r : rows) {
        std::printf("%-60s %.6g -> %.6g  drift %.3g%%%s\n", r.key.c_str(), r.before, r.after, 100.0 * r.drift,
                    r.flagged ? "  FLAGGED" : "");
        flagged = flagged || r.flagged;
    }
    std::printf("%zu band(s) compared, %s\n", rows.size(), flagged ? "drift above 10% detected" : "no drift above 10%");
    return flagged ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fofana-lab: amalgam-norm and Cauchy-Riemann verification suites"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run experiment suites");
    std::string config_path, suite = "all", out_dir;
    std::uint64_t seed = 0;
    run->add_option("--config", config_path, "JSON experiment configuration")->required();
    run->add_option("--suite", suite, "suite name or 'all'");
    run->add_option("--out", out_dir, "output directory")->required();
    auto* seed_opt = run->add_option("--seed", seed, "override the config seed");

    auto* diff = app.add_subcommand("diff", "compare two summary.json files");
    std::string old_path, new_path;
    diff->add_option("old", old_path, "previous summary.json")->required();
    diff->add_option("new", new_path, "current summary.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return do_run(config_path, suite, out_dir, seed_opt->count() > 0, seed);
        return do_diff(old_path, new_path);
    } catch (const fofana::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
