#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fofana/catalog.hpp"
#include "fofana/experiment.hpp"

using namespace fofana;
namespace fs = std::filesystem;

namespace {

nlohmann::json small_config_json() {
    return {
        {"dim", 1},
        {"side", 64},
        {"samples_per_unit", 64},
        {"exponents", {{1.0, 2.0, 1.5}}},
        {"catalog", {"gauss_quarter", "poisson_one", "random_field"}},
        {"seed", 7},
    };
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path unique_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("fofana_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("config parsing and validation") {
    SUBCASE("defaults round-trip through json") {
        const ExperimentConfig cfg = ExperimentConfig::defaults(1);
        const ExperimentConfig back = ExperimentConfig::from_json(cfg.to_json());
        CHECK(back.side == cfg.side);
        CHECK(back.exponents == cfg.exponents);
        CHECK(back.seed == cfg.seed);
    }
    SUBCASE("unknown keys are rejected") {
        auto j = small_config_json();
        j["grids"] = 3;
        CHECK_THROWS_AS(ExperimentConfig::from_json(j), ConfigError);
        auto j2 = small_config_json();
        j2["t_ladder"] = {{"base", 1.0}, {"rato", 2.0}};
        CHECK_THROWS_AS(ExperimentConfig::from_json(j2), ConfigError);
    }
    SUBCASE("invalid exponent triples are rejected with the nontriviality condition") {
        auto j = small_config_json();
        j["exponents"] = {{2.0, 1.0, 3.0}};
        try {
            ExperimentConfig::from_json(j);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("p <= alpha <= q") != std::string::npos);
        }
    }
    SUBCASE("unrepresentable dilation ladders are rejected") {
        auto j = small_config_json();
        j["r_ladder"] = {{"base", 1.0 / 128.0}, {"ratio", 2.0}, {"count", 3}};
        CHECK_THROWS_AS(ExperimentConfig::from_json(j), ConfigError);
    }
    SUBCASE("unknown catalog names are rejected") {
        auto j = small_config_json();
        j["catalog"] = {"no_such_entry"};
        CHECK_THROWS_AS(ExperimentConfig::from_json(j), ConfigError);
    }
    SUBCASE("bad grids are rejected") {
        auto j = small_config_json();
        j["side"] = 15;
        CHECK_THROWS_AS(ExperimentConfig::from_json(j), ConfigError);
    }
}

TEST_CASE("suite runs and determinism") {
    const ExperimentConfig cfg = ExperimentConfig::from_json(small_config_json());
    const std::vector<std::string> suites = {"norms", "characterization"};

    const fs::path dir_a = unique_dir("run_a");
    const fs::path dir_b = unique_dir("run_b");
    const int rc_a = run_experiment(cfg, suites, dir_a.string());
    const int rc_b = run_experiment(cfg, suites, dir_b.string());
    CHECK(rc_a == 0);
    CHECK(rc_b == 0);

    SUBCASE("byte-identical output under the same config and seed") {
        for (const std::string name : {"norms.csv", "characterization.csv", "summary.json"}) {
            const std::string a = slurp(dir_a / name);
            const std::string b = slurp(dir_b / name);
            REQUIRE(!a.empty());
            CHECK(a == b);
        }
    }
    SUBCASE("csv has the documented header") {
        const std::string csv = slurp(dir_a / "norms.csv");
        CHECK(csv.rfind("suite,check,subject,exponents,value,threshold,pass\n", 0) == 0);
    }
    SUBCASE("summary carries schema, version, config echo, checks and bands") {
        nlohmann::json s;
        std::ifstream(dir_a / "summary.json") >> s;
        CHECK(s.at("schema_version").get<int>() == kSummarySchemaVersion);
        CHECK(s.at("tool_version").get<std::string>() == kToolVersion);
        CHECK(s.at("config").at("side").get<int>() == 64);
        CHECK(s.at("all_pass").get<bool>());
        CHECK(!s.at("suites").at("characterization").at("bands").empty());
    }
    SUBCASE("unknown suites are rejected") {
        CHECK_THROWS_AS(run_suite("nope", cfg), ConfigError);
    }
}

TEST_CASE("diff_summaries") {
    const ExperimentConfig cfg = ExperimentConfig::from_json(small_config_json());
    const fs::path dir = unique_dir("diff");
    REQUIRE(run_experiment(cfg, {"characterization"}, dir.string()) == 0);
    nlohmann::json base;
    std::ifstream(dir / "summary.json") >> base;

    SUBCASE("identical summaries show zero drift") {
        const auto rows = diff_summaries(base, base);
        REQUIRE(!rows.empty());
        for (const auto& r : rows) {
            CHECK(r.drift == 0.0);
            CHECK_FALSE(r.flagged);
        }
    }
    SUBCASE("a 20% band shift is flagged") {
        nlohmann::json moved = base;
        auto& bands = moved["suites"]["characterization"]["bands"];
        const std::string key = bands.items().begin().key();
        bands[key] = bands[key].get<double>() * 1.2;
        const auto rows = diff_summaries(base, moved);
        int flagged = 0;
        for (const auto& r : rows) flagged += r.flagged ? 1 : 0;
        CHECK(flagged == 1);
    }
    SUBCASE("missing functionals are an error") {
        nlohmann::json moved = base;
        auto& bands = moved["suites"]["characterization"]["bands"];
        bands.erase(bands.items().begin().key());
        CHECK_THROWS_AS(diff_summaries(base, moved), ConfigError);
    }
    SUBCASE("incompatible grids are an error") {
        nlohmann::json moved = base;
        moved["config"]["side"] = 32;
        CHECK_THROWS_AS(diff_summaries(base, moved), ConfigError);
    }
}

#ifdef FOFANA_LAB_BIN
TEST_CASE("command-line interface exit codes") {
    const fs::path dir = unique_dir("cli");
    const std::string bin = FOFANA_LAB_BIN;

    auto run_cmd = [&](const std::string& args) {
        const std::string cmd = bin + " " + args + " > " + (dir / "stdout.txt").string() + " 2>&1";
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };

    const fs::path good_cfg = dir / "good.json";
    std::ofstream(good_cfg) << small_config_json().dump(2);

    SUBCASE("clean run exits 0 and writes the outputs") {
        const int rc = run_cmd("run --config " + good_cfg.string() + " --suite norms --out " + (dir / "out").string());
        CHECK(rc == 0);
        CHECK(fs::exists(dir / "out" / "norms.csv"));
        CHECK(fs::exists(dir / "out" / "summary.json"));
    }
    SUBCASE("invalid exponent triple exits 2") {
        const fs::path bad_cfg = dir / "bad.json";
        auto j = small_config_json();
        j["exponents"] = {{2.0, 1.0, 3.0}};
        std::ofstream(bad_cfg) << j.dump(2);
        CHECK(run_cmd("run --config " + bad_cfg.string() + " --suite norms --out " + (dir / "out2").string()) == 2);
    }
    SUBCASE("unknown suite exits 2") {
        CHECK(run_cmd("run --config " + good_cfg.string() + " --suite nope --out " + (dir / "out3").string()) == 2);
    }
    SUBCASE("diff of identical summaries exits 0, drifted exits 1") {
        REQUIRE(run_cmd("run --config " + good_cfg.string() + " --suite characterization --out " +
                        (dir / "ref").string()) == 0);
        CHECK(run_cmd("diff " + (dir / "ref" / "summary.json").string() + " " +
                      (dir / "ref" / "summary.json").string()) == 0);

        nlohmann::json s;
        std::ifstream(dir / "ref" / "summary.json") >> s;
        auto& bands = s["suites"]["characterization"]["bands"];
        bands[bands.items().begin().key()] = bands.items().begin().value().get<double>() * 2.0;
        std::ofstream(dir / "moved.json") << s.dump(2);
        CHECK(run_cmd("diff " + (dir / "ref" / "summary.json").string() + " " + (dir / "moved.json").string()) == 1);
    }
}
#endif
