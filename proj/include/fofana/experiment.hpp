#ifndef FOFANA_EXPERIMENT_HPP
#define FOFANA_EXPERIMENT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fofana/grid.hpp"
#include "fofana/norms.hpp"

namespace fofana {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSummarySchemaVersion = 1;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LadderConfig {
    double base = 1.0;
    double ratio = 2.0;
    int count = 1;
    Ladder to_ladder() const;
};

struct ExperimentConfig {
    int dim = 1;
    int side = 64;
    int samples_per_unit = 64;
    std::vector<std::array<double, 3>> exponents;  // (p, q, alpha)
    LadderConfig t_ladder;
    LadderConfig r_ladder;
    LadderConfig rho_ladder;
    LadderConfig mu_ladder;
    std::vector<std::string> catalog;  // empty = every entry
    std::uint64_t seed = 2024;

    static ExperimentConfig defaults(int dim = 1);
    // Rejects unknown keys and re-validates every precondition.
    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load(const std::string& path);
    nlohmann::json to_json() const;
    GridSpec grid() const;
};

struct CheckRow {
    std::string check;
    std::string subject;    // catalog entry or "-"
    std::string exponents;  // "p=..,q=..,a=.." or "-"
    double value = 0.0;
    double threshold = 0.0;
    bool pass = true;
};

struct Band {
    std::string key;
    double value;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckRow> rows;
    std::vector<Band> bands;
    bool all_pass() const;
};

const std::vector<std::string>& suite_names();  // norms, characterization, cr-harmonic, cr-temperature, oracles

SuiteResult run_suite(const std::string& name, const ExperimentConfig& cfg);

// Runs the suites, writes <suite>.csv per suite plus summary.json into
// out_dir. Returns 0 when every check passes, 1 otherwise.
int run_experiment(const ExperimentConfig& cfg, const std::vector<std::string>& suites,
                   const std::string& out_dir);

std::string csv_for(const SuiteResult& suite);

// Band drift between two summaries; throws ConfigError on incompatible
// configurations or missing functionals.
struct DriftRow {
    std::string key;
    double before;
    double after;
    double drift;  // relative
    bool flagged;  // drift > 10%
};
std::vector<DriftRow> diff_summaries(const nlohmann::json& before, const nlohmann::json& after);

}  // namespace fofana

#endif
