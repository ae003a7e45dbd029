#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sgl {

// Caps and thresholds, echoed into every CLI output for provenance.
struct Config {
    int enum_cap = 8;
    std::uint64_t brute_cap = 100000000ULL;
    int lp_cap = 12;
    int cheeger_cap = 22;
    int dense_cap = 2000;
    double strict_eps_max = 1e-4;

    nlohmann::json to_json() const;
};

// One trend-scan record; re-runnable to bit-identical estimates from the
// recorded seeds.
struct ExperimentRecord {
    int size = 0;
    int trial = 0;
    int n = 0, m = 0, d = 0, delta = 0;
    double p = 1.0;
    std::uint64_t seed_g = 0, seed_h = 0, seed_search = 0;
    int host_resamples = 0; // extra draws until the host came out connected
    std::string mode;       // "brute" | "search"
    std::vector<std::string> notes;
    double lower = 0.0;
    bool exact = false;
    std::optional<double> upper; // certificate, when the host fits the LP cap
    std::optional<double> upper_l1_distortion;
    std::optional<double> upper_classical;
    std::optional<double> lambda2_g;
    std::string property_d_verdict; // sampled checks at exploratory parameters
    std::string property_r_verdict;
    double check_alpha = 0.0;
    double check_eps = 0.0;
    double wall_seconds = 0.0;

    nlohmann::json to_json() const;
};

// Desk-scale trend scan: per size (n = m), sample G and H, estimate gamma from
// below (brute force when m^n fits the cap, local search otherwise; downgrades
// are recorded, never silent) and certify from above when the host fits the
// cut-LP cap.
std::vector<ExperimentRecord> gamma_trend_scan(int d, int delta, const std::vector<int>& sizes,
                                             int trials, std::uint64_t seed, int restarts = 50,
                                             const Config& config = Config{});

// Command-line entry point; parses argv-style arguments, writes JSON to `out`
// (or a --out file) and returns the process exit code:
// 0 success/pass, 2 verdict-fail, 1 error, 64 usage error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sgl
