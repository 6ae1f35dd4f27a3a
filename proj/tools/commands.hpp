#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qmpgrover/noise.hpp"

namespace qmpgrover::cli {

/// One reproducible experiment run. Loaded from a JSON manifest and/or
/// command-line flags; flags win.
struct ExperimentConfig {
    int n = 0;
    std::vector<std::string> targets;
    int b = 0;  // 0 = plain search, >= 1 = multiprogrammed with 2^b blocks
    int j = 1;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 0;
    std::optional<NoiseSpec> noise;
    std::string map_name;
    std::string out_dir = ".";
    int k = 0;       // physical qubits per block; 0 = n + 1 (one ancilla)
    int buffer = 1;  // idle-qubit separation between placed blocks
    std::vector<int> b_values = {1, 2, 3};
    int j_max = 50;
    bool svg = false;
    bool simulated_success = false;  // report: simulate instead of closed form

    /// Per-row replacements for the report table, e.g. device-measured
    /// depth/success figures.
    struct ReportOverride {
        std::string variant;
        std::string mode;
        std::optional<int> nq;
        std::optional<int> depth;
        std::optional<double> success;
    };
    std::vector<ReportOverride> report_overrides;
};

/// Parse a JSON manifest; unknown fields are rejected with the field named.
ExperimentConfig config_from_json(const std::string& text);

// Each command validates its inputs, writes its outputs under
// config.out_dir (atomically, temp-then-rename) and returns a process exit
// code: 0 ok, 2 validation, 3 capacity, 4 layout infeasibility.

int cmd_simulate(const ExperimentConfig& config, std::ostream& log = std::cout);
int cmd_sweep(const ExperimentConfig& config, std::ostream& log = std::cout);
int cmd_layout(const ExperimentConfig& config, std::ostream& log = std::cout);
int cmd_report(const ExperimentConfig& config, std::ostream& log = std::cout);

/// Full CLI entry point (subcommand dispatch, flag parsing, error mapping).
int run_cli(int argc, const char* const* argv, std::ostream& log = std::cout,
            std::ostream& err = std::cerr);

}  // namespace qmpgrover::cli
