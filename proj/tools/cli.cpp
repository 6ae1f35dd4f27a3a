#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "json.hpp"
#include "qmpgrover/errors.hpp"

namespace qmpgrover::cli {

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;

struct FlagValues {
    std::string config_path;
    std::string targets_csv;
    std::string b_values_csv;
    int n = 0, b = 0, j = 0, k = 0, buffer = 0, j_max = 0;
    std::uint64_t shots = 0, seed = 0, noise_seed = 0;
    double p_single = 0.0, p_multi = 0.0;
    std::string map_name, out_dir;
    bool svg = false, simulated = false;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        if (end > start) {
            parts.push_back(text.substr(start, end - start));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

void add_common_options(CLI::App* cmd, FlagValues& flags) {
    cmd->add_option("--config", flags.config_path, "JSON experiment manifest");
    cmd->add_option("--n", flags.n, "search qubits per block");
    cmd->add_option("--targets", flags.targets_csv, "comma-separated target bitstrings");
    cmd->add_option("--b", flags.b, "guess bits (2^b blocks); 0 runs plain search");
    cmd->add_option("--j", flags.j, "iteration count");
    cmd->add_option("--shots", flags.shots, "samples to draw");
    cmd->add_option("--seed", flags.seed, "sampling seed");
    cmd->add_option("--map", flags.map_name, "coupling map name or JSON file");
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--k", flags.k, "physical qubits per block (default n+1)");
    cmd->add_option("--buffer", flags.buffer, "idle-qubit separation between blocks");
    cmd->add_option("--j-max", flags.j_max, "largest iteration count in sweeps");
    cmd->add_option("--b-values", flags.b_values_csv, "comma-separated b list for sweeps");
    cmd->add_option("--p-single", flags.p_single, "single-qubit Pauli error probability");
    cmd->add_option("--p-multi", flags.p_multi, "multi-qubit Pauli error probability");
    cmd->add_option("--noise-seed", flags.noise_seed, "noise trajectory seed");
    cmd->add_flag("--svg", flags.svg, "also draw sweep curves as SVG");
    cmd->add_flag("--simulated", flags.simulated, "report simulated instead of closed-form success");
}

ExperimentConfig merge(const CLI::App* cmd, const FlagValues& flags) {
    ExperimentConfig config;
    if (cmd->count("--config") > 0) {
        std::ifstream in(flags.config_path, std::ios::binary);
        if (!in) {
            throw ValidationError("cannot read config file " + flags.config_path);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        config = config_from_json(buf.str());
    }
    if (cmd->count("--n")) config.n = flags.n;
    if (cmd->count("--targets")) config.targets = split_csv(flags.targets_csv);
    if (cmd->count("--b")) config.b = flags.b;
    if (cmd->count("--j")) config.j = flags.j;
    if (cmd->count("--shots")) config.shots = flags.shots;
    if (cmd->count("--seed")) config.seed = flags.seed;
    if (cmd->count("--map")) config.map_name = flags.map_name;
    if (cmd->count("--out")) config.out_dir = flags.out_dir;
    if (cmd->count("--k")) config.k = flags.k;
    if (cmd->count("--buffer")) config.buffer = flags.buffer;
    if (cmd->count("--j-max")) config.j_max = flags.j_max;
    if (cmd->count("--b-values")) {
        config.b_values.clear();
        for (const std::string& part : split_csv(flags.b_values_csv)) {
            config.b_values.push_back(std::stoi(part));
        }
    }
    if (cmd->count("--p-single") || cmd->count("--p-multi") || cmd->count("--noise-seed")) {
        NoiseSpec noise = config.noise.value_or(NoiseSpec{});
        if (cmd->count("--p-single")) noise.p_single = flags.p_single;
        if (cmd->count("--p-multi")) noise.p_multi = flags.p_multi;
        if (cmd->count("--noise-seed")) noise.seed = flags.noise_seed;
        config.noise = noise;
    }
    if (cmd->count("--svg")) config.svg = flags.svg;
    if (cmd->count("--simulated")) config.simulated_success = flags.simulated;
    return config;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& log, std::ostream& err) {
    CLI::App app{"Grover search toolkit: exact simulation, multiprogrammed "
                 "composition, closed-form analytics and device layout"};
    app.require_subcommand(1);

    FlagValues flags;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "run a circuit exactly, sample counts, write block marginals");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "tabulate the three success-probability curves over j");
    CLI::App* layout = app.add_subcommand(
        "layout", "place blocks on a coupling map with buffer separation");
    CLI::App* report = app.add_subcommand(
        "report", "volume/efficiency table across circuit variants");
    for (CLI::App* cmd : {simulate, sweep, layout, report}) {
        add_common_options(cmd, flags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(merge(simulate, flags), log);
        if (sweep->parsed()) return cmd_sweep(merge(sweep, flags), log);
        if (layout->parsed()) return cmd_layout(merge(layout, flags), log);
        if (report->parsed()) return cmd_report(merge(report, flags), log);
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const nlohmann::json::exception& e) {
        err << "config error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace qmpgrover::cli
