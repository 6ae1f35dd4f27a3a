#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"
#include "qmpgrover/analytics.hpp"
#include "qmpgrover/bitstring.hpp"
#include "qmpgrover/builders.hpp"
#include "qmpgrover/layout.hpp"
#include "qmpgrover/serial.hpp"
#include "qmpgrover/simulator.hpp"

namespace qmpgrover::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 4;

void write_file_atomic(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out << content;
        if (!out) {
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void require(bool condition, const std::string& field, const std::string& message) {
    if (!condition) {
        throw ValidationError("config field \"" + field + "\": " + message);
    }
}

SearchProblem make_problem(const ExperimentConfig& config) {
    require(config.n >= 1, "n", "search domain size is required");
    require(!config.targets.empty(), "targets", "at least one target is required");
    return SearchProblem::create(config.n, config.targets);
}

NoiseSpec noise_from_json(const json& doc) {
    NoiseSpec noise;
    for (const auto& [key, value] : doc.items()) {
        if (key == "p_single") {
            noise.p_single = value.get<double>();
        } else if (key == "p_multi") {
            noise.p_multi = value.get<double>();
        } else if (key == "seed") {
            noise.seed = value.get<std::uint64_t>();
        } else {
            throw ValidationError("config field \"noise." + key + "\" is unknown");
        }
    }
    return noise;
}

ExperimentConfig::ReportOverride override_from_json(const json& doc) {
    ExperimentConfig::ReportOverride row;
    for (const auto& [key, value] : doc.items()) {
        if (key == "variant") {
            row.variant = value.get<std::string>();
        } else if (key == "mode") {
            row.mode = value.get<std::string>();
        } else if (key == "nq") {
            row.nq = value.get<int>();
        } else if (key == "depth") {
            row.depth = value.get<int>();
        } else if (key == "success") {
            row.success = value.get<double>();
        } else {
            throw ValidationError("config field \"report." + key + "\" is unknown");
        }
    }
    require(!row.variant.empty() && !row.mode.empty(), "report",
            "overrides need variant and mode");
    return row;
}

// ---- sweep plotting -------------------------------------------------------

std::string svg_polyline(const std::vector<std::pair<double, double>>& points,
                         const char* color) {
    std::string out = "  <polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : points) {
        out += format_double(std::round(x * 100.0) / 100.0);
        out += ',';
        out += format_double(std::round(y * 100.0) / 100.0);
        out += ' ';
    }
    out += "\"/>\n";
    return out;
}

std::string sweep_svg(const std::vector<SweepRow>& rows, int b, int j_max) {
    constexpr double width = 640, height = 440;
    constexpr double left = 60, right = 620, top = 20, bottom = 390;
    const auto x_of = [&](double j) {
        return left + (right - left) * (j_max > 0 ? j / j_max : 0.0);
    };
    const auto y_of = [&](double p) { return bottom - (bottom - top) * p; };

    std::vector<std::pair<double, double>> gsa, no_qmp, qmp;
    for (const SweepRow& row : rows) {
        if (row.b != b) continue;
        gsa.emplace_back(x_of(row.j), y_of(row.gsa));
        no_qmp.emplace_back(x_of(row.j), y_of(row.no_qmp));
        qmp.emplace_back(x_of(row.j), y_of(row.qmp));
    }

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           format_double(width) + "\" height=\"" + format_double(height) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const double p = tick * 0.25;
        const double y = y_of(p);
        out += "  <line x1=\"" + format_double(left) + "\" y1=\"" + format_double(y) +
               "\" x2=\"" + format_double(right) + "\" y2=\"" + format_double(y) +
               "\" stroke=\"#dddddd\"/>\n";
        out += "  <text x=\"" + format_double(left - 8) + "\" y=\"" +
               format_double(y + 4) + "\" font-size=\"12\" text-anchor=\"end\">" +
               format_double(p) + "</text>\n";
    }
    const int x_step = std::max(1, j_max / 10);
    for (int j = 0; j <= j_max; j += x_step) {
        out += "  <text x=\"" + format_double(x_of(j)) + "\" y=\"" +
               format_double(bottom + 16) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + std::to_string(j) +
               "</text>\n";
    }
    out += "  <line x1=\"" + format_double(left) + "\" y1=\"" + format_double(top) +
           "\" x2=\"" + format_double(left) + "\" y2=\"" + format_double(bottom) +
           "\" stroke=\"black\"/>\n";
    out += "  <line x1=\"" + format_double(left) + "\" y1=\"" + format_double(bottom) +
           "\" x2=\"" + format_double(right) + "\" y2=\"" + format_double(bottom) +
           "\" stroke=\"black\"/>\n";
    out += svg_polyline(gsa, "#1f77b4");
    out += svg_polyline(no_qmp, "#ff7f0e");
    out += svg_polyline(qmp, "#2ca02c");
    const char* labels[3] = {"gsa", "no-qmp", "qmp"};
    const char* colors[3] = {"#1f77b4", "#ff7f0e", "#2ca02c"};
    for (int i = 0; i < 3; ++i) {
        const double y = top + 16 + 18 * i;
        out += "  <line x1=\"" + format_double(left + 16) + "\" y1=\"" +
               format_double(y - 4) + "\" x2=\"" + format_double(left + 44) +
               "\" y2=\"" + format_double(y - 4) + "\" stroke=\"" + colors[i] +
               "\" stroke-width=\"2\"/>\n";
        out += "  <text x=\"" + format_double(left + 50) + "\" y=\"" +
               format_double(y) + "\" font-size=\"12\">" + labels[i] + "</text>\n";
    }
    out += "  <text x=\"" + format_double((left + right) / 2) + "\" y=\"" +
           format_double(height - 12) +
           "\" font-size=\"13\" text-anchor=\"middle\">iterations j (b=" +
           std::to_string(b) + ")</text>\n";
    out += "</svg>\n";
    return out;
}

// ---- report rows ----------------------------------------------------------

struct ReportEntry {
    std::string variant;
    std::string mode;  // gsa | no-qmp | qmp
    int guess_bits = 0;
    int iterations = 1;
};

std::string gsa_variant_name(int n, int iterations) {
    std::string name;
    for (int i = 0; i < iterations; ++i) {
        name += "D" + std::to_string(n);
    }
    return name + "M" + std::to_string(n);
}

std::string partial_variant_name(int n, int b) {
    const int m = n - b;
    return "G" + std::to_string(b) + "D" + std::to_string(m) + "M" + std::to_string(m);
}

// Targets in the most populated block: the per-block count the closed forms
// take as M_i.
std::uint64_t best_block_targets(const SearchProblem& problem, int b) {
    std::map<std::string, std::uint64_t> per_guess;
    for (const std::string& t : problem.targets) {
        ++per_guess[t.substr(t.size() - static_cast<std::size_t>(b))];
    }
    std::uint64_t best = 1;
    for (const auto& [guess, count] : per_guess) {
        best = std::max(best, count);
    }
    return best;
}

double simulated_gsa_success(const SearchProblem& problem, int j) {
    const Statevector state = run_exact(build_grover_circuit(problem, j));
    double p = 0.0;
    for (const std::string& t : problem.targets) {
        p += state.probability_of(bits_to_index(t));
    }
    return p;
}

// Success of one multiprogrammed block: probability that its window shows
// the searched bits of a target whose guess bits match. Blocks are
// independent, so a single-block run stands in for the wide circuit.
double simulated_block_success(const SearchProblem& problem, const std::string& guess,
                               int j) {
    const int b = static_cast<int>(guess.size());
    const Circuit circuit = build_partial_circuit(problem, guess, j);
    const Distribution dist =
        window_distribution(run_exact(circuit), circuit.measure_window());
    double p = 0.0;
    for (const std::string& t : problem.targets) {
        if (t.substr(t.size() - static_cast<std::size_t>(b)) == guess) {
            p += dist[bits_to_index(t.substr(0, t.size() - static_cast<std::size_t>(b)))];
        }
    }
    return p;
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
    const json doc = json::parse(text);
    ExperimentConfig config;
    for (const auto& [key, value] : doc.items()) {
        if (key == "n") {
            config.n = value.get<int>();
        } else if (key == "targets") {
            config.targets = value.get<std::vector<std::string>>();
        } else if (key == "b") {
            config.b = value.get<int>();
        } else if (key == "j") {
            config.j = value.get<int>();
        } else if (key == "shots") {
            config.shots = value.get<std::uint64_t>();
        } else if (key == "seed") {
            config.seed = value.get<std::uint64_t>();
        } else if (key == "noise") {
            config.noise = noise_from_json(value);
        } else if (key == "map") {
            config.map_name = value.get<std::string>();
        } else if (key == "out") {
            config.out_dir = value.get<std::string>();
        } else if (key == "k") {
            config.k = value.get<int>();
        } else if (key == "buffer") {
            config.buffer = value.get<int>();
        } else if (key == "b_values") {
            config.b_values = value.get<std::vector<int>>();
        } else if (key == "j_max") {
            config.j_max = value.get<int>();
        } else if (key == "svg") {
            config.svg = value.get<bool>();
        } else if (key == "simulated") {
            config.simulated_success = value.get<bool>();
        } else if (key == "report") {
            for (const auto& row : value) {
                config.report_overrides.push_back(override_from_json(row));
            }
        } else {
            throw ValidationError("config field \"" + key + "\" is unknown");
        }
    }
    return config;
}

int cmd_simulate(const ExperimentConfig& config, std::ostream& log) {
    require(config.shots >= 1, "shots", "must be at least 1");
    require(config.b >= 0, "b", "must be nonnegative");
    const SearchProblem problem = make_problem(config);
    require(config.b < config.n, "b", "must be smaller than n");

    Circuit circuit(1, MeasureWindow{0, 1});
    std::optional<QmpPlan> plan;
    if (config.b == 0) {
        circuit = build_grover_circuit(problem, config.j);
    } else {
        auto [composed, composed_plan] = compose_qmp(problem, config.b, config.j);
        circuit = std::move(composed);
        plan = std::move(composed_plan);
    }

    const fs::path out_dir(config.out_dir);
    write_file_atomic(out_dir / "circuit.json", circuit_to_json(circuit));
    log << "wrote " << (out_dir / "circuit.json").string() << "\n";

    const Statevector state = run_exact(circuit);
    const Distribution dist = window_distribution(state, circuit.measure_window());
    write_file_atomic(out_dir / "exact_distribution.csv", distribution_to_csv(dist));
    log << "wrote " << (out_dir / "exact_distribution.csv").string() << "\n";

    const Counts counts = sample(dist, config.shots, config.seed);
    write_file_atomic(out_dir / "counts.json", counts_to_json(counts));
    log << "wrote " << (out_dir / "counts.json").string() << "\n";

    if (plan) {
        for (int i = 0; i < plan->block_count; ++i) {
            const QmpBlock& block = plan->blocks[static_cast<std::size_t>(i)];
            const MeasureWindow window = plan->block_window(i);
            const Counts marginal =
                marginalize_counts(counts, circuit.width(), window.least, window.length);
            const fs::path path = out_dir / ("block_" + block.guess + "_counts.json");
            write_file_atomic(path, counts_to_json(marginal));
            log << "wrote " << path.string() << "\n";
        }
    }

    if (config.noise) {
        const Counts noisy = run_noisy(circuit, *config.noise, config.shots);
        write_file_atomic(out_dir / "noisy_counts.json", counts_to_json(noisy));
        log << "wrote " << (out_dir / "noisy_counts.json").string() << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const ExperimentConfig& config, std::ostream& log) {
    const int n = config.n > 0 ? config.n : 12;
    require(n <= 40, "n", "sweep domain exponent is unreasonably large");
    require(config.j_max >= 1, "j_max", "must be at least 1");
    require(!config.b_values.empty(), "b_values", "must list at least one b");
    for (int b : config.b_values) {
        require(b >= 1 && b < n, "b_values", "entries must satisfy 1 <= b < n");
    }

    const std::uint64_t big_n = 1ULL << n;
    const std::vector<SweepRow> rows =
        sweep_curves(big_n, config.b_values, config.j_max);
    const fs::path out_dir(config.out_dir);
    write_file_atomic(out_dir / "sweep.csv", sweep_to_csv(rows));
    log << "wrote " << (out_dir / "sweep.csv").string() << "\n";

    if (config.svg) {
        for (int b : config.b_values) {
            const fs::path path = out_dir / ("sweep_b" + std::to_string(b) + ".svg");
            write_file_atomic(path, sweep_svg(rows, b, config.j_max));
            log << "wrote " << path.string() << "\n";
        }
    }
    return kExitOk;
}

int cmd_layout(const ExperimentConfig& config, std::ostream& log) {
    require(!config.map_name.empty(), "map", "a coupling map name is required");
    require(config.b >= 1, "b", "layout needs b >= 1 (2^b blocks)");
    require(config.buffer >= 0, "buffer", "must be nonnegative");
    const CouplingMap map = config.map_name.ends_with(".json")
                                ? coupling_from_json(read_file(config.map_name))
                                : load_builtin_map(config.map_name);
    const int block_count = 1 << config.b;
    int block_size = config.k;
    if (block_size == 0) {
        require(config.n >= 1, "k", "needed unless n is given (default n + 1)");
        block_size = config.n + 1;
    }

    const PlacementResult result =
        place_blocks(map, block_count, block_size, config.buffer);

    json doc;
    doc["map"] = map.name;
    doc["qubit_count"] = map.qubit_count;
    doc["blocks_requested"] = block_count;
    doc["block_size"] = block_size;
    doc["buffer"] = config.buffer;
    doc["feasible"] = result.feasible();

    const fs::path out_dir(config.out_dir);
    if (!result.feasible()) {
        doc["failure"] = {{"failed_block", result.failure->failed_block},
                          {"blocks_placed", result.failure->blocks_placed},
                          {"reason", result.failure->reason}};
        write_file_atomic(out_dir / "placement.json", doc.dump(2) + "\n");
        log << "infeasible: " << result.failure->reason << "\n";
        log << "wrote " << (out_dir / "placement.json").string() << "\n";
        return kExitInfeasible;
    }

    const Placement& placement = *result.placement;
    const std::vector<std::string> violations =
        check_placement(map, placement, block_size, config.buffer);
    if (!violations.empty()) {
        throw std::logic_error("placement failed validity check: " + violations.front());
    }
    doc["blocks"] = placement.blocks;
    doc["buffers"] = placement.buffers;

    int nq = 0;
    for (const auto& block : placement.blocks) {
        nq += static_cast<int>(block.size());
    }
    doc["metric_inputs"]["nq"] = nq;
    if (config.n >= 1 && !config.targets.empty() && config.b < config.n) {
        // Blocks are disjoint, so one block's depth is the composed depth.
        const SearchProblem problem = make_problem(config);
        const Circuit block_circuit = build_partial_circuit(
            problem, std::string(static_cast<std::size_t>(config.b), '0'), config.j);
        doc["metric_inputs"]["depth"] = logical_depth(block_circuit);
    }

    write_file_atomic(out_dir / "placement.json", doc.dump(2) + "\n");
    log << "placed " << block_count << " blocks of " << block_size << " on " << map.name
        << " with " << placement.buffers.size() << " buffer qubits\n";
    log << "wrote " << (out_dir / "placement.json").string() << "\n";
    return kExitOk;
}

int cmd_report(const ExperimentConfig& config, std::ostream& log) {
    const int n = config.n > 0 ? config.n : 5;
    std::optional<SearchProblem> problem;
    if (!config.targets.empty()) {
        problem = SearchProblem::create(n, config.targets);
    }
    require(!config.simulated_success || problem.has_value(), "targets",
            "simulated success needs an explicit target set");
    const std::uint64_t big_n = 1ULL << n;
    const std::uint64_t total_targets = problem ? problem->targets.size() : 1;
    const int ancilla_block = n + 1;

    // Structure-only stand-in when no targets are configured: depth does not
    // depend on which states the oracle marks.
    const SearchProblem skeleton = problem.has_value()
                                       ? *problem
                                       : SearchProblem::create(
                                             n, {std::string(static_cast<std::size_t>(n), '0')});

    std::vector<ReportEntry> entries;
    for (int j : {1, 2}) {
        entries.push_back({gsa_variant_name(n, j), "gsa", 0, j});
    }
    for (int b : {2, 3}) {
        if (b < n) {
            entries.push_back({partial_variant_name(n, b), "no-qmp", b, 1});
        }
    }
    for (int b : {2, 3}) {
        if (b < n) {
            entries.push_back({partial_variant_name(n, b), "qmp", b, 1});
        }
    }

    std::string csv = "variant,mode,nq,depth,success,qcv,eqcv,trf\n";
    std::ostringstream table;
    table << std::left << std::setw(10) << "variant" << std::setw(8) << "mode"
          << std::right << std::setw(5) << "nq" << std::setw(7) << "depth"
          << std::setw(10) << "success" << std::setw(8) << "qcv" << std::setw(12)
          << "eqcv" << std::setw(5) << "trf" << "\n";

    for (const ReportEntry& entry : entries) {
        const int blocks = entry.guess_bits > 0 ? (1 << entry.guess_bits) : 1;
        int nq = entry.mode == "qmp" ? blocks * ancilla_block : ancilla_block;
        int depth = 0;
        double success = 0.0;

        if (entry.mode == "gsa") {
            depth = logical_depth(build_grover_circuit(skeleton, entry.iterations));
            success = config.simulated_success
                          ? simulated_gsa_success(*problem, entry.iterations)
                          : p_gsa(big_n, total_targets, entry.iterations);
        } else {
            const std::uint64_t block_targets =
                problem ? best_block_targets(*problem, entry.guess_bits) : 1;
            depth = logical_depth(build_partial_circuit(
                skeleton, std::string(static_cast<std::size_t>(entry.guess_bits), '0'),
                entry.iterations));
            if (config.simulated_success) {
                double best = 0.0;
                double sum = 0.0;
                for (int g = 0; g < blocks; ++g) {
                    const double p = simulated_block_success(
                        *problem,
                        index_to_bits(static_cast<std::uint64_t>(g), entry.guess_bits),
                        entry.iterations);
                    best = std::max(best, p);
                    sum += p;
                }
                success = entry.mode == "qmp" ? best : sum / blocks;
            } else {
                const double per_block =
                    p_qmp(big_n, static_cast<std::uint64_t>(blocks), block_targets,
                          entry.iterations);
                success = entry.mode == "qmp" ? per_block : per_block / blocks;
            }
        }

        for (const auto& row : config.report_overrides) {
            if (row.variant == entry.variant && row.mode == entry.mode) {
                if (row.nq) nq = *row.nq;
                if (row.depth) depth = *row.depth;
                if (row.success) success = *row.success;
            }
        }

        const int trf = entry.mode == "qmp" ? blocks : 1;
        const MetricReport report = metrics(nq, depth, success, trf);

        csv += entry.variant + "," + entry.mode + "," + std::to_string(report.nq) +
               "," + std::to_string(report.depth) + "," + format_double(report.success) +
               "," + format_double(report.qcv) + "," + format_double(report.eqcv) +
               "," + std::to_string(report.trf) + "\n";
        table << std::left << std::setw(10) << entry.variant << std::setw(8)
              << entry.mode << std::right << std::setw(5) << report.nq << std::setw(7)
              << report.depth << std::setw(10) << std::fixed << std::setprecision(4)
              << report.success << std::setw(8) << std::setprecision(0) << report.qcv
              << std::setw(12) << std::setprecision(1) << report.eqcv << std::setw(5)
              << report.trf << "\n";
        table.unsetf(std::ios::fixed);
    }

    const fs::path out_dir(config.out_dir);
    write_file_atomic(out_dir / "report.csv", csv);
    log << table.str();
    log << "wrote " << (out_dir / "report.csv").string() << "\n";
    return kExitOk;
}

}  // namespace qmpgrover::cli
