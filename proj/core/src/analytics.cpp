#include "qmpgrover/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "qmpgrover/errors.hpp"

namespace qmpgrover {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kClampTolerance = 1e-12;

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::uint64_t v) {
    int b = 0;
    while ((1ULL << b) < v) ++b;
    return b;
}

// asin(sqrt(numerator/denominator)) with the argument clamped to 1 within
// tolerance, so exact-solution points land on pi/2 instead of NaN.
double rotation_angle(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) {
        throw ValidationError("search domain must be nonempty");
    }
    double arg = std::sqrt(static_cast<double>(numerator) /
                           static_cast<double>(denominator));
    if (arg > 1.0) {
        if (arg > 1.0 + kClampTolerance) {
            throw ValidationError("asin argument sqrt(" + std::to_string(numerator) +
                                  "/" + std::to_string(denominator) + ") exceeds 1");
        }
        arg = 1.0;
    }
    return std::asin(arg);
}

double arc_probability(double theta, int iterations) {
    const double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

}  // namespace

double p_gsa(std::uint64_t big_n, std::uint64_t targets, int iterations) {
    if (targets < 1 || targets >= big_n) {
        throw ValidationError("target count must satisfy 1 <= M < N");
    }
    if (iterations < 0) {
        throw ValidationError("iteration count must be nonnegative");
    }
    return arc_probability(rotation_angle(targets, big_n), iterations);
}

double p_qmp(std::uint64_t big_n, std::uint64_t blocks, std::uint64_t block_targets,
             int iterations) {
    if (blocks < 1 || block_targets < 1) {
        throw ValidationError("block count and per-block targets must be positive");
    }
    if (blocks * block_targets > big_n) {
        throw ValidationError("B * M_i must not exceed N");
    }
    if (iterations < 0) {
        throw ValidationError("iteration count must be nonnegative");
    }
    return arc_probability(rotation_angle(blocks * block_targets, big_n), iterations);
}

double p_partial(std::uint64_t big_n, int guess_bits, std::uint64_t block_targets,
                 int iterations) {
    if (guess_bits < 1 || guess_bits >= 63) {
        throw ValidationError("guess bits must be at least 1");
    }
    const std::uint64_t blocks = 1ULL << guess_bits;
    if (big_n % blocks != 0) {
        throw ValidationError("2^b must divide the domain size");
    }
    // Exactly the per-block value divided by 2^b, so the factor identity
    // p_qmp == 2^b * p_partial holds bit for bit.
    return p_qmp(big_n, blocks, block_targets, iterations) /
           static_cast<double>(blocks);
}

AngleReport rotation_angles(std::uint64_t big_n, std::uint64_t blocks,
                            std::uint64_t targets) {
    if (blocks < 1 || targets < 1 || blocks * targets > big_n) {
        throw ValidationError("angles need B >= 1, M >= 1 and B*M <= N");
    }
    AngleReport report;
    report.theta = rotation_angle(targets, big_n);
    report.theta_mp = rotation_angle(blocks * targets, big_n);
    report.big_n = big_n;
    report.blocks = blocks;
    report.targets = targets;
    if (report.theta_mp < report.theta) {
        throw std::logic_error("arcsine is increasing, theta_mp fell below theta");
    }
    return report;
}

SearchMode parse_search_mode(const std::string& name) {
    if (name == "gsa") return SearchMode::Gsa;
    if (name == "qmp") return SearchMode::Qmp;
    if (name == "partial" || name == "no-qmp") return SearchMode::Partial;
    throw ValidationError("unknown search mode \"" + name + "\"");
}

const char* search_mode_name(SearchMode mode) {
    switch (mode) {
        case SearchMode::Gsa: return "gsa";
        case SearchMode::Qmp: return "qmp";
        case SearchMode::Partial: return "partial";
    }
    return "?";
}

int min_iterations(double p_target, std::uint64_t big_n, std::uint64_t blocks,
                   std::uint64_t block_targets, SearchMode mode) {
    if (!(p_target > 0.0)) {
        throw ValidationError("target probability must be positive");
    }
    double theta = 0.0;
    double scale = 1.0;  // probability = scale * sin^2((2j+1) theta)
    switch (mode) {
        case SearchMode::Gsa:
            theta = rotation_angle(block_targets, big_n);
            break;
        case SearchMode::Qmp:
            theta = rotation_angle(blocks * block_targets, big_n);
            break;
        case SearchMode::Partial: {
            if (!is_power_of_two(blocks) || blocks < 2) {
                throw ValidationError("partial mode needs B = 2^b with b >= 1");
            }
            theta = rotation_angle(blocks * block_targets, big_n);
            scale = 1.0 / static_cast<double>(blocks);
            break;
        }
    }
    if (p_target > scale) {
        throw InfeasibleError("target probability " + std::to_string(p_target) +
                              " exceeds the " + search_mode_name(mode) + " ceiling of " +
                              std::to_string(scale) +
                              (mode == SearchMode::Partial
                                   ? " (1/2^" + std::to_string(log2_exact(blocks)) + ")"
                                   : ""));
    }

    const int peak = std::max(0, static_cast<int>((kHalfPi / theta - 1.0) / 2.0));
    for (int j = 0; j <= peak; ++j) {
        if (scale * arc_probability(theta, j) >= p_target) {
            return j;
        }
    }
    return peak;
}

std::vector<SweepRow> sweep_curves(std::uint64_t big_n, std::span<const int> b_values,
                                   int j_max) {
    if (j_max < 1) {
        throw ValidationError("sweep needs j_max >= 1");
    }
    std::vector<SweepRow> rows;
    rows.reserve(b_values.size() * static_cast<std::size_t>(j_max + 1));
    for (int b : b_values) {
        for (int j = 0; j <= j_max; ++j) {
            SweepRow row;
            row.b = b;
            row.j = j;
            row.gsa = p_gsa(big_n, 1, j);
            row.no_qmp = p_partial(big_n, b, 1, j);
            row.qmp = p_qmp(big_n, 1ULL << b, 1, j);
            rows.push_back(row);
        }
    }
    return rows;
}

MetricReport metrics(int nq, int depth, double success, int circuit_count) {
    if (nq < 1 || depth < 1) {
        throw ValidationError("metrics need nq >= 1 and depth >= 1");
    }
    if (!(success > 0.0)) {
        throw ValidationError("EQCV is undefined at zero success probability");
    }
    if (success > 1.0) {
        throw ValidationError("success probability cannot exceed 1");
    }
    if (circuit_count < 1) {
        throw ValidationError("circuit count must be at least 1");
    }
    MetricReport report;
    report.nq = nq;
    report.depth = depth;
    report.qcv = static_cast<double>(nq) * static_cast<double>(depth);
    report.success = success;
    report.eqcv = report.qcv / success;
    report.trf = circuit_count;
    report.pst = success;
    return report;
}

}  // namespace qmpgrover
