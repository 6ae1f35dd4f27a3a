#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qmpgrover {

/// Per-iteration rotation angles of the search variants.
struct AngleReport {
    double theta = 0.0;     // asin(sqrt(M/N)), plain search
    double theta_mp = 0.0;  // asin(sqrt(B*M/N)), multiprogrammed blocks
    std::uint64_t big_n = 0;
    std::uint64_t blocks = 0;
    std::uint64_t targets = 0;
};

/// Resource/efficiency metrics of one circuit implementation.
struct MetricReport {
    int nq = 0;
    int depth = 0;
    double qcv = 0.0;   // nq * depth
    double success = 0.0;
    double eqcv = 0.0;  // qcv / success
    int trf = 1;        // concurrent circuit count
    double pst = 0.0;   // fraction of successful trials
};

/// Success probability of plain search with M targets out of N after j
/// iterations: sin^2((2j+1) asin(sqrt(M/N))).
double p_gsa(std::uint64_t big_n, std::uint64_t targets, int iterations);

/// Success probability of partial search with b guessed bits and M_block
/// targets in the guessed block: the multiprogrammed value divided by 2^b.
double p_partial(std::uint64_t big_n, int guess_bits, std::uint64_t block_targets,
                 int iterations);

/// Per-block success probability of the multiprogrammed search:
/// sin^2((2j+1) asin(sqrt(B*M_i/N))). The asin argument is clamped to 1
/// within 1e-12 to absorb rounding at exact-solution points.
double p_qmp(std::uint64_t big_n, std::uint64_t blocks, std::uint64_t block_targets,
             int iterations);

AngleReport rotation_angles(std::uint64_t big_n, std::uint64_t blocks,
                            std::uint64_t targets);

enum class SearchMode { Gsa, Qmp, Partial };

SearchMode parse_search_mode(const std::string& name);
const char* search_mode_name(SearchMode mode);

/// Smallest j >= 0 whose success probability reaches p_target, searching the
/// first monotone arc (2j+1)*theta <= pi/2; returns the arc peak when the
/// target sits above it. Throws ValidationError when p_target exceeds the
/// mode's ceiling (1/2^b for partial, 1 otherwise).
int min_iterations(double p_target, std::uint64_t big_n, std::uint64_t blocks,
                   std::uint64_t block_targets, SearchMode mode);

struct SweepRow {
    int b = 0;
    int j = 0;
    double gsa = 0.0;
    double no_qmp = 0.0;
    double qmp = 0.0;
};

/// One row per (b, j) with the three single-target success curves,
/// j = 0..j_max for each b.
std::vector<SweepRow> sweep_curves(std::uint64_t big_n, std::span<const int> b_values,
                                   int j_max);

/// Populates a MetricReport; trial reduction factor equals the concurrent
/// circuit count B. Throws ValidationError when success is not positive.
MetricReport metrics(int nq, int depth, double success, int circuit_count);

}  // namespace qmpgrover
