#pragma once

#include <cstdint>

#include "qmpgrover/distribution.hpp"
#include "qmpgrover/ir.hpp"

namespace qmpgrover {

/// Stochastic Pauli noise knob: after each gate, every touched qubit
/// independently suffers X, Y, or Z (equal weights) with total probability
/// p_single for single-qubit gates and p_multi for MCZ / PhaseOracle.
struct NoiseSpec {
    double p_single = 0.0;
    double p_multi = 0.0;
    std::uint64_t seed = 0;
};

/// Monte Carlo trajectory simulation: each shot replays the circuit with
/// independently drawn Pauli faults, then draws one outcome over the
/// circuit's measure window. Trajectory i runs on its own RNG seeded with
/// splitmix64(seed ^ (i+1)*0x9e3779b97f4a7c15), so counts are identical
/// across runs and thread counts. `threads` <= 0 picks the hardware count.
Counts run_noisy(const Circuit& circuit, const NoiseSpec& noise, std::uint64_t shots,
                 int threads = 0);

}  // namespace qmpgrover
