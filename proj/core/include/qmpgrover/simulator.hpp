#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qmpgrover/distribution.hpp"
#include "qmpgrover/ir.hpp"

namespace qmpgrover {

using Amplitude = std::complex<double>;

/// Dense statevector over 2^width amplitudes, initialized to |0...0>.
/// Diagonal gates (Z, MCZ, PhaseOracle) are applied as in-place sign flips;
/// H and X walk stride pairs. Every operation preserves the L2 norm exactly
/// up to rounding.
class Statevector {
public:
    explicit Statevector(int width);

    int width() const { return width_; }
    std::uint64_t size() const { return static_cast<std::uint64_t>(amps_.size()); }

    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    std::vector<Amplitude>& amplitudes() { return amps_; }

    void apply(const GateOp& op);

    double norm() const;
    double probability_of(std::uint64_t basis_index) const;

private:
    int width_;
    std::vector<Amplitude> amps_;
};

/// Final statevector after applying the circuit's ops in order to |0...0>.
Statevector run_exact(const Circuit& circuit);

/// Marginal probability distribution over the window bits.
Distribution window_distribution(const Statevector& state, MeasureWindow window);

}  // namespace qmpgrover
