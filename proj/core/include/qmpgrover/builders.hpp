#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmpgrover/ir.hpp"

namespace qmpgrover {

/// Sign-flip oracle over all n qubits of the problem: |x> -> -|x> iff x is a
/// target, identity otherwise.
GateOp build_oracle(const SearchProblem& problem);

/// Gate sequence realizing the reflection about the uniform superposition on
/// exactly the spanned qubits (identity elsewhere): H X MCZ X H over the
/// span. Global diffusion when the span covers the register, local diffusion
/// otherwise.
std::vector<GateOp> build_diffusion(int total_width, MeasureWindow span);

/// H on every qubit, then j repetitions of (oracle, global diffusion).
/// Measures the whole register.
Circuit build_grover_circuit(const SearchProblem& problem, int iterations);

/// Partial search: the low b qubits are preset to |guess> with X gates, the
/// high m qubits get H, then j repetitions of (full oracle, local diffusion
/// on the m high qubits). Measures the m high qubits.
Circuit build_partial_circuit(const SearchProblem& problem, const std::string& guess,
                              int iterations);

/// One wide circuit of width B*n holding the partial circuit for every b-bit
/// guess, block i at offset i*n with guess = binary(i). No gate spans two
/// blocks. Throws CapacityError when B*n exceeds the simulator bound.
std::pair<Circuit, QmpPlan> compose_qmp(const SearchProblem& problem, int guess_bits,
                                        int iterations);

}  // namespace qmpgrover
