#pragma once

#include <string>
#include <vector>

#include "qmpgrover/errors.hpp"

namespace qmpgrover {

/// Widest register the dense simulator accepts (2^28 amplitudes, ~4 GiB).
inline constexpr int kMaxWidth = 28;

enum class GateKind { H, X, Z, MCZ, PhaseOracle };

const char* gate_kind_name(GateKind kind);

/// One abstract gate. H/X/Z carry a single target; MCZ carries one target
/// plus at least one control; PhaseOracle spans `targets` (ordered LSB-first)
/// and flips the sign of every spanned basis state listed in
/// `oracle_targets` (MSB-left strings of length targets.size()).
struct GateOp {
    GateKind kind;
    std::vector<int> targets;
    std::vector<int> controls;
    std::vector<std::string> oracle_targets;

    static GateOp h(int qubit);
    static GateOp x(int qubit);
    static GateOp z(int qubit);
    static GateOp mcz(std::vector<int> controls, int target);
    static GateOp phase_oracle(std::vector<int> span, std::vector<std::string> marked);

    /// All qubits the gate touches (targets then controls).
    std::vector<int> touched_qubits() const;
};

/// Checks the per-gate invariants against a register of `width` qubits.
/// Throws ValidationError with the offending field named.
void validate_gate(const GateOp& op, int width);

struct MeasureWindow {
    int least = 0;
    int length = 0;
};

/// Ordered gate list over a fixed-width register with a declared measurement
/// window. Construction and append validate every invariant, so a Circuit in
/// hand is always well formed; values are safe to copy and share.
class Circuit {
public:
    Circuit(int width, MeasureWindow window);

    void append(GateOp op);

    int width() const { return width_; }
    const std::vector<GateOp>& ops() const { return ops_; }
    const MeasureWindow& measure_window() const { return window_; }

private:
    int width_;
    std::vector<GateOp> ops_;
    MeasureWindow window_;
};

/// An unstructured-search instance: n qubits and M >= 1 distinct n-bit
/// target strings, M < 2^n.
struct SearchProblem {
    int n = 0;
    std::vector<std::string> targets;  // sorted, unique, each of length n

    static SearchProblem create(int n, std::vector<std::string> targets);

    int target_count() const { return static_cast<int>(targets.size()); }
};

struct QmpBlock {
    std::string guess;  // b-bit string, MSB-left
    int offset = 0;     // least qubit of the block, a multiple of n
};

/// Composition recipe for a multiprogrammed circuit: B = 2^b sub-circuits,
/// one per b-bit guess, laid side by side on one wide register. Guess bits
/// occupy the b least-significant qubits of each block.
struct QmpPlan {
    int qubits_per_block = 0;  // n
    int guess_bits = 0;        // b
    int searched_bits = 0;     // m = n - b
    int block_count = 0;       // B = 2^b
    int iterations = 0;        // j
    std::vector<QmpBlock> blocks;

    int total_width() const { return block_count * qubits_per_block; }

    /// Measured window of block i: its m high qubits.
    MeasureWindow block_window(int block_index) const;
};

}  // namespace qmpgrover
