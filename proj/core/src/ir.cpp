#include "qmpgrover/ir.hpp"

#include <algorithm>
#include <unordered_set>

#include "qmpgrover/bitstring.hpp"

namespace qmpgrover {

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::MCZ: return "mcz";
        case GateKind::PhaseOracle: return "phase_oracle";
    }
    return "?";
}

GateOp GateOp::h(int qubit) { return GateOp{GateKind::H, {qubit}, {}, {}}; }
GateOp GateOp::x(int qubit) { return GateOp{GateKind::X, {qubit}, {}, {}}; }
GateOp GateOp::z(int qubit) { return GateOp{GateKind::Z, {qubit}, {}, {}}; }

GateOp GateOp::mcz(std::vector<int> controls, int target) {
    return GateOp{GateKind::MCZ, {target}, std::move(controls), {}};
}

GateOp GateOp::phase_oracle(std::vector<int> span, std::vector<std::string> marked) {
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    return GateOp{GateKind::PhaseOracle, std::move(span), {}, std::move(marked)};
}

std::vector<int> GateOp::touched_qubits() const {
    std::vector<int> qubits = targets;
    qubits.insert(qubits.end(), controls.begin(), controls.end());
    return qubits;
}

void validate_gate(const GateOp& op, int width) {
    const std::vector<int> touched = op.touched_qubits();
    std::unordered_set<int> seen;
    for (int q : touched) {
        if (q < 0 || q >= width) {
            throw ValidationError(std::string(gate_kind_name(op.kind)) +
                                  " gate touches qubit " + std::to_string(q) +
                                  " outside register of width " + std::to_string(width));
        }
        if (!seen.insert(q).second) {
            throw ValidationError(std::string(gate_kind_name(op.kind)) +
                                  " gate repeats qubit " + std::to_string(q));
        }
    }
    switch (op.kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
            if (op.targets.size() != 1 || !op.controls.empty()) {
                throw ValidationError("single-qubit gate must have exactly one target "
                                      "and no controls");
            }
            break;
        case GateKind::MCZ:
            if (op.targets.size() != 1) {
                throw ValidationError("mcz must have exactly one target");
            }
            if (op.controls.empty()) {
                throw ValidationError("mcz requires at least one control");
            }
            break;
        case GateKind::PhaseOracle: {
            if (op.targets.empty()) {
                throw ValidationError("phase_oracle must span at least one qubit");
            }
            if (!op.controls.empty()) {
                throw ValidationError("phase_oracle carries no controls");
            }
            if (op.oracle_targets.empty()) {
                throw ValidationError("phase_oracle needs at least one marked state");
            }
            const std::size_t span = op.targets.size();
            for (const std::string& bits : op.oracle_targets) {
                if (!is_bitstring(bits) || bits.size() != span) {
                    throw ValidationError("oracle target \"" + bits +
                                          "\" is not a binary string of length " +
                                          std::to_string(span));
                }
            }
            break;
        }
    }
    if (op.kind != GateKind::PhaseOracle && !op.oracle_targets.empty()) {
        throw ValidationError("only phase_oracle carries oracle targets");
    }
}

Circuit::Circuit(int width, MeasureWindow window) : width_(width), window_(window) {
    if (width < 1) {
        throw ValidationError("circuit width must be at least 1");
    }
    if (width > kMaxWidth) {
        throw CapacityError(width, kMaxWidth);
    }
    if (window.length < 1 || window.least < 0 ||
        window.least + window.length > width) {
        throw ValidationError("measure window [" + std::to_string(window.least) + ", " +
                              std::to_string(window.least + window.length) +
                              ") outside register of width " + std::to_string(width));
    }
}

void Circuit::append(GateOp op) {
    validate_gate(op, width_);
    ops_.push_back(std::move(op));
}

SearchProblem SearchProblem::create(int n, std::vector<std::string> targets) {
    if (n < 1 || n > kMaxWidth) {
        throw ValidationError("search domain must have between 1 and " +
                              std::to_string(kMaxWidth) + " qubits");
    }
    if (targets.empty()) {
        throw ValidationError("invalid problem: target set is empty");
    }
    for (const std::string& t : targets) {
        if (!is_bitstring(t) || t.size() != static_cast<std::size_t>(n)) {
            throw ValidationError("target \"" + t +
                                  "\" is not a binary string of length " +
                                  std::to_string(n));
        }
    }
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
        throw ValidationError("target strings must be distinct");
    }
    const std::uint64_t domain = 1ULL << n;
    if (targets.size() >= domain) {
        throw ValidationError("target count must be smaller than the domain size");
    }
    return SearchProblem{n, std::move(targets)};
}

MeasureWindow QmpPlan::block_window(int block_index) const {
    const QmpBlock& block = blocks.at(static_cast<std::size_t>(block_index));
    return MeasureWindow{block.offset + guess_bits, searched_bits};
}

}  // namespace qmpgrover
