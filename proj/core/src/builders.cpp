#include "qmpgrover/builders.hpp"

#include <numeric>

#include "qmpgrover/bitstring.hpp"

namespace qmpgrover {

namespace {

std::vector<int> span_qubits(int least, int length) {
    std::vector<int> qubits(static_cast<std::size_t>(length));
    std::iota(qubits.begin(), qubits.end(), least);
    return qubits;
}

// Oracle over the block living at `offset`: same marked strings, shifted span.
GateOp oracle_at(const SearchProblem& problem, int offset) {
    return GateOp::phase_oracle(span_qubits(offset, problem.n), problem.targets);
}

void append_partial_block(Circuit& circuit, const SearchProblem& problem,
                          const std::string& guess, int iterations, int offset) {
    const int b = static_cast<int>(guess.size());
    const int m = problem.n - b;
    for (int bit = 0; bit < b; ++bit) {
        if (guess[static_cast<std::size_t>(b - 1 - bit)] == '1') {
            circuit.append(GateOp::x(offset + bit));
        }
    }
    for (int q = b; q < problem.n; ++q) {
        circuit.append(GateOp::h(offset + q));
    }
    const std::vector<GateOp> diffusion =
        build_diffusion(circuit.width(), MeasureWindow{offset + b, m});
    for (int it = 0; it < iterations; ++it) {
        circuit.append(oracle_at(problem, offset));
        for (const GateOp& op : diffusion) {
            circuit.append(op);
        }
    }
}

}  // namespace

GateOp build_oracle(const SearchProblem& problem) {
    if (problem.targets.empty()) {
        throw ValidationError("invalid problem: target set is empty");
    }
    return oracle_at(problem, 0);
}

std::vector<GateOp> build_diffusion(int total_width, MeasureWindow span) {
    if (span.length < 1) {
        throw ValidationError("diffusion span must cover at least one qubit");
    }
    if (span.least < 0 || span.least + span.length > total_width) {
        throw ValidationError("diffusion span outside register of width " +
                              std::to_string(total_width));
    }
    const std::vector<int> qubits = span_qubits(span.least, span.length);
    std::vector<GateOp> ops;
    ops.reserve(static_cast<std::size_t>(4 * span.length + 1));
    for (int q : qubits) ops.push_back(GateOp::h(q));
    for (int q : qubits) ops.push_back(GateOp::x(q));
    if (span.length == 1) {
        ops.push_back(GateOp::z(qubits.front()));
    } else {
        ops.push_back(GateOp::mcz(
            std::vector<int>(qubits.begin(), qubits.end() - 1), qubits.back()));
    }
    for (int q : qubits) ops.push_back(GateOp::x(q));
    for (int q : qubits) ops.push_back(GateOp::h(q));
    return ops;
}

Circuit build_grover_circuit(const SearchProblem& problem, int iterations) {
    if (iterations < 0) {
        throw ValidationError("iteration count must be nonnegative");
    }
    Circuit circuit(problem.n, MeasureWindow{0, problem.n});
    for (int q = 0; q < problem.n; ++q) {
        circuit.append(GateOp::h(q));
    }
    const std::vector<GateOp> diffusion =
        build_diffusion(problem.n, MeasureWindow{0, problem.n});
    for (int it = 0; it < iterations; ++it) {
        circuit.append(oracle_at(problem, 0));
        for (const GateOp& op : diffusion) {
            circuit.append(op);
        }
    }
    return circuit;
}

Circuit build_partial_circuit(const SearchProblem& problem, const std::string& guess,
                              int iterations) {
    if (!is_bitstring(guess)) {
        throw ValidationError("guess must be a nonempty binary string");
    }
    const int b = static_cast<int>(guess.size());
    if (b >= problem.n) {
        throw ValidationError("guess of " + std::to_string(b) +
                              " bits leaves nothing to search in a domain of " +
                              std::to_string(problem.n) + " qubits");
    }
    if (iterations < 0) {
        throw ValidationError("iteration count must be nonnegative");
    }
    Circuit circuit(problem.n, MeasureWindow{b, problem.n - b});
    append_partial_block(circuit, problem, guess, iterations, 0);
    return circuit;
}

std::pair<Circuit, QmpPlan> compose_qmp(const SearchProblem& problem, int guess_bits,
                                        int iterations) {
    if (guess_bits < 1 || guess_bits >= problem.n) {
        throw ValidationError("guess bits must satisfy 1 <= b < n");
    }
    if (iterations < 0) {
        throw ValidationError("iteration count must be nonnegative");
    }
    const int block_count = 1 << guess_bits;
    const long long width = static_cast<long long>(block_count) * problem.n;
    if (width > kMaxWidth) {
        throw CapacityError(width, kMaxWidth);
    }

    QmpPlan plan;
    plan.qubits_per_block = problem.n;
    plan.guess_bits = guess_bits;
    plan.searched_bits = problem.n - guess_bits;
    plan.block_count = block_count;
    plan.iterations = iterations;

    Circuit circuit(static_cast<int>(width), MeasureWindow{0, static_cast<int>(width)});
    for (int i = 0; i < block_count; ++i) {
        const std::string guess = index_to_bits(static_cast<std::uint64_t>(i), guess_bits);
        const int offset = i * problem.n;
        append_partial_block(circuit, problem, guess, iterations, offset);
        plan.blocks.push_back(QmpBlock{guess, offset});
    }
    return {std::move(circuit), std::move(plan)};
}

}  // namespace qmpgrover
