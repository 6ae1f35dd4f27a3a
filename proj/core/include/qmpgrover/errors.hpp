#pragma once

#include <stdexcept>
#include <string>

namespace qmpgrover {

/// Invalid inputs: malformed problems, bad spans, mismatched key lengths.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested probability no iteration count can reach.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A register wider than the simulator can hold in memory.
class CapacityError : public std::runtime_error {
public:
    CapacityError(long long required_qubits, int available_qubits)
        : std::runtime_error("register of " + std::to_string(required_qubits) +
                             " qubits exceeds the simulator bound of " +
                             std::to_string(available_qubits) + " qubits"),
          required(required_qubits),
          available(available_qubits) {}

    long long required;
    int available;
};

}  // namespace qmpgrover
