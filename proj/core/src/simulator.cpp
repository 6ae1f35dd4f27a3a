#include "qmpgrover/simulator.hpp"

#include <cmath>

#include "qmpgrover/bitstring.hpp"

namespace qmpgrover {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Visits every index whose bits inside `fixed_mask` equal `fixed_bits`, by
// enumerating submasks of the complement.
template <typename Fn>
void for_each_filling(std::uint64_t fixed_mask, std::uint64_t fixed_bits,
                      std::uint64_t full_mask, Fn&& fn) {
    const std::uint64_t free_mask = full_mask & ~fixed_mask;
    std::uint64_t sub = free_mask;
    while (true) {
        fn(fixed_bits | sub);
        if (sub == 0) break;
        sub = (sub - 1) & free_mask;
    }
}

}  // namespace

Statevector::Statevector(int width) : width_(width) {
    if (width < 1) {
        throw ValidationError("statevector width must be at least 1");
    }
    if (width > kMaxWidth) {
        throw CapacityError(width, kMaxWidth);
    }
    amps_.assign(1ULL << width, Amplitude{0.0, 0.0});
    amps_[0] = Amplitude{1.0, 0.0};
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const Amplitude& a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

double Statevector::probability_of(std::uint64_t basis_index) const {
    return std::norm(amps_.at(basis_index));
}

void Statevector::apply(const GateOp& op) {
    validate_gate(op, width_);
    const std::uint64_t size = amps_.size();
    const std::uint64_t full_mask = size - 1;

    switch (op.kind) {
        case GateKind::H: {
            const std::uint64_t bit = 1ULL << op.targets[0];
            for (std::uint64_t base = 0; base < size; base += bit << 1) {
                for (std::uint64_t i = base; i < base + bit; ++i) {
                    const Amplitude a = amps_[i];
                    const Amplitude b = amps_[i | bit];
                    amps_[i] = (a + b) * kInvSqrt2;
                    amps_[i | bit] = (a - b) * kInvSqrt2;
                }
            }
            break;
        }
        case GateKind::X: {
            const std::uint64_t bit = 1ULL << op.targets[0];
            for (std::uint64_t base = 0; base < size; base += bit << 1) {
                for (std::uint64_t i = base; i < base + bit; ++i) {
                    std::swap(amps_[i], amps_[i | bit]);
                }
            }
            break;
        }
        case GateKind::Z: {
            const std::uint64_t bit = 1ULL << op.targets[0];
            for (std::uint64_t base = bit; base < size; base += bit << 1) {
                for (std::uint64_t i = base; i < base + bit; ++i) {
                    amps_[i] = -amps_[i];
                }
            }
            break;
        }
        case GateKind::MCZ: {
            std::uint64_t mask = 0;
            for (int q : op.touched_qubits()) {
                mask |= 1ULL << q;
            }
            for_each_filling(mask, mask, full_mask,
                             [&](std::uint64_t idx) { amps_[idx] = -amps_[idx]; });
            break;
        }
        case GateKind::PhaseOracle: {
            std::uint64_t span_mask = 0;
            for (int q : op.targets) {
                span_mask |= 1ULL << q;
            }
            for (const std::string& marked : op.oracle_targets) {
                const std::uint64_t value = bits_to_index(marked);
                std::uint64_t fixed = 0;
                for (std::size_t k = 0; k < op.targets.size(); ++k) {
                    if ((value >> k) & 1ULL) {
                        fixed |= 1ULL << op.targets[k];
                    }
                }
                for_each_filling(span_mask, fixed, full_mask,
                                 [&](std::uint64_t idx) { amps_[idx] = -amps_[idx]; });
            }
            break;
        }
    }
}

Statevector run_exact(const Circuit& circuit) {
    Statevector state(circuit.width());
    for (const GateOp& op : circuit.ops()) {
        state.apply(op);
    }
    return state;
}

Distribution window_distribution(const Statevector& state, MeasureWindow window) {
    if (window.length < 1 || window.least < 0 ||
        window.least + window.length > state.width()) {
        throw ValidationError("window outside statevector of width " +
                              std::to_string(state.width()));
    }
    std::vector<double> probs(1ULL << window.length, 0.0);
    const std::uint64_t window_mask = (1ULL << window.length) - 1;
    const auto& amps = state.amplitudes();
    for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        probs[(idx >> window.least) & window_mask] += std::norm(amps[idx]);
    }
    return Distribution(window.length, std::move(probs));
}

}  // namespace qmpgrover
