#include "qmpgrover/noise.hpp"

#include <cmath>
#include <future>
#include <random>
#include <thread>
#include <vector>

#include "qmpgrover/bitstring.hpp"
#include "qmpgrover/simulator.hpp"

namespace qmpgrover {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Trajectory-local Pauli kernels on the raw amplitude vector.
void apply_x(std::vector<Amplitude>& amps, int qubit) {
    const std::uint64_t bit = 1ULL << qubit;
    for (std::uint64_t base = 0; base < amps.size(); base += bit << 1) {
        for (std::uint64_t i = base; i < base + bit; ++i) {
            std::swap(amps[i], amps[i | bit]);
        }
    }
}

void apply_y(std::vector<Amplitude>& amps, int qubit) {
    const std::uint64_t bit = 1ULL << qubit;
    const Amplitude plus_i{0.0, 1.0};
    for (std::uint64_t base = 0; base < amps.size(); base += bit << 1) {
        for (std::uint64_t i = base; i < base + bit; ++i) {
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i | bit];
            amps[i] = -plus_i * a1;
            amps[i | bit] = plus_i * a0;
        }
    }
}

void apply_z(std::vector<Amplitude>& amps, int qubit) {
    const std::uint64_t bit = 1ULL << qubit;
    for (std::uint64_t base = bit; base < amps.size(); base += bit << 1) {
        for (std::uint64_t i = base; i < base + bit; ++i) {
            amps[i] = -amps[i];
        }
    }
}

bool is_multi_qubit(const GateOp& op) {
    return op.kind == GateKind::MCZ || op.kind == GateKind::PhaseOracle;
}

std::uint64_t run_one_trajectory(const Circuit& circuit, const NoiseSpec& noise,
                                 std::uint64_t trajectory) {
    std::mt19937_64 rng(splitmix64(noise.seed ^ ((trajectory + 1) * 0x9e3779b97f4a7c15ULL)));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    Statevector state(circuit.width());
    for (const GateOp& op : circuit.ops()) {
        state.apply(op);
        const double p = is_multi_qubit(op) ? noise.p_multi : noise.p_single;
        for (int qubit : op.touched_qubits()) {
            const double u = uniform(rng);
            if (u >= p) continue;
            // u is uniform on [0, p): reuse it to pick the Pauli.
            const int which = std::min(2, static_cast<int>(u * 3.0 / p));
            auto& amps = state.amplitudes();
            if (which == 0) {
                apply_x(amps, qubit);
            } else if (which == 1) {
                apply_y(amps, qubit);
            } else {
                apply_z(amps, qubit);
            }
        }
    }

    // One projective readout over the full register, then keep the window.
    const double u = uniform(rng);
    double running = 0.0;
    std::uint64_t drawn = state.size() - 1;
    const auto& amps = state.amplitudes();
    for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        running += std::norm(amps[idx]);
        if (u < running) {
            drawn = idx;
            break;
        }
    }
    const MeasureWindow window = circuit.measure_window();
    return (drawn >> window.least) & ((1ULL << window.length) - 1);
}

}  // namespace

Counts run_noisy(const Circuit& circuit, const NoiseSpec& noise, std::uint64_t shots,
                 int threads) {
    if (noise.p_single < 0.0 || noise.p_single > 1.0 || noise.p_multi < 0.0 ||
        noise.p_multi > 1.0) {
        throw ValidationError("pauli error probabilities must lie in [0, 1]");
    }
    if (shots < 1) {
        throw ValidationError("shot count must be at least 1");
    }
    if (threads <= 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads < 1) threads = 1;
    }

    const int window_bits = circuit.measure_window().length;
    const std::uint64_t outcomes = 1ULL << window_bits;
    const std::uint64_t chunk =
        (shots + static_cast<std::uint64_t>(threads) - 1) / static_cast<std::uint64_t>(threads);

    std::vector<std::future<std::vector<std::uint64_t>>> futures;
    for (std::uint64_t lo = 0; lo < shots; lo += chunk) {
        const std::uint64_t hi = std::min(shots, lo + chunk);
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<std::uint64_t> local(outcomes, 0);
            for (std::uint64_t t = lo; t < hi; ++t) {
                ++local[run_one_trajectory(circuit, noise, t)];
            }
            return local;
        }));
    }

    std::vector<std::uint64_t> hits(outcomes, 0);
    for (auto& fut : futures) {
        const std::vector<std::uint64_t> local = fut.get();
        for (std::uint64_t i = 0; i < outcomes; ++i) {
            hits[i] += local[i];
        }
    }

    Counts out;
    out.bit_length = window_bits;
    out.shots = shots;
    for (std::uint64_t outcome = 0; outcome < outcomes; ++outcome) {
        if (hits[outcome] > 0) {
            out.counts[index_to_bits(outcome, window_bits)] = hits[outcome];
        }
    }
    return out;
}

}  // namespace qmpgrover
