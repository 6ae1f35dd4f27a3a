#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qmpgrover/bitstring.hpp"
#include "qmpgrover/builders.hpp"
#include "qmpgrover/noise.hpp"
#include "qmpgrover/simulator.hpp"

using namespace qmpgrover;

namespace {

double success_fraction(const Counts& counts, const std::string& outcome) {
    const auto it = counts.counts.find(outcome);
    if (it == counts.counts.end()) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(counts.shots);
}

}  // namespace

TEST_CASE("zero noise reproduces the exact distribution") {
    const SearchProblem p = SearchProblem::create(4, {"1011"});
    const Circuit circuit = build_grover_circuit(p, 1);
    const Distribution exact =
        window_distribution(run_exact(circuit), circuit.measure_window());

    const Counts counts = run_noisy(circuit, NoiseSpec{0.0, 0.0, 11}, 8192);
    CHECK(counts.total() == 8192);
    for (std::uint64_t v = 0; v < exact.size(); ++v) {
        const double freq = success_fraction(counts, index_to_bits(v, exact.bits()));
        CHECK(std::abs(freq - exact[v]) <= 0.02);
    }
}

TEST_CASE("pauli noise strictly lowers the mean success") {
    const SearchProblem p = SearchProblem::create(4, {"1011"});
    const Circuit circuit = build_grover_circuit(p, 1);
    const std::uint64_t shots = 100000;

    const Counts clean = run_noisy(circuit, NoiseSpec{0.0, 0.0, 21}, shots);
    const Counts noisy = run_noisy(circuit, NoiseSpec{0.01, 0.01, 21}, shots);
    const double p_clean = success_fraction(clean, "1011");
    const double p_noisy = success_fraction(noisy, "1011");
    CHECK(p_clean > p_noisy);
    CHECK(p_clean == doctest::Approx(0.47265625).epsilon(0.02));
}

TEST_CASE("deeper circuits degrade more at equal noise") {
    const SearchProblem p = SearchProblem::create(5, {"10110"});
    // Two global iterations vs one shallow 2-qubit-window block.
    const Circuit deep = build_grover_circuit(p, 2);
    const Circuit shallow = build_partial_circuit(p, "110", 1);
    const NoiseSpec noise{0.005, 0.005, 99};
    const std::uint64_t shots = 100000;

    const double deep_exact =
        window_distribution(run_exact(deep), deep.measure_window())[bits_to_index("10110")];
    const double shallow_exact = window_distribution(
        run_exact(shallow), shallow.measure_window())[bits_to_index("10")];

    const double deep_noisy = success_fraction(run_noisy(deep, noise, shots), "10110");
    const double shallow_noisy =
        success_fraction(run_noisy(shallow, noise, shots), "10");

    const double deep_loss = 1.0 - deep_noisy / deep_exact;
    const double shallow_loss = 1.0 - shallow_noisy / shallow_exact;
    CHECK(deep_loss > shallow_loss);
}

TEST_CASE("trajectories are deterministic across runs and thread counts") {
    const SearchProblem p = SearchProblem::create(4, {"0110"});
    const Circuit circuit = build_grover_circuit(p, 1);
    const NoiseSpec noise{0.02, 0.02, 7};

    const Counts one = run_noisy(circuit, noise, 5000, 1);
    const Counts again = run_noisy(circuit, noise, 5000, 1);
    const Counts three = run_noisy(circuit, noise, 5000, 3);
    const Counts eight = run_noisy(circuit, noise, 5000, 8);
    CHECK(one.counts == again.counts);
    CHECK(one.counts == three.counts);
    CHECK(one.counts == eight.counts);

    const Counts other_seed = run_noisy(circuit, NoiseSpec{0.02, 0.02, 8}, 5000, 1);
    CHECK(one.counts != other_seed.counts);
}

TEST_CASE("noise probabilities are validated") {
    const SearchProblem p = SearchProblem::create(2, {"01"});
    const Circuit circuit = build_grover_circuit(p, 1);
    CHECK_THROWS_AS(run_noisy(circuit, NoiseSpec{-0.1, 0.0, 0}, 10), ValidationError);
    CHECK_THROWS_AS(run_noisy(circuit, NoiseSpec{0.0, 1.5, 0}, 10), ValidationError);
    CHECK_THROWS_AS(run_noisy(circuit, NoiseSpec{0.0, 0.0, 0}, 0), ValidationError);
}
