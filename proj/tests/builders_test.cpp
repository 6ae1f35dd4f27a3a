#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qmpgrover/analytics.hpp"
#include "qmpgrover/bitstring.hpp"
#include "qmpgrover/builders.hpp"
#include "qmpgrover/simulator.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace qmpgrover;

namespace {

// Applies a gate list to |0...0> and returns the statevector.
Statevector run_ops(int width, const std::vector<GateOp>& ops) {
    Statevector state(width);
    for (const GateOp& op : ops) {
        state.apply(op);
    }
    return state;
}

double success_probability(const Circuit& circuit, const SearchProblem& problem) {
    const Statevector state = run_exact(circuit);
    double p = 0.0;
    for (const std::string& t : problem.targets) {
        p += state.probability_of(bits_to_index(t));
    }
    return p;
}

}  // namespace

TEST_CASE("oracle flips exactly the target diagonal entries") {
    SUBCASE("single 4-bit target sits at index 11") {
        const GateOp oracle = build_oracle(SearchProblem::create(4, {"1011"}));
        const testref::Matrix m = testref::dense_gate_matrix(oracle, 4);
        for (std::uint64_t i = 0; i < 16; ++i) {
            CHECK(m[i][i].real() == (i == 11 ? -1.0 : 1.0));
        }
    }
    SUBCASE("marking the whole 1-qubit domain is rejected") {
        CHECK_THROWS_AS(SearchProblem::create(1, {"0", "1"}), ValidationError);
    }
    SUBCASE("an explicit -identity oracle on 1 qubit flips every state") {
        // Built directly, bypassing SearchProblem's M < 2^n invariant.
        const GateOp oracle = GateOp::phase_oracle({0}, {"0", "1"});
        const testref::Matrix m = testref::dense_gate_matrix(oracle, 1);
        CHECK(m[0][0].real() == -1.0);
        CHECK(m[1][1].real() == -1.0);
    }
    SUBCASE("three 5-bit targets land on indices 22, 17, 25") {
        const GateOp oracle =
            build_oracle(SearchProblem::create(5, {"10110", "10001", "11001"}));
        const testref::Matrix m = testref::dense_gate_matrix(oracle, 5);
        for (std::uint64_t i = 0; i < 32; ++i) {
            const bool marked = (i == 22 || i == 17 || i == 25);
            CHECK(m[i][i].real() == (marked ? -1.0 : 1.0));
        }
    }
}

TEST_CASE("diffusion reflects about the uniform superposition") {
    SUBCASE("uniform state is the -1 eigenvector") {
        for (int n : {1, 2, 3, 5}) {
            Statevector state(n);
            for (int q = 0; q < n; ++q) state.apply(GateOp::h(q));
            const std::vector<Amplitude> before = state.amplitudes();
            for (const GateOp& op : build_diffusion(n, MeasureWindow{0, n})) {
                state.apply(op);
            }
            for (std::uint64_t i = 0; i < state.size(); ++i) {
                CHECK(std::abs(state.amplitudes()[i] + before[i]) < 1e-12);
            }
        }
    }

    SUBCASE("2-qubit gate sequence equals 1 - 2|s><s| entrywise") {
        const std::vector<GateOp> ops = build_diffusion(2, MeasureWindow{0, 2});
        const testref::Matrix expected = testref::uniform_reflection_matrix(2);
        // Column c of the realized unitary = sequence applied to |c>.
        for (std::uint64_t col = 0; col < 4; ++col) {
            Statevector state(2);
            for (int bit = 0; bit < 2; ++bit) {
                if ((col >> bit) & 1ULL) state.apply(GateOp::x(bit));
            }
            for (const GateOp& op : ops) state.apply(op);
            for (std::uint64_t row = 0; row < 4; ++row) {
                CHECK(std::abs(state.amplitudes()[row] - expected[row][col]) < 1e-12);
            }
        }
    }

    SUBCASE("local diffusion is identity on the untouched low qubits") {
        // m = 3 high qubits inside n = 5; random product state chi (x) phi.
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        std::vector<Amplitude> chi(8), phi(4);
        double chi_norm = 0.0, phi_norm = 0.0;
        for (auto& a : chi) {
            a = Amplitude{coef(rng), coef(rng)};
            chi_norm += std::norm(a);
        }
        for (auto& a : phi) {
            a = Amplitude{coef(rng), coef(rng)};
            phi_norm += std::norm(a);
        }
        for (auto& a : chi) a /= std::sqrt(chi_norm);
        for (auto& a : phi) a /= std::sqrt(phi_norm);

        Statevector state(5);
        for (std::uint64_t hi = 0; hi < 8; ++hi) {
            for (std::uint64_t lo = 0; lo < 4; ++lo) {
                state.amplitudes()[(hi << 2) | lo] = chi[hi] * phi[lo];
            }
        }
        for (const GateOp& op : build_diffusion(5, MeasureWindow{2, 3})) {
            state.apply(op);
        }

        const testref::Matrix reflection = testref::uniform_reflection_matrix(3);
        for (std::uint64_t hi = 0; hi < 8; ++hi) {
            Amplitude reflected{0.0, 0.0};
            for (std::uint64_t col = 0; col < 8; ++col) {
                reflected += reflection[hi][col] * chi[col];
            }
            for (std::uint64_t lo = 0; lo < 4; ++lo) {
                CHECK(std::abs(state.amplitudes()[(hi << 2) | lo] -
                               reflected * phi[lo]) < 1e-12);
            }
        }
    }

    SUBCASE("zero-length span is rejected") {
        CHECK_THROWS_AS(build_diffusion(4, MeasureWindow{0, 0}), ValidationError);
        CHECK_THROWS_AS(build_diffusion(4, MeasureWindow{3, 2}), ValidationError);
    }
}

TEST_CASE("grover circuits hit the closed-form success probabilities") {
    SUBCASE("j = 0 leaves the uniform superposition at M/N") {
        const SearchProblem p = SearchProblem::create(6, {"000111", "111000", "010101"});
        CHECK(success_probability(build_grover_circuit(p, 0), p) ==
              doctest::Approx(3.0 / 64.0).epsilon(1e-12));
    }
    SUBCASE("one iteration on 4 qubits") {
        const SearchProblem p = SearchProblem::create(4, {"1011"});
        CHECK(success_probability(build_grover_circuit(p, 1), p) ==
              doctest::Approx(0.47265625).epsilon(1e-9));
    }
    SUBCASE("one iteration on 5 qubits") {
        const SearchProblem p = SearchProblem::create(5, {"10110"});
        CHECK(success_probability(build_grover_circuit(p, 1), p) ==
              doctest::Approx(0.258336).epsilon(1e-4));
    }
    SUBCASE("matches p_gsa across n and j") {
        std::mt19937_64 rng(23);
        for (int n = 2; n <= 10; ++n) {
            const SearchProblem p = testref::random_single_target_problem(n, rng);
            for (int j : {0, 1, 2, 5, 9, 64}) {
                CHECK(success_probability(build_grover_circuit(p, j), p) ==
                      doctest::Approx(p_gsa(1ULL << n, 1, j)).epsilon(1e-9));
            }
        }
    }
    SUBCASE("matching block tracks p_qmp deep into the oscillation") {
        std::mt19937_64 rng(29);
        for (int n : {6, 9, 12}) {
            const SearchProblem p = testref::random_single_target_problem(n, rng);
            const std::string& t = p.targets.front();
            for (int b : {1, 2, 3}) {
                const std::string low = t.substr(t.size() - static_cast<std::size_t>(b));
                const std::string high = t.substr(0, t.size() - static_cast<std::size_t>(b));
                for (int j : {3, 17, 64}) {
                    const Circuit circuit = build_partial_circuit(p, low, j);
                    const Distribution dist = window_distribution(
                        run_exact(circuit), circuit.measure_window());
                    CHECK(std::abs(dist[bits_to_index(high)] -
                                   p_qmp(1ULL << n, 1ULL << b, 1, j)) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("partial circuits preset the guess and search the high window") {
    const SearchProblem p = SearchProblem::create(5, {"10110", "10001", "11001"});

    SUBCASE("matching single-target block reaches 0.78125") {
        const Circuit circuit = build_partial_circuit(p, "10", 1);
        const Distribution dist =
            window_distribution(run_exact(circuit), circuit.measure_window());
        CHECK(dist[bits_to_index("101")] == doctest::Approx(0.78125).epsilon(1e-9));
    }
    SUBCASE("empty block stays exactly uniform") {
        const Circuit circuit = build_partial_circuit(p, "00", 1);
        const Distribution dist =
            window_distribution(run_exact(circuit), circuit.measure_window());
        for (std::uint64_t v = 0; v < 8; ++v) {
            CHECK(std::abs(dist[v] - 0.125) < 1e-12);
        }
    }
    SUBCASE("guess-averaged success equals the closed form") {
        const SearchProblem single = SearchProblem::create(5, {"10110"});
        double averaged = 0.0;
        for (int g = 0; g < 4; ++g) {
            const std::string guess = index_to_bits(static_cast<std::uint64_t>(g), 2);
            const Circuit circuit = build_partial_circuit(single, guess, 1);
            const Distribution dist =
                window_distribution(run_exact(circuit), circuit.measure_window());
            if (guess == "10") {  // only the matching block can find 10110
                averaged += dist[bits_to_index("101")];
            }
        }
        averaged /= 4.0;
        CHECK(averaged == doctest::Approx(0.1953125).epsilon(1e-9));
        CHECK(averaged ==
              doctest::Approx(std::pow(std::sin(3 * std::asin(std::sqrt(1.0 / 8.0))), 2) / 4)
                  .epsilon(1e-12));
    }
    SUBCASE("guess must be shorter than the register") {
        CHECK_THROWS_AS(build_partial_circuit(p, "10110", 1), ValidationError);
        CHECK_THROWS_AS(build_partial_circuit(p, "", 1), ValidationError);
    }
}

TEST_CASE("qmp composition lays independent blocks side by side") {
    SUBCASE("4-qubit example: matching block certain, others uniform") {
        const SearchProblem p = SearchProblem::create(4, {"1011"});
        const auto [circuit, plan] = compose_qmp(p, 2, 1);
        CHECK(circuit.width() == 16);
        CHECK(plan.block_count == 4);

        const Statevector state = run_exact(circuit);
        for (int i = 0; i < plan.block_count; ++i) {
            const Distribution dist = window_distribution(state, plan.block_window(i));
            if (plan.blocks[i].guess == "11") {
                CHECK(dist[bits_to_index("10")] == doctest::Approx(1.0).epsilon(1e-9));
            } else {
                for (std::uint64_t v = 0; v < 4; ++v) {
                    CHECK(std::abs(dist[v] - 0.25) < 1e-12);
                }
            }
        }
    }

    SUBCASE("5-qubit multi-target example") {
        const SearchProblem p = SearchProblem::create(5, {"10110", "10001", "11001"});
        const auto [circuit, plan] = compose_qmp(p, 2, 1);
        const Statevector state = run_exact(circuit);
        for (int i = 0; i < plan.block_count; ++i) {
            const Distribution dist = window_distribution(state, plan.block_window(i));
            const std::string& guess = plan.blocks[i].guess;
            if (guess == "10") {
                CHECK(dist[bits_to_index("101")] == doctest::Approx(0.78125).epsilon(1e-9));
            } else if (guess == "01") {
                CHECK(dist[bits_to_index("100")] + dist[bits_to_index("110")] ==
                      doctest::Approx(1.0).epsilon(1e-9));
            } else {
                for (std::uint64_t v = 0; v < 8; ++v) {
                    CHECK(std::abs(dist[v] - 0.125) < 1e-12);
                }
            }
        }
    }

    SUBCASE("width beyond the simulator bound is a capacity error") {
        const SearchProblem p = SearchProblem::create(5, {"10110"});
        try {
            compose_qmp(p, 3, 1);
            FAIL("expected capacity error");
        } catch (const CapacityError& e) {
            CHECK(e.required == 40);
            CHECK(e.available == 28);
        }
    }

    SUBCASE("no gate spans two blocks") {
        const SearchProblem p = SearchProblem::create(4, {"1011"});
        const auto [circuit, plan] = compose_qmp(p, 2, 2);
        for (const GateOp& op : circuit.ops()) {
            int block = -1;
            for (int q : op.touched_qubits()) {
                const int home = q / plan.qubits_per_block;
                if (block == -1) block = home;
                CHECK(block == home);
            }
        }
    }

    SUBCASE("b = 1 blocks match a direct m-qubit brute force") {
        std::mt19937_64 rng(5);
        for (int n : {3, 4, 5}) {
            const SearchProblem p = testref::random_single_target_problem(n, rng);
            const auto [circuit, plan] = compose_qmp(p, 1, 1);
            const Statevector state = run_exact(circuit);
            for (int i = 0; i < plan.block_count; ++i) {
                const Distribution dist =
                    window_distribution(state, plan.block_window(i));
                const std::vector<double> expected =
                    testref::brute_force_block_distribution(p, plan.blocks[i].guess, 1);
                for (std::uint64_t v = 0; v < dist.size(); ++v) {
                    CHECK(dist[v] == doctest::Approx(expected[v]).epsilon(1e-10));
                }
            }
        }
    }

    SUBCASE("iterations and guess bits are validated") {
        const SearchProblem p = SearchProblem::create(4, {"1011"});
        CHECK_THROWS_AS(compose_qmp(p, 0, 1), ValidationError);
        CHECK_THROWS_AS(compose_qmp(p, 4, 1), ValidationError);
        CHECK_THROWS_AS(compose_qmp(p, 2, -1), ValidationError);
    }
}

TEST_CASE("constructed gate sequences are unitary") {
    // Every gate kind here is its own inverse, so the reversed list undoes
    // the circuit exactly.
    const auto undoes_itself = [](const Circuit& circuit) {
        Statevector state = run_exact(circuit);
        const std::vector<GateOp>& ops = circuit.ops();
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            state.apply(*it);
        }
        CHECK(std::abs(state.amplitudes()[0] - Amplitude{1.0, 0.0}) < 1e-12);
        for (std::uint64_t i = 1; i < state.size(); ++i) {
            CHECK(std::abs(state.amplitudes()[i]) < 1e-12);
        }
    };

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> width_pick(1, 7);
        undoes_itself(testref::random_circuit(width_pick(rng), 30, rng));
    }

    const SearchProblem p = SearchProblem::create(5, {"10110", "10001", "11001"});
    undoes_itself(build_grover_circuit(p, 3));
    undoes_itself(build_partial_circuit(p, "01", 2));
    undoes_itself(compose_qmp(p, 2, 1).first);
}
