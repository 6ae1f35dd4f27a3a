#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmpgrover/bitstring.hpp"
#include "qmpgrover/ir.hpp"

using namespace qmpgrover;

TEST_CASE("bitstrings convert with the rightmost character as bit 0") {
    CHECK(bits_to_index("1011") == 11);
    CHECK(bits_to_index("0") == 0);
    CHECK(bits_to_index("10110") == 22);
    CHECK(index_to_bits(11, 4) == "1011");
    CHECK(index_to_bits(0, 3) == "000");
    CHECK_THROWS_AS(bits_to_index("10x1"), ValidationError);
    CHECK_THROWS_AS(bits_to_index(""), ValidationError);
    CHECK_THROWS_AS(index_to_bits(8, 3), ValidationError);
}

TEST_CASE("gate invariants reject malformed operands") {
    CHECK_NOTHROW(validate_gate(GateOp::h(0), 1));
    CHECK_NOTHROW(validate_gate(GateOp::mcz({0, 1}, 2), 3));
    CHECK_THROWS_AS(validate_gate(GateOp::h(3), 3), ValidationError);
    CHECK_THROWS_AS(validate_gate(GateOp::mcz({1, 1}, 0), 3), ValidationError);
    CHECK_THROWS_AS(validate_gate(GateOp::mcz({}, 0), 3), ValidationError);
    CHECK_THROWS_AS(validate_gate(GateOp::mcz({0}, 0), 3), ValidationError);

    CHECK_NOTHROW(validate_gate(GateOp::phase_oracle({0, 1}, {"10"}), 2));
    CHECK_THROWS_AS(validate_gate(GateOp::phase_oracle({0, 1}, {"101"}), 2),
                    ValidationError);
    CHECK_THROWS_AS(validate_gate(GateOp::phase_oracle({0, 1}, {}), 2), ValidationError);
}

TEST_CASE("oracle targets behave as a set") {
    const GateOp op = GateOp::phase_oracle({0, 1, 2}, {"101", "001", "101"});
    CHECK(op.oracle_targets == std::vector<std::string>{"001", "101"});
}

TEST_CASE("circuit width and window invariants") {
    CHECK_NOTHROW(Circuit(1, MeasureWindow{0, 1}));
    CHECK_NOTHROW(Circuit(28, MeasureWindow{0, 28}));
    CHECK_THROWS_AS(Circuit(0, MeasureWindow{0, 1}), ValidationError);
    CHECK_THROWS_AS(Circuit(4, MeasureWindow{2, 3}), ValidationError);
    CHECK_THROWS_AS(Circuit(4, MeasureWindow{0, 0}), ValidationError);

    try {
        Circuit(29, MeasureWindow{0, 29});
        FAIL("expected capacity error");
    } catch (const CapacityError& e) {
        CHECK(e.required == 29);
        CHECK(e.available == 28);
    }

    Circuit circuit(3, MeasureWindow{1, 2});
    CHECK_NOTHROW(circuit.append(GateOp::h(2)));
    CHECK_THROWS_AS(circuit.append(GateOp::h(3)), ValidationError);
    CHECK(circuit.ops().size() == 1);
}

TEST_CASE("search problems validate their target set") {
    const SearchProblem p = SearchProblem::create(4, {"1011"});
    CHECK(p.target_count() == 1);

    CHECK_THROWS_AS(SearchProblem::create(4, {}), ValidationError);
    CHECK_THROWS_AS(SearchProblem::create(4, {"101"}), ValidationError);
    CHECK_THROWS_AS(SearchProblem::create(4, {"1011", "1011"}), ValidationError);
    CHECK_THROWS_AS(SearchProblem::create(1, {"0", "1"}), ValidationError);

    const SearchProblem multi = SearchProblem::create(5, {"10110", "10001", "11001"});
    CHECK(multi.target_count() == 3);
}

TEST_CASE("qmp plans expose per-block windows over the high qubits") {
    QmpPlan plan;
    plan.qubits_per_block = 4;
    plan.guess_bits = 2;
    plan.searched_bits = 2;
    plan.block_count = 4;
    plan.blocks = {{"00", 0}, {"01", 4}, {"10", 8}, {"11", 12}};

    CHECK(plan.total_width() == 16);
    CHECK(plan.block_window(0).least == 2);
    CHECK(plan.block_window(0).length == 2);
    CHECK(plan.block_window(3).least == 14);
    CHECK(plan.block_window(3).length == 2);
}
