#include "zxfloq/circuit.hpp"
#include "zxfloq/interpret.hpp"
#include "zxfloq/tableau.hpp"

#include <gtest/gtest.h>

using namespace zxfloq;

TEST(CircuitText, RoundTrip) {
    const std::string text = "qubits 3\nPZ 2\nCX 0 2\nC 1 SDG\nM2X 0 1\nM1Z 2\nSWAP 0 1\nDX 2\n";
    const Circuit c = parse_circuit(text);
    EXPECT_EQ(c.ops.size(), 7U);
    EXPECT_EQ(c.max_weight(), 2);
    EXPECT_EQ(format_circuit(c), text);
}

TEST(CircuitText, RejectsMalformed) {
    EXPECT_THROW(parse_circuit("CX 0 1\n"), CircuitError);
    EXPECT_THROW(parse_circuit("qubits 2\nCX 0\n"), CircuitError);
    EXPECT_THROW(parse_circuit("qubits 2\nC 0 T\n"), CircuitError);
    EXPECT_THROW(parse_circuit("qubits 2\nFOO 0\n"), CircuitError);
    EXPECT_THROW(parse_circuit("qubits 2\nM1Z 2\n"), CircuitError);
    EXPECT_THROW(parse_circuit("qubits 1\nDZ 0\nM1Z 0\n"), CircuitError);
    EXPECT_THROW(parse_circuit("qubits 1\nPZ 0\nPZ 0\n"), CircuitError);
}

TEST(CircuitDiagram, CnotMatrix) {
    Eigen::MatrixXcd cx = Eigen::MatrixXcd::Zero(4, 4);
    cx(0, 0) = cx(1, 1) = cx(2, 3) = cx(3, 2) = 1;
    EXPECT_TRUE(equal_up_to_scalar(interpret(circuit_to_diagram(parse_circuit("qubits 2\nCX 0 1\n"))), {2, 2, cx}));
}

TEST(CircuitDiagram, PrepareAndMeasureIsScalar) {
    const ZXDiagram d = circuit_to_diagram(parse_circuit("qubits 1\nPZ 0\nC 0 H\nDX 0\n"));
    EXPECT_TRUE(d.inputs().empty());
    EXPECT_TRUE(d.outputs().empty());
    EXPECT_FALSE(is_zero_map(interpret(d)));
}

TEST(CircuitDiagram, WireChainsCoverLifetimes) {
    std::vector<std::vector<int>> wires;
    const ZXDiagram d = circuit_to_diagram(parse_circuit("qubits 2\nPZ 1\nCX 0 1\nDZ 1\nPX 1\nM2Z 0 1\n"), &wires);
    ASSERT_EQ(wires.size(), 3U);
    for (const auto& w : wires) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            EXPECT_FALSE(d.edges_between(w[i], w[i + 1]).empty());
        }
    }
}

TEST(Tableau, MeasureAndReset) {
    StabiliserTableau t(2);
    t.measure(PauliString::parse("ZZ"));
    t.measure(PauliString::parse("XX"));
    EXPECT_EQ(t.rank(), 2U);
    EXPECT_TRUE(t.contains(PauliString::parse("YY")));
    t.measure(PauliString::parse("ZI"));
    EXPECT_EQ(t.rank(), 2U);
    EXPECT_TRUE(t.contains(PauliString::parse("ZZ")));
    EXPECT_FALSE(t.contains(PauliString::parse("XX")));
    t.reset(1, 'X');
    EXPECT_TRUE(t.contains(PauliString::parse("ZI")));
    EXPECT_TRUE(t.contains(PauliString::parse("IX")));
}

TEST(Tableau, CliffordConjugation) {
    StabiliserTableau t(2);
    t.apply(make_op(OpKind::PZ, {0}));
    t.apply(make_op(OpKind::C, {0}, "H"));
    t.apply(make_op(OpKind::CX, {0, 1}));
    EXPECT_TRUE(t.contains(PauliString::parse("XX")));
    EXPECT_FALSE(t.contains(PauliString::parse("XI")));
    t.apply(make_op(OpKind::PZ, {1}));
    EXPECT_TRUE(t.contains(PauliString::parse("IZ")));
    t.apply(make_op(OpKind::C, {1}, "S"));
    EXPECT_TRUE(t.contains(PauliString::parse("IZ")));
    t.apply(make_op(OpKind::SWAP, {0, 1}));
    EXPECT_TRUE(t.contains(PauliString::parse("ZI")));
}

TEST(Tableau, LogicalWeight) {
    StabiliserTableau t(4);
    t.measure(PauliString::parse("XXXX"));
    t.measure(PauliString::parse("ZZZZ"));
    PauliString w;
    EXPECT_EQ(logical_min_weight(t, 4, &w), 2);
    EXPECT_EQ(w.weight(), 2U);
    EXPECT_TRUE(t.commutes_with_all(w));
    EXPECT_FALSE(t.contains(w));
    EXPECT_FALSE(logical_min_weight(t, 1).has_value());
}

TEST(Tableau, SimulateCircuitPrefixes) {
    const auto states = simulate_circuit(parse_circuit("qubits 3\nM2Z 0 1\nM2Z 1 2\nM1X 0\n"));
    ASSERT_EQ(states.size(), 4U);
    EXPECT_EQ(states[0].rank(), 0U);
    EXPECT_EQ(states[2].rank(), 2U);
    EXPECT_EQ(states[3].rank(), 2U);
    EXPECT_TRUE(states[3].contains(PauliString::parse("IZZ")));
}
