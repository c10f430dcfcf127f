#include "zxfloq/interpret.hpp"
#include "zxfloq/rewrite.hpp"
#include "zxfloq/synth.hpp"

#include <gtest/gtest.h>

#include <unsupported/Eigen/KroneckerProduct>

using namespace zxfloq;

namespace {

// Dense I + P with the first qubit as the most significant bit.
Eigen::MatrixXcd projector(const PauliString& p) {
    const cplx i(0, 1);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = 0; q < p.size(); ++q) {
        Eigen::Matrix2cd s;
        switch (p.letter(q)) {
            case 'X': s << 0, 1, 1, 0; break;
            case 'Y': s << 0, -i, i, 0; break;
            case 'Z': s << 1, 0, 0, -1; break;
            default: s << 1, 0, 0, 1; break;
        }
        m = Eigen::kroneckerProduct(m, s).eval();
    }
    return Eigen::MatrixXcd::Identity(m.rows(), m.cols()) + m;
}

LinearMap as_map(const Eigen::MatrixXcd& m, int n) { return {n, n, m}; }

std::vector<PauliString> all_paulis(int n) {
    std::vector<PauliString> out;
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    int total = 1;
    for (int i = 0; i < n; ++i) {
        total *= 4;
    }
    for (int code = 1; code < total; ++code) {
        PauliString p(static_cast<std::size_t>(n));
        int c = code;
        for (int q = 0; q < n; ++q) {
            p.set_letter(static_cast<std::size_t>(q), letters[c % 4]);
            c /= 4;
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

TEST(Normalise, ZTypeNeedsNothing) {
    const NormalisedPauli n = normalise_pauli(PauliString::parse("ZZZZ"));
    EXPECT_TRUE(n.pre.empty());
    EXPECT_TRUE(n.post.empty());
    EXPECT_EQ(n.weight(), 4);
}

TEST(Normalise, XTypeGetsHadamards) {
    const NormalisedPauli n = normalise_pauli(PauliString::parse("XXXX"));
    ASSERT_EQ(n.pre.size(), 4u);
    ASSERT_EQ(n.post.size(), 4u);
    for (const auto& op : n.pre) {
        EXPECT_EQ(op.clifford, "H");
    }
}

TEST(Normalise, MixedDressesOnlyXAndY) {
    const NormalisedPauli n = normalise_pauli(PauliString::parse("ZYX"));
    EXPECT_EQ(n.weight(), 3);
    for (const auto& op : n.pre) {
        EXPECT_NE(op.qubits[0], 0);
    }
    EXPECT_TRUE(equal_up_to_scalar(interpret(measurement_diagram(PauliString::parse("ZYX"))),
                                   as_map(projector(PauliString::parse("ZYX")), 3)));
}

TEST(Normalise, IdentityRejected) {
    EXPECT_THROW(normalise_pauli(PauliString::parse("III")), std::invalid_argument);
}

TEST(Normalise, AllShortPaulisMatchDenseProjector) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& p : all_paulis(n)) {
            EXPECT_TRUE(equal_up_to_scalar(interpret(measurement_diagram(p)), as_map(projector(p), n))) << p.str();
        }
    }
}

TEST(Decompose, PathCounts) {
    for (int n = 1; n <= 9; ++n) {
        const PauliString p = PauliString::parse(std::string(static_cast<std::size_t>(n), 'Z'));
        const FlowDiagram fd = decompose_measurement(p);
        EXPECT_EQ(fd.flow.paths.size(), static_cast<std::size_t>(n + (n + 1) / 2)) << n;
        EXPECT_TRUE(verify_flow(fd.diagram, fd.flow).well_covered());
        if (n <= 6) {
            EXPECT_TRUE(equal_up_to_scalar(interpret(fd.diagram), as_map(projector(p), n))) << n;
        }
    }
}

TEST(Decompose, CentreDegreeIsEven) {
    const FlowDiagram fd = decompose_measurement(PauliString::parse("ZZZZZ"));
    EXPECT_EQ(max_spider_degree(fd.diagram), 6);
}

TEST(Circuit, QubitCounts) {
    const std::vector<std::pair<int, int>> expected = {{1, 2}, {2, 3}, {3, 5}, {4, 6}, {5, 9}, {6, 10}};
    for (const auto& [n, q] : expected) {
        const Circuit c = measurement_circuit_for(PauliString::parse(std::string(static_cast<std::size_t>(n), 'Z')));
        EXPECT_EQ(c.qubits, q) << n;
        EXPECT_LE(c.max_weight(), 2);
        EXPECT_LE(c.qubits, measurement_qubit_bound(n) + 1e-9) << n;
    }
}

TEST(Circuit, WeightFourHasTwoXParityChecks) {
    const Circuit c = measurement_circuit_for(PauliString::parse("ZZZZ"));
    int m2x = 0;
    int cx = 0;
    for (const auto& op : c.ops) {
        m2x += op.kind == OpKind::M2X ? 1 : 0;
        cx += op.kind == OpKind::CX ? 1 : 0;
    }
    EXPECT_EQ(c.qubits, 6);
    EXPECT_EQ(m2x, 2);
    EXPECT_EQ(cx, 4);
}

TEST(Circuit, WeightNineWithinBound) {
    const Circuit c = measurement_circuit_for(PauliString::parse("ZZZZZZZZZ"));
    EXPECT_LE(c.qubits, 9 + 5 + 4);
    EXPECT_LE(c.max_weight(), 2);
}

TEST(Circuit, ReinterpretsToProjector) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& p : all_paulis(n)) {
            const Circuit c = measurement_circuit_for(p);
            EXPECT_TRUE(equal_up_to_scalar(interpret(circuit_to_diagram(c)), as_map(projector(p), n))) << p.str();
        }
    }
    for (const char* s : {"ZZZZ", "XZYX", "ZZZZZ", "YYYYYY"}) {
        const PauliString p = PauliString::parse(s);
        const Circuit c = measurement_circuit_for(p);
        EXPECT_TRUE(equal_up_to_scalar(interpret(circuit_to_diagram(c)), interpret(measurement_diagram(p)))) << s;
    }
}

TEST(Property, ProjectorIdempotence) {
    for (int n = 1; n <= 5; ++n) {
        const PauliString p = PauliString::parse(std::string(static_cast<std::size_t>(n), 'X'));
        const ZXDiagram d = circuit_to_diagram(measurement_circuit_for(p));
        EXPECT_TRUE(equal_up_to_scalar(interpret(compose(d, d)), interpret(d))) << n;
    }
}

TEST(Property, SingleFaultContainment) {
    PreservationOptions opts;
    opts.max_error_weight = 1;
    for (int n = 1; n <= 6; ++n) {
        const PauliString p = PauliString::parse(std::string(static_cast<std::size_t>(n), 'Z'));
        const ZXDiagram emitted = circuit_to_diagram(measurement_circuit_for(p));
        const DirectionReport rep = check_non_decreasing(measurement_diagram(p), emitted, opts);
        EXPECT_TRUE(rep.ok) << n << "\n" << format_error(emitted, rep.witness);
        EXPECT_EQ(rep.errors_checked, 3 * emitted.internal_edges().size());
    }
}
