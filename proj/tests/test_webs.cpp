#include "zxfloq/circuit.hpp"
#include "zxfloq/tableau.hpp"
#include "zxfloq/web.hpp"
#include "zxfloq/interpret.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zxfloq;

namespace {

ZXDiagram bare_wire() {
    return parse_diagram("node 0 B 0\nnode 1 B 0\nedge 0 1\nin 0\nout 1\n");
}

ZXDiagram spider_with_legs(VertexKind k, int q, int legs) {
    ZXDiagram d;
    const int s = d.add_vertex(k, q);
    for (int i = 0; i < legs; ++i) {
        const int b = d.add_vertex(VertexKind::B);
        d.add_edge(s, b);
        if (i == 0) {
            d.add_input(b);
        } else {
            d.add_output(b);
        }
    }
    return d;
}

Circuit random_circuit(std::mt19937& rng, int n, int ops) {
    Circuit c;
    c.qubits = n;
    for (int i = 0; i < ops; ++i) {
        const int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        const bool two = n > 1;
        if (two && b == a) {
            b = (a + 1) % n;
        }
        switch (rng() % (two ? 7 : 4)) {
            case 0: c.add(OpKind::C, {a}, "H"); break;
            case 1: c.add(OpKind::C, {a}, "S"); break;
            case 2: c.add(OpKind::M1Z, {a}); break;
            case 3: c.add(OpKind::M1X, {a}); break;
            case 4: c.add(OpKind::CX, {a, b}); break;
            case 5: c.add(OpKind::M2Z, {a, b}); break;
            default: c.add(OpKind::M2X, {a, b}); break;
        }
    }
    return c;
}

}  // namespace

TEST(WebSystem, BareWireHasFourWebs) {
    const ZXDiagram d = bare_wire();
    EXPECT_EQ(web_system(d).num_rows(), 0U);
    EXPECT_EQ(web_basis(d).size(), 2U);
}

// Independent count: 4 legs give 8 bits; the rules are one own-colour parity
// row and three opposite-colour equality rows, all independent.
TEST(WebSystem, FourLeggedZSpiderHasDimensionFour) {
    EXPECT_EQ(web_basis(spider_with_legs(VertexKind::Z, 0, 4)).size(), 4U);
}

TEST(WebSystem, QuarterPhaseWireWebs) {
    const ZXDiagram d = spider_with_legs(VertexKind::Z, 1, 2);
    const auto basis = web_basis(d);
    ASSERT_EQ(basis.size(), 2U);
    // Expected nonzero webs: both legs Z, or both legs Y.
    std::set<std::string> seen;
    const auto e0 = d.edge_ids()[0];
    const auto e1 = d.edge_ids()[1];
    for (int mask = 1; mask < 4; ++mask) {
        PauliWeb w;
        for (int i = 0; i < 2; ++i) {
            if ((mask >> i) & 1) {
                w = w ^ basis[static_cast<std::size_t>(i)];
            }
        }
        ASSERT_TRUE(is_web(d, w));
        seen.insert(std::string{w.highlights.at(e0), w.highlights.at(e1)});
    }
    EXPECT_EQ(seen, (std::set<std::string>{"ZZ", "XY", "YX"}));
}

TEST(WebSystem, QuarterPhaseRejectsEqualOppositePairs) {
    // Both legs X: even own-colour count with the opposite colour present.
    const ZXDiagram d = spider_with_legs(VertexKind::Z, 1, 2);
    PauliWeb xx;
    PauliWeb yy;
    for (int e : d.edge_ids()) {
        xx.highlights[e] = 'X';
        yy.highlights[e] = 'Y';
    }
    EXPECT_FALSE(is_web(d, xx));
    EXPECT_FALSE(is_web(d, yy));
}

TEST(WebBasis, EmptyDiagram) { EXPECT_TRUE(web_basis(ZXDiagram{}).empty()); }

TEST(WebBasis, ConsecutiveZZMeasurementsFormDetectingRegion) {
    Circuit c;
    c.qubits = 2;
    c.add(OpKind::M2Z, {0, 1});
    c.add(OpKind::M2Z, {0, 1});
    const ZXDiagram d = circuit_to_diagram(c);
    const auto regions = detecting_regions(d);
    ASSERT_EQ(regions.size(), 1U);
    EXPECT_EQ(WebAnalysis(d).classify(regions[0]), WebClass::Detecting);
    EXPECT_TRUE(boundary_pauli(d, regions[0], Side::In).is_identity());
    EXPECT_TRUE(boundary_pauli(d, regions[0], Side::Out).is_identity());
}

TEST(Classify, StabilisingWebReadsZZ) {
    Circuit c;
    c.qubits = 2;
    c.add(OpKind::M2Z, {0, 1});
    const ZXDiagram d = circuit_to_diagram(c);
    const WebAnalysis wa(d);
    ASSERT_EQ(wa.stabiliser_generators().size(), 1U);
    EXPECT_EQ(wa.stabiliser_generators()[0].str(), "ZZ");
    EXPECT_EQ(wa.classify(PauliWeb{}), WebClass::MixedTrivial);
    for (const auto& w : stabilising_webs(d)) {
        EXPECT_EQ(wa.classify(w), WebClass::Stabilising);
    }
}

TEST(Classify, BareWireWebIsLogical) {
    const ZXDiagram d = bare_wire();
    PauliWeb w;
    w.highlights[d.edge_ids()[0]] = 'X';
    EXPECT_EQ(classify(d, w), WebClass::Logical);
    EXPECT_EQ(boundary_pauli(d, w, Side::Out).str(), "X");
}

TEST(Classify, RejectsNonWeb) {
    const ZXDiagram d = spider_with_legs(VertexKind::Z, 0, 3);
    PauliWeb w;
    w.highlights[d.edge_ids()[0]] = 'Z';
    EXPECT_THROW((void)classify(d, w), WebError);
}

TEST(Fire, FiringEveryWebPreservesTheMapUpToBoundaryPaulis) {
    Circuit c;
    c.qubits = 2;
    c.add(OpKind::M2Z, {0, 1});
    c.add(OpKind::CX, {0, 1});
    c.add(OpKind::M1X, {1});
    const ZXDiagram d = circuit_to_diagram(c);
    const LinearMap base = interpret(d);
    for (const auto& w : detecting_regions(d)) {
        EXPECT_TRUE(equal_up_to_scalar(interpret(fire_all(d, w)), base));
    }
    for (const auto& w : stabilising_webs(d)) {
        // Firing leaves out(w) as pi spiders on the outputs; undo them densely.
        const ZXDiagram fired = fire_all(d, w);
        const PauliString out = boundary_pauli(d, w, Side::Out);
        ZXDiagram undo = fired;
        for (std::size_t q = 0; q < out.size(); ++q) {
            const int e = undo.boundary_edge(undo.outputs()[q]);
            if (out.x(q)) {
                undo.insert_on_edge(undo.boundary_edge(undo.outputs()[q]), VertexKind::X, 2);
            }
            if (out.z(q)) {
                undo.insert_on_edge(undo.boundary_edge(undo.outputs()[q]), VertexKind::Z, 2);
            }
            (void)e;
        }
        EXPECT_TRUE(equal_up_to_scalar(interpret(undo), base));
    }
}

TEST(Fire, SingleSpiderInsertsOnHighlightedLegs) {
    const ZXDiagram d = spider_with_legs(VertexKind::Z, 0, 3);
    PauliWeb w;
    w.highlights[d.edge_ids()[0]] = 'Z';
    w.highlights[d.edge_ids()[1]] = 'Z';
    const ZXDiagram f = fire(d, d.inputs().empty() ? 0 : d.edge(d.edge_ids()[0]).a, w);
    EXPECT_EQ(f.num_vertices(), d.num_vertices() + 2);
    EXPECT_THROW((void)fire(d, 0, PauliWeb{}), WebError);
}

TEST(WebFormat, RoundTrip) {
    Circuit c;
    c.qubits = 2;
    c.add(OpKind::M2Z, {0, 1});
    c.add(OpKind::M2Z, {0, 1});
    const ZXDiagram d = circuit_to_diagram(c);
    const PauliWeb w = detecting_regions(d).front();
    std::istringstream in(format_web(d, w));
    EXPECT_EQ(read_web(in, d), w);
}

// Symmetric differences of solutions stay solutions.
TEST(Property, WebsAreClosedUnderProduct) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const ZXDiagram d = circuit_to_diagram(random_circuit(rng, 2, 3));
        if (d.num_edges() > 12) {
            continue;
        }
        const auto basis = web_basis(d);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                EXPECT_TRUE(is_web(d, basis[i] ^ basis[j]));
            }
        }
    }
}

// Stabilising classes correspond to the instantaneous stabiliser group and
// logical classes to its normaliser quotient.
TEST(Property, WebClassesMatchTableau) {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const Circuit c = random_circuit(rng, n, 1 + static_cast<int>(rng() % 4));
        const ZXDiagram d = circuit_to_diagram(c);
        const StabiliserTableau t = simulate_circuit(c).back();
        const WebAnalysis wa(d);
        EXPECT_EQ(wa.stabilising_class_log2(), t.rank()) << format_circuit(c);
        EXPECT_EQ(wa.logical_class_log2(), 2 * (static_cast<std::size_t>(n) - t.rank())) << format_circuit(c);
        for (const auto& p : wa.stabiliser_generators()) {
            EXPECT_TRUE(t.contains(p)) << format_circuit(c) << p.str();
        }
    }
}
