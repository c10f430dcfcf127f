#include "zxfloq/synth.hpp"

#include <cmath>
#include <stdexcept>

namespace zxfloq {

namespace {

struct Wires {
    ZXDiagram d;
    std::vector<std::vector<int>> chains;  // one per qubit
    std::vector<int> spider;               // measurement spider per support position
};

int clifford_vertex(ZXDiagram& d, const std::string& name) {
    if (name == "H") {
        return d.add_vertex(VertexKind::H);
    }
    if (name == "S") {
        return d.add_vertex(VertexKind::Z, 1);
    }
    if (name == "SDG") {
        return d.add_vertex(VertexKind::Z, 3);
    }
    throw std::logic_error("unexpected dressing gate " + name);
}

// Qubit wires with their dressing and one Z spider per support qubit.
Wires dressed_wires(const PauliString& p, const NormalisedPauli& norm) {
    Wires w;
    const auto n = p.size();
    std::vector<int> ins;
    for (std::size_t q = 0; q < n; ++q) {
        ins.push_back(w.d.add_vertex(VertexKind::B));
        w.chains.push_back({ins.back()});
    }
    auto append = [&](std::size_t q, int v) {
        w.d.add_edge(w.chains[q].back(), v);
        w.chains[q].push_back(v);
    };
    for (const Op& op : norm.pre) {
        append(static_cast<std::size_t>(op.qubits[0]), clifford_vertex(w.d, op.clifford));
    }
    for (int q : norm.support) {
        const int s = w.d.add_vertex(VertexKind::Z);
        append(static_cast<std::size_t>(q), s);
        w.spider.push_back(s);
    }
    for (const Op& op : norm.post) {
        append(static_cast<std::size_t>(op.qubits[0]), clifford_vertex(w.d, op.clifford));
    }
    std::vector<int> outs;
    for (std::size_t q = 0; q < n; ++q) {
        outs.push_back(w.d.add_vertex(VertexKind::B));
        append(q, outs.back());
    }
    w.d.set_inputs(ins);
    w.d.set_outputs(outs);
    return w;
}

}  // namespace

NormalisedPauli normalise_pauli(const PauliString& p) {
    if (p.is_identity()) {
        throw std::invalid_argument("cannot measure the identity");
    }
    NormalisedPauli out;
    for (std::size_t q = 0; q < p.size(); ++q) {
        const int qi = static_cast<int>(q);
        switch (p.letter(q)) {
            case 'I': continue;
            case 'X':
                out.pre.push_back(make_op(OpKind::C, {qi}, "H"));
                out.post.push_back(make_op(OpKind::C, {qi}, "H"));
                break;
            case 'Y':
                out.pre.push_back(make_op(OpKind::C, {qi}, "SDG"));
                out.pre.push_back(make_op(OpKind::C, {qi}, "H"));
                out.post.push_back(make_op(OpKind::C, {qi}, "H"));
                out.post.push_back(make_op(OpKind::C, {qi}, "S"));
                break;
            default: break;
        }
        out.support.push_back(qi);
    }
    return out;
}

ZXDiagram measurement_diagram(const PauliString& p) {
    Wires w = dressed_wires(p, normalise_pauli(p));
    const int c = w.d.add_vertex(VertexKind::X);
    for (int s : w.spider) {
        w.d.add_edge(s, c);
    }
    return w.d;
}

FlowDiagram decompose_measurement(const PauliString& p) {
    const NormalisedPauli norm = normalise_pauli(p);
    Wires w = dressed_wires(p, norm);
    ZXDiagram& d = w.d;
    const int n = norm.weight();
    const int c = d.add_vertex(VertexKind::X);
    auto gadget = [&](int s) {
        const int x = d.add_vertex(VertexKind::X);
        d.add_edge(s, x);
        d.add_edge(x, c);
        const int leaf = d.add_vertex(VertexKind::X);
        d.add_edge(x, leaf);
        return std::make_pair(x, leaf);
    };
    std::vector<std::vector<int>> chains = w.chains;
    for (int j = 0; 2 * j < n; ++j) {
        std::vector<int> path;
        if (2 * j + 1 < n) {
            const auto [xb, lb] = gadget(w.spider[static_cast<std::size_t>(2 * j)]);
            const auto [xa, la] = gadget(w.spider[static_cast<std::size_t>(2 * j + 1)]);
            path = {lb, xb, c, xa, la};
        } else {
            const int lc = d.add_vertex(VertexKind::X);
            d.add_edge(lc, c);
            const auto [xa, la] = gadget(w.spider[static_cast<std::size_t>(2 * j)]);
            path = {lc, c, xa, la};
        }
        chains.push_back(path);
    }
    FlowDiagram out{d, make_flow(d, chains), {}};
    const FlowReport rep = verify_flow(out.diagram, out.flow);
    if (!rep.well_covered()) {
        throw std::logic_error("measurement decomposition lost its flow:\n" + format_flow_report(rep));
    }
    return out;
}

Circuit measurement_circuit_for(const PauliString& p) {
    const FlowDiagram base = decompose_measurement(p);
    const FlowDiagram covered = make_well_covered(base.diagram, base.flow);
    const FlowDiagram reduced = reduce_degree(covered.diagram, covered.flow);
    return extract_circuit(reduced.diagram, reduced.flow);
}

double measurement_qubit_bound(int n) {
    return n + (n + 1) / 2 + std::log2(static_cast<double>(n));
}

}  // namespace zxfloq
