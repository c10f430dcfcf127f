#pragma once

#include "zxfloq/circuit.hpp"
#include "zxfloq/diagram.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zxfloq {

class FlowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Directed path through a diagram. edges[i] joins vertices[i] and vertices[i+1];
// edges are stored explicitly because diagrams may have parallel edges.
struct FlowPath {
    std::vector<int> vertices;
    std::vector<int> edges;

    [[nodiscard]] int front() const { return vertices.front(); }
    [[nodiscard]] int back() const { return vertices.back(); }
    bool operator==(const FlowPath&) const = default;
};

// Measurement-circuit flow. `order` holds generating relations x <= y of the
// partial order; the order itself is their reflexive-transitive closure.
struct MCFlow {
    std::vector<FlowPath> paths;
    std::set<std::pair<int, int>> order;
};

// Resolves vertex chains to paths, picking the lowest unused edge between
// consecutive vertices.
FlowPath make_path(const ZXDiagram& d, const std::vector<int>& vertices, std::set<int>& used_edges);

// Least order satisfying O1 and O2 for the given paths: x <= y for every path
// step x -> y, and x <= z for every neighbour z of y not entering y on a path.
std::set<std::pair<int, int>> derive_order(const ZXDiagram& d, const std::vector<FlowPath>& paths);

// Paths plus derived order.
MCFlow make_flow(const ZXDiagram& d, const std::vector<std::vector<int>>& chains);

// Diagram of a circuit together with the flow given by its wires.
std::pair<ZXDiagram, MCFlow> circuit_with_flow(const Circuit& c);

struct FlowReport {
    bool paths = true;  // paths are well-formed walks in the diagram
    bool o1 = true;
    bool o2 = true;
    bool p1 = true;
    bool p2 = true;
    bool p3 = true;
    bool p4 = true;
    std::vector<std::string> violations;

    [[nodiscard]] bool is_flow() const { return paths && o1 && o2 && p1 && p2 && p3; }
    [[nodiscard]] bool well_covered() const { return is_flow() && p4; }
};

FlowReport verify_flow(const ZXDiagram& d, const MCFlow& flow);
std::string format_flow_report(const FlowReport& r);

struct FlowDiagram {
    ZXDiagram diagram;
    MCFlow flow;
    std::vector<std::string> log;  // one line per rewrite applied
};

// Moves every path endpoint sitting on a spider of degree > 1 onto a fresh
// same-colour leaf (r_fuse). Throws FlowError if the input is not a flow.
FlowDiagram make_well_covered(const ZXDiagram& d, const MCFlow& flow);

// Rewrites spiders of degree > 3 with r_4, r_5, r_n+ and r_n, padding with two
// r_fuse leaves and a new path when the covered degree is 2 mod 4. Throws
// FlowError if the input flow is not well-covered or surgery breaks the flow.
FlowDiagram reduce_degree(const ZXDiagram& d, const MCFlow& flow);

// Low-weight Clifford and measurement circuit whose diagram equals d up to
// scalar. Inputs map to qubits 0..n-1 in d's input order; trailing SWAPs put
// outputs in d's output order. Requires a well-covered flow and degree <= 3.
Circuit extract_circuit(const ZXDiagram& d, const MCFlow& flow);

// Extra paths and weight-two gates from reducing one covered degree-n spider.
int f_overhead(int n);
long long g_overhead(int n);

int max_spider_degree(const ZXDiagram& d);

}  // namespace zxfloq
