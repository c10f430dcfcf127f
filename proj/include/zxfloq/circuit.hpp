#pragma once

#include "zxfloq/diagram.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zxfloq {

enum class OpKind { PZ, PX, DZ, DX, C, CX, M1Z, M1X, M2Z, M2X, SWAP };

const char* op_name(OpKind k);

struct Op {
    OpKind kind = OpKind::C;
    std::vector<int> qubits;
    std::string clifford;  // only for C: I, H, S, SDG, X, Y, Z

    [[nodiscard]] int weight() const { return static_cast<int>(qubits.size()); }
    bool operator==(const Op&) const = default;
};

Op make_op(OpKind k, std::vector<int> qubits, std::string clifford = {});

class CircuitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Circuit {
    int qubits = 0;
    std::vector<Op> ops;

    void add(OpKind k, std::vector<int> qs, std::string clifford = {}) {
        ops.push_back(make_op(k, std::move(qs), std::move(clifford)));
    }
    [[nodiscard]] int max_weight() const;
    bool operator==(const Circuit&) const = default;
};

[[nodiscard]] bool is_known_clifford(const std::string& name);

// Qubit range, arity, wire life-cycle (a destructive measurement ends a wire,
// a preparation starts one). Throws CircuitError.
void check_circuit(const Circuit& c);

// Post-selected ZX diagram. Qubits that do not start with a preparation become
// inputs; qubits that do not end with a destructive measurement become outputs,
// both in qubit order. If `wires` is given, it receives the vertex chain of
// every wire lifetime (preparation or input to measurement or output).
ZXDiagram circuit_to_diagram(const Circuit& c, std::vector<std::vector<int>>* wires = nullptr);

// Op text grammar, one per line: `PZ q`, `PX q`, `DZ q`, `DX q`, `C q <name>`,
// `CX a b`, `M1Z q`, `M1X q`, `M2Z a b`, `M2X a b`, `SWAP a b`.
Op parse_op(const std::string& line);
std::string format_op(const Op& op);

// Circuit file: `qubits <N>` followed by op lines.
Circuit read_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);
void write_circuit(std::ostream& out, const Circuit& c);
std::string format_circuit(const Circuit& c);

}  // namespace zxfloq
