#include "zxfloq/circuit.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

namespace zxfloq {

namespace {

constexpr std::array<const char*, 11> kNames = {"PZ", "PX", "DZ", "DX", "C", "CX",
                                                "M1Z", "M1X", "M2Z", "M2X", "SWAP"};

int arity(OpKind k) {
    switch (k) {
        case OpKind::CX:
        case OpKind::M2Z:
        case OpKind::M2X:
        case OpKind::SWAP: return 2;
        default: return 1;
    }
}

}  // namespace

const char* op_name(OpKind k) { return kNames[static_cast<std::size_t>(k)]; }

Op make_op(OpKind k, std::vector<int> qubits, std::string clifford) {
    Op op;
    op.kind = k;
    op.qubits = std::move(qubits);
    op.clifford = std::move(clifford);
    return op;
}

int Circuit::max_weight() const {
    int w = 0;
    for (const auto& op : ops) {
        w = std::max(w, op.weight());
    }
    return w;
}

bool is_known_clifford(const std::string& name) {
    static const std::array<const char*, 7> names = {"I", "H", "S", "SDG", "X", "Y", "Z"};
    return std::find(names.begin(), names.end(), name) != names.end();
}

void check_circuit(const Circuit& c) {
    // 0: never touched, 1: live, 2: ended by a destructive measurement.
    std::vector<int> state(static_cast<std::size_t>(std::max(c.qubits, 0)), 0);
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
        const Op& op = c.ops[i];
        const std::string where = "op " + std::to_string(i) + " (" + format_op(op) + ")";
        if (op.weight() != arity(op.kind)) {
            throw CircuitError(where + ": wrong number of qubits");
        }
        if (op.weight() == 2 && op.qubits[0] == op.qubits[1]) {
            throw CircuitError(where + ": repeated qubit");
        }
        if (op.kind == OpKind::C && !is_known_clifford(op.clifford)) {
            throw CircuitError(where + ": unknown Clifford '" + op.clifford + "'");
        }
        for (int q : op.qubits) {
            if (q < 0 || q >= c.qubits) {
                throw CircuitError(where + ": qubit out of range");
            }
            auto& s = state[static_cast<std::size_t>(q)];
            const bool prep = op.kind == OpKind::PZ || op.kind == OpKind::PX;
            if (prep) {
                if (s == 1) {
                    throw CircuitError(where + ": preparation on a live wire");
                }
                s = 1;
                continue;
            }
            if (s == 2) {
                throw CircuitError(where + ": wire already measured out");
            }
            s = (op.kind == OpKind::DZ || op.kind == OpKind::DX) ? 2 : 1;
        }
    }
}

ZXDiagram circuit_to_diagram(const Circuit& c, std::vector<std::vector<int>>* wires) {
    check_circuit(c);
    ZXDiagram d;
    const auto n = static_cast<std::size_t>(c.qubits);
    std::vector<std::optional<int>> tail(n);
    std::vector<bool> opened(n, false);
    std::vector<int> inputs(n, -1);
    std::vector<std::vector<int>> chain(n);
    auto close = [&](std::size_t k) {
        if (wires != nullptr) {
            wires->push_back(chain[k]);
        }
        chain[k].clear();
    };

    // Open wires lazily so that qubits starting with a preparation get no input.
    auto wire = [&](int q) -> int {
        const auto k = static_cast<std::size_t>(q);
        if (!tail[k]) {
            const int b = d.add_vertex(VertexKind::B);
            inputs[k] = b;
            tail[k] = b;
            chain[k] = {b};
            opened[k] = true;
        }
        return *tail[k];
    };
    auto extend = [&](int q, VertexKind kind, Phase p) {
        const int t = wire(q);
        const int v = d.add_vertex(kind, p);
        d.add_edge(t, v);
        tail[static_cast<std::size_t>(q)] = v;
        chain[static_cast<std::size_t>(q)].push_back(v);
        return v;
    };
    auto leaf = [&](int v, VertexKind kind) {
        const int l = d.add_vertex(kind);
        d.add_edge(v, l);
        return l;
    };

    for (const auto& op : c.ops) {
        const int q = op.qubits[0];
        const auto k = static_cast<std::size_t>(q);
        switch (op.kind) {
            case OpKind::PZ:
            case OpKind::PX:
                tail[k] = d.add_vertex(op.kind == OpKind::PZ ? VertexKind::X : VertexKind::Z);
                opened[k] = true;
                chain[k] = {*tail[k]};
                break;
            case OpKind::DZ:
            case OpKind::DX:
                chain[k].push_back(leaf(wire(q), op.kind == OpKind::DZ ? VertexKind::X : VertexKind::Z));
                tail[k].reset();
                close(k);
                break;
            case OpKind::C:
                if (op.clifford == "H") {
                    extend(q, VertexKind::H, 0);
                } else if (op.clifford == "S") {
                    extend(q, VertexKind::Z, 1);
                } else if (op.clifford == "SDG") {
                    extend(q, VertexKind::Z, 3);
                } else if (op.clifford == "Z") {
                    extend(q, VertexKind::Z, 2);
                } else if (op.clifford == "X") {
                    extend(q, VertexKind::X, 2);
                } else if (op.clifford == "Y") {
                    extend(q, VertexKind::X, 2);
                    extend(q, VertexKind::Z, 2);
                }
                break;
            case OpKind::CX: {
                const int a = extend(q, VertexKind::Z, 0);
                const int b = extend(op.qubits[1], VertexKind::X, 0);
                d.add_edge(a, b);
                break;
            }
            case OpKind::M1Z: leaf(extend(q, VertexKind::Z, 0), VertexKind::X); break;
            case OpKind::M1X: leaf(extend(q, VertexKind::X, 0), VertexKind::Z); break;
            case OpKind::M2Z:
            case OpKind::M2X: {
                const VertexKind kind = op.kind == OpKind::M2Z ? VertexKind::Z : VertexKind::X;
                const int a = extend(q, kind, 0);
                const int b = extend(op.qubits[1], kind, 0);
                d.add_edge(a, b);
                break;
            }
            case OpKind::SWAP: {
                const int a = wire(q);
                const int b = wire(op.qubits[1]);
                tail[k] = b;
                tail[static_cast<std::size_t>(op.qubits[1])] = a;
                std::swap(chain[k], chain[static_cast<std::size_t>(op.qubits[1])]);
                break;
            }
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (!opened[q]) {
            wire(static_cast<int>(q));
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (inputs[q] >= 0) {
            d.add_input(inputs[q]);
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (tail[q]) {
            const int b = d.add_vertex(VertexKind::B);
            d.add_edge(*tail[q], b);
            d.add_output(b);
            chain[q].push_back(b);
            close(q);
        }
    }
    // A wire that is input and output with nothing in between would be a
    // B-B edge; that is valid, nothing to fix up.
    return d;
}

Op parse_op(const std::string& line) {
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) {
        throw CircuitError("empty op line");
    }
    const auto it = std::find_if(kNames.begin(), kNames.end(), [&](const char* n) { return name == n; });
    if (it == kNames.end()) {
        throw CircuitError("unknown op '" + name + "'");
    }
    const auto kind = static_cast<OpKind>(it - kNames.begin());
    Op op;
    op.kind = kind;
    for (int i = 0; i < arity(kind); ++i) {
        int q = 0;
        if (!(ls >> q)) {
            throw CircuitError("op '" + line + "': missing qubit");
        }
        op.qubits.push_back(q);
    }
    if (kind == OpKind::C) {
        if (!(ls >> op.clifford) || !is_known_clifford(op.clifford)) {
            throw CircuitError("op '" + line + "': expected a Clifford name");
        }
    }
    std::string extra;
    if (ls >> extra) {
        throw CircuitError("op '" + line + "': trailing tokens");
    }
    return op;
}

std::string format_op(const Op& op) {
    std::string s = op_name(op.kind);
    for (int q : op.qubits) {
        s += ' ' + std::to_string(q);
    }
    if (op.kind == OpKind::C) {
        s += ' ' + op.clifford;
    }
    return s;
}

Circuit read_circuit(std::istream& in) {
    Circuit c;
    bool header = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') {
            continue;
        }
        if (tag == "qubits") {
            if (header || !(ls >> c.qubits) || c.qubits < 0) {
                throw CircuitError("bad 'qubits' line");
            }
            header = true;
            continue;
        }
        if (!header) {
            throw CircuitError("circuit must start with 'qubits <N>'");
        }
        c.ops.push_back(parse_op(line));
    }
    if (!header) {
        throw CircuitError("missing 'qubits <N>' line");
    }
    check_circuit(c);
    return c;
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    return read_circuit(in);
}

void write_circuit(std::ostream& out, const Circuit& c) {
    out << "qubits " << c.qubits << '\n';
    for (const auto& op : c.ops) {
        out << format_op(op) << '\n';
    }
}

std::string format_circuit(const Circuit& c) {
    std::ostringstream out;
    write_circuit(out, c);
    return out.str();
}

}  // namespace zxfloq
