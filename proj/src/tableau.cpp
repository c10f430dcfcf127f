#include "zxfloq/tableau.hpp"

#include "zxfloq/f2.hpp"

#include <utility>

namespace zxfloq {

PauliString single_qubit_pauli(int n, int q, char letter) {
    PauliString p(static_cast<std::size_t>(n));
    p.set_letter(static_cast<std::size_t>(q), letter);
    return p;
}

PauliString two_qubit_pauli(int n, int a, int b, char letter) {
    PauliString p(static_cast<std::size_t>(n));
    p.set_letter(static_cast<std::size_t>(a), letter);
    p.set_letter(static_cast<std::size_t>(b), letter);
    return p;
}

bool StabiliserTableau::contains(const PauliString& p) const {
    SpanBasis span(2 * static_cast<std::size_t>(n_));
    for (const auto& g : gens_) {
        span.insert(g.symplectic());
    }
    return span.contains(p.symplectic());
}

bool StabiliserTableau::commutes_with_all(const PauliString& p) const {
    for (const auto& g : gens_) {
        if (!g.commutes(p)) {
            return false;
        }
    }
    return true;
}

void StabiliserTableau::add_independent(const PauliString& p) {
    if (!p.is_identity() && !contains(p)) {
        gens_.push_back(p);
    }
}

void StabiliserTableau::measure(const PauliString& p) {
    std::size_t pivot = gens_.size();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!gens_[i].commutes(p)) {
            if (pivot == gens_.size()) {
                pivot = i;
            } else {
                gens_[i] *= gens_[pivot];
            }
        }
    }
    if (pivot != gens_.size()) {
        gens_.erase(gens_.begin() + static_cast<std::ptrdiff_t>(pivot));
    }
    add_independent(p);
}

void StabiliserTableau::reset(int q, char basis) {
    // Keep the subgroup acting trivially on q: eliminate on the two bits of q.
    const auto uq = static_cast<std::size_t>(q);
    std::vector<PauliString> rest = gens_;
    std::vector<PauliString> kept;
    for (int bit = 0; bit < 2; ++bit) {
        std::size_t pivot = rest.size();
        for (std::size_t i = 0; i < rest.size(); ++i) {
            const bool on = bit == 0 ? rest[i].x(uq) : rest[i].z(uq);
            if (!on) {
                continue;
            }
            if (pivot == rest.size()) {
                pivot = i;
            } else {
                rest[i] *= rest[pivot];
            }
        }
        if (pivot != rest.size()) {
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pivot));
        }
    }
    gens_.clear();
    for (const auto& g : rest) {
        add_independent(g);
    }
    add_independent(single_qubit_pauli(n_, q, basis));
}

void StabiliserTableau::clifford(int q, const std::string& name) {
    const auto uq = static_cast<std::size_t>(q);
    for (auto& g : gens_) {
        const bool x = g.x(uq);
        const bool z = g.z(uq);
        if (name == "H") {
            g.set_x(uq, z);
            g.set_z(uq, x);
        } else if (name == "S" || name == "SDG") {
            g.set_z(uq, z != x);
        }
    }
}

void StabiliserTableau::cx(int control, int target) {
    const auto c = static_cast<std::size_t>(control);
    const auto t = static_cast<std::size_t>(target);
    for (auto& g : gens_) {
        g.set_x(t, g.x(t) != g.x(c));
        g.set_z(c, g.z(c) != g.z(t));
    }
}

void StabiliserTableau::swap(int a, int b) {
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    for (auto& g : gens_) {
        const char la = g.letter(ua);
        g.set_letter(ua, g.letter(ub));
        g.set_letter(ub, la);
    }
}

void StabiliserTableau::apply(const Op& op) {
    const int a = op.qubits[0];
    switch (op.kind) {
        case OpKind::PZ: reset(a, 'Z'); break;
        case OpKind::PX: reset(a, 'X'); break;
        case OpKind::DZ:
        case OpKind::M1Z: measure(single_qubit_pauli(n_, a, 'Z')); break;
        case OpKind::DX:
        case OpKind::M1X: measure(single_qubit_pauli(n_, a, 'X')); break;
        case OpKind::C: clifford(a, op.clifford); break;
        case OpKind::CX: cx(a, op.qubits[1]); break;
        case OpKind::M2Z: measure(two_qubit_pauli(n_, a, op.qubits[1], 'Z')); break;
        case OpKind::M2X: measure(two_qubit_pauli(n_, a, op.qubits[1], 'X')); break;
        case OpKind::SWAP: swap(a, op.qubits[1]); break;
    }
}

std::optional<int> logical_min_weight(const StabiliserTableau& t, int w_max, PauliString* witness) {
    const int n = t.qubits();
    SpanBasis span(2 * static_cast<std::size_t>(n));
    for (const auto& g : t.generators()) {
        span.insert(g.symplectic());
    }
    static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
    for (int w = 1; w <= std::min(w_max, n); ++w) {
        std::vector<int> pick(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) {
            pick[static_cast<std::size_t>(i)] = i;
        }
        while (true) {
            std::vector<int> letter(static_cast<std::size_t>(w), 0);
            while (true) {
                PauliString p(static_cast<std::size_t>(n));
                for (int i = 0; i < w; ++i) {
                    p.set_letter(static_cast<std::size_t>(pick[static_cast<std::size_t>(i)]),
                                 kLetters[letter[static_cast<std::size_t>(i)]]);
                }
                if (t.commutes_with_all(p) && !span.contains(p.symplectic())) {
                    if (witness != nullptr) {
                        *witness = p;
                    }
                    return w;
                }
                int j = w - 1;
                while (j >= 0 && letter[static_cast<std::size_t>(j)] == 2) {
                    letter[static_cast<std::size_t>(j)] = 0;
                    --j;
                }
                if (j < 0) {
                    break;
                }
                ++letter[static_cast<std::size_t>(j)];
            }
            int i = w - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - w + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++pick[static_cast<std::size_t>(i)];
            for (int k = i + 1; k < w; ++k) {
                pick[static_cast<std::size_t>(k)] = pick[static_cast<std::size_t>(k - 1)] + 1;
            }
        }
    }
    return std::nullopt;
}

std::vector<StabiliserTableau> simulate_circuit(const Circuit& c) {
    std::vector<StabiliserTableau> out;
    StabiliserTableau t(c.qubits);
    out.push_back(t);
    for (const auto& op : c.ops) {
        t.apply(op);
        out.push_back(t);
    }
    return out;
}

}  // namespace zxfloq
