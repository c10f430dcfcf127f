#pragma once

#include "zxfloq/circuit.hpp"
#include "zxfloq/pauli.hpp"

#include <optional>
#include <vector>

namespace zxfloq {

// Phaseless stabiliser group on n qubits. Measurements are post-selected on
// the +1 outcome, so signs carry no information and are not tracked.
class StabiliserTableau {
public:
    explicit StabiliserTableau(int n) : n_(n) {}

    [[nodiscard]] int qubits() const { return n_; }
    [[nodiscard]] const std::vector<PauliString>& generators() const { return gens_; }
    [[nodiscard]] std::size_t rank() const { return gens_.size(); }

    void apply(const Op& op);
    void measure(const PauliString& p);
    // Forgets qubit q, then adds p (Z_q or X_q) as a stabiliser.
    void reset(int q, char basis);
    void clifford(int q, const std::string& name);
    void cx(int control, int target);
    void swap(int a, int b);

    [[nodiscard]] bool contains(const PauliString& p) const;
    [[nodiscard]] bool commutes_with_all(const PauliString& p) const;

private:
    int n_;
    std::vector<PauliString> gens_;

    void add_independent(const PauliString& p);
};

PauliString single_qubit_pauli(int n, int q, char letter);
PauliString two_qubit_pauli(int n, int a, int b, char letter);

// Minimum weight of a Pauli in N(S) \ S, searching weights 1..w_max.
std::optional<int> logical_min_weight(const StabiliserTableau& t, int w_max,
                                      PauliString* witness = nullptr);

// Tableau after every prefix of the circuit, starting from the maximally mixed
// state (index 0 is the empty group).
std::vector<StabiliserTableau> simulate_circuit(const Circuit& c);

}  // namespace zxfloq
