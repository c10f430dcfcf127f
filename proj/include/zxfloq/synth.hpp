#pragma once

#include "zxfloq/circuit.hpp"
#include "zxfloq/flow.hpp"
#include "zxfloq/pauli.hpp"

#include <vector>

namespace zxfloq {

// Local Cliffords turning a Pauli measurement into a Z-type one:
// measuring p equals `pre`, then Z on every support qubit, then `post`.
struct NormalisedPauli {
    std::vector<int> support;  // qubits with a non-identity letter
    std::vector<Op> pre;
    std::vector<Op> post;

    [[nodiscard]] int weight() const { return static_cast<int>(support.size()); }
};

// Throws std::invalid_argument for the identity.
NormalisedPauli normalise_pauli(const PauliString& p);

// Projector onto the +1 eigenspace of p as a diagram with a well-covered flow:
// one path per qubit, and one gadget path per adjacent pair of support qubits
// running from a leaf before the central X spider to a leaf after it. For odd
// weight the last gadget starts at a fresh leaf on the centre.
FlowDiagram decompose_measurement(const PauliString& p);

// Decompose, make well-covered, reduce degree and extract.
Circuit measurement_circuit_for(const PauliString& p);

// Printed qubit budget n + ceil(n/2) + log2(n) for a weight-n measurement.
double measurement_qubit_bound(int n);

// Reference diagram: wire spiders joined to one phase-free X centre, dressed
// with the local Cliffords of normalise_pauli.
ZXDiagram measurement_diagram(const PauliString& p);

}  // namespace zxfloq
