#pragma once

#include "zxfloq/circuit.hpp"
#include "zxfloq/diagram.hpp"
#include "zxfloq/pauli.hpp"
#include "zxfloq/tableau.hpp"

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zxfloq {

class CodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StabiliserCode {
    int n = 0;
    std::vector<PauliString> generators;

    [[nodiscard]] int max_weight() const;
};

// Throws CodeError on wrong lengths, anticommuting or dependent generators.
void check_code(const StabiliserCode& c);

// Code file: `n <N>`, then one generator per line. Blank lines and `#`
// comments are skipped.
StabiliserCode read_code(std::istream& in);
StabiliserCode parse_code(const std::string& text);
void write_code(std::ostream& out, const StabiliserCode& c);

// Projector of one generator on its support qubits, in support order.
// Z-type: Z wire spiders on one X spider; X-type: its colour dual; mixed:
// Z-type dressed with local Cliffords.
ZXDiagram generator_diagram(const PauliString& p);

struct MeasurementCircuit {
    ZXDiagram diagram;
    // Vertex -> (round, generator index) for every non-boundary vertex.
    std::map<int, std::pair<int, int>> origin;
};

// `rounds` repetitions of all generators in file order, open at both ends.
MeasurementCircuit build_measurement_circuit(const StabiliserCode& code, int rounds);

// Vertices placed by one round.
std::set<int> round_vertices(const MeasurementCircuit& mc, int round);
// Edges with at least one endpoint in `vertices`, in edge id order.
std::vector<int> edges_touching(const ZXDiagram& d, const std::set<int>& vertices);

// Prologue once, then the body forever.
struct PeriodicSchedule {
    int qubits = 0;
    std::vector<Op> prologue;
    std::vector<Op> body;

    bool operator==(const PeriodicSchedule&) const = default;
};

void check_schedule(const PeriodicSchedule& s);

// `qubits <N>`, `prologue:` op lines, `body:` op lines.
PeriodicSchedule read_schedule(std::istream& in);
PeriodicSchedule parse_schedule(const std::string& text);
void write_schedule(std::ostream& out, const PeriodicSchedule& s);
std::string format_schedule(const PeriodicSchedule& s);

// Runs the body's first op once, then repeats the rotated body.
PeriodicSchedule reorder(const PeriodicSchedule& s);
// Body repeated k times.
PeriodicSchedule unroll(const PeriodicSchedule& s, int k);
// Absorbs body SWAPs into a wire relabelling over order(pi) periods, then
// keeps the shortest repeating sub-period. Bodies without SWAPs are returned
// unchanged.
PeriodicSchedule remove_swaps(const PeriodicSchedule& s);

struct Simulation {
    std::vector<StabiliserTableau> states;  // states[t] after t body ops
    std::size_t period = 0;
    std::optional<std::size_t> established;  // T
};

// Body only, from the empty group, for `periods` periods. Pass the prologue
// flag to run it first.
Simulation simulate(const PeriodicSchedule& s, int periods = 3, bool with_prologue = false);

struct CodeParams {
    int n = 0;
    int k = 0;
    std::optional<int> d;  // empty: no logical up to the search bound
    std::size_t established = 0;
    std::size_t period = 0;
    std::size_t stabiliser_rank = 0;
    PauliString witness;
    std::size_t witness_step = 0;
};

// Throws CodeError if the schedule does not establish within the window.
// d' is searched up to weight `w_max` (default: all qubits).
CodeParams code_params(const PeriodicSchedule& s, int w_max = 0, int periods = 3);
// The original code measured generator by generator.
CodeParams code_params(const StabiliserCode& c, int w_max = 0);

std::string format_params(const CodeParams& p);

struct FloquetResult {
    PeriodicSchedule schedule;
    CodeParams params;
    int ancillas = 0;
    int f_term = 0;
    std::vector<std::string> audit;
};

struct FloquetOptions {
    int w_max = 0;  // distance search bound, 0 = all qubits
};

FloquetResult floquetify(const StabiliserCode& code, const FloquetOptions& opts = {});

// Schedule before the measure/prepare merge: generator circuits back to back,
// rotated so each ancilla's first preparation sits in the prologue.
PeriodicSchedule unmerged_schedule(const StabiliserCode& code, std::vector<std::string>* audit = nullptr);

// Replaces each destructive measurement followed (in the body) by a
// same-basis preparation of that qubit with two single-qubit measurements.
PeriodicSchedule merge_measure_prepare(const PeriodicSchedule& s, std::vector<std::string>* audit = nullptr);

}  // namespace zxfloq
