#include "zxfloq/floquet.hpp"

#include "zxfloq/f2.hpp"
#include "zxfloq/flow.hpp"
#include "zxfloq/synth.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zxfloq {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

bool all_letters(const PauliString& p, char c) {
    for (std::size_t q = 0; q < p.size(); ++q) {
        if (p.letter(q) != 'I' && p.letter(q) != c) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> establishment(const std::vector<StabiliserTableau>& states, std::size_t period) {
    for (std::size_t t = 0; t + period < states.size(); ++t) {
        bool flat = true;
        for (std::size_t j = 1; j <= period && flat; ++j) {
            flat = states[t + j].rank() == states[t].rank();
        }
        if (flat) {
            return t;
        }
    }
    return std::nullopt;
}

CodeParams params_from(const std::vector<StabiliserTableau>& states, std::size_t period, int n, int w_max) {
    const auto t0 = establishment(states, period);
    if (!t0) {
        throw CodeError("schedule does not establish within the simulated window");
    }
    CodeParams p;
    p.n = n;
    p.established = *t0;
    p.period = period;
    p.stabiliser_rank = states[*t0].rank();
    p.k = n - static_cast<int>(p.stabiliser_rank);
    int bound = w_max > 0 ? std::min(w_max, n) : n;
    const std::size_t span = std::max<std::size_t>(period, 1);
    for (std::size_t t = *t0; t < *t0 + span && t < states.size() && bound > 0; ++t) {
        PauliString w;
        const auto d = logical_min_weight(states[t], bound, &w);
        if (d) {
            p.d = d;
            p.witness = w;
            p.witness_step = t;
            bound = *d - 1;
        }
    }
    return p;
}

// Arity, range and Clifford names; wire life-cycles wrap around in a body.
void check_op(const Op& op, int qubits) {
    Circuit c;
    c.qubits = qubits;
    c.ops = {op};
    check_circuit(c);
}

bool uses(const Op& op, int q) { return std::find(op.qubits.begin(), op.qubits.end(), q) != op.qubits.end(); }

}  // namespace

int StabiliserCode::max_weight() const {
    int m = 0;
    for (const auto& g : generators) {
        m = std::max(m, static_cast<int>(g.weight()));
    }
    return m;
}

void check_code(const StabiliserCode& c) {
    if (c.n <= 0) {
        throw CodeError("code needs at least one qubit");
    }
    SpanBasis span(2 * static_cast<std::size_t>(c.n));
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        const auto& g = c.generators[i];
        if (g.size() != static_cast<std::size_t>(c.n)) {
            throw CodeError("generator " + str(i) + " has length " + str(g.size()) + ", expected " + str(c.n));
        }
        if (g.is_identity()) {
            throw CodeError("generator " + str(i) + " is the identity");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!g.commutes(c.generators[j])) {
                throw CodeError("generators " + str(j) + " and " + str(i) + " anticommute");
            }
        }
        if (!span.insert(g.symplectic())) {
            throw CodeError("generator " + str(i) + " depends on earlier generators");
        }
    }
}

StabiliserCode read_code(std::istream& in) {
    StabiliserCode c;
    bool header = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') {
            continue;
        }
        if (!header) {
            if (tok != "n" || !(ls >> c.n)) {
                throw CodeError("line " + std::to_string(lineno) + ": expected 'n <N>'");
            }
            header = true;
            continue;
        }
        try {
            c.generators.push_back(PauliString::parse(tok));
        } catch (const std::exception& e) {
            throw CodeError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!header) {
        throw CodeError("missing 'n <N>' line");
    }
    check_code(c);
    return c;
}

StabiliserCode parse_code(const std::string& text) {
    std::istringstream in(text);
    return read_code(in);
}

void write_code(std::ostream& out, const StabiliserCode& c) {
    out << "n " << c.n << '\n';
    for (const auto& g : c.generators) {
        out << g.str() << '\n';
    }
}

ZXDiagram generator_diagram(const PauliString& p) {
    PauliString local(p.weight());
    std::size_t k = 0;
    for (std::size_t q = 0; q < p.size(); ++q) {
        if (p.letter(q) != 'I') {
            local.set_letter(k++, p.letter(q));
        }
    }
    if (all_letters(local, 'X')) {
        PauliString z(local.size());
        for (std::size_t q = 0; q < z.size(); ++q) {
            z.set_letter(q, 'Z');
        }
        return colour_swapped(measurement_diagram(z));
    }
    return measurement_diagram(local);
}

MeasurementCircuit build_measurement_circuit(const StabiliserCode& code, int rounds) {
    if (rounds < 1) {
        throw std::invalid_argument("need at least one round");
    }
    MeasurementCircuit mc;
    ZXDiagram& d = mc.diagram;
    std::vector<int> tail;
    std::vector<int> ins;
    for (int q = 0; q < code.n; ++q) {
        ins.push_back(d.add_vertex(VertexKind::B));
        tail.push_back(ins.back());
    }
    for (int r = 0; r < rounds; ++r) {
        for (std::size_t gi = 0; gi < code.generators.size(); ++gi) {
            const PauliString& g = code.generators[gi];
            const ZXDiagram frag = generator_diagram(g);
            const auto m = append_disjoint(d, frag);
            for (const auto& [id, v] : frag.vertices()) {
                if (v.kind != VertexKind::B) {
                    mc.origin[m.at(id)] = {r, static_cast<int>(gi)};
                }
            }
            std::size_t k = 0;
            for (std::size_t q = 0; q < g.size(); ++q) {
                if (g.letter(q) == 'I') {
                    continue;
                }
                const int bi = m.at(frag.inputs()[k]);
                const int bo = m.at(frag.outputs()[k]);
                ++k;
                const int first = d.edge(d.boundary_edge(bi)).other(bi);
                if (first == bo) {
                    d.remove_vertex(bi);
                    d.remove_vertex(bo);
                    continue;
                }
                const int last = d.edge(d.boundary_edge(bo)).other(bo);
                d.remove_vertex(bi);
                d.remove_vertex(bo);
                d.add_edge(tail[q], first);
                tail[q] = last;
            }
        }
    }
    std::vector<int> outs;
    for (int q = 0; q < code.n; ++q) {
        outs.push_back(d.add_vertex(VertexKind::B));
        d.add_edge(tail[static_cast<std::size_t>(q)], outs.back());
    }
    d.set_inputs(ins);
    d.set_outputs(outs);
    d.compact_edges();
    return mc;
}

std::set<int> round_vertices(const MeasurementCircuit& mc, int round) {
    std::set<int> out;
    for (const auto& [v, o] : mc.origin) {
        if (o.first == round) {
            out.insert(v);
        }
    }
    return out;
}

std::vector<int> edges_touching(const ZXDiagram& d, const std::set<int>& vertices) {
    std::vector<int> out;
    for (const auto& [id, e] : d.edges()) {
        if (vertices.count(e.a) != 0 || vertices.count(e.b) != 0) {
            out.push_back(id);
        }
    }
    return out;
}

void check_schedule(const PeriodicSchedule& s) {
    if (s.qubits < 0) {
        throw CircuitError("negative qubit count");
    }
    for (const auto& op : s.prologue) {
        check_op(op, s.qubits);
    }
    for (const auto& op : s.body) {
        check_op(op, s.qubits);
    }
}

PeriodicSchedule read_schedule(std::istream& in) {
    PeriodicSchedule s;
    enum class Section { None, Prologue, Body } section = Section::None;
    bool header = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') {
            continue;
        }
        if (tag == "qubits") {
            if (header || !(ls >> s.qubits)) {
                throw CircuitError("bad 'qubits' line");
            }
            header = true;
        } else if (tag == "prologue:") {
            section = Section::Prologue;
        } else if (tag == "body:") {
            section = Section::Body;
        } else if (section == Section::None || !header) {
            throw CircuitError("op before 'qubits' and a section header: " + line);
        } else {
            (section == Section::Prologue ? s.prologue : s.body).push_back(parse_op(line));
        }
    }
    if (!header) {
        throw CircuitError("missing 'qubits <N>' line");
    }
    check_schedule(s);
    return s;
}

PeriodicSchedule parse_schedule(const std::string& text) {
    std::istringstream in(text);
    return read_schedule(in);
}

void write_schedule(std::ostream& out, const PeriodicSchedule& s) {
    out << "qubits " << s.qubits << "\nprologue:\n";
    for (const auto& op : s.prologue) {
        out << format_op(op) << '\n';
    }
    out << "body:\n";
    for (const auto& op : s.body) {
        out << format_op(op) << '\n';
    }
}

std::string format_schedule(const PeriodicSchedule& s) {
    std::ostringstream out;
    write_schedule(out, s);
    return out.str();
}

PeriodicSchedule reorder(const PeriodicSchedule& s) {
    if (s.body.empty()) {
        throw std::invalid_argument("reorder needs a non-empty body");
    }
    PeriodicSchedule out = s;
    out.prologue.push_back(s.body.front());
    std::rotate(out.body.begin(), out.body.begin() + 1, out.body.end());
    return out;
}

PeriodicSchedule unroll(const PeriodicSchedule& s, int k) {
    if (s.body.empty()) {
        throw std::invalid_argument("unroll needs a non-empty body");
    }
    if (k < 1) {
        throw std::invalid_argument("unroll needs k >= 1");
    }
    PeriodicSchedule out = s;
    out.body.clear();
    for (int i = 0; i < k; ++i) {
        out.body.insert(out.body.end(), s.body.begin(), s.body.end());
    }
    return out;
}

PeriodicSchedule remove_swaps(const PeriodicSchedule& s) {
    const bool any = std::any_of(s.body.begin(), s.body.end(), [](const Op& op) { return op.kind == OpKind::SWAP; });
    if (!any) {
        return s;
    }
    const auto n = static_cast<std::size_t>(s.qubits);
    // alias[w]: wire that now carries the state the body expects on wire w.
    auto step = [&](std::vector<int>& alias, std::vector<Op>* out) {
        for (const Op& op : s.body) {
            if (op.kind == OpKind::SWAP) {
                std::swap(alias[static_cast<std::size_t>(op.qubits[0])], alias[static_cast<std::size_t>(op.qubits[1])]);
                continue;
            }
            if (out != nullptr) {
                Op moved = op;
                for (int& q : moved.qubits) {
                    q = alias[static_cast<std::size_t>(q)];
                }
                out->push_back(moved);
            }
        }
    };
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<int> alias = identity;
    int order = 0;
    do {
        step(alias, nullptr);
        ++order;
    } while (alias != identity);

    std::vector<Op> body;
    alias = identity;
    for (int i = 0; i < order; ++i) {
        step(alias, &body);
    }
    PeriodicSchedule out = s;
    const std::size_t len = body.size();
    std::size_t period = len;
    for (std::size_t p = 1; p < len; ++p) {
        if (len % p != 0) {
            continue;
        }
        bool repeats = true;
        for (std::size_t i = p; i < len && repeats; ++i) {
            repeats = body[i] == body[i - p];
        }
        if (repeats) {
            period = p;
            break;
        }
    }
    out.body.assign(body.begin(), body.begin() + static_cast<long>(period));
    return out;
}

Simulation simulate(const PeriodicSchedule& s, int periods, bool with_prologue) {
    Simulation sim;
    StabiliserTableau t(s.qubits);
    if (with_prologue) {
        for (const auto& op : s.prologue) {
            t.apply(op);
        }
    }
    sim.period = s.body.size();
    sim.states.push_back(t);
    for (int r = 0; r < periods; ++r) {
        for (const auto& op : s.body) {
            t.apply(op);
            sim.states.push_back(t);
        }
    }
    sim.established = establishment(sim.states, sim.period);
    return sim;
}

CodeParams code_params(const PeriodicSchedule& s, int w_max, int periods) {
    const Simulation sim = simulate(s, periods);
    return params_from(sim.states, sim.period, s.qubits, w_max);
}

CodeParams code_params(const StabiliserCode& c, int w_max) {
    check_code(c);
    StabiliserTableau t(c.n);
    std::vector<StabiliserTableau> states{t};
    for (int r = 0; r < 3; ++r) {
        for (const auto& g : c.generators) {
            t.measure(g);
            states.push_back(t);
        }
    }
    return params_from(states, c.generators.size(), c.n, w_max);
}

std::string format_params(const CodeParams& p) {
    std::ostringstream out;
    out << "n=" << p.n << " k=" << p.k << " d=";
    if (p.d) {
        out << *p.d;
    } else {
        out << ">" << p.n;
    }
    out << "\nestablished " << p.established << " period " << p.period << " stabilisers " << p.stabiliser_rank
        << '\n';
    if (p.d) {
        out << "witness " << p.witness.str() << " at step " << p.witness_step << '\n';
    }
    return out.str();
}

PeriodicSchedule unmerged_schedule(const StabiliserCode& code, std::vector<std::string>* audit) {
    check_code(code);
    auto note = [&](const std::string& s) {
        if (audit != nullptr) {
            audit->push_back(s);
        }
    };
    PeriodicSchedule s;
    s.qubits = code.n;
    for (std::size_t gi = 0; gi < code.generators.size(); ++gi) {
        const PauliString& g = code.generators[gi];
        const FlowDiagram base = decompose_measurement(g);
        note("generator " + str(gi) + " " + g.str() + ": decomposed with " + str(base.flow.paths.size()) + " paths");
        const FlowDiagram covered = make_well_covered(base.diagram, base.flow);
        const FlowDiagram reduced = reduce_degree(covered.diagram, covered.flow);
        for (const auto& line : covered.log) {
            note("generator " + str(gi) + " " + line);
        }
        for (const auto& line : reduced.log) {
            note("generator " + str(gi) + " " + line);
        }
        const Circuit c = extract_circuit(reduced.diagram, reduced.flow);
        note("generator " + str(gi) + " extracted: " + std::to_string(c.qubits) + " qubits, " + str(c.ops.size()) +
             " ops");
        s.qubits = std::max(s.qubits, c.qubits);
        s.body.insert(s.body.end(), c.ops.begin(), c.ops.end());
    }
    std::size_t shift = 0;
    for (int q = code.n; q < s.qubits; ++q) {
        const auto it = std::find_if(s.body.begin(), s.body.end(), [&](const Op& op) { return uses(op, q); });
        if (it != s.body.end()) {
            shift = std::max(shift, static_cast<std::size_t>(it - s.body.begin()) + 1);
        }
    }
    for (std::size_t i = 0; i < shift; ++i) {
        s = reorder(s);
    }
    note("reorder x" + str(shift) + ": ancilla preparations moved to the prologue");
    return s;
}

PeriodicSchedule merge_measure_prepare(const PeriodicSchedule& s, std::vector<std::string>* audit) {
    PeriodicSchedule out = s;
    auto& body = out.body;
    for (std::size_t i = 0; i < body.size(); ++i) {
        const OpKind k = body[i].kind;
        if (k != OpKind::DZ && k != OpKind::DX) {
            continue;
        }
        const int q = body[i].qubits[0];
        std::size_t j = i + 1;
        while (j < body.size() && !uses(body[j], q)) {
            ++j;
        }
        const OpKind prep = k == OpKind::DZ ? OpKind::PZ : OpKind::PX;
        if (j == body.size() || body[j].kind != prep) {
            if (audit != nullptr) {
                audit->push_back("destructive measurement at body op " + str(i) + " left unmerged");
            }
            continue;
        }
        const OpKind m = k == OpKind::DZ ? OpKind::M1Z : OpKind::M1X;
        body[i] = make_op(m, {q});
        body[j] = make_op(m, {q});
        if (audit != nullptr) {
            audit->push_back(std::string(k == OpKind::DZ ? "r_pauli1" : "r_pauli1 (colour swapped)") + ": qubit " +
                             std::to_string(q) + ", body ops " + str(i) + " and " + str(j));
        }
    }
    return out;
}

FloquetResult floquetify(const StabiliserCode& code, const FloquetOptions& opts) {
    FloquetResult res;
    const PeriodicSchedule unmerged = unmerged_schedule(code, &res.audit);
    const PeriodicSchedule merged = merge_measure_prepare(unmerged, &res.audit);
    res.schedule = remove_swaps(merged);
    res.audit.push_back(res.schedule == merged ? "remove_swaps: body has no SWAP"
                                               : "remove_swaps: body length " + str(merged.body.size()) + " -> " +
                                                     str(res.schedule.body.size()));
    int heaviest = 0;
    for (const auto& op : res.schedule.body) {
        heaviest = std::max(heaviest, op.weight());
    }
    res.audit.push_back("body: " + str(res.schedule.body.size()) + " ops, max weight " + std::to_string(heaviest));
    res.ancillas = res.schedule.qubits - code.n;
    const int centre = 2 * ((code.max_weight() + 1) / 2);
    res.f_term = centre >= 4 ? f_overhead(centre) : 0;
    res.params = code_params(res.schedule, opts.w_max);
    return res;
}

}  // namespace zxfloq
