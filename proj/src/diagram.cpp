#include "zxfloq/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zxfloq {

char kind_char(VertexKind k) {
    switch (k) {
        case VertexKind::Z: return 'Z';
        case VertexKind::X: return 'X';
        case VertexKind::H: return 'H';
        case VertexKind::B: return 'B';
    }
    return '?';
}

VertexKind kind_from_char(char c) {
    switch (c) {
        case 'Z': return VertexKind::Z;
        case 'X': return VertexKind::X;
        case 'H': return VertexKind::H;
        case 'B': return VertexKind::B;
        default: throw DiagramError(std::string("unknown vertex kind '") + c + "'");
    }
}

VertexKind flip_colour(VertexKind k) {
    if (k == VertexKind::Z) {
        return VertexKind::X;
    }
    if (k == VertexKind::X) {
        return VertexKind::Z;
    }
    return k;
}

int ZXDiagram::add_vertex(VertexKind kind, Phase phase) {
    const int id = next_vertex_;
    add_vertex_with_id(id, kind, phase);
    return id;
}

void ZXDiagram::add_vertex_with_id(int id, VertexKind kind, Phase phase) {
    if (vertices_.count(id) != 0) {
        throw DiagramError("duplicate vertex id " + std::to_string(id));
    }
    vertices_[id] = Vertex{id, kind, phase};
    incident_[id];
    next_vertex_ = std::max(next_vertex_, id + 1);
}

int ZXDiagram::add_edge(int a, int b) {
    if (!has_vertex(a) || !has_vertex(b)) {
        throw DiagramError("edge references unknown vertex");
    }
    const int e = next_edge_++;
    edges_[e] = Edge{a, b};
    incident_[a].push_back(e);
    if (b != a) {
        incident_[b].push_back(e);
    }
    return e;
}

void ZXDiagram::remove_edge(int e) {
    const auto it = edges_.find(e);
    if (it == edges_.end()) {
        throw DiagramError("unknown edge " + std::to_string(e));
    }
    for (int v : {it->second.a, it->second.b}) {
        auto& inc = incident_[v];
        inc.erase(std::remove(inc.begin(), inc.end(), e), inc.end());
    }
    edges_.erase(it);
}

void ZXDiagram::remove_vertex(int v) {
    const std::vector<int> inc = incident(v);
    for (int e : inc) {
        if (has_edge(e)) {
            remove_edge(e);
        }
    }
    vertices_.erase(v);
    incident_.erase(v);
    inputs_.erase(std::remove(inputs_.begin(), inputs_.end(), v), inputs_.end());
    outputs_.erase(std::remove(outputs_.begin(), outputs_.end(), v), outputs_.end());
}

int ZXDiagram::insert_on_edge(int e, VertexKind kind, Phase phase) {
    const Edge ed = edge(e);
    remove_edge(e);
    const int v = add_vertex(kind, phase);
    add_edge(ed.a, v);
    add_edge(v, ed.b);
    return v;
}

const Vertex& ZXDiagram::vertex(int v) const {
    const auto it = vertices_.find(v);
    if (it == vertices_.end()) {
        throw DiagramError("unknown vertex " + std::to_string(v));
    }
    return it->second;
}

Vertex& ZXDiagram::vertex_mut(int v) {
    const auto it = vertices_.find(v);
    if (it == vertices_.end()) {
        throw DiagramError("unknown vertex " + std::to_string(v));
    }
    return it->second;
}

const Edge& ZXDiagram::edge(int e) const {
    const auto it = edges_.find(e);
    if (it == edges_.end()) {
        throw DiagramError("unknown edge " + std::to_string(e));
    }
    return it->second;
}

std::vector<int> ZXDiagram::vertex_ids() const {
    std::vector<int> ids;
    ids.reserve(vertices_.size());
    for (const auto& [id, v] : vertices_) {
        ids.push_back(id);
    }
    return ids;
}

std::vector<int> ZXDiagram::edge_ids() const {
    std::vector<int> ids;
    ids.reserve(edges_.size());
    for (const auto& [id, e] : edges_) {
        ids.push_back(id);
    }
    return ids;
}

const std::vector<int>& ZXDiagram::incident(int v) const {
    const auto it = incident_.find(v);
    if (it == incident_.end()) {
        throw DiagramError("unknown vertex " + std::to_string(v));
    }
    return it->second;
}

std::vector<int> ZXDiagram::neighbours(int v) const {
    std::vector<int> out;
    for (int e : incident(v)) {
        out.push_back(edge(e).other(v));
    }
    return out;
}

std::vector<int> ZXDiagram::edges_between(int a, int b) const {
    std::vector<int> out;
    for (int e : incident(a)) {
        const Edge& ed = edge(e);
        if ((ed.a == a && ed.b == b) || (ed.a == b && ed.b == a)) {
            out.push_back(e);
        }
    }
    return out;
}

bool ZXDiagram::is_boundary_edge(int e) const {
    const Edge& ed = edge(e);
    return kind(ed.a) == VertexKind::B || kind(ed.b) == VertexKind::B;
}

std::vector<int> ZXDiagram::internal_edges() const {
    std::vector<int> out;
    for (const auto& [id, e] : edges_) {
        if (!is_boundary_edge(id)) {
            out.push_back(id);
        }
    }
    return out;
}

std::vector<int> ZXDiagram::boundary_edges() const {
    std::vector<int> out;
    for (const auto& [id, e] : edges_) {
        if (is_boundary_edge(id)) {
            out.push_back(id);
        }
    }
    return out;
}

int ZXDiagram::boundary_edge(int b) const {
    const auto& inc = incident(b);
    if (inc.size() != 1) {
        throw DiagramError("boundary vertex " + std::to_string(b) + " does not have degree 1");
    }
    return inc.front();
}

void ZXDiagram::compact_edges() {
    std::map<int, Edge> old;
    old.swap(edges_);
    for (auto& [v, inc] : incident_) {
        inc.clear();
    }
    next_edge_ = 0;
    for (const auto& [id, e] : old) {
        add_edge(e.a, e.b);
    }
}

bool ZXDiagram::same_structure(const ZXDiagram& o) const {
    if (vertices_ != o.vertices_ || inputs_ != o.inputs_ || outputs_ != o.outputs_ ||
        edges_.size() != o.edges_.size()) {
        return false;
    }
    auto it = o.edges_.begin();
    for (const auto& [id, e] : edges_) {
        if (e.a != it->second.a || e.b != it->second.b) {
            return false;
        }
        ++it;
    }
    return true;
}

ValidationReport validate(const ZXDiagram& d) {
    ValidationReport r;
    for (const auto& [id, e] : d.edges()) {
        if (e.a == e.b) {
            r.violations.push_back("self-loop on vertex " + std::to_string(e.a));
        }
    }
    std::set<int> boundary_listed;
    for (int v : d.inputs()) {
        if (!d.has_vertex(v)) {
            r.violations.push_back("input " + std::to_string(v) + " is not a vertex");
            continue;
        }
        if (!boundary_listed.insert(v).second) {
            r.violations.push_back("boundary " + std::to_string(v) + " listed twice");
        }
    }
    for (int v : d.outputs()) {
        if (!d.has_vertex(v)) {
            r.violations.push_back("output " + std::to_string(v) + " is not a vertex");
            continue;
        }
        if (!boundary_listed.insert(v).second) {
            r.violations.push_back("boundary " + std::to_string(v) + " listed twice");
        }
    }
    for (const auto& [id, v] : d.vertices()) {
        const std::size_t deg = d.degree(id);
        const std::string name = std::to_string(id);
        if (v.kind == VertexKind::H) {
            if (deg != 2) {
                r.violations.push_back("Hadamard degree != 2 at vertex " + name);
            }
            if (v.phase.quarter_turns() != 0) {
                r.violations.push_back("Hadamard vertex " + name + " carries a phase");
            }
        }
        if (v.kind == VertexKind::B) {
            if (deg != 1) {
                r.violations.push_back("boundary degree != 1 at vertex " + name);
            }
            if (v.phase.quarter_turns() != 0) {
                r.violations.push_back("boundary vertex " + name + " carries a phase");
            }
            if (boundary_listed.count(id) == 0) {
                r.violations.push_back("boundary vertex " + name + " is neither input nor output");
            }
        } else if (boundary_listed.count(id) != 0) {
            r.violations.push_back("vertex " + name + " listed as boundary but is not B");
        }
    }
    return r;
}

void require_valid(const ZXDiagram& d) {
    const auto r = validate(d);
    if (!r.ok()) {
        throw DiagramError("invalid diagram: " + r.violations.front());
    }
}

std::map<int, int> append_disjoint(ZXDiagram& d, const ZXDiagram& other) {
    std::map<int, int> m;
    for (const auto& [id, v] : other.vertices()) {
        m[id] = d.add_vertex(v.kind, v.phase);
    }
    for (const auto& [id, e] : other.edges()) {
        d.add_edge(m.at(e.a), m.at(e.b));
    }
    return m;
}

ZXDiagram compose(const ZXDiagram& first, const ZXDiagram& second) {
    if (first.outputs().size() != second.inputs().size()) {
        throw DiagramError("compose: arity mismatch");
    }
    ZXDiagram d;
    const auto m1 = append_disjoint(d, first);
    const auto m2 = append_disjoint(d, second);
    for (int v : first.inputs()) {
        d.add_input(m1.at(v));
    }
    for (int v : second.outputs()) {
        d.add_output(m2.at(v));
    }
    for (std::size_t i = 0; i < first.outputs().size(); ++i) {
        const int bo = m1.at(first.outputs()[i]);
        const int bi = m2.at(second.inputs()[i]);
        const int eo = d.boundary_edge(bo);
        const int ei = d.boundary_edge(bi);
        const int u = d.edge(eo).other(bo);
        const int w = d.edge(ei).other(bi);
        if (u == bi || w == bo) {
            throw DiagramError("compose: degenerate boundary wiring");
        }
        d.remove_vertex(bo);
        d.remove_vertex(bi);
        d.add_edge(u, w);
    }
    d.compact_edges();
    return d;
}

ZXDiagram colour_swapped(const ZXDiagram& d) {
    ZXDiagram out = d;
    for (const auto& [id, v] : d.vertices()) {
        out.set_kind(id, flip_colour(v.kind));
    }
    return out;
}

ZXDiagram substitute(const ZXDiagram& host, const Embedding& occ, const ZXDiagram& replacement) {
    std::map<int, int> placed;
    return substitute(host, occ, replacement, placed);
}

ZXDiagram substitute(const ZXDiagram& host, const Embedding& occ, const ZXDiagram& replacement,
                     std::map<int, int>& placed, std::map<int, int>* placed_edges) {
    placed.clear();
    if (placed_edges != nullptr) {
        placed_edges->clear();
    }
    ZXDiagram d = host;
    std::set<int> removed;
    for (const auto& [pv, hv] : occ.vertex_map) {
        if (!d.has_vertex(hv)) {
            throw DiagramError("stale embedding: vertex " + std::to_string(hv));
        }
        removed.insert(hv);
    }
    for (const auto& [b, leg] : occ.leg_map) {
        if (!d.has_edge(leg.first)) {
            throw DiagramError("stale embedding: edge " + std::to_string(leg.first));
        }
        if (removed.count(leg.second) != 0) {
            throw DiagramError("embedding leg points back into the occurrence");
        }
        if (!replacement.has_vertex(b) || replacement.kind(b) != VertexKind::B) {
            throw DiagramError("replacement boundary does not match occurrence legs");
        }
    }
    std::size_t rep_boundary = 0;
    for (const auto& [id, v] : replacement.vertices()) {
        if (v.kind == VertexKind::B) {
            ++rep_boundary;
        }
    }
    if (rep_boundary != occ.leg_map.size()) {
        throw DiagramError("replacement boundary count differs from occurrence legs");
    }
    for (const auto& [b, leg] : occ.leg_map) {
        if (d.has_edge(leg.first)) {
            d.remove_edge(leg.first);
        }
    }
    for (int hv : removed) {
        d.remove_vertex(hv);
    }
    for (const auto& [id, v] : replacement.vertices()) {
        if (v.kind != VertexKind::B) {
            placed[id] = d.add_vertex(v.kind, v.phase);
        }
    }
    auto endpoint = [&](int rv) {
        if (replacement.kind(rv) == VertexKind::B) {
            return occ.leg_map.at(rv).second;
        }
        return placed.at(rv);
    };
    for (const auto& [id, e] : replacement.edges()) {
        const int he = d.add_edge(endpoint(e.a), endpoint(e.b));
        if (placed_edges != nullptr) {
            (*placed_edges)[id] = he;
        }
    }
    return d;
}

ZXDiagram read_diagram(std::istream& in) {
    ZXDiagram d;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') {
            continue;
        }
        auto fail = [&](const std::string& msg) {
            throw DiagramError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tag == "node") {
            int id = 0;
            std::string k;
            int q = 0;
            if (!(ls >> id >> k >> q) || k.size() != 1) {
                fail("expected 'node <id> <Z|X|H|B> <quarter_turns>'");
            }
            d.add_vertex_with_id(id, kind_from_char(k[0]), Phase(q));
        } else if (tag == "edge") {
            int a = 0;
            int b = 0;
            if (!(ls >> a >> b)) {
                fail("expected 'edge <id> <id>'");
            }
            d.add_edge(a, b);
        } else if (tag == "in" || tag == "out") {
            int v = 0;
            while (ls >> v) {
                if (tag == "in") {
                    d.add_input(v);
                } else {
                    d.add_output(v);
                }
            }
            if (!ls.eof()) {
                fail("bad boundary id");
            }
        } else {
            fail("unknown record '" + tag + "'");
        }
    }
    return d;
}

ZXDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    return read_diagram(in);
}

void write_diagram(std::ostream& out, const ZXDiagram& d) {
    for (const auto& [id, v] : d.vertices()) {
        out << "node " << id << ' ' << kind_char(v.kind) << ' ' << v.phase.quarter_turns() << '\n';
    }
    for (const auto& [id, e] : d.edges()) {
        out << "edge " << e.a << ' ' << e.b << '\n';
    }
    out << "in";
    for (int v : d.inputs()) {
        out << ' ' << v;
    }
    out << "\nout";
    for (int v : d.outputs()) {
        out << ' ' << v;
    }
    out << '\n';
}

std::string format_diagram(const ZXDiagram& d) {
    std::ostringstream out;
    write_diagram(out, d);
    return out.str();
}

}  // namespace zxfloq
