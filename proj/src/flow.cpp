#include "zxfloq/flow.hpp"

#include "zxfloq/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

namespace zxfloq {

namespace {

constexpr int kRuleSpider = 100;  // id of the single LHS spider in the degree rules

std::string vstr(int v) { return std::to_string(v); }

// For each vertex y, the vertices z with a path step z -> y.
std::map<int, std::set<int>> entering(const std::vector<FlowPath>& paths) {
    std::map<int, std::set<int>> in;
    for (const auto& p : paths) {
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            in[p.vertices[i + 1]].insert(p.vertices[i]);
        }
    }
    return in;
}

class Reachability {
public:
    Reachability(const ZXDiagram& d, const std::set<std::pair<int, int>>& order) {
        std::map<int, std::vector<int>> succ;
        for (const auto& [x, y] : order) {
            succ[x].push_back(y);
        }
        for (int v : d.vertex_ids()) {
            std::set<int>& seen = reach_[v];
            std::vector<int> stack{v};
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int w : succ[u]) {
                    if (seen.insert(w).second) {
                        stack.push_back(w);
                    }
                }
            }
        }
    }
    [[nodiscard]] bool leq(int x, int y) const {
        if (x == y) {
            return true;
        }
        const auto it = reach_.find(x);
        return it != reach_.end() && it->second.count(y) != 0;
    }
    [[nodiscard]] bool on_cycle(int x) const {
        const auto it = reach_.find(x);
        return it != reach_.end() && it->second.count(x) != 0;
    }

private:
    std::map<int, std::set<int>> reach_;
};

bool path_well_formed(const ZXDiagram& d, const FlowPath& p, std::string& why) {
    if (p.vertices.size() < 2 || p.edges.size() + 1 != p.vertices.size()) {
        why = "path needs at least one edge and one more vertex than edges";
        return false;
    }
    for (int v : p.vertices) {
        if (!d.has_vertex(v)) {
            why = "path visits missing vertex " + vstr(v);
            return false;
        }
    }
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const int e = p.edges[i];
        if (!d.has_edge(e)) {
            why = "path uses missing edge " + vstr(e);
            return false;
        }
        const Edge& ed = d.edge(e);
        const int a = p.vertices[i];
        const int b = p.vertices[i + 1];
        if (!((ed.a == a && ed.b == b) || (ed.a == b && ed.b == a))) {
            why = "edge " + vstr(e) + " does not join " + vstr(a) + " and " + vstr(b);
            return false;
        }
    }
    return true;
}

void check(const FlowReport& r, bool want_well_covered, const std::string& where) {
    if (want_well_covered ? r.well_covered() : r.is_flow()) {
        return;
    }
    throw FlowError(where + ": " + (r.violations.empty() ? std::string("invalid flow") : r.violations.front()));
}

int add_leaf(ZXDiagram& d, int s, int& edge) {
    const int leaf = d.add_vertex(d.kind(s));
    edge = d.add_edge(leaf, s);
    return leaf;
}

// One pass of a path through spider s: path index and position of s.
struct Pass {
    std::size_t path;
    std::size_t pos;
};

void replace_spider(ZXDiagram& d, std::vector<FlowPath>& paths, int s, const std::vector<Pass>& passes,
                    const std::vector<int>& uncovered, const RewriteRule& r) {
    if (r.flow_paths.size() != passes.size()) {
        throw FlowError("rule " + r.name + " has no path template for " + vstr(static_cast<int>(passes.size())) +
                        " paths");
    }
    Embedding occ;
    occ.vertex_map[kRuleSpider] = s;
    std::set<int> used_legs;
    for (std::size_t k = 0; k < passes.size(); ++k) {
        const FlowPath& p = paths[passes[k].path];
        const std::size_t t = passes[k].pos;
        const auto& tmpl = r.flow_paths[k];
        occ.leg_map[tmpl.front()] = {p.edges[t - 1], p.vertices[t - 1]};
        occ.leg_map[tmpl.back()] = {p.edges[t], p.vertices[t + 1]};
        used_legs.insert(tmpl.front());
        used_legs.insert(tmpl.back());
    }
    std::size_t next_uncovered = 0;
    for (int b : r.boundary()) {
        if (used_legs.count(b) != 0) {
            continue;
        }
        if (next_uncovered >= uncovered.size()) {
            throw FlowError("rule " + r.name + " expects more uncovered legs at spider " + vstr(s));
        }
        const int e = uncovered[next_uncovered++];
        occ.leg_map[b] = {e, d.edge(e).other(s)};
    }
    std::map<int, int> placed;
    std::map<int, int> placed_edges;
    d = substitute(d, occ, r.rhs, placed, &placed_edges);

    auto host_vertex = [&](int rv) { return placed.at(rv); };
    for (std::size_t k = 0; k < passes.size(); ++k) {
        FlowPath& p = paths[passes[k].path];
        const std::size_t t = passes[k].pos;
        const auto& tmpl = r.flow_paths[k];
        FlowPath q;
        q.vertices.assign(p.vertices.begin(), p.vertices.begin() + static_cast<long>(t));
        q.edges.assign(p.edges.begin(), p.edges.begin() + static_cast<long>(t) - 1);
        for (std::size_t i = 0; i + 1 < tmpl.size(); ++i) {
            const auto between = r.rhs.edges_between(tmpl[i], tmpl[i + 1]);
            q.edges.push_back(placed_edges.at(between.front()));
            if (i + 2 < tmpl.size()) {
                q.vertices.push_back(host_vertex(tmpl[i + 1]));
            }
        }
        q.vertices.insert(q.vertices.end(), p.vertices.begin() + static_cast<long>(t) + 1, p.vertices.end());
        q.edges.insert(q.edges.end(), p.edges.begin() + static_cast<long>(t) + 1, p.edges.end());
        p = std::move(q);
    }
}

std::vector<Op> phase_gates(int q, VertexKind kind, Phase p) {
    const int k = p.quarter_turns();
    std::vector<Op> ops;
    if (k == 0) {
        return ops;
    }
    const char* z = k == 1 ? "S" : k == 2 ? "Z" : "SDG";
    if (kind == VertexKind::Z) {
        ops.push_back(make_op(OpKind::C, {q}, z));
    } else if (k == 2) {
        ops.push_back(make_op(OpKind::C, {q}, "X"));
    } else {
        ops.push_back(make_op(OpKind::C, {q}, "H"));
        ops.push_back(make_op(OpKind::C, {q}, z));
        ops.push_back(make_op(OpKind::C, {q}, "H"));
    }
    return ops;
}

int pauli_flip(Phase p, int v) {
    if (!p.is_pauli()) {
        throw FlowError("degree-1 spider " + vstr(v) + " has a non-Pauli phase");
    }
    return p.quarter_turns() / 2;
}

}  // namespace

FlowPath make_path(const ZXDiagram& d, const std::vector<int>& vertices, std::set<int>& used_edges) {
    FlowPath p;
    p.vertices = vertices;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        int pick = -1;
        for (int e : d.edges_between(vertices[i], vertices[i + 1])) {
            if (used_edges.count(e) == 0 && (pick < 0 || e < pick)) {
                pick = e;
            }
        }
        if (pick < 0) {
            throw FlowError("no free edge between " + vstr(vertices[i]) + " and " + vstr(vertices[i + 1]));
        }
        used_edges.insert(pick);
        p.edges.push_back(pick);
    }
    return p;
}

std::set<std::pair<int, int>> derive_order(const ZXDiagram& d, const std::vector<FlowPath>& paths) {
    std::set<std::pair<int, int>> order;
    const auto in = entering(paths);
    for (const auto& p : paths) {
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            const int x = p.vertices[i];
            const int y = p.vertices[i + 1];
            if (x != y) {
                order.insert({x, y});
            }
            const auto& into = in.at(y);
            for (int z : d.neighbours(y)) {
                if (into.count(z) == 0 && z != x) {
                    order.insert({x, z});
                }
            }
        }
    }
    return order;
}

MCFlow make_flow(const ZXDiagram& d, const std::vector<std::vector<int>>& chains) {
    MCFlow f;
    std::set<int> used;
    for (const auto& c : chains) {
        f.paths.push_back(make_path(d, c, used));
    }
    f.order = derive_order(d, f.paths);
    return f;
}

std::pair<ZXDiagram, MCFlow> circuit_with_flow(const Circuit& c) {
    std::vector<std::vector<int>> wires;
    ZXDiagram d = circuit_to_diagram(c, &wires);
    MCFlow f = make_flow(d, wires);
    return {std::move(d), std::move(f)};
}

FlowReport verify_flow(const ZXDiagram& d, const MCFlow& flow) {
    FlowReport r;
    for (const auto& p : flow.paths) {
        std::string why;
        if (!path_well_formed(d, p, why)) {
            r.paths = false;
            r.violations.push_back("paths: " + why);
        }
    }
    if (!r.paths) {
        return r;
    }
    const Reachability reach(d, flow.order);
    for (int v : d.vertex_ids()) {
        if (reach.on_cycle(v)) {
            r.o1 = false;
            r.violations.push_back("O1: order is cyclic through vertex " + vstr(v));
            break;
        }
    }
    const auto in = entering(flow.paths);
    for (const auto& p : flow.paths) {
        for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            const int x = p.vertices[i];
            const int y = p.vertices[i + 1];
            if (!reach.leq(x, y)) {
                r.o1 = false;
                r.violations.push_back("O1: step " + vstr(x) + "->" + vstr(y) + " not ordered");
            }
            for (int z : d.neighbours(y)) {
                if (in.at(y).count(z) == 0 && !reach.leq(x, z)) {
                    r.o2 = false;
                    r.violations.push_back("O2: step " + vstr(x) + "->" + vstr(y) + " neighbour " + vstr(z));
                }
            }
        }
    }
    std::map<int, int> cover;
    for (const auto& p : flow.paths) {
        for (int e : p.edges) {
            ++cover[e];
        }
    }
    for (const auto& [e, n] : cover) {
        if (n > 1) {
            r.p3 = false;
            r.violations.push_back("P3: edge " + vstr(e) + " covered " + vstr(n) + " times");
        }
    }
    for (const auto& [v, vert] : d.vertices()) {
        const auto& inc = d.incident(v);
        if (vert.kind == VertexKind::B || vert.kind == VertexKind::H) {
            const bool full = std::any_of(flow.paths.begin(), flow.paths.end(), [&](const FlowPath& p) {
                return std::all_of(inc.begin(), inc.end(), [&](int e) {
                    return std::find(p.edges.begin(), p.edges.end(), e) != p.edges.end();
                });
            });
            if (!full) {
                r.p1 = false;
                r.violations.push_back("P1: vertex " + vstr(v) + " not fully covered by one path");
            }
        } else {
            const auto uncovered = std::count_if(inc.begin(), inc.end(), [&](int e) { return cover.count(e) == 0; });
            if (uncovered > 1) {
                r.p2 = false;
                r.violations.push_back("P2: spider " + vstr(v) + " has " + std::to_string(uncovered) +
                                       " uncovered edges");
            }
        }
    }
    for (const auto& p : flow.paths) {
        for (int end : {p.front(), p.back()}) {
            if (is_spider(d.kind(end)) && d.degree(end) > 1) {
                r.p4 = false;
                r.violations.push_back("P4: path ends at spider " + vstr(end) + " of degree " +
                                       std::to_string(d.degree(end)));
            }
        }
    }
    return r;
}

std::string format_flow_report(const FlowReport& r) {
    std::ostringstream out;
    auto line = [&](const char* name, bool ok) { out << name << ' ' << (ok ? "pass" : "fail") << '\n'; };
    line("paths", r.paths);
    line("O1", r.o1);
    line("O2", r.o2);
    line("P1", r.p1);
    line("P2", r.p2);
    line("P3", r.p3);
    line("P4", r.p4);
    for (const auto& v : r.violations) {
        out << "  " << v << '\n';
    }
    return out.str();
}

FlowDiagram make_well_covered(const ZXDiagram& d, const MCFlow& flow) {
    check(verify_flow(d, flow), false, "make_well_covered");
    FlowDiagram out{d, flow, {}};
    ZXDiagram& g = out.diagram;
    for (auto& p : out.flow.paths) {
        if (is_spider(g.kind(p.front())) && g.degree(p.front()) > 1) {
            int e = 0;
            const int leaf = add_leaf(g, p.front(), e);
            out.log.push_back("r_fuse: path start moved from spider " + vstr(p.front()) + " to leaf " + vstr(leaf));
            p.vertices.insert(p.vertices.begin(), leaf);
            p.edges.insert(p.edges.begin(), e);
        }
        if (is_spider(g.kind(p.back())) && g.degree(p.back()) > 1) {
            int e = 0;
            const int leaf = add_leaf(g, p.back(), e);
            out.log.push_back("r_fuse: path end moved from spider " + vstr(p.back()) + " to leaf " + vstr(leaf));
            p.vertices.push_back(leaf);
            p.edges.push_back(e);
        }
    }
    out.flow.order = derive_order(g, out.flow.paths);
    check(verify_flow(g, out.flow), true, "make_well_covered result");
    return out;
}

FlowDiagram reduce_degree(const ZXDiagram& d, const MCFlow& flow) {
    check(verify_flow(d, flow), true, "reduce_degree");
    FlowDiagram out{d, flow, {}};
    ZXDiagram& g = out.diagram;
    auto& paths = out.flow.paths;
    while (true) {
        int s = -1;
        for (const auto& [v, vert] : g.vertices()) {
            if (is_spider(vert.kind) && g.degree(v) > 3) {
                s = v;
                break;
            }
        }
        if (s < 0) {
            break;
        }
        std::vector<Pass> passes;
        std::set<int> covered;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const auto& vs = paths[i].vertices;
            for (std::size_t t = 0; t < vs.size(); ++t) {
                if (vs[t] != s) {
                    continue;
                }
                if (t == 0 || t + 1 == vs.size()) {
                    throw FlowError("path ends at spider " + vstr(s) + " of degree > 1");
                }
                if (!passes.empty() && passes.back().path == i) {
                    throw FlowError("path passes spider " + vstr(s) + " twice");
                }
                passes.push_back({i, t});
                covered.insert(paths[i].edges[t - 1]);
                covered.insert(paths[i].edges[t]);
            }
        }
        std::vector<int> uncovered;
        for (int e : g.incident(s)) {
            if (covered.count(e) == 0) {
                uncovered.push_back(e);
            }
        }
        const int deg = static_cast<int>(g.degree(s));
        const VertexKind colour = g.kind(s);
        const Phase phase = g.phase(s);
        const int even = deg - deg % 2;
        if (even % 4 == 2) {
            // Two r_fuse leaves joined by a new path through s.
            FlowPath p;
            int e1 = 0;
            int e2 = 0;
            const int l1 = add_leaf(g, s, e1);
            const int l2 = add_leaf(g, s, e2);
            p.vertices = {l1, s, l2};
            p.edges = {e1, e2};
            paths.push_back(std::move(p));
            out.log.push_back("r_fuse x2: padded spider " + vstr(s) + " of degree " + vstr(deg) + " with a new path");
        } else {
            const RewriteRule r = deg == 4   ? rule("r_4", 0, colour, phase)
                                  : deg == 5 ? rule("r_5", 0, colour, phase)
                                  : deg % 2 == 0 ? rule("r_n+", deg, colour, phase)
                                                 : rule("r_n", deg - 1, colour, phase);
            replace_spider(g, paths, s, passes, uncovered, r);
            out.log.push_back(r.name + (r.name == "r_n" || r.name == "r_n+" ? " n=" + vstr(r.n) : "") +
                              ": spider " + vstr(s) + " of degree " + vstr(deg));
        }
        out.flow.order = derive_order(g, paths);
        check(verify_flow(g, out.flow), true, "flow surgery at spider " + vstr(s));
    }
    return out;
}

int max_spider_degree(const ZXDiagram& d) {
    int m = 0;
    for (const auto& [v, vert] : d.vertices()) {
        if (is_spider(vert.kind)) {
            m = std::max(m, static_cast<int>(d.degree(v)));
        }
    }
    return m;
}

Circuit extract_circuit(const ZXDiagram& d, const MCFlow& flow) {
    check(verify_flow(d, flow), true, "extract_circuit");
    if (max_spider_degree(d) > 3) {
        throw FlowError("extract_circuit needs spider degree at most 3");
    }
    const auto& paths = flow.paths;
    std::set<int> covered;
    for (const auto& p : paths) {
        covered.insert(p.edges.begin(), p.edges.end());
    }

    // Events: path vertices other than boundaries; a degree-3 spider joined by
    // its uncovered edge to another path's spider shares that spider's event.
    std::map<int, std::pair<std::size_t, std::size_t>> where;  // vertex -> (path, position)
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t t = 0; t < paths[i].vertices.size(); ++t) {
            const int v = paths[i].vertices[t];
            if (d.kind(v) == VertexKind::B) {
                continue;
            }
            if (!where.emplace(v, std::make_pair(i, t)).second) {
                throw FlowError("vertex " + vstr(v) + " lies on more than one path");
            }
        }
    }
    std::map<int, int> partner;  // degree-3 spider -> vertex across its uncovered edge
    for (const auto& [v, pos] : where) {
        if (d.degree(v) != 3) {
            continue;
        }
        for (int e : d.incident(v)) {
            if (covered.count(e) == 0) {
                partner[v] = d.edge(e).other(v);
            }
        }
    }
    std::set<int> leaves;
    for (const auto& [v, q] : partner) {
        if (where.count(q) != 0) {
            if (d.degree(q) != 3 || partner.at(q) != v || where.at(q).first == where.at(v).first) {
                throw FlowError("uncovered edge " + vstr(v) + "-" + vstr(q) + " is not extractable");
            }
        } else if (d.degree(q) == 1 && is_spider(d.kind(q))) {
            leaves.insert(q);
        } else {
            throw FlowError("uncovered edge " + vstr(v) + "-" + vstr(q) + " is not extractable");
        }
    }
    for (const auto& [v, vert] : d.vertices()) {
        if (vert.kind == VertexKind::B || where.count(v) != 0 || leaves.count(v) != 0) {
            continue;
        }
        if (d.degree(v) == 0 && is_spider(vert.kind)) {
            if (vert.phase.quarter_turns() == 2) {
                throw FlowError("diagram contains a zero scalar at vertex " + vstr(v));
            }
            continue;
        }
        throw FlowError("vertex " + vstr(v) + " is not on any path");
    }

    auto event_of = [&](int v) {
        const auto it = partner.find(v);
        return it != partner.end() && where.count(it->second) != 0 ? std::min(v, it->second) : v;
    };
    std::map<int, std::set<int>> succ;
    std::map<int, int> indeg;
    for (const auto& [v, pos] : where) {
        indeg.emplace(event_of(v), 0);
    }
    for (const auto& p : paths) {
        int prev = -1;
        for (int v : p.vertices) {
            if (d.kind(v) == VertexKind::B) {
                continue;
            }
            const int ev = event_of(v);
            if (prev >= 0 && succ[prev].insert(ev).second) {
                ++indeg[ev];
            }
            prev = ev;
        }
    }
    // Preparations wait until nothing else is ready, so that qubits freed by
    // destructive measurements can be reused.
    auto starts_path = [&](int ev) {
        const auto it = partner.find(ev);
        const bool pair = it != partner.end() && where.count(it->second) != 0;
        return where.at(ev).second == 0 || (pair && where.at(it->second).second == 0);
    };
    using Key = std::pair<bool, int>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    auto push = [&](int ev) { ready.push({starts_path(ev), ev}); };
    for (const auto& [ev, n] : indeg) {
        if (n == 0) {
            push(ev);
        }
    }

    Circuit c;
    const int n_in = static_cast<int>(d.inputs().size());
    std::set<int> busy;
    std::vector<int> qubit(paths.size(), -1);
    int width = n_in;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const int front = paths[i].front();
        const int back = paths[i].back();
        if (std::find(d.outputs().begin(), d.outputs().end(), front) != d.outputs().end() ||
            std::find(d.inputs().begin(), d.inputs().end(), back) != d.inputs().end()) {
            throw FlowError("path " + vstr(static_cast<int>(i)) + " runs against the boundary direction");
        }
        const auto in = std::find(d.inputs().begin(), d.inputs().end(), front);
        if (in != d.inputs().end()) {
            qubit[i] = static_cast<int>(in - d.inputs().begin());
            busy.insert(qubit[i]);
        }
    }
    auto emit = [&](std::vector<Op> ops) { c.ops.insert(c.ops.end(), ops.begin(), ops.end()); };
    auto gate = [&](int q, const char* name) { c.add(OpKind::C, {q}, name); };

    std::size_t processed = 0;
    while (!ready.empty()) {
        const int ev = ready.top().second;
        ready.pop();
        ++processed;
        std::vector<int> members{ev};
        if (partner.count(ev) != 0 && where.count(partner.at(ev)) != 0) {
            members.push_back(partner.at(ev));
        }
        std::vector<int> freed;
        for (int v : members) {
            const auto [pi, t] = where.at(v);
            if (t == 0) {
                int q = 0;
                while (busy.count(q) != 0) {
                    ++q;
                }
                busy.insert(q);
                qubit[pi] = q;
                width = std::max(width, q + 1);
            }
        }
        if (members.size() == 2) {
            int a = members[0];
            int b = members[1];
            const VertexKind ka = d.kind(a);
            const VertexKind kb = d.kind(b);
            if (ka != kb && ka == VertexKind::X) {
                std::swap(a, b);
            }
            const int qa = qubit[where.at(a).first];
            const int qb = qubit[where.at(b).first];
            if (d.kind(a) == d.kind(b)) {
                c.add(d.kind(a) == VertexKind::Z ? OpKind::M2Z : OpKind::M2X, {qa, qb});
            } else {
                c.add(OpKind::CX, {qa, qb});
            }
            emit(phase_gates(qa, d.kind(a), d.phase(a)));
            emit(phase_gates(qb, d.kind(b), d.phase(b)));
        } else {
            const int v = ev;
            const auto [pi, t] = where.at(v);
            const int q = qubit[pi];
            const VertexKind k = d.kind(v);
            const std::size_t deg = d.degree(v);
            if (k == VertexKind::H) {
                gate(q, "H");
            } else if (deg == 1 && t == 0) {
                c.add(k == VertexKind::X ? OpKind::PZ : OpKind::PX, {q});
                if (pauli_flip(d.phase(v), v) != 0) {
                    gate(q, k == VertexKind::X ? "X" : "Z");
                }
            } else if (deg == 1) {
                if (pauli_flip(d.phase(v), v) != 0) {
                    gate(q, k == VertexKind::X ? "X" : "Z");
                }
                c.add(k == VertexKind::X ? OpKind::DZ : OpKind::DX, {q});
                freed.push_back(q);
            } else if (deg == 2) {
                emit(phase_gates(q, k, d.phase(v)));
            } else {
                const int leaf = partner.at(v);
                if (d.kind(leaf) == k) {
                    emit(phase_gates(q, k, d.phase(v) + d.phase(leaf)));
                } else {
                    const bool flip = pauli_flip(d.phase(leaf), leaf) != 0;
                    const char* conj = k == VertexKind::Z ? "X" : "Z";
                    if (flip) {
                        gate(q, conj);
                    }
                    c.add(k == VertexKind::Z ? OpKind::M1Z : OpKind::M1X, {q});
                    if (flip) {
                        gate(q, conj);
                    }
                    emit(phase_gates(q, k, d.phase(v)));
                }
            }
        }
        for (int q : freed) {
            busy.erase(q);
        }
        for (int nx : succ[ev]) {
            if (--indeg[nx] == 0) {
                push(nx);
            }
        }
    }
    if (processed != indeg.size()) {
        throw FlowError("flow does not induce a causal order");
    }

    // Route each output to the live qubit of its rank.
    std::map<int, int> holder;  // qubit -> output index
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto out = std::find(d.outputs().begin(), d.outputs().end(), paths[i].back());
        if (out != d.outputs().end()) {
            holder[qubit[i]] = static_cast<int>(out - d.outputs().begin());
        }
    }
    const std::vector<int> live(busy.begin(), busy.end());
    if (live.size() != d.outputs().size() || holder.size() != live.size()) {
        throw FlowError("live qubits do not match the outputs");
    }
    for (std::size_t j = 0; j < live.size(); ++j) {
        const int target = live[j];
        int cur = -1;
        for (const auto& [q, o] : holder) {
            if (o == static_cast<int>(j)) {
                cur = q;
            }
        }
        if (cur != target) {
            c.add(OpKind::SWAP, {cur, target});
            std::swap(holder[cur], holder[target]);
        }
    }
    c.qubits = width;
    return c;
}

int f_overhead(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("f_overhead needs an even n >= 4");
    }
    if (n == 4) {
        return 0;
    }
    return n % 4 == 0 ? f_overhead(n / 2) : 1 + f_overhead(n + 2);
}

long long g_overhead(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("g_overhead needs an even n >= 4");
    }
    if (n == 4) {
        return 2;
    }
    return n % 4 == 0 ? n + 2 * g_overhead(n / 2) : g_overhead(n + 2);
}

}  // namespace zxfloq
