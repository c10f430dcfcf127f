#include "zxfloq/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace zxfloq {

namespace {

constexpr int kFirstInterior = 100;

// Boundary vertices get ids 0..legs-1; `inputs` lists which of them are inputs.
ZXDiagram with_legs(int legs) {
    ZXDiagram d;
    for (int b = 0; b < legs; ++b) {
        d.add_vertex_with_id(b, VertexKind::B);
    }
    return d;
}

void finish(ZXDiagram& d, int legs, const std::vector<int>& inputs) {
    std::vector<int> outs;
    for (int b = 0; b < legs; ++b) {
        if (std::find(inputs.begin(), inputs.end(), b) == inputs.end()) {
            outs.push_back(b);
        }
    }
    d.set_inputs(inputs);
    d.set_outputs(outs);
}

int interior(ZXDiagram& d, int id, VertexKind k, Phase p = {}) {
    d.add_vertex_with_id(kFirstInterior + id, k, p);
    return kFirstInterior + id;
}

ZXDiagram single_spider(int legs, Phase p, const std::vector<int>& inputs) {
    ZXDiagram d = with_legs(legs);
    const int s = interior(d, 0, VertexKind::Z, p);
    for (int b = 0; b < legs; ++b) {
        d.add_edge(b, s);
    }
    finish(d, legs, inputs);
    return d;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) {
        v.push_back(i);
    }
    return v;
}

RewriteRule make_elim() {
    RewriteRule r;
    r.name = "r_elim";
    r.lhs = with_legs(2);
    r.lhs.add_edge(0, 1);
    finish(r.lhs, 2, {0});
    r.rhs = with_legs(2);
    const int s = interior(r.rhs, 0, VertexKind::Z);
    r.rhs.add_edge(0, s);
    r.rhs.add_edge(s, 1);
    finish(r.rhs, 2, {0});
    r.flow_paths = {{0, s, 1}};
    return r;
}

RewriteRule make_fuse(int m, Phase p) {
    if (m < 1) {
        throw RuleError("r_fuse needs at least one leg");
    }
    RewriteRule r;
    r.name = "r_fuse";
    r.n = m;
    r.lhs = single_spider(m, p, {0});
    r.rhs = with_legs(m);
    const int s = interior(r.rhs, 0, VertexKind::Z, p);
    for (int b = 0; b < m; ++b) {
        r.rhs.add_edge(b, s);
    }
    const int leaf = interior(r.rhs, 1, VertexKind::Z);
    r.rhs.add_edge(s, leaf);
    finish(r.rhs, m, {0});
    return r;
}

// Legs: 0 = p in, 1 = p out, 2 = q in, 3 = q out.
RewriteRule make_r4(Phase p) {
    RewriteRule r;
    r.name = "r_4";
    r.n = 4;
    r.lhs = single_spider(4, p, {0, 2});
    r.rhs = with_legs(4);
    const int a1 = interior(r.rhs, 0, VertexKind::Z, p);
    const int a2 = interior(r.rhs, 1, VertexKind::Z);
    const int b1 = interior(r.rhs, 2, VertexKind::Z);
    const int b2 = interior(r.rhs, 3, VertexKind::Z);
    r.rhs.add_edge(0, a1);
    r.rhs.add_edge(a1, a2);
    r.rhs.add_edge(a2, 1);
    r.rhs.add_edge(2, b1);
    r.rhs.add_edge(b1, b2);
    r.rhs.add_edge(b2, 3);
    r.rhs.add_edge(a1, b1);
    r.rhs.add_edge(a2, b2);
    finish(r.rhs, 4, {0, 2});
    r.flow_paths = {{0, a1, a2, 1}, {2, b1, b2, 3}};
    return r;
}

// Legs as r_4 plus 4 = the uncovered leg.
RewriteRule make_r5(Phase p) {
    RewriteRule r;
    r.name = "r_5";
    r.n = 5;
    r.lhs = single_spider(5, p, {0, 2});
    r.rhs = with_legs(5);
    const int a1 = interior(r.rhs, 0, VertexKind::Z, p);
    const int w = interior(r.rhs, 1, VertexKind::Z);
    const int a2 = interior(r.rhs, 2, VertexKind::Z);
    const int b1 = interior(r.rhs, 3, VertexKind::Z);
    const int b2 = interior(r.rhs, 4, VertexKind::Z);
    r.rhs.add_edge(0, a1);
    r.rhs.add_edge(a1, w);
    r.rhs.add_edge(w, a2);
    r.rhs.add_edge(a2, 1);
    r.rhs.add_edge(2, b1);
    r.rhs.add_edge(b1, b2);
    r.rhs.add_edge(b2, 3);
    r.rhs.add_edge(a1, b1);
    r.rhs.add_edge(a2, b2);
    r.rhs.add_edge(w, 4);
    finish(r.rhs, 5, {0, 2});
    r.flow_paths = {{0, a1, w, a2, 1}, {2, b1, b2, 3}};
    return r;
}

// Centres A, B and n/2 four-legged gadgets; gadget j carries legs 2j, 2j+1.
// With `extra`, B also carries leg n (the r_n variant). Legs 0..n/2-1 are
// path inputs and n/2..n-1 path outputs, paired so that path 2j enters at
// leg 2j and leaves at leg n/2+2j.
RewriteRule make_recursive(int n, bool extra, Phase p) {
    if (n < 4 || n % 2 != 0) {
        throw RuleError("recursive rewrite needs an even leg count n >= 4");
    }
    RewriteRule r;
    r.name = extra ? "r_n" : "r_n+";
    r.n = n;
    const int legs = n + (extra ? 1 : 0);
    const auto ins = range(0, n / 2);
    r.lhs = single_spider(legs, p, ins);
    r.rhs = with_legs(legs);
    const int a = interior(r.rhs, 0, VertexKind::Z, p);
    const int b = interior(r.rhs, 1, VertexKind::Z);
    const int half = n / 2;
    std::vector<int> g(static_cast<std::size_t>(half));
    for (int j = 0; j < half; ++j) {
        g[static_cast<std::size_t>(j)] = interior(r.rhs, 2 + j, VertexKind::Z);
        r.rhs.add_edge(2 * j, g[static_cast<std::size_t>(j)]);
        r.rhs.add_edge(2 * j + 1, g[static_cast<std::size_t>(j)]);
        r.rhs.add_edge(g[static_cast<std::size_t>(j)], a);
        r.rhs.add_edge(g[static_cast<std::size_t>(j)], b);
    }
    if (extra) {
        r.rhs.add_edge(b, n);
    }
    finish(r.rhs, legs, ins);
    if (n % 4 == 0) {
        const int m = n / 2;
        for (int j = 0; j < m / 2; ++j) {
            const int gin = g[static_cast<std::size_t>(j)];
            const int gout = g[static_cast<std::size_t>(m / 2 + j)];
            r.flow_paths.push_back({2 * j, gin, a, gout, half + 2 * j});
            r.flow_paths.push_back({2 * j + 1, gin, b, gout, half + 2 * j + 1});
        }
    }
    return r;
}

// Measure-then-prepare versus two consecutive single-qubit Z measurements.
RewriteRule make_pauli1() {
    RewriteRule r;
    r.name = "r_pauli1";
    r.lhs = with_legs(2);
    const int m = interior(r.lhs, 0, VertexKind::X);
    const int pr = interior(r.lhs, 1, VertexKind::X);
    r.lhs.add_edge(0, m);
    r.lhs.add_edge(pr, 1);
    finish(r.lhs, 2, {0});
    r.rhs = with_legs(2);
    const int s1 = interior(r.rhs, 0, VertexKind::Z);
    const int s2 = interior(r.rhs, 1, VertexKind::Z);
    const int m1 = interior(r.rhs, 2, VertexKind::X);
    const int m2 = interior(r.rhs, 3, VertexKind::X);
    r.rhs.add_edge(0, s1);
    r.rhs.add_edge(s1, s2);
    r.rhs.add_edge(s2, 1);
    r.rhs.add_edge(s1, m1);
    r.rhs.add_edge(s2, m2);
    finish(r.rhs, 2, {0});
    r.flow_paths = {{0, s1, s2, 1}};
    return r;
}

// Weight-4 Z measurement versus one ancilla with four CNOTs.
RewriteRule make_naive() {
    RewriteRule r;
    r.name = "r_naive";
    r.n = 4;
    const auto ins = range(0, 4);
    r.lhs = with_legs(8);
    const int c = interior(r.lhs, 10, VertexKind::X);
    for (int k = 0; k < 4; ++k) {
        const int s = interior(r.lhs, k, VertexKind::Z);
        r.lhs.add_edge(k, s);
        r.lhs.add_edge(s, 4 + k);
        r.lhs.add_edge(s, c);
    }
    finish(r.lhs, 8, ins);
    r.rhs = with_legs(8);
    std::vector<int> s(4);
    for (int k = 0; k < 4; ++k) {
        s[static_cast<std::size_t>(k)] = interior(r.rhs, k, VertexKind::Z);
        r.rhs.add_edge(k, s[static_cast<std::size_t>(k)]);
        r.rhs.add_edge(s[static_cast<std::size_t>(k)], 4 + k);
    }
    int prev = interior(r.rhs, 10, VertexKind::X);
    for (int k = 0; k < 4; ++k) {
        const int x = interior(r.rhs, 11 + k, VertexKind::X);
        r.rhs.add_edge(prev, x);
        r.rhs.add_edge(x, s[static_cast<std::size_t>(k)]);
        prev = x;
    }
    r.rhs.add_edge(prev, interior(r.rhs, 15, VertexKind::X));
    finish(r.rhs, 8, ins);
    return r;
}

// Canonical fingerprint of a map up to scalar.
struct MapKey {
    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
    bool operator==(const MapKey&) const = default;
};

struct MapKeyHash {
    std::size_t operator()(const MapKey& k) const { return static_cast<std::size_t>(k.h1 ^ (k.h2 * 0x9e3779b97f4a7c15ULL)); }
};

MapKey fingerprint(const LinearMap& m) {
    const double top = m.max_abs();
    cplx pivot = 1;
    bool found = false;
    for (Eigen::Index j = 0; j < m.entries.cols() && !found; ++j) {
        for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
            if (std::abs(m.entries(i, j)) >= top * (1 - 1e-9)) {
                pivot = m.entries(i, j);
                found = true;
                break;
            }
        }
    }
    MapKey k{1469598103934665603ULL, 0x84222325cbf29ce4ULL};
    auto mix = [&](std::int64_t v) {
        const auto u = static_cast<std::uint64_t>(v);
        k.h1 = (k.h1 ^ u) * 1099511628211ULL;
        k.h2 = (k.h2 + u + 0x9e3779b97f4a7c15ULL + (k.h2 << 6) + (k.h2 >> 2)) * 0xff51afd7ed558ccdULL;
    };
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
            const cplx v = m.entries(i, j) / pivot;
            mix(std::llround(v.real() * 1e6));
            mix(std::llround(v.imag() * 1e6));
        }
    }
    return k;
}

}  // namespace

std::vector<int> RewriteRule::boundary() const {
    std::vector<int> b;
    for (const auto& [id, v] : lhs.vertices()) {
        if (v.kind == VertexKind::B) {
            b.push_back(id);
        }
    }
    return b;
}

RewriteRule rule(const std::string& name, int n, VertexKind colour, Phase phase) {
    if (!is_spider(colour)) {
        throw RuleError("rule colour must be Z or X");
    }
    RewriteRule r;
    const bool phased = phase.quarter_turns() != 0;
    if (name == "r_elim" || name == "r_pauli1" || name == "r_naive") {
        if (phased) {
            throw RuleError(name + " has no phase parameter");
        }
        r = name == "r_elim" ? make_elim() : name == "r_pauli1" ? make_pauli1() : make_naive();
    } else if (name == "r_fuse") {
        r = make_fuse(n == 0 ? 3 : n, phase);
    } else if (name == "r_4") {
        r = make_r4(phase);
    } else if (name == "r_5") {
        r = make_r5(phase);
    } else if (name == "r_n+") {
        r = make_recursive(n, false, phase);
    } else if (name == "r_n") {
        r = make_recursive(n, true, phase);
    } else {
        throw RuleError("unknown rule '" + name + "'");
    }
    return colour == VertexKind::X ? colour_swapped(r) : r;
}

RewriteRule inverse(const RewriteRule& r) {
    RewriteRule out = r;
    out.name = r.name + "^-1";
    std::swap(out.lhs, out.rhs);
    out.flow_paths.clear();
    return out;
}

RewriteRule colour_swapped(const RewriteRule& r) {
    RewriteRule out = r;
    out.lhs = colour_swapped(r.lhs);
    out.rhs = colour_swapped(r.rhs);
    return out;
}

std::vector<CatalogueEntry> catalogue() {
    return {{"r_elim", 0}, {"r_fuse", 3}, {"r_4", 4}, {"r_5", 5}, {"r_n+", 4}, {"r_n+", 8},
            {"r_n", 4},    {"r_n", 8},    {"r_pauli1", 0}, {"r_naive", 4}};
}

std::vector<Embedding> find_matches(const ZXDiagram& d, const RewriteRule& r) {
    const ZXDiagram& p = r.lhs;
    std::vector<Embedding> out;

    std::vector<int> pv;
    for (const auto& [id, v] : p.vertices()) {
        if (v.kind != VertexKind::B) {
            pv.push_back(id);
        }
    }
    if (pv.empty()) {
        // A bare wire pattern matches every edge once.
        if (p.num_edges() != 1) {
            throw RuleError("pattern without interior vertices must be a single wire");
        }
        const Edge& pe = p.edges().begin()->second;
        for (const auto& [eid, e] : d.edges()) {
            Embedding m;
            m.leg_map[pe.a] = {eid, e.a};
            m.leg_map[pe.b] = {eid, e.b};
            out.push_back(std::move(m));
        }
        return out;
    }

    // Visit pattern vertices so that each one after the first of its component
    // has an already placed neighbour.
    std::vector<int> order;
    std::map<int, int> parent;
    std::set<int> seen;
    for (int root : pv) {
        if (seen.count(root) != 0) {
            continue;
        }
        std::vector<int> queue{root};
        seen.insert(root);
        parent[root] = -1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const int u = queue[i];
            order.push_back(u);
            for (int w : p.neighbours(u)) {
                if (p.kind(w) != VertexKind::B && seen.insert(w).second) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }

    std::map<int, int> assign;
    std::set<int> used;
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;

    auto compatible = [&](int pu, int hu) {
        const Vertex& a = p.vertex(pu);
        const Vertex& b = d.vertex(hu);
        if (a.kind != b.kind || a.phase != b.phase || p.degree(pu) != d.degree(hu) || used.count(hu) != 0) {
            return false;
        }
        for (const auto& [pw, hw] : assign) {
            if (p.edges_between(pu, pw).size() != d.edges_between(hu, hw).size()) {
                return false;
            }
        }
        return true;
    };

    auto emit = [&]() {
        Embedding m;
        std::set<int> image;
        for (const auto& [pu, hu] : assign) {
            m.vertex_map[pu] = hu;
            image.insert(hu);
        }
        std::set<int> internal;
        for (const auto& [pu, hu] : assign) {
            std::vector<int> legs;
            for (int pe : p.incident(pu)) {
                const int other = p.edge(pe).other(pu);
                if (p.kind(other) == VertexKind::B) {
                    legs.push_back(other);
                }
            }
            std::sort(legs.begin(), legs.end());
            std::vector<int> outside;
            for (int he : d.incident(hu)) {
                const int other = d.edge(he).other(hu);
                if (image.count(other) != 0) {
                    internal.insert(he);
                } else {
                    outside.push_back(he);
                }
            }
            for (std::size_t i = 0; i < legs.size(); ++i) {
                m.leg_map[legs[i]] = {outside[i], d.edge(outside[i]).other(hu)};
            }
        }
        m.internal_edges.assign(internal.begin(), internal.end());
        std::vector<int> vimg(image.begin(), image.end());
        if (images.insert({vimg, m.internal_edges}).second) {
            out.push_back(std::move(m));
        }
    };

    std::function<void(std::size_t)> extend = [&](std::size_t i) {
        if (i == order.size()) {
            emit();
            return;
        }
        const int pu = order[i];
        std::vector<int> cands;
        if (parent[pu] < 0) {
            cands = d.vertex_ids();
        } else {
            cands = d.neighbours(assign.at(parent[pu]));
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        }
        for (int hu : cands) {
            if (!compatible(pu, hu)) {
                continue;
            }
            assign[pu] = hu;
            used.insert(hu);
            extend(i + 1);
            used.erase(hu);
            assign.erase(pu);
        }
    };
    extend(0);
    return out;
}

ZXDiagram apply(const ZXDiagram& d, const RewriteRule& r, const Embedding& occ) {
    for (const auto& [pu, hu] : occ.vertex_map) {
        if (!d.has_vertex(hu) || d.kind(hu) != r.lhs.kind(pu) || d.phase(hu) != r.lhs.phase(pu) ||
            d.degree(hu) != r.lhs.degree(pu)) {
            throw DiagramError("stale embedding at host vertex " + std::to_string(hu));
        }
    }
    for (const auto& [b, leg] : occ.leg_map) {
        if (!d.has_edge(leg.first) || !d.edge(leg.first).touches(leg.second)) {
            throw DiagramError("stale embedding at host edge " + std::to_string(leg.first));
        }
    }
    return substitute(d, occ, r.rhs);
}

bool verify_semantics(const RewriteRule& r, double tol) {
    return equal_up_to_scalar(interpret(r.lhs), interpret(r.rhs), tol);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Preserving: return "preserving";
        case Verdict::NonDecreasingOnly: return "non-decreasing-only";
        case Verdict::Refuted: return "refuted";
    }
    return "?";
}

DirectionReport check_non_decreasing(const ZXDiagram& from, const ZXDiagram& to, const PreservationOptions& opts) {
    const std::vector<int> internal = to.internal_edges();
    if (opts.max_error_weight <= 0 && internal.size() > opts.max_internal_edges) {
        throw BudgetExceeded("rewrite side has " + std::to_string(internal.size()) +
                             " internal edges, enumeration cap is " + std::to_string(opts.max_internal_edges));
    }
    const ErrorOracle target(to, {}, opts.tol);
    const Contraction source(from);
    const std::vector<int> source_edges = from.edge_ids();

    // Least weight of a source error for each map, filled one weight at a time.
    std::unordered_map<MapKey, int, MapKeyHash> cheapest;
    int filled = -1;
    auto fill_to = [&](int w) {
        while (filled < w && filled < static_cast<int>(source_edges.size())) {
            ++filled;
            if (filled == 0) {
                cheapest.emplace(fingerprint(source.run()), 0);
                continue;
            }
            for_each_error(source_edges, filled, [&](const ErrorSet& e) {
                const LinearMap m = source.run(e.flips());
                if (!is_zero_map(m, opts.tol)) {
                    cheapest.emplace(fingerprint(m), filled);
                }
                return true;
            });
        }
    };

    DirectionReport rep;
    int n = static_cast<int>(internal.size());
    if (opts.max_error_weight > 0) {
        n = std::min(n, opts.max_error_weight);
    }
    for (int w = 1; w <= n && rep.ok; ++w) {
        for_each_error(internal, w, [&](const ErrorSet& e) {
            ++rep.errors_checked;
            const LinearMap m = target.map_with(e);
            if (is_zero_map(m, opts.tol)) {
                ++rep.detectable;
                return true;
            }
            fill_to(w);
            const auto it = cheapest.find(fingerprint(m));
            if (it != cheapest.end() && it->second <= w) {
                return true;
            }
            rep.ok = false;
            rep.witness = e;
            // Look a little further for the cheapest equivalent, for the report.
            fill_to(std::min(w + 3, static_cast<int>(source_edges.size())));
            const auto again = cheapest.find(fingerprint(m));
            if (again != cheapest.end()) {
                rep.cheapest_equivalent = again->second;
            }
            return false;
        });
    }
    return rep;
}

PreservationReport verify_distance_preserving(const RewriteRule& r, const PreservationOptions& opts) {
    PreservationReport rep;
    rep.forward = check_non_decreasing(r.lhs, r.rhs, opts);
    if (!rep.forward.ok) {
        rep.verdict = Verdict::Refuted;
        return rep;
    }
    rep.backward = check_non_decreasing(r.rhs, r.lhs, opts);
    rep.backward_checked = true;
    rep.verdict = rep.backward.ok ? Verdict::Preserving : Verdict::NonDecreasingOnly;
    return rep;
}

std::string format_report(const RewriteRule& r, const PreservationReport& rep) {
    std::ostringstream out;
    out << "rule " << r.name;
    if (r.n != 0) {
        out << " n=" << r.n;
    }
    out << "\nlhs_internal_edges " << r.lhs.internal_edges().size() << "\nrhs_internal_edges "
        << r.rhs.internal_edges().size() << "\nverdict " << verdict_name(rep.verdict) << '\n';
    out << "forward_checked " << rep.forward.errors_checked << " detectable " << rep.forward.detectable << '\n';
    if (rep.backward_checked) {
        out << "backward_checked " << rep.backward.errors_checked << " detectable " << rep.backward.detectable
            << '\n';
    }
    const DirectionReport& bad = rep.forward.ok ? rep.backward : rep.forward;
    if (!bad.ok) {
        const ZXDiagram& side = rep.forward.ok ? r.lhs : r.rhs;
        out << "witness_weight " << bad.witness.weight() << '\n';
        out << format_error(side, bad.witness);
        if (bad.cheapest_equivalent) {
            out << "cheapest_equivalent_weight " << *bad.cheapest_equivalent << '\n';
        } else {
            out << "cheapest_equivalent_weight none\n";
        }
    }
    return out.str();
}

}  // namespace zxfloq
