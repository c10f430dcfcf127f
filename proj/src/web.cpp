#include "zxfloq/web.hpp"

#include <sstream>

namespace zxfloq {

namespace {

std::map<int, std::size_t> edge_index(const ZXDiagram& d) {
    std::map<int, std::size_t> idx;
    std::size_t i = 0;
    for (const auto& [id, e] : d.edges()) {
        idx[id] = i++;
    }
    return idx;
}

char letter_of(bool z, bool x) {
    if (z && x) {
        return 'Y';
    }
    return z ? 'Z' : 'X';
}

// Null space of the web system with some edge variables pinned to zero.
std::vector<BitVec> constrained_space(const ZXDiagram& d, BitMatrix sys, const std::vector<int>& zero_edges) {
    const auto idx = edge_index(d);
    for (int e : zero_edges) {
        for (std::size_t b = 0; b < 2; ++b) {
            BitVec r(sys.cols);
            r.set(2 * idx.at(e) + b);
            sys.add_row(std::move(r));
        }
    }
    return nullspace(std::move(sys));
}

std::vector<int> side_edges(const ZXDiagram& d, const std::vector<int>& boundary) {
    std::vector<int> out;
    for (int b : boundary) {
        out.push_back(d.boundary_edge(b));
    }
    return out;
}

std::vector<PauliWeb> to_webs(const ZXDiagram& d, const std::vector<BitVec>& vs) {
    std::vector<PauliWeb> out;
    out.reserve(vs.size());
    for (const auto& v : vs) {
        out.push_back(web_from_bits(d, v));
    }
    return out;
}

}  // namespace

bool PauliWeb::z(int e) const {
    const auto it = highlights.find(e);
    return it != highlights.end() && (it->second == 'Z' || it->second == 'Y');
}

bool PauliWeb::x(int e) const {
    const auto it = highlights.find(e);
    return it != highlights.end() && (it->second == 'X' || it->second == 'Y');
}

PauliWeb operator^(const PauliWeb& a, const PauliWeb& b) {
    PauliWeb out = a;
    for (const auto& [e, c] : b.highlights) {
        const bool z = a.z(e) != (c == 'Z' || c == 'Y');
        const bool x = a.x(e) != (c == 'X' || c == 'Y');
        if (z || x) {
            out.highlights[e] = letter_of(z, x);
        } else {
            out.highlights.erase(e);
        }
    }
    return out;
}

const char* web_class_name(WebClass c) {
    switch (c) {
        case WebClass::Detecting: return "detecting";
        case WebClass::Stabilising: return "stabilising";
        case WebClass::CoStabilising: return "co-stabilising";
        case WebClass::Logical: return "logical";
        case WebClass::MixedTrivial: return "mixed-trivial";
    }
    return "?";
}

BitMatrix web_system(const ZXDiagram& d) {
    const auto idx = edge_index(d);
    const std::size_t cols = 2 * idx.size();
    BitMatrix m(cols);
    auto zb = [&](int e) { return 2 * idx.at(e); };
    auto xb = [&](int e) { return 2 * idx.at(e) + 1; };
    for (const auto& [id, v] : d.vertices()) {
        const auto& inc = d.incident(id);
        if (inc.empty() || v.kind == VertexKind::B) {
            continue;
        }
        if (v.kind == VertexKind::H) {
            BitVec r1(cols);
            r1.set(zb(inc[0]));
            r1.flip(xb(inc[1]));
            m.add_row(std::move(r1));
            BitVec r2(cols);
            r2.set(xb(inc[0]));
            r2.flip(zb(inc[1]));
            m.add_row(std::move(r2));
            continue;
        }
        // Own-colour and opposite-colour bit of a leg.
        const bool is_z = v.kind == VertexKind::Z;
        auto own = [&](int e) { return is_z ? zb(e) : xb(e); };
        auto opp = [&](int e) { return is_z ? xb(e) : zb(e); };
        for (std::size_t j = 1; j < inc.size(); ++j) {
            BitVec r(cols);
            r.flip(opp(inc[0]));
            r.flip(opp(inc[j]));
            if (r.any()) {
                m.add_row(std::move(r));
            }
        }
        BitVec parity(cols);
        for (int e : inc) {
            parity.flip(own(e));
        }
        if (!v.phase.is_pauli()) {
            parity.flip(opp(inc[0]));
        }
        if (parity.any()) {
            m.add_row(std::move(parity));
        }
    }
    return m;
}

BitVec web_to_bits(const ZXDiagram& d, const PauliWeb& w) {
    const auto idx = edge_index(d);
    BitVec v(2 * idx.size());
    for (const auto& [e, c] : w.highlights) {
        const auto it = idx.find(e);
        if (it == idx.end()) {
            throw WebError("web highlights unknown edge " + std::to_string(e));
        }
        if (c != 'Z' && c != 'X' && c != 'Y') {
            throw WebError(std::string("bad highlight '") + c + "'");
        }
        v.set(2 * it->second, c != 'X');
        v.set(2 * it->second + 1, c != 'Z');
    }
    return v;
}

PauliWeb web_from_bits(const ZXDiagram& d, const BitVec& v) {
    PauliWeb w;
    std::size_t i = 0;
    for (const auto& [id, e] : d.edges()) {
        const bool z = v.get(2 * i);
        const bool x = v.get(2 * i + 1);
        if (z || x) {
            w.highlights[id] = letter_of(z, x);
        }
        ++i;
    }
    return w;
}

bool is_web(const ZXDiagram& d, const PauliWeb& w) {
    const BitVec v = web_to_bits(d, w);
    for (const auto& r : web_system(d).rows) {
        if (r.dot(v)) {
            return false;
        }
    }
    return true;
}

std::vector<PauliWeb> web_basis(const ZXDiagram& d) { return to_webs(d, nullspace(web_system(d))); }

std::vector<PauliWeb> detecting_regions(const ZXDiagram& d) {
    return to_webs(d, constrained_space(d, web_system(d), d.boundary_edges()));
}

std::vector<PauliWeb> stabilising_webs(const ZXDiagram& d) {
    return to_webs(d, constrained_space(d, web_system(d), side_edges(d, d.inputs())));
}

std::vector<PauliWeb> costabilising_webs(const ZXDiagram& d) {
    return to_webs(d, constrained_space(d, web_system(d), side_edges(d, d.outputs())));
}

PauliString boundary_pauli(const ZXDiagram& d, const PauliWeb& w, Side side) {
    const auto& bs = side == Side::In ? d.inputs() : d.outputs();
    PauliString p(bs.size());
    for (std::size_t q = 0; q < bs.size(); ++q) {
        const int e = d.boundary_edge(bs[q]);
        p.set_z(q, w.z(e));
        p.set_x(q, w.x(e));
    }
    return p;
}

WebAnalysis::WebAnalysis(const ZXDiagram& d)
    : d_(&d), system_(web_system(d)), trivial_(system_.cols) {
    web_dim_ = system_.cols - rank(system_);
    detecting_dim_ = constrained_space(d, system_, d.boundary_edges()).size();
    const auto stab = constrained_space(d, system_, side_edges(d, d.inputs()));
    const auto costab = constrained_space(d, system_, side_edges(d, d.outputs()));
    stabilising_dim_ = stab.size();
    for (const auto& v : stab) {
        trivial_.insert(v);
    }
    for (const auto& v : costab) {
        trivial_.insert(v);
    }
    SpanBasis outs(2 * d.outputs().size());
    for (const auto& v : stab) {
        const PauliString p = boundary_pauli(d, web_from_bits(d, v), Side::Out);
        if (outs.insert(p.symplectic())) {
            stab_out_.push_back(p);
        }
    }
    stabilising_class_log2_ = outs.dim();
}

WebClass WebAnalysis::classify(const PauliWeb& w) const {
    const BitVec v = web_to_bits(*d_, w);
    for (const auto& r : system_.rows) {
        if (r.dot(v)) {
            throw WebError("highlighting violates the web rules");
        }
    }
    if (w.empty()) {
        return WebClass::MixedTrivial;
    }
    const bool in = !boundary_pauli(*d_, w, Side::In).is_identity();
    const bool out = !boundary_pauli(*d_, w, Side::Out).is_identity();
    if (!in && !out) {
        return WebClass::Detecting;
    }
    if (!in) {
        return WebClass::Stabilising;
    }
    if (!out) {
        return WebClass::CoStabilising;
    }
    return trivial_.contains(v) ? WebClass::MixedTrivial : WebClass::Logical;
}

ZXDiagram fire(const ZXDiagram& d, int s, const PauliWeb& w) {
    if (!d.has_vertex(s) || !is_spider(d.kind(s))) {
        throw WebError("fire: " + std::to_string(s) + " is not a spider");
    }
    ZXDiagram out = d;
    bool covered = false;
    for (int e : d.incident(s)) {
        const auto it = w.highlights.find(e);
        if (it == w.highlights.end()) {
            continue;
        }
        covered = true;
        int cur = e;
        if (w.x(e)) {
            const int v = out.insert_on_edge(cur, VertexKind::X, 2);
            cur = out.edges_between(s, v).front();
        }
        if (w.z(e)) {
            out.insert_on_edge(cur, VertexKind::Z, 2);
        }
    }
    if (!covered) {
        throw WebError("fire: spider " + std::to_string(s) + " is not covered by the web");
    }
    return out;
}

ZXDiagram fire_all(const ZXDiagram& d, const PauliWeb& w) {
    ZXDiagram out = d;
    for (const auto& [e, c] : w.highlights) {
        const Edge& ed = d.edge(e);
        const int times = (is_spider(d.kind(ed.a)) ? 1 : 0) + (is_spider(d.kind(ed.b)) ? 1 : 0);
        int cur = e;
        for (int t = 0; t < times; ++t) {
            if (w.x(e)) {
                const int v = out.insert_on_edge(cur, VertexKind::X, 2);
                cur = out.edges_between(ed.a, v).front();
            }
            if (w.z(e)) {
                const int v = out.insert_on_edge(cur, VertexKind::Z, 2);
                cur = out.edges_between(ed.a, v).front();
            }
        }
    }
    return out;
}

void write_web(std::ostream& out, const ZXDiagram& d, const PauliWeb& w) {
    for (const auto& [e, c] : w.highlights) {
        const Edge& ed = d.edge(e);
        out << "hl " << ed.a << ' ' << ed.b << ' ' << c << '\n';
    }
}

std::string format_web(const ZXDiagram& d, const PauliWeb& w) {
    std::ostringstream out;
    write_web(out, d, w);
    return out.str();
}

PauliWeb read_web(std::istream& in, const ZXDiagram& d) {
    PauliWeb w;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') {
            continue;
        }
        int a = 0;
        int b = 0;
        char c = 0;
        if (tag != "hl" || !(ls >> a >> b >> c)) {
            throw WebError("expected 'hl <src> <dst> <Z|X|Y>'");
        }
        bool placed = false;
        for (int e : d.edges_between(a, b)) {
            if (w.highlights.count(e) == 0) {
                w.highlights[e] = c;
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw WebError("no free edge between " + std::to_string(a) + " and " + std::to_string(b));
        }
    }
    return w;
}

}  // namespace zxfloq
