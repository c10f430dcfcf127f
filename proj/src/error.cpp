#include "zxfloq/error.hpp"

#include <sstream>

namespace zxfloq {

namespace {

bool has_x(char c) { return c == 'X' || c == 'Y'; }
bool has_z(char c) { return c == 'Z' || c == 'Y'; }

char combine(bool x, bool z) {
    if (x && z) {
        return 'Y';
    }
    return x ? 'X' : 'Z';
}

}  // namespace

ErrorSet::ErrorSet(EdgePaulis flips) : flips_(std::move(flips)) {
    for (const auto& [e, c] : flips_) {
        if (c != 'X' && c != 'Z' && c != 'Y') {
            throw std::invalid_argument(std::string("bad flip letter '") + c + "'");
        }
    }
}

void ErrorSet::add(EdgeFlip f) { add(f.edge, f.kind == FlipKind::X ? 'X' : 'Z'); }

void ErrorSet::add(int edge, char letter) {
    const auto it = flips_.find(edge);
    const char cur = it == flips_.end() ? 0 : it->second;
    const bool x = has_x(cur) != has_x(letter);
    const bool z = has_z(cur) != has_z(letter);
    if (!x && !z) {
        flips_.erase(edge);
    } else {
        flips_[edge] = combine(x, z);
    }
}

const char* error_class_name(ErrorClass c) {
    switch (c) {
        case ErrorClass::Trivial: return "trivial";
        case ErrorClass::Detectable: return "detectable";
        case ErrorClass::Live: return "live";
    }
    return "?";
}

ZXDiagram apply_error(const ZXDiagram& d, const ErrorSet& e) {
    ZXDiagram out = d;
    for (const auto& [eid, c] : e.flips()) {
        if (!d.has_edge(eid)) {
            throw DiagramError("apply_error: unknown edge " + std::to_string(eid));
        }
        const int a = d.edge(eid).a;
        int cur = eid;
        if (has_x(c)) {
            const int v = out.insert_on_edge(cur, VertexKind::X, 2);
            cur = out.edges_between(a, v).front();
        }
        if (has_z(c)) {
            out.insert_on_edge(cur, VertexKind::Z, 2);
        }
    }
    return out;
}

ErrorOracle::ErrorOracle(const ZXDiagram& d, const InterpretOptions& opts, double tol)
    : plan_(d, opts), base_(plan_.run()), tol_(tol) {}

ErrorClass ErrorOracle::classify(const ErrorSet& e) const {
    ++evaluations_;
    const LinearMap m = plan_.run(e.flips());
    if (is_zero_map(m, tol_)) {
        return ErrorClass::Detectable;
    }
    return equal_up_to_scalar(m, base_, tol_) ? ErrorClass::Trivial : ErrorClass::Live;
}

ErrorClass classify_error(const ZXDiagram& d, const ErrorSet& e, double tol) {
    return ErrorOracle(d, {}, tol).classify(e);
}

DistanceResult zx_distance(const ZXDiagram& d, int w_max, const std::vector<int>& locations,
                           const InterpretOptions& opts, double tol) {
    const std::vector<int> locs = locations.empty() ? d.edge_ids() : locations;
    const ErrorOracle oracle(d, opts, tol);
    DistanceResult r;
    r.w_max = w_max;
    for (int w = 1; w <= w_max && !r.distance; ++w) {
        for_each_error(locs, w, [&](const ErrorSet& e) {
            if (oracle.classify(e) == ErrorClass::Live) {
                r.distance = w;
                r.witness = e;
                return false;
            }
            return true;
        });
    }
    r.evaluated = oracle.evaluations();
    return r;
}

DetectorErrorMatrix detector_matrix(const ZXDiagram& d, const std::vector<PauliWeb>& regions) {
    DetectorErrorMatrix m;
    m.edges = d.internal_edges();
    const std::size_t n = m.edges.size();
    m.rows = BitMatrix(2 * n);
    const WebAnalysis wa(d);
    for (const auto& r : regions) {
        if (wa.classify(r) != WebClass::Detecting) {
            throw WebError("detector_matrix: supplied web is not a detecting region");
        }
        BitVec row(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            row.set(i, r.z(m.edges[i]));
            row.set(n + i, r.x(m.edges[i]));
        }
        m.rows.add_row(std::move(row));
    }
    return m;
}

BitVec error_vector(const DetectorErrorMatrix& m, const ErrorSet& e) {
    const std::size_t n = m.edges.size();
    BitVec v(2 * n);
    for (const auto& [eid, c] : e.flips()) {
        std::size_t i = 0;
        while (i < n && m.edges[i] != eid) {
            ++i;
        }
        if (i == n) {
            throw DiagramError("error touches non-internal edge " + std::to_string(eid));
        }
        v.set(i, has_x(c));
        v.set(n + i, has_z(c));
    }
    return v;
}

BitVec syndrome(const DetectorErrorMatrix& m, const BitVec& v) {
    BitVec s(m.rows.num_rows());
    for (std::size_t i = 0; i < m.rows.num_rows(); ++i) {
        s.set(i, m.rows.rows[i].dot(v));
    }
    return s;
}

void write_error(std::ostream& out, const ZXDiagram& d, const ErrorSet& e) {
    for (const auto& [eid, c] : e.flips()) {
        const Edge& ed = d.edge(eid);
        out << "flip " << ed.a << ' ' << ed.b << ' ' << c << '\n';
    }
}

std::string format_error(const ZXDiagram& d, const ErrorSet& e) {
    std::ostringstream out;
    write_error(out, d, e);
    return out.str();
}

ErrorSet read_error(std::istream& in, const ZXDiagram& d) {
    ErrorSet e;
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
        if (tag != "flip" || !(ls >> a >> b >> c)) {
            throw DiagramError("expected 'flip <src> <dst> <X|Z|Y>'");
        }
        const auto es = d.edges_between(a, b);
        int chosen = -1;
        for (int eid : es) {
            if (e.flips().count(eid) == 0) {
                chosen = eid;
                break;
            }
        }
        if (chosen < 0) {
            throw DiagramError("no free edge between " + std::to_string(a) + " and " + std::to_string(b));
        }
        e.add(chosen, c);
    }
    return e;
}

std::string format_distance(const ZXDiagram& d, const DistanceResult& r) {
    std::ostringstream out;
    if (r.distance) {
        out << "distance " << *r.distance << '\n';
        write_error(out, d, r.witness);
    } else {
        out << "distance >" << r.w_max << '\n';
    }
    return out.str();
}

}  // namespace zxfloq
