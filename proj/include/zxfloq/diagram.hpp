#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zxfloq {

// Phase k·π/2 with k kept in {0,1,2,3}.
class Phase {
public:
    constexpr Phase() = default;
    constexpr Phase(int quarter_turns) : k_(((quarter_turns % 4) + 4) % 4) {}  // NOLINT(implicit)

    [[nodiscard]] constexpr int quarter_turns() const { return k_; }
    [[nodiscard]] constexpr bool is_pauli() const { return k_ % 2 == 0; }
    constexpr Phase operator+(Phase o) const { return {k_ + o.k_}; }
    constexpr Phase operator-() const { return {-k_}; }
    constexpr bool operator==(const Phase&) const = default;

private:
    int k_ = 0;
};

enum class VertexKind { Z, X, H, B };

char kind_char(VertexKind k);
VertexKind kind_from_char(char c);
// Z <-> X, other kinds unchanged.
VertexKind flip_colour(VertexKind k);
[[nodiscard]] inline bool is_spider(VertexKind k) { return k == VertexKind::Z || k == VertexKind::X; }

struct Vertex {
    int id = 0;
    VertexKind kind = VertexKind::Z;
    Phase phase;

    bool operator==(const Vertex&) const = default;
};

struct Edge {
    int a = 0;
    int b = 0;

    [[nodiscard]] int other(int v) const { return v == a ? b : a; }
    [[nodiscard]] bool touches(int v) const { return a == v || b == v; }
};

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Open graph of typed, phased vertices. Edges form a multiset and carry stable
// integer ids; inputs and outputs are ordered lists of boundary vertices.
class ZXDiagram {
public:
    int add_vertex(VertexKind kind, Phase phase = {});
    void add_vertex_with_id(int id, VertexKind kind, Phase phase = {});
    int add_edge(int a, int b);
    void remove_edge(int e);
    // Removes the vertex and every incident edge; also drops it from inputs/outputs.
    void remove_vertex(int v);
    void set_phase(int v, Phase p) { vertex_mut(v).phase = p; }
    void set_kind(int v, VertexKind k) { vertex_mut(v).kind = k; }
    // Replaces edge e by a path through a new vertex; returns the new vertex id.
    int insert_on_edge(int e, VertexKind kind, Phase phase = {});

    void add_input(int v) { inputs_.push_back(v); }
    void add_output(int v) { outputs_.push_back(v); }
    void set_inputs(std::vector<int> v) { inputs_ = std::move(v); }
    void set_outputs(std::vector<int> v) { outputs_ = std::move(v); }

    [[nodiscard]] bool has_vertex(int v) const { return vertices_.count(v) != 0; }
    [[nodiscard]] bool has_edge(int e) const { return edges_.count(e) != 0; }
    [[nodiscard]] const Vertex& vertex(int v) const;
    [[nodiscard]] VertexKind kind(int v) const { return vertex(v).kind; }
    [[nodiscard]] Phase phase(int v) const { return vertex(v).phase; }
    [[nodiscard]] const Edge& edge(int e) const;
    [[nodiscard]] const std::map<int, Vertex>& vertices() const { return vertices_; }
    [[nodiscard]] const std::map<int, Edge>& edges() const { return edges_; }
    [[nodiscard]] std::vector<int> vertex_ids() const;
    [[nodiscard]] std::vector<int> edge_ids() const;
    [[nodiscard]] const std::vector<int>& inputs() const { return inputs_; }
    [[nodiscard]] const std::vector<int>& outputs() const { return outputs_; }
    [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }
    [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }

    [[nodiscard]] const std::vector<int>& incident(int v) const;
    [[nodiscard]] std::size_t degree(int v) const { return incident(v).size(); }
    // Neighbours with multiplicity, in incident-edge order.
    [[nodiscard]] std::vector<int> neighbours(int v) const;
    [[nodiscard]] std::vector<int> edges_between(int a, int b) const;
    [[nodiscard]] bool is_boundary_vertex(int v) const { return kind(v) == VertexKind::B; }
    // An edge is a boundary edge if it touches a B vertex.
    [[nodiscard]] bool is_boundary_edge(int e) const;
    [[nodiscard]] std::vector<int> internal_edges() const;
    [[nodiscard]] std::vector<int> boundary_edges() const;
    // Edge attached to a boundary vertex.
    [[nodiscard]] int boundary_edge(int b) const;
    [[nodiscard]] int next_vertex_id() const { return next_vertex_; }

    // Renumbers edges 0..m-1 preserving their order.
    void compact_edges();

    // Structural equality: vertices, edge endpoint sequence, boundary lists.
    [[nodiscard]] bool same_structure(const ZXDiagram& o) const;

private:
    Vertex& vertex_mut(int v);

    std::map<int, Vertex> vertices_;
    std::map<int, Edge> edges_;
    std::map<int, std::vector<int>> incident_;
    std::vector<int> inputs_;
    std::vector<int> outputs_;
    int next_vertex_ = 0;
    int next_edge_ = 0;
};

struct ValidationReport {
    std::vector<std::string> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

ValidationReport validate(const ZXDiagram& d);
// Throws DiagramError carrying the first violation.
void require_valid(const ZXDiagram& d);

// Appends `other` to `d` with fresh vertex ids; returns old-id -> new-id map.
std::map<int, int> append_disjoint(ZXDiagram& d, const ZXDiagram& other);

// Sequential composition: outputs of `first` are glued to inputs of `second`.
ZXDiagram compose(const ZXDiagram& first, const ZXDiagram& second);

// Swaps Z and X everywhere.
ZXDiagram colour_swapped(const ZXDiagram& d);

// Occurrence of a pattern inside a host diagram.
//   vertex_map: pattern interior vertex -> host vertex.
//   leg_map: pattern boundary vertex -> (host edge, host vertex outside the occurrence).
//   internal_edges: host edges matched by pattern edges between interior vertices.
struct Embedding {
    std::map<int, int> vertex_map;
    std::map<int, std::pair<int, int>> leg_map;
    std::vector<int> internal_edges;

    bool operator==(const Embedding&) const = default;
};

// Replaces the occurrence with `replacement`, whose boundary vertex ids must equal
// the pattern boundary ids used in the embedding's leg_map.
ZXDiagram substitute(const ZXDiagram& host, const Embedding& occ, const ZXDiagram& replacement);

// Like substitute, but also reports replacement-vertex -> host-vertex ids and,
// if requested, replacement-edge -> host-edge ids.
ZXDiagram substitute(const ZXDiagram& host, const Embedding& occ, const ZXDiagram& replacement,
                     std::map<int, int>& placed, std::map<int, int>* placed_edges = nullptr);

ZXDiagram read_diagram(std::istream& in);
ZXDiagram parse_diagram(const std::string& text);
void write_diagram(std::ostream& out, const ZXDiagram& d);
std::string format_diagram(const ZXDiagram& d);

}  // namespace zxfloq
