#pragma once

#include <optional>
#include <string>
#include <vector>

namespace polyweave {

using VertexId = int;
using EdgeId = int;
using DartId = int;

// Integer lattice vector: translation of an edge across the fundamental
// domain, or the homology class of a loop.
struct Vec2i {
    int a = 0;
    int b = 0;

    friend Vec2i operator+(Vec2i u, Vec2i v) { return {u.a + v.a, u.b + v.b}; }
    friend Vec2i operator-(Vec2i u, Vec2i v) { return {u.a - v.a, u.b - v.b}; }
    friend Vec2i operator-(Vec2i u) { return {-u.a, -u.b}; }
    friend bool operator==(Vec2i u, Vec2i v) { return u.a == v.a && u.b == v.b; }
    friend bool operator!=(Vec2i u, Vec2i v) { return !(u == v); }
    bool zero() const { return a == 0 && b == 0; }
};

// Determinant test: zero iff u and v are proportional.
inline long long cross(Vec2i u, Vec2i v) {
    return static_cast<long long>(u.a) * v.b - static_cast<long long>(u.b) * v.a;
}

std::string to_string(Vec2i v);

// Darts come in pairs: dart 2e is the canonical dart of edge e (running
// tail -> head as declared), dart 2e+1 is its reverse.
inline DartId reverse_dart(DartId d) { return d ^ 1; }
inline EdgeId dart_edge(DartId d) { return d >> 1; }
inline bool dart_is_canonical(DartId d) { return (d & 1) == 0; }
inline DartId canonical_dart(EdgeId e) { return 2 * e; }

// A dart together with its orientation sign; the sign is + exactly when the
// dart is the edge's canonical dart.
struct DirectedEdge {
    DartId dart = -1;

    bool positive() const { return dart_is_canonical(dart); }
    DirectedEdge reversed() const { return {reverse_dart(dart)}; }
    friend bool operator==(DirectedEdge x, DirectedEdge y) { return x.dart == y.dart; }
    friend bool operator!=(DirectedEdge x, DirectedEdge y) { return x.dart != y.dart; }
};

/// Generating cell of a doubly periodic edge-to-edge tiling, stored as a
/// combinatorial map on the flat torus: a connected graph with a
/// counterclockwise rotation system and one Z^2 translation vector per edge
/// recording how the edge's canonical direction crosses the fundamental
/// domain boundaries.
class TCell {
public:
    struct Edge {
        std::string label;
        VertexId tail = -1;
        VertexId head = -1;
        Vec2i shift;
    };

    // Throws std::invalid_argument on structurally unusable input (indices
    // out of range, darts in rotations that do not exist). Semantic defects
    // (wrong degree, broken involution, non-torus embedding) are reported by
    // validate(), not here, so that tests can build broken cells.
    TCell(std::vector<std::string> vertex_names, std::vector<Edge> edges,
          std::vector<std::vector<DartId>> rotations);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
    const std::string& edge_label(EdgeId e) const { return edges_[e].label; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    VertexId dart_tail(DartId d) const {
        const Edge& e = edges_[dart_edge(d)];
        return dart_is_canonical(d) ? e.tail : e.head;
    }
    VertexId dart_head(DartId d) const { return dart_tail(reverse_dart(d)); }
    Vec2i dart_translation(DartId d) const {
        Vec2i s = edges_[dart_edge(d)].shift;
        return dart_is_canonical(d) ? s : -s;
    }

    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
    const std::vector<DartId>& rotation(VertexId v) const { return rotation_[v]; }

    // Position of d in the rotation of the vertex that lists it (-1 if the
    // rotations are broken and d is absent).
    int rotation_index(DartId d) const { return rot_index_[d]; }
    // Vertex whose rotation lists d (-1 if absent).
    VertexId rotation_vertex(DartId d) const { return rot_vertex_[d]; }

    // Dart at cyclic position k in the rotation of v; k is taken mod degree.
    DartId rotation_at(VertexId v, long k) const;

    std::string dart_token(DartId d) const;          // "e1+" / "e1-"
    std::optional<DartId> dart_by_token(const std::string& token) const;
    std::optional<EdgeId> edge_by_label(const std::string& label) const;
    std::optional<VertexId> vertex_by_name(const std::string& name) const;

    // Face traversal: the dart following d along the face on its left.
    // Defined whenever the rotation system is coherent.
    DartId face_next(DartId d) const;
    std::vector<std::vector<DartId>> face_cycles() const;
    int face_count() const { return static_cast<int>(face_cycles().size()); }

    bool connected() const;

    friend bool operator==(const TCell& x, const TCell& y);

private:
    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<int> rot_index_;
    std::vector<VertexId> rot_vertex_;
};

// Outgoing directed edge at cyclic position k counterclockwise from
// rev(incoming) in the rotation at the head vertex of `incoming`.
// edge_offset(c, d, 0) == d.reversed().
DirectedEdge edge_offset(const TCell& cell, DirectedEdge incoming, long k);

// One entry per violated invariant; empty for a valid torus cell.
std::vector<std::string> validate(const TCell& cell);
bool is_valid(const TCell& cell);

enum class Builtin { Square, Triangular, Hexagonal, Kagome };

const std::vector<std::string>& builtin_names();
std::optional<Builtin> builtin_by_name(const std::string& name);
std::string builtin_name(Builtin b);

// Quotient cells of the standard tilings. Every result validates cleanly.
TCell builtin_tcell(Builtin name);

}  // namespace polyweave
