#include "polyweave/tcell.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace polyweave {

std::string to_string(Vec2i v) {
    return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

TCell::TCell(std::vector<std::string> vertex_names, std::vector<Edge> edges,
             std::vector<std::vector<DartId>> rotations)
    : vertex_names_(std::move(vertex_names)),
      edges_(std::move(edges)),
      rotation_(std::move(rotations)) {
    const int nv = vertex_count();
    const int nd = dart_count();
    if (static_cast<int>(rotation_.size()) != nv)
        throw std::invalid_argument("tcell: one rotation list per vertex required");
    for (const Edge& e : edges_) {
        if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv)
            throw std::invalid_argument("tcell: edge endpoint out of range");
    }
    rot_index_.assign(nd, -1);
    rot_vertex_.assign(nd, -1);
    for (VertexId v = 0; v < nv; ++v) {
        for (size_t i = 0; i < rotation_[v].size(); ++i) {
            DartId d = rotation_[v][i];
            if (d < 0 || d >= nd)
                throw std::invalid_argument("tcell: rotation references unknown dart");
            if (rot_index_[d] < 0) {
                rot_index_[d] = static_cast<int>(i);
                rot_vertex_[d] = v;
            }
            // duplicates are kept as a validate() finding, first wins
        }
    }
}

DartId TCell::rotation_at(VertexId v, long k) const {
    const auto& rot = rotation_[v];
    long n = static_cast<long>(rot.size());
    long i = ((k % n) + n) % n;
    return rot[static_cast<size_t>(i)];
}

std::string TCell::dart_token(DartId d) const {
    return edges_[dart_edge(d)].label + (dart_is_canonical(d) ? "+" : "-");
}

std::optional<DartId> TCell::dart_by_token(const std::string& token) const {
    if (token.size() < 2) return std::nullopt;
    char sign = token.back();
    if (sign != '+' && sign != '-') return std::nullopt;
    auto e = edge_by_label(token.substr(0, token.size() - 1));
    if (!e) return std::nullopt;
    return canonical_dart(*e) + (sign == '+' ? 0 : 1);
}

std::optional<EdgeId> TCell::edge_by_label(const std::string& label) const {
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (edges_[e].label == label) return e;
    return std::nullopt;
}

std::optional<VertexId> TCell::vertex_by_name(const std::string& name) const {
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (vertex_names_[v] == name) return v;
    return std::nullopt;
}

DartId TCell::face_next(DartId d) const {
    DartId r = reverse_dart(d);
    VertexId v = rot_vertex_[r];
    return rotation_at(v, rot_index_[r] + 1);
}

std::vector<std::vector<DartId>> TCell::face_cycles() const {
    std::vector<std::vector<DartId>> faces;
    std::vector<char> seen(dart_count(), 0);
    for (DartId start = 0; start < dart_count(); ++start) {
        if (seen[start]) continue;
        std::vector<DartId> cycle;
        DartId d = start;
        do {
            seen[d] = 1;
            cycle.push_back(d);
            d = face_next(d);
        } while (d != start && !seen[d]);
        faces.push_back(std::move(cycle));
    }
    return faces;
}

bool TCell::connected() const {
    if (vertex_count() == 0) return false;
    std::vector<char> seen(vertex_count(), 0);
    std::queue<VertexId> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId e = 0; e < edge_count(); ++e) {
            for (VertexId w : {edges_[e].tail, edges_[e].head}) {
                if ((edges_[e].tail == v || edges_[e].head == v) && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    queue.push(w);
                }
            }
        }
    }
    return reached == vertex_count();
}

bool operator==(const TCell& x, const TCell& y) {
    if (x.vertex_names_ != y.vertex_names_) return false;
    if (x.edges_.size() != y.edges_.size()) return false;
    for (size_t e = 0; e < x.edges_.size(); ++e) {
        const auto& a = x.edges_[e];
        const auto& b = y.edges_[e];
        if (a.label != b.label || a.tail != b.tail || a.head != b.head || a.shift != b.shift)
            return false;
    }
    // rotations compare as cyclic sequences
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        const auto& ra = x.rotation_[v];
        const auto& rb = y.rotation_[v];
        if (ra.size() != rb.size()) return false;
        if (ra.empty()) continue;
        auto it = std::find(rb.begin(), rb.end(), ra[0]);
        if (it == rb.end()) return false;
        size_t off = static_cast<size_t>(it - rb.begin());
        for (size_t i = 0; i < ra.size(); ++i)
            if (ra[i] != rb[(off + i) % rb.size()]) return false;
    }
    return true;
}

DirectedEdge edge_offset(const TCell& cell, DirectedEdge incoming, long k) {
    DartId r = reverse_dart(incoming.dart);
    VertexId v = cell.rotation_vertex(r);
    if (v < 0) throw std::invalid_argument("edge_offset: dart missing from rotation system");
    return {cell.rotation_at(v, cell.rotation_index(r) + k)};
}

namespace {

long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

std::vector<std::string> validate(const TCell& cell) {
    std::vector<std::string> out;

    // Rotation membership: every dart listed exactly once, at its tail vertex.
    bool rotations_ok = true;
    std::vector<int> count(cell.dart_count(), 0);
    for (VertexId v = 0; v < cell.vertex_count(); ++v)
        for (DartId d : cell.rotation(v)) {
            ++count[d];
            if (cell.dart_tail(d) != v) {
                out.push_back("dart " + cell.dart_token(d) + " listed in rotation of vertex " +
                              cell.vertex_name(v) + " but leaves " +
                              cell.vertex_name(cell.dart_tail(d)));
                rotations_ok = false;
            }
        }
    for (DartId d = 0; d < cell.dart_count(); ++d) {
        if (count[d] == 1) continue;
        rotations_ok = false;
        if (count[d] == 0)
            out.push_back("dart involution broken: " + cell.dart_token(d) +
                          " missing from every rotation");
        else
            out.push_back("dart involution broken: " + cell.dart_token(d) + " appears " +
                          std::to_string(count[d]) + " times across rotations");
    }

    for (VertexId v = 0; v < cell.vertex_count(); ++v)
        if (cell.degree(v) < 3)
            out.push_back("vertex " + cell.vertex_name(v) + " has degree " +
                          std::to_string(cell.degree(v)) + " < 3");

    if (!cell.connected()) out.push_back("graph is disconnected");

    if (!rotations_ok) return out;  // face tracing needs coherent rotations

    auto faces = cell.face_cycles();
    int chi = cell.vertex_count() - cell.edge_count() + static_cast<int>(faces.size());
    if (chi != 0)
        out.push_back("Euler characteristic V-E+F = " + std::to_string(chi) +
                      " != 0 (not a torus embedding)");

    for (const auto& face : faces) {
        Vec2i total;
        for (DartId d : face) total = total + cell.dart_translation(d);
        if (!total.zero())
            out.push_back("face cycle through " + cell.dart_token(face.front()) +
                          " has net translation " + to_string(total) +
                          " (not a torus embedding)");
    }

    // The translation vectors of fundamental cycles must generate all of Z^2,
    // otherwise the data cannot be the quotient of a plane tiling by its full
    // period lattice.
    if (cell.connected() && chi == 0) {
        std::vector<VertexId> parent_vertex(cell.vertex_count(), -1);
        std::vector<DartId> parent_dart(cell.vertex_count(), -1);
        std::vector<Vec2i> to_root(cell.vertex_count());
        std::vector<char> in_tree_edge(cell.edge_count(), 0);
        std::vector<char> seen(cell.vertex_count(), 0);
        std::queue<VertexId> queue;
        queue.push(0);
        seen[0] = 1;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (DartId d : cell.rotation(v)) {
                VertexId w = cell.dart_head(d);
                if (seen[w]) continue;
                seen[w] = 1;
                parent_vertex[w] = v;
                parent_dart[w] = d;
                in_tree_edge[dart_edge(d)] = 1;
                to_root[w] = to_root[v] + cell.dart_translation(d);
                queue.push(w);
            }
        }
        std::vector<Vec2i> cycles;
        for (EdgeId e = 0; e < cell.edge_count(); ++e) {
            if (in_tree_edge[e]) continue;
            DartId d = canonical_dart(e);
            Vec2i h = to_root[cell.dart_tail(d)] + cell.dart_translation(d) -
                      to_root[cell.dart_head(d)];
            cycles.push_back(h);
        }
        long long minor_gcd = 0;
        for (size_t i = 0; i < cycles.size(); ++i)
            for (size_t j = i + 1; j < cycles.size(); ++j)
                minor_gcd = gcd_ll(minor_gcd, cross(cycles[i], cycles[j]));
        if (minor_gcd != 1)
            out.push_back("edge translations span a proper sublattice of Z^2");
    }

    return out;
}

bool is_valid(const TCell& cell) { return validate(cell).empty(); }

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"hexagonal", "kagome", "square", "triangular"};
    return names;
}

std::optional<Builtin> builtin_by_name(const std::string& name) {
    if (name == "square") return Builtin::Square;
    if (name == "triangular") return Builtin::Triangular;
    if (name == "hexagonal") return Builtin::Hexagonal;
    if (name == "kagome") return Builtin::Kagome;
    return std::nullopt;
}

std::string builtin_name(Builtin b) {
    switch (b) {
        case Builtin::Square: return "square";
        case Builtin::Triangular: return "triangular";
        case Builtin::Hexagonal: return "hexagonal";
        case Builtin::Kagome: return "kagome";
    }
    return "?";
}

TCell builtin_tcell(Builtin name) {
    auto dart = [](EdgeId e, bool plus) { return canonical_dart(e) + (plus ? 0 : 1); };
    switch (name) {
        case Builtin::Square: {
            // One vertex, two loop edges winding once around each generator.
            std::vector<TCell::Edge> edges = {
                {"e1", 0, 0, {1, 0}},
                {"e2", 0, 0, {0, 1}},
            };
            std::vector<std::vector<DartId>> rot = {
                {dart(0, true), dart(1, true), dart(0, false), dart(1, false)},
            };
            return TCell({"v"}, edges, rot);
        }
        case Builtin::Triangular: {
            // One vertex of degree 6; edges along the three lattice axes.
            std::vector<TCell::Edge> edges = {
                {"e1", 0, 0, {1, 0}},
                {"e2", 0, 0, {0, 1}},
                {"e3", 0, 0, {-1, 1}},
            };
            std::vector<std::vector<DartId>> rot = {
                {dart(0, true), dart(1, true), dart(2, true), dart(0, false), dart(1, false),
                 dart(2, false)},
            };
            return TCell({"v"}, edges, rot);
        }
        case Builtin::Hexagonal: {
            // Two vertices joined by three edges; the single face is the
            // hexagon, traversing every edge twice.
            std::vector<TCell::Edge> edges = {
                {"e1", 0, 1, {0, 0}},
                {"e2", 1, 0, {1, 0}},
                {"e3", 0, 1, {0, -1}},
            };
            std::vector<std::vector<DartId>> rot = {
                {dart(0, true), dart(1, false), dart(2, true)},   // u
                {dart(1, true), dart(2, false), dart(0, false)},  // v
            };
            return TCell({"u", "v"}, edges, rot);
        }
        case Builtin::Kagome: {
            // Three vertices at the midpoints of the triangular lattice
            // bonds; up-triangle edges stay inside the domain, down-triangle
            // edges cross it.
            std::vector<TCell::Edge> edges = {
                {"e1", 0, 1, {0, 0}},   // a-b, up triangle
                {"e2", 1, 2, {0, 0}},   // b-c, up triangle
                {"e3", 2, 0, {0, 0}},   // c-a, up triangle
                {"e4", 0, 1, {0, -1}},  // a-b, down triangle
                {"e5", 1, 2, {1, 0}},   // b-c, down triangle
                {"e6", 2, 0, {-1, 1}},  // c-a, down triangle
            };
            std::vector<std::vector<DartId>> rot = {
                {dart(0, true), dart(2, false), dart(3, true), dart(5, false)},   // a
                {dart(4, true), dart(3, false), dart(1, true), dart(0, false)},   // b
                {dart(1, false), dart(5, true), dart(4, false), dart(2, true)},   // c
            };
            return TCell({"a", "b", "c"}, edges, rot);
        }
    }
    throw std::invalid_argument("unknown builtin tiling");
}

}  // namespace polyweave
