#include "polyweave/words.hpp"

#include <algorithm>
#include <map>

namespace polyweave {

namespace {

std::vector<DirectedEdge> word_darts(const EdgeWord& word) {
    std::vector<DirectedEdge> darts;
    darts.reserve(word.letters.size());
    for (Letter l : word.letters) darts.push_back({l.dart()});
    return darts;
}

void check_realizable(const TCell& cell, const std::vector<DirectedEdge>& darts) {
    if (darts.empty()) throw WordError("empty word");
    for (size_t i = 0; i < darts.size(); ++i) {
        DartId d = darts[i].dart;
        if (dart_edge(d) < 0 || dart_edge(d) >= cell.edge_count())
            throw WordError("word references an edge outside the cell");
        DartId next = darts[(i + 1) % darts.size()].dart;
        if (cell.dart_head(d) != cell.dart_tail(next))
            throw WordError("word is not realizable on the cell: " + cell.dart_token(d) +
                            " does not meet " + cell.dart_token(next));
    }
}

// transition i sits between darts i and i+1, at the head vertex of dart i
std::vector<VertexId> transition_vertices(const TCell& cell,
                                          const std::vector<DirectedEdge>& darts) {
    std::vector<VertexId> out(darts.size());
    for (size_t i = 0; i < darts.size(); ++i) out[i] = cell.dart_head(darts[i].dart);
    return out;
}

Vec2i arc_homology(const TCell& cell, const std::vector<DirectedEdge>& darts, size_t from,
                   size_t to) {
    // sum over darts from+1 .. to (cyclic, inclusive)
    Vec2i total;
    size_t n = darts.size();
    for (size_t i = (from + 1) % n; ; i = (i + 1) % n) {
        total = total + cell.dart_translation(darts[i].dart);
        if (i == to % n) break;
    }
    return total;
}

std::vector<DirectedEdge> arc_slice(const std::vector<DirectedEdge>& darts, size_t from,
                                    size_t to) {
    std::vector<DirectedEdge> out;
    size_t n = darts.size();
    for (size_t i = (from + 1) % n; ; i = (i + 1) % n) {
        out.push_back(darts[i]);
        if (i == to % n) break;
    }
    return out;
}

bool is_simple_word(const TCell& cell, const std::vector<DirectedEdge>& darts) {
    std::vector<EdgeId> edges;
    for (auto d : darts) edges.push_back(dart_edge(d.dart));
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
    auto verts = transition_vertices(cell, darts);
    std::sort(verts.begin(), verts.end());
    return std::adjacent_find(verts.begin(), verts.end()) == verts.end();
}

// w = g followed by g with every letter's orientation flipped in place: the
// shape of a loop that retraces one closed edge path as the second strand of
// a double line. Any such word is null-homologous.
bool is_antipodal_double(const std::vector<DirectedEdge>& darts) {
    size_t n = darts.size();
    if (n % 2 != 0 || n == 0) return false;
    for (size_t i = 0; i < n / 2; ++i)
        if (darts[(i + n / 2) % n].dart != reverse_dart(darts[i].dart)) return false;
    return true;
}

struct VisitPair {
    VertexId vertex;
    size_t i, j;
    Vec2i first, second;
};

std::vector<VisitPair> visit_pairs(const TCell& cell, const std::vector<DirectedEdge>& darts) {
    auto verts = transition_vertices(cell, darts);
    std::vector<VisitPair> pairs;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i] != verts[j]) continue;
            Vec2i first = arc_homology(cell, darts, i, j);
            Vec2i second = arc_homology(cell, darts, j, i);
            pairs.push_back({verts[i], i, j, first, second});
        }
    return pairs;
}

// recursive split into simple factors; returns false if any divided curve
// along the way is null-homologous
bool decompose_simple(const TCell& cell, const std::vector<DirectedEdge>& darts,
                      std::vector<int>& points) {
    if (is_simple_word(cell, darts)) return true;
    auto pairs = visit_pairs(cell, darts);
    if (pairs.empty()) return false;  // repeated edge without repeated vertex cannot happen
    const VisitPair& p = pairs.front();
    if (p.first.zero() || p.second.zero()) return false;
    points.push_back(static_cast<int>(p.i));
    points.push_back(static_cast<int>(p.j));
    return decompose_simple(cell, arc_slice(darts, p.i, p.j), points) &&
           decompose_simple(cell, arc_slice(darts, p.j, p.i), points);
}

}  // namespace

EdgeWord word_of(const CharacteristicLoop& loop) { return word_from_darts(loop.edges); }

EdgeWord word_from_darts(const std::vector<DirectedEdge>& edges) {
    EdgeWord word;
    word.cyclic = true;
    for (auto e : edges) word.letters.push_back({dart_edge(e.dart), e.positive()});
    return word;
}

std::string render_word(const TCell& cell, const EdgeWord& word) {
    std::string out;
    for (size_t i = 0; i < word.letters.size(); ++i) {
        if (i) out += ".";
        out += cell.dart_token(word.letters[i].dart());
    }
    return out;
}

std::string to_string(WordVerdict v) {
    switch (v) {
        case WordVerdict::Simple: return "Simple";
        case WordVerdict::Trivial: return "Trivial";
        case WordVerdict::ProductOfSimple: return "ProductOfSimple";
        case WordVerdict::Knotted: return "Knotted";
    }
    return "?";
}

std::vector<Letter> cyclic_reduce(const std::vector<Letter>& letters) {
    std::vector<Letter> stack;
    for (Letter l : letters) {
        if (!stack.empty() && stack.back() == l.inverse())
            stack.pop_back();
        else
            stack.push_back(l);
    }
    // reduce across the seam
    size_t lo = 0, hi = stack.size();
    while (hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return {stack.begin() + static_cast<long>(lo), stack.begin() + static_cast<long>(hi)};
}

WordClass classify_word(const TCell& cell, const EdgeWord& word) {
    if (!word.cyclic) throw WordError("classify_word expects a cyclic loop word");
    auto darts = word_darts(word);
    check_realizable(cell, darts);

    WordClass out;
    if (is_simple_word(cell, darts)) {
        out.verdict = WordVerdict::Simple;
        return out;
    }

    for (const VisitPair& p : visit_pairs(cell, darts)) {
        if (!p.first.zero() && !p.second.zero()) continue;
        out.verdict = WordVerdict::Knotted;
        KnotWitness w;
        w.vertex = p.vertex;
        w.vertex_degree = cell.degree(p.vertex);
        w.visit_i = static_cast<int>(p.i);
        w.visit_j = static_cast<int>(p.j);
        w.null_side_homology = p.first.zero() ? p.first : p.second;
        out.knot = w;
        return out;
    }

    if (cyclic_reduce(word.letters).empty() || is_antipodal_double(darts)) {
        out.verdict = WordVerdict::Trivial;
        return out;
    }

    std::vector<int> points;
    if (!decompose_simple(cell, darts, points))
        throw WordError("word admits no admissible decomposition");  // unreachable: null
                                                                     // splits were caught above
    out.verdict = WordVerdict::ProductOfSimple;
    out.decomposition_points = std::move(points);
    return out;
}

std::vector<DividedCurvePair> divided_curves(const TCell& cell, const CharacteristicLoop& loop,
                                             VertexId point) {
    check_realizable(cell, loop.edges);
    std::vector<DividedCurvePair> out;
    for (const VisitPair& p : visit_pairs(cell, loop.edges)) {
        if (p.vertex != point) continue;
        DividedCurvePair pair;
        pair.point = point;
        pair.visit_i = static_cast<int>(p.i);
        pair.visit_j = static_cast<int>(p.j);
        pair.left = arc_slice(loop.edges, p.i, p.j);
        pair.right = arc_slice(loop.edges, p.j, p.i);
        pair.left_homology = p.first;
        pair.right_homology = p.second;
        out.push_back(std::move(pair));
    }
    if (out.empty())
        throw WordError("vertex " + cell.vertex_name(point) +
                        " is not a repeated vertex of the loop");
    return out;
}

std::vector<SelfIntersection> self_intersection_vertices(const TCell& cell,
                                                         const CharacteristicLoop& loop) {
    check_realizable(cell, loop.edges);
    bool crosses_boundary = false;
    for (auto e : loop.edges)
        if (!cell.dart_translation(e.dart).zero()) crosses_boundary = true;

    std::vector<SelfIntersection> out;
    for (const VisitPair& p : visit_pairs(cell, loop.edges)) {
        SelfIntersection si;
        si.vertex = p.vertex;
        si.visit_i = static_cast<int>(p.i);
        si.visit_j = static_cast<int>(p.j);
        si.first_homology = p.first;
        si.second_homology = p.second;
        si.lifts = p.first.zero() || p.second.zero();
        si.odd_twist_caveat = loop.method.odd_twists() && crosses_boundary &&
                              loop.edges[p.i].dart == loop.edges[p.j].dart;
        out.push_back(si);
    }
    return out;
}

}  // namespace polyweave
