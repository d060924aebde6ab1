#include "polyweave/trace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polyweave {

namespace {

int state_index(const TCell& cell, StrandState s) {
    return s.parity * cell.dart_count() + s.position.dart;
}

std::vector<std::string> token_sequence(const TCell& cell,
                                        const std::vector<DirectedEdge>& edges) {
    std::vector<std::string> tokens;
    tokens.reserve(edges.size());
    for (auto e : edges) tokens.push_back(cell.dart_token(e.dart));
    return tokens;
}

}  // namespace

StrandState successor(const TCell& cell, const PolygonalMethod& method, StrandState state) {
    VertexId head = cell.dart_head(state.position.dart);
    if (method.single_line() && cell.degree(head) != 4)
        throw MethodError("method cr:s is not applicable at vertex " + cell.vertex_name(head) +
                          " of degree " + std::to_string(cell.degree(head)));
    long k = method.vertex_rule() == VertexRule::Crossed ? 2 : 1;
    if (method.odd_twists() && state.parity == 1) k = -k;
    StrandState next;
    next.position = edge_offset(cell, state.position, k);
    next.parity = method.odd_twists() ? state.parity ^ 1 : 0;
    return next;
}

std::vector<std::vector<DirectedEdge>> trace_raw_cycles(const TCell& cell,
                                                        const PolygonalMethod& method) {
    require_applicable(cell, method);
    const int parities = method.odd_twists() ? 2 : 1;
    const int nstates = parities * cell.dart_count();
    std::vector<char> visited(nstates, 0);
    std::vector<std::vector<DirectedEdge>> cycles;

    for (int s = 0; s < nstates; ++s) {
        if (visited[s]) continue;
        StrandState start{{s % cell.dart_count()}, s / cell.dart_count()};
        std::vector<DirectedEdge> cycle;
        StrandState cur = start;
        do {
            visited[state_index(cell, cur)] = 1;
            cycle.push_back(cur.position);
            cur = successor(cell, method, cur);
        } while (!(cur == start));
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::vector<DirectedEdge> canonical_rotation(const TCell& cell,
                                             const std::vector<DirectedEdge>& edges) {
    auto tokens = token_sequence(cell, edges);
    size_t n = edges.size();
    size_t best = 0;
    for (size_t off = 1; off < n; ++off) {
        for (size_t i = 0; i < n; ++i) {
            const auto& cand = tokens[(off + i) % n];
            const auto& cur = tokens[(best + i) % n];
            if (cand < cur) {
                best = off;
                break;
            }
            if (cand > cur) break;
        }
    }
    std::vector<DirectedEdge> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = edges[(best + i) % n];
    return out;
}

std::vector<DirectedEdge> reversed_loop(const std::vector<DirectedEdge>& edges) {
    std::vector<DirectedEdge> out;
    out.reserve(edges.size());
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) out.push_back(it->reversed());
    return out;
}

std::vector<CharacteristicLoop> trace_loops(const TCell& cell, const PolygonalMethod& method) {
    auto cycles = trace_raw_cycles(cell, method);
    std::map<std::vector<std::string>, std::vector<DirectedEdge>> classes;
    for (const auto& cycle : cycles) {
        auto fwd = canonical_rotation(cell, cycle);
        auto bwd = canonical_rotation(cell, reversed_loop(cycle));
        auto fwd_tokens = token_sequence(cell, fwd);
        auto bwd_tokens = token_sequence(cell, bwd);
        if (bwd_tokens < fwd_tokens) {
            classes.emplace(std::move(bwd_tokens), std::move(bwd));
        } else {
            classes.emplace(std::move(fwd_tokens), std::move(fwd));
        }
    }

    std::vector<CharacteristicLoop> loops;
    for (auto& [tokens, edges] : classes) {
        Vec2i homology = loop_homology(cell, edges);
        loops.push_back({std::move(edges), homology, method});
    }
    std::stable_sort(loops.begin(), loops.end(),
                     [](const CharacteristicLoop& x, const CharacteristicLoop& y) {
                         return x.length() < y.length();
                     });
    return loops;
}

Vec2i loop_homology(const TCell& cell, const std::vector<DirectedEdge>& edges) {
    if (edges.empty()) throw std::invalid_argument("loop_homology: empty edge sequence");
    Vec2i total;
    for (size_t i = 0; i < edges.size(); ++i) {
        DartId d = edges[i].dart;
        DartId next = edges[(i + 1) % edges.size()].dart;
        if (cell.dart_head(d) != cell.dart_tail(next))
            throw std::invalid_argument(
                "loop_homology: sequence is not cyclically adjacent between " +
                cell.dart_token(d) + " and " + cell.dart_token(next));
        total = total + cell.dart_translation(d);
    }
    return total;
}

std::string render_loop(const TCell& cell, const CharacteristicLoop& loop) {
    std::string out;
    for (size_t i = 0; i < loop.edges.size(); ++i) {
        if (i) out += ".";
        out += cell.dart_token(loop.edges[i].dart);
    }
    return out;
}

}  // namespace polyweave
