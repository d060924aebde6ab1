#pragma once

#include <string>
#include <vector>

#include "polyweave/method.hpp"
#include "polyweave/tcell.hpp"

namespace polyweave {

// Position of a strand while it is traced through the cell. The parity bit
// selects the phase of the alternating offset and is only meaningful when the
// twist count is odd; it is 0 otherwise.
struct StrandState {
    DirectedEdge position;
    int parity = 0;

    friend bool operator==(StrandState x, StrandState y) {
        return x.position == y.position && x.parity == y.parity;
    }
};

// The closed polygonal chain covered by one traced strand class.
struct CharacteristicLoop {
    std::vector<DirectedEdge> edges;  // cyclic, head of each = tail of next
    Vec2i homology;                   // sum of signed translation vectors
    PolygonalMethod method;

    size_t length() const { return edges.size(); }
};

// Next strand position: edge_offset by +2/-2 (crossed) or +1/-1 (branched),
// the sign alternating with parity when the twist count is odd.
StrandState successor(const TCell& cell, const PolygonalMethod& method, StrandState state);

// Enumerates the cycles of `successor` on the full strand-state space
// (2E states for single line / even twists, 4E when the twist count is odd)
// without any deduplication. Cycles are reported as dart sequences.
std::vector<std::vector<DirectedEdge>> trace_raw_cycles(const TCell& cell,
                                                        const PolygonalMethod& method);

// Characteristic loop classes: raw cycles deduplicated up to cyclic rotation
// and reversal, each represented by its lexicographically least form and
// sorted deterministically.
std::vector<CharacteristicLoop> trace_loops(const TCell& cell, const PolygonalMethod& method);

// Sum of signed translation vectors; throws std::invalid_argument unless the
// edge sequence is cyclically adjacent in the cell.
Vec2i loop_homology(const TCell& cell, const std::vector<DirectedEdge>& edges);

// "e1+.e3-.e2-"
std::string render_loop(const TCell& cell, const CharacteristicLoop& loop);

// Lexicographically least rotation of the dart sequence (by dart token).
std::vector<DirectedEdge> canonical_rotation(const TCell& cell,
                                             const std::vector<DirectedEdge>& edges);
std::vector<DirectedEdge> reversed_loop(const std::vector<DirectedEdge>& edges);

}  // namespace polyweave
