#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyweave/trace.hpp"

namespace polyweave {

struct Letter {
    EdgeId edge = -1;
    bool positive = true;

    DartId dart() const { return canonical_dart(edge) + (positive ? 0 : 1); }
    Letter inverse() const { return {edge, !positive}; }
    friend bool operator==(Letter x, Letter y) {
        return x.edge == y.edge && x.positive == y.positive;
    }
};

// A word over the free group on the cell's edges. Loop words are cyclic and
// mirror a loop's oriented edge sequence letter for letter, unreduced.
struct EdgeWord {
    std::vector<Letter> letters;
    bool cyclic = true;
};

EdgeWord word_of(const CharacteristicLoop& loop);
EdgeWord word_from_darts(const std::vector<DirectedEdge>& edges);
std::string render_word(const TCell& cell, const EdgeWord& word);  // "e1+.e3-.e2-"

enum class WordVerdict { Simple, Trivial, ProductOfSimple, Knotted };
std::string to_string(WordVerdict v);

// Self-intersection evidence: a vertex the loop passes through at visits i
// and j (transition indices). The intersection survives in the universal
// cover exactly when one of the two divided curves is null-homologous;
// `odd_twist_caveat` marks same-edge same-direction repeats under an odd
// twist count on a boundary-crossing loop, where that test is adjudicated by
// the lift oracle instead.
struct SelfIntersection {
    VertexId vertex = -1;
    int visit_i = 0;
    int visit_j = 0;
    Vec2i first_homology;
    Vec2i second_homology;
    bool lifts = false;
    bool odd_twist_caveat = false;
};

// The two closed curves a self-intersection splits a loop into.
struct DividedCurvePair {
    VertexId point = -1;
    int visit_i = 0;
    int visit_j = 0;
    std::vector<DirectedEdge> left;   // entered at the earlier visit
    std::vector<DirectedEdge> right;
    Vec2i left_homology;
    Vec2i right_homology;
};

struct KnotWitness {
    VertexId vertex = -1;
    int vertex_degree = 0;
    int visit_i = 0;
    int visit_j = 0;
    Vec2i null_side_homology;
};

struct WordClass {
    WordVerdict verdict = WordVerdict::Simple;
    std::optional<KnotWitness> knot;          // present iff Knotted
    std::vector<int> decomposition_points;    // transition indices used for
                                              // the product-of-simple split
};

class WordError : public std::runtime_error {
public:
    explicit WordError(const std::string& msg) : std::runtime_error(msg) {}
};

// Verdict for a cyclic loop word:
//   Simple           no edge repeats and all transition vertices distinct
//   Knotted          some repeated vertex has a null-homologous divided curve
//   Trivial          cyclically reduces to the empty word, or retraces its
//                    own edge sequence once with all orientations flipped
//   ProductOfSimple  splits at repeated vertices into simple factors, every
//                    divided curve having nonzero homology
// Throws WordError when the word is not realizable on the cell.
WordClass classify_word(const TCell& cell, const EdgeWord& word);

// All split pairs at `point`; precondition: the loop visits `point` at least
// twice (WordError otherwise).
std::vector<DividedCurvePair> divided_curves(const TCell& cell, const CharacteristicLoop& loop,
                                             VertexId point);

// Every repeated-vertex visit pair of the loop with its lift-survival data.
std::vector<SelfIntersection> self_intersection_vertices(const TCell& cell,
                                                         const CharacteristicLoop& loop);

// Cyclic free reduction (cancels inverse neighbours across the seam too).
std::vector<Letter> cyclic_reduce(const std::vector<Letter>& letters);

}  // namespace polyweave
