#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "polyweave/tcell.hpp"

namespace polyweave {

enum class VertexRule { Crossed, Branched };

class MethodError : public std::runtime_error {
public:
    explicit MethodError(const std::string& msg) : std::runtime_error(msg) {}
};

// A polygonal link method: how every vertex and every edge of a cell is
// transformed. Only three combinations exist: crossed vertices over a single
// line, and crossed or branched vertices over an m-twisted double line.
class PolygonalMethod {
public:
    static PolygonalMethod crossed_single() { return {VertexRule::Crossed, true, 0}; }
    static PolygonalMethod crossed(int twists) { return make(VertexRule::Crossed, twists); }
    static PolygonalMethod branched(int twists) { return make(VertexRule::Branched, twists); }

    // "cr:s", "cr:<m>", "br:<m>"
    static PolygonalMethod parse(const std::string& text);
    std::string str() const;

    VertexRule vertex_rule() const { return vertex_rule_; }
    bool single_line() const { return single_line_; }
    int twists() const { return twists_; }
    bool odd_twists() const { return !single_line_ && twists_ % 2 != 0; }

    friend bool operator==(const PolygonalMethod& x, const PolygonalMethod& y) {
        return x.vertex_rule_ == y.vertex_rule_ && x.single_line_ == y.single_line_ &&
               x.twists_ == y.twists_;
    }

private:
    PolygonalMethod(VertexRule vr, bool single, int twists)
        : vertex_rule_(vr), single_line_(single), twists_(twists) {}
    static PolygonalMethod make(VertexRule vr, int twists);

    VertexRule vertex_rule_;
    bool single_line_;
    int twists_;
};

// Non-empty when the method cannot be applied to the cell (single-line
// crossed curves require every vertex to have degree 4).
std::optional<std::string> applicability_error(const TCell& cell, const PolygonalMethod& method);
void require_applicable(const TCell& cell, const PolygonalMethod& method);

}  // namespace polyweave
