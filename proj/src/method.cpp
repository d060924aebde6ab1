#include "polyweave/method.hpp"

namespace polyweave {

PolygonalMethod PolygonalMethod::make(VertexRule vr, int twists) {
    if (twists < 0) throw MethodError("twist count must be non-negative");
    return {vr, false, twists};
}

PolygonalMethod PolygonalMethod::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw MethodError("bad method '" + text + "', expected cr:s, cr:<m> or br:<m>");
    std::string head = text.substr(0, colon);
    std::string tail = text.substr(colon + 1);
    if (head != "cr" && head != "br")
        throw MethodError("bad method '" + text + "', vertex rule must be cr or br");
    if (tail == "s") {
        if (head == "br")
            throw MethodError("br:s is not a polygonal link method (branched vertices need a "
                              "double line)");
        return crossed_single();
    }
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
        throw MethodError("bad twist count '" + tail + "' in method '" + text + "'");
    int m = std::stoi(tail);
    return head == "cr" ? crossed(m) : branched(m);
}

std::string PolygonalMethod::str() const {
    std::string head = vertex_rule_ == VertexRule::Crossed ? "cr" : "br";
    return head + ":" + (single_line_ ? std::string("s") : std::to_string(twists_));
}

std::optional<std::string> applicability_error(const TCell& cell, const PolygonalMethod& method) {
    if (method.single_line()) {
        for (VertexId v = 0; v < cell.vertex_count(); ++v)
            if (cell.degree(v) != 4)
                return "method cr:s requires every vertex to have degree 4, but vertex " +
                       cell.vertex_name(v) + " has degree " + std::to_string(cell.degree(v));
    }
    return std::nullopt;
}

void require_applicable(const TCell& cell, const PolygonalMethod& method) {
    if (auto err = applicability_error(cell, method)) throw MethodError(*err);
}

}  // namespace polyweave
