#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polyweave/tcell.hpp"

namespace polyweave {

// Distinct failure kinds so callers can tell a malformed file from a
// well-formed description of something that is not a torus cell.
enum class TCellErrorKind { Syntax, UnknownReference, Validation };

class TCellParseError : public std::runtime_error {
public:
    TCellParseError(TCellErrorKind kind, int line, int column, std::string message,
                    std::vector<std::string> violations = {});

    TCellErrorKind kind;
    int line;    // 1-based, 0 when not tied to a line
    int column;  // 1-based, 0 when not tied to a column
    std::vector<std::string> violations;
};

// Parses the line-oriented TCELL v1 format:
//   tcell v1
//   vertex <name>
//   edge <label> <tail> <head> <a> <b>
//   rotation <vertex> <dart>...        darts counterclockwise, e.g. e1+ e2-
// '#' starts a comment. The parsed cell is validated; any invariant
// violation raises TCellParseError with kind Validation.
TCell parse_tcell(const std::string& text);

// Canonical emission: vertices, edges and rotations sorted by name/label,
// each rotation started at its lexicographically least dart. Bit-stable and
// a fixed point of parse_tcell.
std::string emit_tcell(const TCell& cell);

TCell load_tcell_file(const std::string& path);

}  // namespace polyweave
