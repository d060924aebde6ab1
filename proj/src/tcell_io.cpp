#include "polyweave/tcell_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace polyweave {

namespace {

std::string format_error(TCellErrorKind kind, int line, const std::string& message,
                         const std::vector<std::string>& violations) {
    std::string out;
    switch (kind) {
        case TCellErrorKind::Syntax: out = "syntax error"; break;
        case TCellErrorKind::UnknownReference: out = "unknown reference"; break;
        case TCellErrorKind::Validation: out = "invalid cell"; break;
    }
    if (line > 0) out += " at line " + std::to_string(line);
    if (!message.empty()) out += ": " + message;
    for (const auto& v : violations) out += "\n  - " + v;
    return out;
}

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return tokens;
}

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoi(s, &pos);
    } catch (...) {
        return false;
    }
    return pos == s.size();
}

}  // namespace

TCellParseError::TCellParseError(TCellErrorKind kind_, int line_, int column_,
                                 std::string message, std::vector<std::string> violations_)
    : std::runtime_error(format_error(kind_, line_, message, violations_)),
      kind(kind_),
      line(line_),
      column(column_),
      violations(std::move(violations_)) {}

TCell parse_tcell(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    bool header_seen = false;
    std::vector<std::string> vertex_names;
    std::map<std::string, VertexId> vertex_ids;
    std::vector<TCell::Edge> edges;
    std::map<std::string, EdgeId> edge_ids;
    struct RotationLine {
        VertexId vertex;
        std::vector<std::string> dart_tokens;
        int line;
        std::vector<int> columns;
    };
    std::vector<RotationLine> rotations;
    std::vector<int> rotation_line_of_vertex;

    auto syntax = [&](int col, const std::string& msg) -> TCellParseError {
        return TCellParseError(TCellErrorKind::Syntax, lineno, col, msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!header_seen) {
            if (tokens.size() != 2 || tokens[0].text != "tcell" || tokens[1].text != "v1")
                throw syntax(tokens[0].column, "expected header 'tcell v1'");
            header_seen = true;
            continue;
        }
        const std::string& kw = tokens[0].text;
        if (kw == "vertex") {
            if (tokens.size() != 2) throw syntax(tokens[0].column, "expected: vertex <name>");
            const std::string& name = tokens[1].text;
            if (vertex_ids.count(name))
                throw syntax(tokens[1].column, "duplicate vertex '" + name + "'");
            vertex_ids[name] = static_cast<VertexId>(vertex_names.size());
            vertex_names.push_back(name);
            rotation_line_of_vertex.push_back(0);
        } else if (kw == "edge") {
            if (tokens.size() != 6)
                throw syntax(tokens[0].column, "expected: edge <label> <tail> <head> <a> <b>");
            const std::string& label = tokens[1].text;
            if (edge_ids.count(label))
                throw syntax(tokens[1].column, "duplicate edge label '" + label + "'");
            auto tail = vertex_ids.find(tokens[2].text);
            if (tail == vertex_ids.end())
                throw TCellParseError(TCellErrorKind::UnknownReference, lineno, tokens[2].column,
                                      "unknown vertex '" + tokens[2].text + "'");
            auto head = vertex_ids.find(tokens[3].text);
            if (head == vertex_ids.end())
                throw TCellParseError(TCellErrorKind::UnknownReference, lineno, tokens[3].column,
                                      "unknown vertex '" + tokens[3].text + "'");
            Vec2i shift;
            if (!parse_int(tokens[4].text, shift.a))
                throw syntax(tokens[4].column, "expected integer translation component");
            if (!parse_int(tokens[5].text, shift.b))
                throw syntax(tokens[5].column, "expected integer translation component");
            edge_ids[label] = static_cast<EdgeId>(edges.size());
            edges.push_back({label, tail->second, head->second, shift});
        } else if (kw == "rotation") {
            if (tokens.size() < 2)
                throw syntax(tokens[0].column, "expected: rotation <vertex> <dart>...");
            auto v = vertex_ids.find(tokens[1].text);
            if (v == vertex_ids.end())
                throw TCellParseError(TCellErrorKind::UnknownReference, lineno, tokens[1].column,
                                      "unknown vertex '" + tokens[1].text + "'");
            if (rotation_line_of_vertex[v->second] != 0)
                throw syntax(tokens[1].column,
                             "duplicate rotation for vertex '" + tokens[1].text + "'");
            rotation_line_of_vertex[v->second] = lineno;
            RotationLine rl;
            rl.vertex = v->second;
            rl.line = lineno;
            for (size_t i = 2; i < tokens.size(); ++i) {
                rl.dart_tokens.push_back(tokens[i].text);
                rl.columns.push_back(tokens[i].column);
            }
            rotations.push_back(std::move(rl));
        } else {
            throw syntax(tokens[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (!header_seen)
        throw TCellParseError(TCellErrorKind::Syntax, 1, 1, "missing header 'tcell v1'");
    for (VertexId v = 0; v < static_cast<VertexId>(vertex_names.size()); ++v)
        if (rotation_line_of_vertex[v] == 0)
            throw TCellParseError(TCellErrorKind::Syntax, 0, 0,
                                  "missing rotation for vertex '" + vertex_names[v] + "'");

    std::vector<std::vector<DartId>> rotation_lists(vertex_names.size());
    for (const auto& rl : rotations) {
        std::vector<DartId> darts;
        for (size_t i = 0; i < rl.dart_tokens.size(); ++i) {
            const std::string& tok = rl.dart_tokens[i];
            char sign = tok.empty() ? '?' : tok.back();
            auto e = edge_ids.find(tok.substr(0, tok.size() - 1));
            if ((sign != '+' && sign != '-') || e == edge_ids.end())
                throw TCellParseError(TCellErrorKind::UnknownReference, rl.line, rl.columns[i],
                                      "unknown dart '" + tok + "'");
            darts.push_back(canonical_dart(e->second) + (sign == '+' ? 0 : 1));
        }
        rotation_lists[rl.vertex] = std::move(darts);
    }

    TCell cell(vertex_names, edges, rotation_lists);
    auto violations = validate(cell);
    if (!violations.empty())
        throw TCellParseError(TCellErrorKind::Validation, 0, 0,
                              "cell violates torus-cell invariants", violations);
    return cell;
}

std::string emit_tcell(const TCell& cell) {
    std::ostringstream out;
    out << "tcell v1\n";

    std::vector<VertexId> vs(cell.vertex_count());
    for (VertexId v = 0; v < cell.vertex_count(); ++v) vs[v] = v;
    std::sort(vs.begin(), vs.end(), [&](VertexId x, VertexId y) {
        return cell.vertex_name(x) < cell.vertex_name(y);
    });
    for (VertexId v : vs) out << "vertex " << cell.vertex_name(v) << "\n";

    std::vector<EdgeId> es(cell.edge_count());
    for (EdgeId e = 0; e < cell.edge_count(); ++e) es[e] = e;
    std::sort(es.begin(), es.end(),
              [&](EdgeId x, EdgeId y) { return cell.edge_label(x) < cell.edge_label(y); });
    for (EdgeId e : es) {
        const auto& ed = cell.edge(e);
        out << "edge " << ed.label << " " << cell.vertex_name(ed.tail) << " "
            << cell.vertex_name(ed.head) << " " << ed.shift.a << " " << ed.shift.b << "\n";
    }

    for (VertexId v : vs) {
        const auto& rot = cell.rotation(v);
        size_t start = 0;
        for (size_t i = 1; i < rot.size(); ++i)
            if (cell.dart_token(rot[i]) < cell.dart_token(rot[start])) start = i;
        out << "rotation " << cell.vertex_name(v);
        for (size_t i = 0; i < rot.size(); ++i)
            out << " " << cell.dart_token(rot[(start + i) % rot.size()]);
        out << "\n";
    }
    return out.str();
}

TCell load_tcell_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw TCellParseError(TCellErrorKind::Syntax, 0, 0, "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tcell(buf.str());
}

}  // namespace polyweave
