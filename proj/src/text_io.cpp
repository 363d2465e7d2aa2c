#include "contentmax/text_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace contentmax {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool is_ignorable(const std::vector<std::string>& tokens) {
    return tokens.empty() || tokens.front().starts_with('#');
}

Label parse_label(std::size_t line_no, const std::string& text) {
    try {
        return Label::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
    }
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    return in;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

LabeledDigraph read_edge_list(std::istream& in) {
    LabeledDigraph g;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (is_ignorable(tokens)) continue;
        if (tokens.front() == "vertex") {
            if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertex NAME'");
            g.add_vertex(tokens[1]);
            continue;
        }
        if (tokens.size() != 3) throw ParseError(line_no, "expected 'SRC DST LABEL'");
        const Label label = parse_label(line_no, tokens[2]);
        const VertexId s = g.add_vertex(tokens[0]);
        const VertexId d = g.add_vertex(tokens[1]);
        if (g.has_edge(EdgeKey{s, d})) throw ParseError(line_no, "duplicate edge " + tokens[0] + " " + tokens[1]);
        g.add_edge(s, d, label);
    }
    return g;
}

LabeledDigraph read_edge_list_file(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const LabeledDigraph& g) {
    // Vertices are always introduced in id order, so the introduced set is
    // the prefix [0, next).
    std::size_t next = 0;
    auto declare = [&](VertexId from, VertexId to) {
        for (VertexId u = from; u < to; ++u) out << "vertex " << g.name(u) << '\n';
    };

    for (const Edge& e : g.edges()) {
        // Fresh endpoints in the order the edge line would introduce them.
        std::vector<VertexId> fresh;
        if (e.src >= next) fresh.push_back(e.src);
        if (e.dst >= next && e.dst != e.src) fresh.push_back(e.dst);
        if (!fresh.empty()) {
            const VertexId last = *std::max_element(fresh.begin(), fresh.end());
            // Declare [next, p) for the smallest p such that the endpoints at
            // or above p are exactly p, p+1, ..., last in line order.
            VertexId p = next;
            for (; p <= last; ++p) {
                VertexId expect = p;
                bool ok = true;
                for (VertexId v : fresh) {
                    if (v >= p) ok = ok && v == expect++;
                }
                if (ok && expect == last + 1) break;
            }
            declare(next, p);
            next = last + 1;
        }
        out << g.name(e.src) << ' ' << g.name(e.dst) << ' ' << e.label << '\n';
    }
    declare(next, g.vertex_count());
}

std::string to_edge_list(const LabeledDigraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

UnlabeledEdgeList read_unlabeled_edge_list(std::istream& in) {
    UnlabeledEdgeList result;
    std::unordered_map<std::string, std::size_t> ids;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, result.vertices.size());
        if (inserted) result.vertices.push_back(name);
        return it->second;
    };
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (is_ignorable(tokens)) continue;
        if (tokens.front() == "vertex") {
            if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertex NAME'");
            intern(tokens[1]);
            continue;
        }
        if (tokens.size() != 2 && tokens.size() != 3) throw ParseError(line_no, "expected 'SRC DST [LABEL]'");
        if (tokens.size() == 3) parse_label(line_no, tokens[2]);
        const std::size_t s = intern(tokens[0]);
        const std::size_t d = intern(tokens[1]);
        result.edges.emplace_back(s, d);
    }
    return result;
}

LabeledMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_content_line = [&](std::vector<std::string>& tokens) {
        while (std::getline(in, line)) {
            ++line_no;
            tokens = tokenize(line);
            if (!is_ignorable(tokens)) return true;
        }
        return false;
    };

    std::vector<std::string> tokens;
    if (!next_content_line(tokens)) throw ParseError(0, "empty matrix file");
    if (tokens.size() != 1) throw ParseError(line_no, "expected the dimension n on the first line");
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        const long long parsed = std::stoll(tokens[0], &used);
        if (used != tokens[0].size() || parsed < 1) throw std::invalid_argument("bad");
        n = static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
        throw ParseError(line_no, "dimension must be a positive integer");
    }

    std::vector<std::vector<Label>> rows;
    rows.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!next_content_line(tokens)) throw ParseError(line_no, "expected " + std::to_string(n) + " rows");
        if (tokens.size() != n) {
            throw ParseError(line_no, "row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(n));
        }
        std::vector<Label> row;
        row.reserve(n);
        for (const auto& tok : tokens) row.push_back(parse_label(line_no, tok));
        rows.push_back(std::move(row));
    }
    if (next_content_line(tokens)) throw ParseError(line_no, "trailing data after matrix rows (not square?)");
    return LabeledMatrix(rows);
}

LabeledMatrix read_matrix_file(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const LabeledMatrix& a) {
    out << a.dim() << '\n';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (j > 0) out << ' ';
            out << a.at(i, j);
        }
        out << '\n';
    }
}

std::string to_matrix_text(const LabeledMatrix& a) {
    std::ostringstream out;
    write_matrix(out, a);
    return out.str();
}

}  // namespace contentmax
