#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contentmax/digraph.hpp"
#include "contentmax/matrix.hpp"

namespace contentmax {

/// Malformed input. `line()` is 1-based, or 0 when the error is not tied to
/// a line (e.g. an unreadable file).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Edge-list format, one graph per stream:
//
//   # comment
//   vertex V          isolated (or early-declared) vertex
//   SRC DST LABEL     LABEL is p, p/q or a finite decimal
//
// Blank lines and lines starting with '#' are ignored. A zero label
// registers both endpoints but no edge.
LabeledDigraph read_edge_list(std::istream& in);
LabeledDigraph read_edge_list_file(const std::filesystem::path& path);

/// Writes edges in insertion order, with `vertex` lines exactly where they
/// are needed for the reader to rebuild the same vertex order.
void write_edge_list(std::ostream& out, const LabeledDigraph& g);
std::string to_edge_list(const LabeledDigraph& g);

/// Unlabeled edge list for patterns: lines `SRC DST` or `SRC DST LABEL`
/// (label ignored). `vertex` lines are accepted and reported as vertices.
struct UnlabeledEdgeList {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};
UnlabeledEdgeList read_unlabeled_edge_list(std::istream& in);

// Matrix format: first line n, then n lines of n rationals each.
LabeledMatrix read_matrix(std::istream& in);
LabeledMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const LabeledMatrix& a);
std::string to_matrix_text(const LabeledMatrix& a);

}  // namespace contentmax
