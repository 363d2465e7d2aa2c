#pragma once

#include <optional>
#include <string>

#include "contentmax/digraph.hpp"

namespace contentmax {

/// Isomorphism-invariant representative of a labeled digraph, by brute
/// force over vertex relabelings (desk scale only, about 8 vertices).
///
/// Isolated vertices are dropped. The remaining vertices are renamed
/// "0".."m-1" so that the sorted (src, dst, label) edge list is
/// lexicographically smallest; only relabelings that respect the
/// (out-degree, in-degree) ordering of vertices are tried.
LabeledDigraph canonical_form(const LabeledDigraph& g);

/// Edge-list text of canonical_form(g); equal strings iff isomorphic.
std::string canonical_key(const LabeledDigraph& g);

bool isomorphic(const LabeledDigraph& a, const LabeledDigraph& b);

/// "P<k>" for a directed path with k edges, "C<m>" for a directed cycle of
/// length m, ignoring labels and isolated vertices; nullopt otherwise.
std::optional<std::string> shape_name(const LabeledDigraph& g);

}  // namespace contentmax
