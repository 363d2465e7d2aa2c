#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace contentmax {

/// Unlabeled template graph E whose copies are counted inside a labeled
/// digraph. Simple and loop-free, every vertex is an endpoint of some edge,
/// and there is at least one edge.
class Pattern {
public:
    using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

    /// Directed line 0 -> 1 -> ... -> k.
    static Pattern path(std::size_t k);
    /// Sources 0..a-1 each with one edge into the sink a.
    static Pattern star(std::size_t arms);
    /// `arms` disjoint directed paths of length `arm_length` sharing only
    /// their final vertex, the root 0.
    static Pattern equistar(std::size_t arms, std::size_t arm_length);
    /// Throws std::invalid_argument on a loop, a repeated edge, a vertex
    /// that is on no edge, or an empty edge list.
    static Pattern explicit_edges(std::size_t vertex_count, EdgeList edges, std::string description = "explicit");

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const EdgeList& edges() const { return edges_; }
    std::uint64_t automorphism_count() const { return automorphism_count_; }
    /// Spec string such as `path:3`.
    const std::string& description() const { return description_; }

private:
    Pattern(std::size_t vertex_count, EdgeList edges, std::uint64_t automorphisms, std::string description);

    std::size_t vertex_count_ = 0;
    EdgeList edges_;
    std::uint64_t automorphism_count_ = 1;
    std::string description_;
};

/// Number of permutations of the vertices that map the edge set onto
/// itself, by backtracking.
std::uint64_t count_automorphisms(std::size_t vertex_count, const Pattern::EdgeList& edges);

/// `path:K`, `star:A`, `equistar:A:L` or `file:PATH` (edge list, labels
/// ignored). Throws std::invalid_argument on an unknown or malformed spec.
Pattern parse_pattern_spec(std::string_view spec);

}  // namespace contentmax
