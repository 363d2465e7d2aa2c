#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "contentmax/label.hpp"

namespace contentmax {

using VertexId = std::size_t;

/// Ordered vertex pair identifying an edge by its endpoints' insertion
/// indices.
struct EdgeKey {
    VertexId src = 0;
    VertexId dst = 0;

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct Edge {
    VertexId src = 0;
    VertexId dst = 0;
    Label label;

    EdgeKey key() const { return {src, dst}; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

class LabeledMatrix;

/// A simple directed graph whose edges carry positive exact labels. A pair
/// without an edge has label 0, and a zero label is never stored: adding an
/// edge with label 0 only registers its endpoints. Multigraphs are encoded
/// by putting the multiplicity into the label.
///
/// Vertices and edges keep their insertion order, which is the canonical
/// order for every deterministic tie-break in the library. Self-loops are
/// allowed here; operations that need a DAG reject them.
class LabeledDigraph {
public:
    LabeledDigraph() = default;

    /// Graph with vertices named "0".."n-1" and no edges.
    static LabeledDigraph with_vertices(std::size_t n);

    /// Returns the id of `name`, creating the vertex if needed.
    VertexId add_vertex(std::string_view name);

    /// Throws std::invalid_argument if the pair is already an edge or an
    /// endpoint is out of range.
    void add_edge(VertexId src, VertexId dst, const Label& label);
    void add_edge(std::string_view src, std::string_view dst, const Label& label);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& name(VertexId v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<VertexId> find_vertex(std::string_view name) const;

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    bool has_edge(EdgeKey key) const { return index_.contains(key); }
    /// Position of the edge in insertion order.
    std::optional<std::size_t> edge_index(EdgeKey key) const;
    /// ℓ(src, dst); zero for a non-edge.
    Label label(EdgeKey key) const;

    /// Copy of this graph without `key`. Vertices are kept.
    LabeledDigraph without_edge(EdgeKey key) const;
    /// Copy of this graph with the label of an existing edge replaced by a
    /// positive value.
    LabeledDigraph relabeled(EdgeKey key, const Label& label) const;

    /// Vertex names in order, edges in order, labels exact.
    friend bool operator==(const LabeledDigraph& a, const LabeledDigraph& b) {
        return a.names_ == b.names_ && a.edges_ == b.edges_;
    }

private:
    void rebuild_index();

    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> by_name_;
    std::vector<Edge> edges_;
    std::map<EdgeKey, std::size_t> index_;
};

/// Same edge mapping by vertex name (ℓ(x, y) agrees for every pair) and the
/// same vertex name set, ignoring insertion order.
bool same_labeling(const LabeledDigraph& a, const LabeledDigraph& b);

Label weight(const LabeledDigraph& g);
Label content(const LabeledDigraph& g);

/// Product of the labels of the edges outside `excluded`. Throws
/// std::invalid_argument if some excluded pair is not an edge of g.
Label exclusive_content(const LabeledDigraph& g, std::span<const EdgeKey> excluded);

/// Topological order (smallest insertion index first among ready
/// vertices), or nullopt if g has a directed cycle. A self-loop is a cycle.
std::optional<std::vector<VertexId>> topological_order(const LabeledDigraph& g);
bool is_dag(const LabeledDigraph& g);

/// Adjacency matrix in vertex insertion order.
LabeledMatrix to_adjacency(const LabeledDigraph& g);

/// Zero entries become non-edges. Vertex names default to "0".."n-1";
/// otherwise `names` must have exactly A.dim() distinct entries.
LabeledDigraph from_adjacency(const LabeledMatrix& a, std::span<const std::string> names = {});

}  // namespace contentmax
