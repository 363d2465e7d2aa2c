#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "contentmax/digraph.hpp"
#include "contentmax/pattern.hpp"

namespace contentmax {

/// One subgraph of Γ isomorphic to the pattern. Identity is the edge set;
/// `vertex_map` records one embedding that produces it.
struct Copy {
    std::vector<std::size_t> edges;     ///< positions in g.edges(), ascending
    std::vector<VertexId> vertex_map;   ///< pattern vertex -> graph vertex

    friend bool operator==(const Copy& a, const Copy& b) { return a.edges == b.edges; }
};

struct CopyEnumeration {
    std::vector<Copy> copies;           ///< sorted by edge set
    std::uint64_t embedding_count = 0;  ///< injective homomorphisms before dedup
};

/// Every copy of E in g exactly once, in canonical (sorted edge set) order,
/// together with the number of injective homomorphisms E -> g. The latter is
/// always copies.size() * E.automorphism_count().
///
/// Backtracking over E's vertices in a connectivity-first order; candidates
/// for a vertex come from the neighborhood of an already-mapped neighbor.
CopyEnumeration enumerate_copies_counted(const LabeledDigraph& g, const Pattern& pattern);

std::vector<Copy> enumerate_copies(const LabeledDigraph& g, const Pattern& pattern);

/// ct of one copy: the product of its edge labels.
Label copy_content(const LabeledDigraph& g, const Copy& copy);

/// ct^E(g), the sum of the contents of all copies of E in g.
Label pattern_content(const LabeledDigraph& g, const Pattern& pattern);
Label pattern_content(const LabeledDigraph& g, const std::vector<Copy>& copies);

/// |A^k| for the adjacency matrix A of a DAG. In a DAG every length-k walk
/// is a path traversed one way, so this equals pattern_content(g, path k).
/// Throws std::invalid_argument if g has a cycle.
Label path_content_via_matrix(const LabeledDigraph& g, std::size_t k);

/// Which copies pass through each edge of g.
class CopyIncidence {
public:
    CopyIncidence(const LabeledDigraph& g, const std::vector<Copy>& copies);

    bool on_some_copy(std::size_t edge) const;
    bool share_copy(std::size_t e, std::size_t f) const;
    /// Indices into the copy list, ascending.
    std::vector<std::size_t> copies_through(std::size_t edge) const;

private:
    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> bits_;
};

struct CoverageResult {
    bool holds = true;
    /// First violating pair (e, f) with e <= f in edge order; e == f means
    /// the edge lies on no copy at all.
    std::optional<std::pair<EdgeKey, EdgeKey>> witness;
};

/// Every two edges of g, including an edge paired with itself, lie on a
/// common copy of E.
CoverageResult check_coverage(const LabeledDigraph& g, const Pattern& pattern);
CoverageResult check_coverage(const LabeledDigraph& g, const std::vector<Copy>& copies);

}  // namespace contentmax
