#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contentmax/bounds.hpp"
#include "contentmax/digraph.hpp"
#include "contentmax/pattern.hpp"

namespace contentmax {

// Brute-force ground truth. Everything here enumerates a finite space
// exhaustively and uses only exact arithmetic; sizes are desk scale.

/// Which ordered vertex pairs of a v-vertex graph may carry an edge.
enum class CellSpace {
    Forward,       ///< i < j only: every DAG has such a numbering
    NoLoops,       ///< all i != j
    WithLoops,     ///< all pairs, self-loops included
};

/// Number of positive-integer labelings of weight N supported on any
/// nonempty subset of the cells: sum over s of C(cells, s) C(N-1, s-1).
std::uint64_t weighted_graph_count(std::uint64_t n, std::size_t cells);

std::size_t cell_count(std::size_t vertices, CellSpace space);

/// Every ℤ≥0-labeled graph of weight N on vertices "0".."v-1" whose edges
/// lie in the given cells. Order: support by smallest cell, then support
/// size, then remaining cells lexicographically, then the composition of N.
void for_each_weighted_graph(std::uint64_t n, std::size_t vertices, CellSpace space,
                             const std::function<void(const LabeledDigraph&)>& fn);

/// Forward normal form DAGs of weight N on v vertices.
std::vector<LabeledDigraph> enumerate_weighted_dags(std::uint64_t n, std::size_t vertices);

struct SearchResult {
    Label best_value;
    std::vector<LabeledDigraph> maximizers;  ///< canonical forms, sorted, deduplicated
    std::uint64_t search_space_size = 0;
    std::uint64_t n = 0;
    std::size_t vertices = 0;
    std::string pattern;
    std::string space;  ///< human-readable description of the enumerated set
};

/// Exact max of ct^E over forward-form DAGs of weight N on `vertices`
/// vertices; by topological sorting this is the max over all DAGs with at
/// most that many vertices. Throws std::invalid_argument when the pattern
/// does not fit or the space exceeds `limit` graphs.
SearchResult max_ct_over_dags(std::uint64_t n, const Pattern& pattern, std::size_t vertices,
                              std::uint64_t limit = 50'000'000);

/// Same over general digraphs (cycles allowed; self-loops if requested).
SearchResult max_ct_over_digraphs(std::uint64_t n, const Pattern& pattern, std::size_t vertices, bool loops = true,
                                  std::uint64_t limit = 50'000'000);

struct CompositionMax {
    Label max_product;
    std::vector<Tuple> argmax;       ///< lexicographic order
    std::uint64_t compositions = 0;  ///< C(N+k-1, k-1)
};

/// Exhaustive max of the product over k-tuples of nonnegative integers
/// summing to N.
CompositionMax max_product_composition(std::uint64_t n, std::uint64_t k);

struct TupleSearchResult {
    Label max_value;
    std::vector<Tuple> argmax;  ///< as nonincreasing tuples, deduplicated
    std::uint64_t tuples = 0;   ///< compositions examined, 2^(N-1)
};

/// Exhaustive max of e_a over tuples of positive integers of any length
/// summing to N.
TupleSearchResult max_elementary_symmetric(std::uint64_t n, std::uint64_t a);

struct NilpotentBoundReport {
    Label n;
    std::uint64_t k = 0;
    std::size_t dim = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t holds = 0;  ///< trials with |A^k| <= (N/k)^k
    Label bound;
    Label max_observed;                 ///< largest |A^k| seen
    std::optional<Label> max_ratio;     ///< max |A^k| / bound, if bound > 0
    std::optional<std::string> first_violation;
    Label witness_value;                ///< |A^k| of the equal-label path matrix
    bool witness_attains = false;

    bool all_hold() const { return holds == trials && !first_violation; }
};

/// Random strictly upper-triangular matrix of weight exactly N: integer
/// entries uniform in [1, 1000] on a random nonempty support (the full
/// strictly-upper support on every fourth trial), scaled exactly.
LabeledMatrix random_nilpotent_matrix(const Label& n, std::size_t dim, std::uint64_t seed, std::uint64_t trial);

/// Samples `trials` matrices (trial i seeded from (seed, i)) and checks the
/// power bound exactly on each; also checks that the (k+1)-dimensional path
/// matrix with entries N/k attains it. Throws for dim < 2 or k == 0.
NilpotentBoundReport check_nilpotent_bound(const Label& n, std::uint64_t k, std::size_t dim, std::uint64_t trials,
                                           std::uint64_t seed);

struct ClassificationResult {
    std::size_t k = 0;
    std::size_t max_vertices = 0;
    std::size_t max_edges = 0;
    std::uint64_t candidates = 0;            ///< supports examined
    std::vector<LabeledDigraph> graphs;      ///< canonical unit-labeled survivors
};

/// All loop-free digraphs with 1..max_edges edges on at most max_vertices
/// vertices in which every two edges lie on a common k-path, up to
/// isomorphism.
ClassificationResult classify_coverage_graphs(std::size_t k, std::size_t max_vertices, std::size_t max_edges);

/// Unit-labeled directed cycle on m vertices.
LabeledDigraph directed_cycle(std::size_t m);

}  // namespace contentmax
