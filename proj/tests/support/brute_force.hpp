#pragma once

// Test-only oracles. None of these call into the copy enumerator, the
// optimizer or the closed forms they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "contentmax/digraph.hpp"
#include "contentmax/label.hpp"
#include "contentmax/pattern.hpp"

namespace contentmax::brute {

/// Copies of E in g by trying every |E(E)|-subset of g's edges and every
/// bijection from E's vertices onto the subset's endpoints.
inline std::vector<std::vector<std::size_t>> brute_force_copies(const LabeledDigraph& g, const Pattern& pattern) {
    const std::size_t m = g.edge_count();
    const std::size_t want = pattern.edge_count();
    std::vector<std::vector<std::size_t>> result;
    if (want > m) return result;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(want), true);
    std::set<std::pair<std::size_t, std::size_t>> pattern_edges(pattern.edges().begin(), pattern.edges().end());
    do {
        std::vector<std::size_t> subset;
        std::set<VertexId> endpoints;
        for (std::size_t i = 0; i < m; ++i) {
            if (pick[i]) {
                subset.push_back(i);
                endpoints.insert(g.edge(i).src);
                endpoints.insert(g.edge(i).dst);
            }
        }
        if (endpoints.size() != pattern.vertex_count()) continue;
        std::vector<VertexId> verts(endpoints.begin(), endpoints.end());
        std::set<std::pair<VertexId, VertexId>> sub_edges;
        for (std::size_t i : subset) sub_edges.insert({g.edge(i).src, g.edge(i).dst});
        bool iso = false;
        std::vector<std::size_t> perm(verts.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // pattern vertex p -> verts[perm[p]]
            std::set<std::pair<VertexId, VertexId>> mapped;
            for (auto [s, d] : pattern_edges) mapped.insert({verts[perm[s]], verts[perm[d]]});
            if (mapped == sub_edges) iso = true;
        } while (!iso && std::next_permutation(perm.begin(), perm.end()));
        if (iso) result.push_back(subset);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(result.begin(), result.end());
    return result;
}

inline Label brute_force_ct(const LabeledDigraph& g, const Pattern& pattern) {
    Label total;
    for (const auto& subset : brute_force_copies(g, pattern)) {
        Label product{1};
        for (std::size_t i : subset) product *= g.edge(i).label;
        total += product;
    }
    return total;
}

/// All n! permutations.
inline std::uint64_t brute_force_automorphisms(std::size_t n, const Pattern::EdgeList& edges) {
    std::set<std::pair<std::size_t, std::size_t>> e(edges.begin(), edges.end());
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        std::set<std::pair<std::size_t, std::size_t>> mapped;
        for (auto [s, d] : e) mapped.insert({perm[s], perm[d]});
        if (mapped == e) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Sum over all a-subsets, by bitmask.
inline Label brute_force_elementary(std::size_t a, const std::vector<Label>& xs) {
    Label total;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << xs.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != a) continue;
        Label product{1};
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (mask >> i & 1U) product *= xs[i];
        }
        total += product;
    }
    return total;
}

/// Max product over all k-tuples of nonnegative integers summing to n,
/// by odometer over [0, n]^k.
inline Label brute_force_max_product(std::uint64_t n, std::size_t k) {
    std::vector<std::uint64_t> digits(k, 0);
    Label best;
    while (true) {
        if (std::accumulate(digits.begin(), digits.end(), std::uint64_t{0}) == n) {
            Label product{1};
            for (auto d : digits) product *= Label(static_cast<std::int64_t>(d));
            best = std::max(best, product);
        }
        std::size_t i = 0;
        while (i < k && digits[i] == n) digits[i++] = 0;
        if (i == k) break;
        ++digits[i];
    }
    return best;
}

inline Label random_label(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(1, 20);
    std::uniform_int_distribution<std::int64_t> den(1, 6);
    return Label::fraction(num(rng), den(rng));
}

/// Random DAG on 2..max_vertices vertices with rational labels. Vertex
/// names are shuffled so insertion order is not a topological order.
inline LabeledDigraph random_dag(std::mt19937_64& rng, std::size_t max_vertices = 6, double density = 0.5) {
    std::uniform_int_distribution<std::size_t> vcount(2, max_vertices);
    const std::size_t n = vcount(rng);
    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    std::bernoulli_distribution present(density);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (rank[i] < rank[j] && present(rng)) pairs.emplace_back(i, j);
        }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    auto g = LabeledDigraph::with_vertices(n);
    for (auto [i, j] : pairs) g.add_edge(i, j, random_label(rng));
    return g;
}

/// Random digraph, cycles and (optionally) self-loops allowed.
inline LabeledDigraph random_digraph(std::mt19937_64& rng, std::size_t max_vertices = 6, double density = 0.35,
                                     bool loops = true) {
    std::uniform_int_distribution<std::size_t> vcount(1, max_vertices);
    const std::size_t n = vcount(rng);
    std::bernoulli_distribution present(density);
    auto g = LabeledDigraph::with_vertices(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if ((i != j || loops) && present(rng)) g.add_edge(i, j, random_label(rng));
        }
    }
    return g;
}

}  // namespace contentmax::brute
