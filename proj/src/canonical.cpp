#include "contentmax/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "contentmax/text_io.hpp"

namespace contentmax {

namespace {

struct Encoded {
    VertexId src;
    VertexId dst;
    const Label* label;

    friend bool operator<(const Encoded& a, const Encoded& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return *a.label < *b.label;
    }
};

bool less_than(const std::vector<Encoded>& a, const std::vector<Encoded>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

LabeledDigraph canonical_form(const LabeledDigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> outdeg(n, 0);
    std::vector<std::size_t> indeg(n, 0);
    for (const Edge& e : g.edges()) {
        ++outdeg[e.src];
        ++indeg[e.dst];
    }
    std::vector<VertexId> active;
    for (VertexId v = 0; v < n; ++v) {
        if (outdeg[v] + indeg[v] > 0) active.push_back(v);
    }
    auto signature = [&](VertexId v) { return std::make_tuple(outdeg[v], indeg[v]); };
    std::stable_sort(active.begin(), active.end(),
                     [&](VertexId a, VertexId b) { return signature(a) > signature(b); });
    const std::size_t m = active.size();

    // Block of new positions sharing a signature: [block_begin[p], block_end[p]).
    std::vector<std::size_t> block_begin(m);
    std::vector<std::size_t> block_end(m);
    for (std::size_t p = 0; p < m;) {
        std::size_t q = p;
        while (q < m && signature(active[q]) == signature(active[p])) ++q;
        for (std::size_t i = p; i < q; ++i) {
            block_begin[i] = p;
            block_end[i] = q;
        }
        p = q;
    }

    std::vector<VertexId> new_id(n, 0);
    std::vector<bool> taken(m, false);  // indexed by position in `active`
    std::vector<Encoded> best;
    std::vector<Encoded> current;
    bool have_best = false;

    auto evaluate = [&] {
        current.clear();
        for (const Edge& e : g.edges()) current.push_back({new_id[e.src], new_id[e.dst], &e.label});
        std::sort(current.begin(), current.end());
        if (!have_best || less_than(current, best)) {
            best = current;
            have_best = true;
        }
    };
    auto assign = [&](auto&& self, std::size_t pos) -> void {
        if (pos == m) {
            evaluate();
            return;
        }
        for (std::size_t i = block_begin[pos]; i < block_end[pos]; ++i) {
            if (taken[i]) continue;
            taken[i] = true;
            new_id[active[i]] = pos;
            self(self, pos + 1);
            taken[i] = false;
        }
    };
    assign(assign, 0);

    auto result = LabeledDigraph::with_vertices(m);
    for (const Encoded& e : best) result.add_edge(e.src, e.dst, *e.label);
    return result;
}

std::string canonical_key(const LabeledDigraph& g) {
    return to_edge_list(canonical_form(g));
}

bool isomorphic(const LabeledDigraph& a, const LabeledDigraph& b) {
    if (a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::optional<std::string> shape_name(const LabeledDigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> outdeg(n, 0);
    std::vector<std::size_t> indeg(n, 0);
    std::vector<VertexId> succ(n, 0);
    for (const Edge& e : g.edges()) {
        if (e.src == e.dst) return std::nullopt;
        ++outdeg[e.src];
        ++indeg[e.dst];
        succ[e.src] = e.dst;
    }
    std::size_t active = 0;
    std::size_t sources = 0;
    VertexId start = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (outdeg[v] > 1 || indeg[v] > 1) return std::nullopt;
        if (outdeg[v] + indeg[v] == 0) continue;
        ++active;
        if (indeg[v] == 0) {
            ++sources;
            start = v;
        }
    }
    const std::size_t m = g.edge_count();
    if (m == 0 || sources > 1) return std::nullopt;
    if (sources == 1) {
        // Connected iff the walk from the source covers every edge.
        std::size_t steps = 0;
        for (VertexId v = start; outdeg[v] == 1; v = succ[v]) ++steps;
        if (steps != m) return std::nullopt;
        return "P" + std::to_string(m);
    }
    // No source: disjoint cycles; connected iff one cycle covers all.
    for (VertexId v = 0; v < n; ++v) {
        if (outdeg[v] == 1) {
            std::size_t steps = 0;
            VertexId w = v;
            do {
                w = succ[w];
                ++steps;
            } while (w != v);
            if (steps != m || active != m) return std::nullopt;
            return "C" + std::to_string(m);
        }
    }
    return std::nullopt;
}

}  // namespace contentmax
