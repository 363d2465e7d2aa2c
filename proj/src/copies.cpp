#include "contentmax/copies.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "contentmax/matrix.hpp"

namespace contentmax {

namespace {

struct Neighbor {
    VertexId vertex;
    std::size_t edge;
};

/// Sorted out/in neighbor lists of g with edge positions.
class Adjacency {
public:
    explicit Adjacency(const LabeledDigraph& g) : out_(g.vertex_count()), in_(g.vertex_count()) {
        const auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            out_[edges[i].src].push_back({edges[i].dst, i});
            in_[edges[i].dst].push_back({edges[i].src, i});
        }
        auto by_vertex = [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; };
        for (auto& list : out_) std::sort(list.begin(), list.end(), by_vertex);
        for (auto& list : in_) std::sort(list.begin(), list.end(), by_vertex);
    }

    const std::vector<Neighbor>& out(VertexId v) const { return out_[v]; }
    const std::vector<Neighbor>& in(VertexId v) const { return in_[v]; }

    /// Position of edge src -> dst, if present.
    std::optional<std::size_t> find(VertexId src, VertexId dst) const {
        const auto& list = out_[src];
        auto it = std::lower_bound(list.begin(), list.end(), dst,
                                   [](const Neighbor& n, VertexId v) { return n.vertex < v; });
        if (it != list.end() && it->vertex == dst) return it->edge;
        return std::nullopt;
    }

private:
    std::vector<std::vector<Neighbor>> out_;
    std::vector<std::vector<Neighbor>> in_;
};

/// Edge of the pattern between the vertex being placed and one placed
/// earlier. `outgoing` means placed -> earlier.
struct Constraint {
    std::size_t earlier;
    bool outgoing;
};

struct SearchPlan {
    std::vector<std::size_t> order;                    // pattern vertices in placement order
    std::vector<std::vector<Constraint>> constraints;  // per position in `order`
};

SearchPlan plan_search(const Pattern& pattern) {
    const std::size_t n = pattern.vertex_count();
    std::vector<std::vector<std::pair<std::size_t, bool>>> incident(n);  // (other, outgoing)
    for (auto [s, d] : pattern.edges()) {
        incident[s].push_back({d, true});
        incident[d].push_back({s, false});
    }
    SearchPlan plan;
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);  // edges to already placed vertices
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (best == n || links[v] > links[best] ||
                (links[v] == links[best] && incident[v].size() > incident[best].size())) {
                best = v;
            }
        }
        placed[best] = true;
        plan.order.push_back(best);
        std::vector<Constraint> cs;
        for (auto [other, outgoing] : incident[best]) {
            if (placed[other] && other != best) {
                cs.push_back({other, outgoing});
            } else {
                ++links[other];
            }
        }
        plan.constraints.push_back(std::move(cs));
    }
    return plan;
}

}  // namespace

CopyEnumeration enumerate_copies_counted(const LabeledDigraph& g, const Pattern& pattern) {
    const Adjacency adj(g);
    const SearchPlan plan = plan_search(pattern);
    const std::size_t pn = pattern.vertex_count();
    const std::size_t gn = g.vertex_count();

    std::vector<VertexId> image(pn, 0);
    std::vector<bool> used(gn, false);
    std::map<std::vector<std::size_t>, std::vector<VertexId>> found;
    std::uint64_t embeddings = 0;
    std::vector<std::size_t> key;

    auto fits = [&](std::size_t pos, VertexId w) {
        for (const Constraint& c : plan.constraints[pos]) {
            const VertexId other = image[c.earlier];
            const bool present = c.outgoing ? adj.find(w, other).has_value() : adj.find(other, w).has_value();
            if (!present) return false;
        }
        return true;
    };

    auto record = [&] {
        ++embeddings;
        key.clear();
        for (auto [s, d] : pattern.edges()) key.push_back(*adj.find(image[s], image[d]));
        std::sort(key.begin(), key.end());
        found.try_emplace(key, image);
    };

    auto place = [&](auto&& self, std::size_t pos) -> void {
        if (pos == pn) {
            record();
            return;
        }
        const std::size_t v = plan.order[pos];
        auto attempt = [&](VertexId w) {
            if (used[w] || !fits(pos, w)) return;
            used[w] = true;
            image[v] = w;
            self(self, pos + 1);
            used[w] = false;
        };
        const auto& cs = plan.constraints[pos];
        if (cs.empty()) {
            for (VertexId w = 0; w < gn; ++w) attempt(w);
        } else {
            // Pattern edge v -> earlier means w must be an in-neighbor of
            // the earlier vertex's image, and vice versa.
            const VertexId anchor = image[cs.front().earlier];
            const auto& list = cs.front().outgoing ? adj.in(anchor) : adj.out(anchor);
            for (const Neighbor& nb : list) attempt(nb.vertex);
        }
    };
    place(place, 0);

    CopyEnumeration result;
    result.embedding_count = embeddings;
    result.copies.reserve(found.size());
    for (auto& [edges, map] : found) result.copies.push_back(Copy{edges, map});
    return result;
}

std::vector<Copy> enumerate_copies(const LabeledDigraph& g, const Pattern& pattern) {
    return enumerate_copies_counted(g, pattern).copies;
}

Label copy_content(const LabeledDigraph& g, const Copy& copy) {
    Label product{1};
    for (std::size_t e : copy.edges) product *= g.edge(e).label;
    return product;
}

Label pattern_content(const LabeledDigraph& g, const std::vector<Copy>& copies) {
    Label total;
    for (const Copy& c : copies) total += copy_content(g, c);
    return total;
}

Label pattern_content(const LabeledDigraph& g, const Pattern& pattern) {
    return pattern_content(g, enumerate_copies(g, pattern));
}

Label path_content_via_matrix(const LabeledDigraph& g, std::size_t k) {
    if (!is_dag(g)) throw std::invalid_argument("path_content_via_matrix: graph has a directed cycle");
    if (g.vertex_count() == 0) return Label{};
    return mat_weight(mat_pow(to_adjacency(g), k));
}

CopyIncidence::CopyIncidence(const LabeledDigraph& g, const std::vector<Copy>& copies)
    : words_((copies.size() + 63) / 64), bits_(g.edge_count(), std::vector<std::uint64_t>(words_, 0)) {
    for (std::size_t c = 0; c < copies.size(); ++c) {
        for (std::size_t e : copies[c].edges) bits_[e][c / 64] |= std::uint64_t{1} << (c % 64);
    }
}

bool CopyIncidence::on_some_copy(std::size_t edge) const {
    return std::any_of(bits_[edge].begin(), bits_[edge].end(), [](std::uint64_t w) { return w != 0; });
}

bool CopyIncidence::share_copy(std::size_t e, std::size_t f) const {
    for (std::size_t w = 0; w < words_; ++w) {
        if ((bits_[e][w] & bits_[f][w]) != 0) return true;
    }
    return false;
}

std::vector<std::size_t> CopyIncidence::copies_through(std::size_t edge) const {
    std::vector<std::size_t> result;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = bits_[edge][w];
        while (word != 0) {
            result.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return result;
}

CoverageResult check_coverage(const LabeledDigraph& g, const std::vector<Copy>& copies) {
    const CopyIncidence incidence(g, copies);
    const std::size_t m = g.edge_count();
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t f = e; f < m; ++f) {
            if (!incidence.share_copy(e, f)) {
                return CoverageResult{false, std::make_pair(g.edge(e).key(), g.edge(f).key())};
            }
        }
    }
    return CoverageResult{};
}

CoverageResult check_coverage(const LabeledDigraph& g, const Pattern& pattern) {
    return check_coverage(g, enumerate_copies(g, pattern));
}

}  // namespace contentmax
