#include "contentmax/digraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "contentmax/matrix.hpp"

namespace contentmax {

LabeledDigraph LabeledDigraph::with_vertices(std::size_t n) {
    LabeledDigraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    return g;
}

VertexId LabeledDigraph::add_vertex(std::string_view name) {
    std::string key(name);
    if (auto it = by_name_.find(key); it != by_name_.end()) return it->second;
    const VertexId id = names_.size();
    names_.push_back(key);
    by_name_.emplace(std::move(key), id);
    return id;
}

void LabeledDigraph::add_edge(VertexId src, VertexId dst, const Label& label) {
    if (src >= names_.size() || dst >= names_.size()) {
        throw std::invalid_argument("add_edge: vertex id out of range");
    }
    const EdgeKey key{src, dst};
    if (index_.contains(key)) {
        throw std::invalid_argument("duplicate edge " + names_[src] + " -> " + names_[dst]);
    }
    if (label.is_zero()) return;
    index_.emplace(key, edges_.size());
    edges_.push_back(Edge{src, dst, label});
}

void LabeledDigraph::add_edge(std::string_view src, std::string_view dst, const Label& label) {
    const VertexId s = add_vertex(src);
    const VertexId d = add_vertex(dst);
    add_edge(s, d, label);
}

std::optional<VertexId> LabeledDigraph::find_vertex(std::string_view name) const {
    if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) return it->second;
    return std::nullopt;
}

std::optional<std::size_t> LabeledDigraph::edge_index(EdgeKey key) const {
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    return std::nullopt;
}

Label LabeledDigraph::label(EdgeKey key) const {
    if (auto idx = edge_index(key)) return edges_[*idx].label;
    return Label{};
}

LabeledDigraph LabeledDigraph::without_edge(EdgeKey key) const {
    auto idx = edge_index(key);
    if (!idx) throw std::invalid_argument("without_edge: not an edge");
    LabeledDigraph g = *this;
    g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(*idx));
    g.rebuild_index();
    return g;
}

LabeledDigraph LabeledDigraph::relabeled(EdgeKey key, const Label& label) const {
    auto idx = edge_index(key);
    if (!idx) throw std::invalid_argument("relabeled: not an edge");
    if (label.is_zero()) throw std::invalid_argument("relabeled: label must be positive");
    LabeledDigraph g = *this;
    g.edges_[*idx].label = label;
    return g;
}

void LabeledDigraph::rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < edges_.size(); ++i) index_.emplace(edges_[i].key(), i);
}

bool same_labeling(const LabeledDigraph& a, const LabeledDigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (const auto& name : a.names()) {
        if (!b.find_vertex(name)) return false;
    }
    for (const Edge& e : a.edges()) {
        const auto s = b.find_vertex(a.name(e.src));
        const auto d = b.find_vertex(a.name(e.dst));
        if (b.label(EdgeKey{*s, *d}) != e.label) return false;
    }
    return true;
}

Label weight(const LabeledDigraph& g) {
    Label total;
    for (const Edge& e : g.edges()) total += e.label;
    return total;
}

Label content(const LabeledDigraph& g) {
    Label product{1};
    for (const Edge& e : g.edges()) product *= e.label;
    return product;
}

Label exclusive_content(const LabeledDigraph& g, std::span<const EdgeKey> excluded) {
    std::set<EdgeKey> skip;
    for (const EdgeKey& key : excluded) {
        if (!g.has_edge(key)) {
            throw std::invalid_argument("exclusive_content: excluded pair is not an edge");
        }
        skip.insert(key);
    }
    Label product{1};
    for (const Edge& e : g.edges()) {
        if (!skip.contains(e.key())) product *= e.label;
    }
    return product;
}

std::optional<std::vector<VertexId>> topological_order(const LabeledDigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> indegree(n, 0);
    std::vector<std::vector<VertexId>> out(n);
    for (const Edge& e : g.edges()) {
        if (e.src == e.dst) return std::nullopt;
        ++indegree[e.dst];
        out[e.src].push_back(e.dst);
    }
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }
    std::vector<VertexId> order;
    order.reserve(n);
    while (!ready.empty()) {
        const VertexId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (VertexId w : out[v]) {
            if (--indegree[w] == 0) ready.push(w);
        }
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

bool is_dag(const LabeledDigraph& g) {
    return topological_order(g).has_value();
}

LabeledMatrix to_adjacency(const LabeledDigraph& g) {
    LabeledMatrix a(g.vertex_count());
    for (const Edge& e : g.edges()) a.at(e.src, e.dst) = e.label;
    return a;
}

LabeledDigraph from_adjacency(const LabeledMatrix& a, std::span<const std::string> names) {
    const std::size_t n = a.dim();
    LabeledDigraph g;
    if (names.empty()) {
        g = LabeledDigraph::with_vertices(n);
    } else {
        if (names.size() != n) throw std::invalid_argument("from_adjacency: wrong number of vertex names");
        for (const auto& name : names) g.add_vertex(name);
        if (g.vertex_count() != n) throw std::invalid_argument("from_adjacency: vertex names are not distinct");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g.add_edge(i, j, a.at(i, j));
        }
    }
    return g;
}

}  // namespace contentmax
