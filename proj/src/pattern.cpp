#include "contentmax/pattern.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <stdexcept>

#include "contentmax/text_io.hpp"

namespace contentmax {

namespace {

std::uint64_t checked_factorial(std::size_t n) {
    if (n > 20) throw std::invalid_argument("pattern too large: automorphism count overflows 64 bits");
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_positive(std::size_t value, const char* what) {
    if (value == 0) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

void validate(std::size_t vertex_count, const Pattern::EdgeList& edges) {
    if (edges.empty()) throw std::invalid_argument("pattern has no edges");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<bool> touched(vertex_count, false);
    for (auto [s, d] : edges) {
        if (s >= vertex_count || d >= vertex_count) throw std::invalid_argument("pattern edge endpoint out of range");
        if (s == d) throw std::invalid_argument("pattern has a loop at vertex " + std::to_string(s));
        if (!seen.insert({s, d}).second) {
            throw std::invalid_argument("pattern repeats edge " + std::to_string(s) + " -> " + std::to_string(d));
        }
        touched[s] = touched[d] = true;
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        if (!touched[v]) throw std::invalid_argument("pattern vertex " + std::to_string(v) + " is on no edge");
    }
}

std::size_t parse_count(std::string_view text, std::string_view spec) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw std::invalid_argument("malformed pattern spec '" + std::string(spec) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

Pattern::Pattern(std::size_t vertex_count, EdgeList edges, std::uint64_t automorphisms, std::string description)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      automorphism_count_(automorphisms),
      description_(std::move(description)) {}

Pattern Pattern::path(std::size_t k) {
    require_positive(k, "path length");
    EdgeList edges;
    for (std::size_t i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
    return Pattern(k + 1, std::move(edges), 1, "path:" + std::to_string(k));
}

Pattern Pattern::star(std::size_t arms) {
    require_positive(arms, "star arm count");
    EdgeList edges;
    for (std::size_t i = 0; i < arms; ++i) edges.emplace_back(i, arms);
    return Pattern(arms + 1, std::move(edges), checked_factorial(arms), "star:" + std::to_string(arms));
}

Pattern Pattern::equistar(std::size_t arms, std::size_t arm_length) {
    require_positive(arms, "equistar arm count");
    require_positive(arm_length, "equistar arm length");
    // Arm i occupies ids 1 + i*len .. (i+1)*len; id 1 + i*len is next to the root.
    EdgeList edges;
    for (std::size_t i = 0; i < arms; ++i) {
        const std::size_t base = 1 + i * arm_length;
        edges.emplace_back(base, 0);
        for (std::size_t j = 1; j < arm_length; ++j) edges.emplace_back(base + j, base + j - 1);
    }
    return Pattern(arms * arm_length + 1, std::move(edges), checked_factorial(arms),
                   "equistar:" + std::to_string(arms) + ":" + std::to_string(arm_length));
}

Pattern Pattern::explicit_edges(std::size_t vertex_count, EdgeList edges, std::string description) {
    validate(vertex_count, edges);
    const std::uint64_t aut = count_automorphisms(vertex_count, edges);
    return Pattern(vertex_count, std::move(edges), aut, std::move(description));
}

std::uint64_t count_automorphisms(std::size_t vertex_count, const Pattern::EdgeList& edges) {
    const std::size_t n = vertex_count;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::size_t> outdeg(n, 0);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [s, d] : edges) {
        adj[s][d] = true;
        ++outdeg[s];
        ++indeg[d];
    }
    std::vector<std::size_t> image(n);
    std::vector<bool> used(n, false);
    std::uint64_t count = 0;

    auto extend = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || outdeg[w] != outdeg[v] || indeg[w] != indeg[v]) continue;
            bool ok = adj[v][v] == adj[w][w];
            for (std::size_t u = 0; ok && u < v; ++u) {
                ok = adj[u][v] == adj[image[u]][w] && adj[v][u] == adj[w][image[u]];
            }
            if (!ok) continue;
            used[w] = true;
            image[v] = w;
            self(self, v + 1);
            used[w] = false;
        }
    };
    extend(extend, 0);
    return count;
}

Pattern parse_pattern_spec(std::string_view spec) {
    if (spec.starts_with("file:")) {
        const std::string path(spec.substr(5));
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open pattern file " + path);
        UnlabeledEdgeList list = read_unlabeled_edge_list(in);
        return Pattern::explicit_edges(list.vertices.size(), std::move(list.edges), std::string(spec));
    }
    const auto parts = split(spec, ':');
    if (parts[0] == "path" && parts.size() == 2) return Pattern::path(parse_count(parts[1], spec));
    if (parts[0] == "star" && parts.size() == 2) return Pattern::star(parse_count(parts[1], spec));
    if (parts[0] == "equistar" && parts.size() == 3) {
        return Pattern::equistar(parse_count(parts[1], spec), parse_count(parts[2], spec));
    }
    throw std::invalid_argument("unknown pattern spec '" + std::string(spec) + "'");
}

}  // namespace contentmax
