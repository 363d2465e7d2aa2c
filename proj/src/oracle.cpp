#include "contentmax/oracle.hpp"

#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "contentmax/canonical.hpp"
#include "contentmax/copies.hpp"
#include "contentmax/matrix.hpp"
#include "contentmax/parallel.hpp"
#include "contentmax/text_io.hpp"

namespace contentmax {

namespace {

std::vector<EdgeKey> make_cells(std::size_t vertices, CellSpace space) {
    std::vector<EdgeKey> cells;
    for (VertexId i = 0; i < vertices; ++i) {
        for (VertexId j = 0; j < vertices; ++j) {
            const bool allowed = space == CellSpace::Forward ? i < j : space == CellSpace::NoLoops ? i != j : true;
            if (allowed) cells.push_back({i, j});
        }
    }
    return cells;
}

/// Calls fn(labels) for every composition of `total` into `parts.size()`
/// positive parts, first part varying slowest.
void for_each_composition(std::uint64_t total, std::vector<std::uint64_t>& parts, std::size_t index,
                          const std::function<void()>& fn) {
    const std::size_t remaining_parts = parts.size() - index;
    if (remaining_parts == 1) {
        parts[index] = total;
        fn();
        return;
    }
    for (std::uint64_t x = 1; x + (remaining_parts - 1) <= total; ++x) {
        parts[index] = x;
        for_each_composition(total - x, parts, index + 1, fn);
    }
}

/// Calls fn() for every size-`want` subset of cells (first, cells.size())
/// appended to `chosen` in increasing order.
void for_each_subset(std::size_t from, std::size_t total, std::size_t want, std::vector<std::size_t>& chosen,
                     const std::function<void()>& fn) {
    if (want == 0) {
        fn();
        return;
    }
    for (std::size_t c = from; c + want <= total; ++c) {
        chosen.push_back(c);
        for_each_subset(c + 1, total, want - 1, chosen, fn);
        chosen.pop_back();
    }
}

/// All weighted graphs whose support has `first` as its smallest cell.
void enumerate_part(std::uint64_t n, std::size_t vertices, const std::vector<EdgeKey>& cells, std::size_t first,
                    const std::function<void(const LabeledDigraph&)>& fn) {
    const LabeledDigraph empty = LabeledDigraph::with_vertices(vertices);
    std::vector<std::size_t> chosen{first};
    const std::uint64_t max_size = std::min<std::uint64_t>(n, cells.size() - first);
    for (std::size_t size = 1; size <= max_size; ++size) {
        for_each_subset(first + 1, cells.size(), size - 1, chosen, [&] {
            std::vector<std::uint64_t> labels(size);
            for_each_composition(n, labels, 0, [&] {
                LabeledDigraph g = empty;
                for (std::size_t i = 0; i < size; ++i) {
                    g.add_edge(cells[chosen[i]].src, cells[chosen[i]].dst,
                               Label(static_cast<std::int64_t>(labels[i])));
                }
                fn(g);
            });
        });
    }
}

std::uint64_t to_count(const Label& value) {
    if (!value.value().get_num().fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
    return value.to_uint64();
}

struct PartBest {
    Label best;
    bool any = false;
    std::map<std::string, LabeledDigraph> maximizers;
};

void offer(PartBest& part, const Label& value, const LabeledDigraph& g) {
    if (!part.any || value > part.best) {
        part.best = value;
        part.any = true;
        part.maximizers.clear();
    }
    if (value == part.best) {
        LabeledDigraph canon = canonical_form(g);
        std::string key = to_edge_list(canon);
        part.maximizers.try_emplace(std::move(key), std::move(canon));
    }
}

void absorb(PartBest& total, PartBest&& part) {
    if (!part.any) return;
    if (!total.any || part.best > total.best) {
        total = std::move(part);
        return;
    }
    if (part.best == total.best) total.maximizers.merge(part.maximizers);
}

SearchResult search(std::uint64_t n, const Pattern& pattern, std::size_t vertices, CellSpace space,
                    std::uint64_t limit, std::string space_text) {
    if (vertices < pattern.vertex_count()) {
        throw std::invalid_argument("search needs at least " + std::to_string(pattern.vertex_count()) +
                                    " vertices to host " + pattern.description());
    }
    const auto cells = make_cells(vertices, space);
    SearchResult result;
    result.n = n;
    result.vertices = vertices;
    result.pattern = pattern.description();
    result.space = std::move(space_text);
    result.search_space_size = weighted_graph_count(n, cells.size());
    if (result.search_space_size > limit) {
        throw std::invalid_argument("search space has " + std::to_string(result.search_space_size) +
                                    " graphs, above the limit of " + std::to_string(limit));
    }

    PartBest total;
    if (n == 0 || cells.empty()) {
        offer(total, pattern_content(LabeledDigraph::with_vertices(vertices), pattern),
              LabeledDigraph::with_vertices(vertices));
    } else {
        std::vector<PartBest> parts(cells.size());
        run_parts(cells.size(), [&](std::size_t p) {
            enumerate_part(n, vertices, cells, p,
                           [&](const LabeledDigraph& g) { offer(parts[p], pattern_content(g, pattern), g); });
        });
        for (auto& part : parts) absorb(total, std::move(part));
    }
    result.best_value = total.best;
    for (auto& [key, g] : total.maximizers) result.maximizers.push_back(std::move(g));
    return result;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32U)};
    return std::mt19937_64(seq);
}

LabeledMatrix path_matrix(const Label& entry, std::uint64_t k) {
    LabeledMatrix a(static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i < k; ++i) a.at(i, i + 1) = entry;
    return a;
}

}  // namespace

std::uint64_t weighted_graph_count(std::uint64_t n, std::size_t cells) {
    if (n == 0) return 1;
    Label total;
    for (std::uint64_t s = 1; s <= std::min<std::uint64_t>(cells, n); ++s) {
        total += binomial(cells, s) * binomial(n - 1, s - 1);
    }
    return to_count(total);
}

std::size_t cell_count(std::size_t vertices, CellSpace space) {
    return make_cells(vertices, space).size();
}

void for_each_weighted_graph(std::uint64_t n, std::size_t vertices, CellSpace space,
                             const std::function<void(const LabeledDigraph&)>& fn) {
    if (n == 0) {
        fn(LabeledDigraph::with_vertices(vertices));
        return;
    }
    const auto cells = make_cells(vertices, space);
    for (std::size_t first = 0; first < cells.size(); ++first) enumerate_part(n, vertices, cells, first, fn);
}

std::vector<LabeledDigraph> enumerate_weighted_dags(std::uint64_t n, std::size_t vertices) {
    std::vector<LabeledDigraph> result;
    for_each_weighted_graph(n, vertices, CellSpace::Forward, [&](const LabeledDigraph& g) { result.push_back(g); });
    return result;
}

SearchResult max_ct_over_dags(std::uint64_t n, const Pattern& pattern, std::size_t vertices, std::uint64_t limit) {
    return search(n, pattern, vertices, CellSpace::Forward, limit,
                  "Z>=0-labeled DAGs of weight " + std::to_string(n) + " in forward form on " +
                      std::to_string(vertices) + " vertices");
}

SearchResult max_ct_over_digraphs(std::uint64_t n, const Pattern& pattern, std::size_t vertices, bool loops,
                                  std::uint64_t limit) {
    return search(n, pattern, vertices, loops ? CellSpace::WithLoops : CellSpace::NoLoops, limit,
                  "Z>=0-labeled digraphs of weight " + std::to_string(n) + " on " + std::to_string(vertices) +
                      " vertices" + (loops ? ", self-loops allowed" : ", no self-loops"));
}

CompositionMax max_product_composition(std::uint64_t n, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("max_product_composition: k must be at least 1");
    CompositionMax result;
    bool any = false;
    Tuple tuple(k, 0);
    // Weak compositions in lexicographic order.
    auto visit = [&](auto&& self, std::size_t index, std::uint64_t remaining) -> void {
        if (index + 1 == k) {
            tuple[index] = remaining;
            ++result.compositions;
            Label product{1};
            for (auto x : tuple) product *= Label(static_cast<std::int64_t>(x));
            if (!any || product > result.max_product) {
                result.max_product = product;
                result.argmax.clear();
                any = true;
            }
            if (product == result.max_product) result.argmax.push_back(tuple);
            return;
        }
        for (std::uint64_t x = 0; x <= remaining; ++x) {
            tuple[index] = x;
            self(self, index + 1, remaining - x);
        }
    };
    visit(visit, 0, n);
    return result;
}

TupleSearchResult max_elementary_symmetric(std::uint64_t n, std::uint64_t a) {
    if (a == 0) throw std::invalid_argument("max_elementary_symmetric: a must be at least 1");
    if (n > 30) throw std::invalid_argument("max_elementary_symmetric: N too large for exhaustive search");
    TupleSearchResult result;
    bool any = false;
    std::map<Tuple, bool> seen;
    Tuple tuple;
    auto visit = [&](auto&& self, std::uint64_t remaining) -> void {
        if (remaining == 0) {
            ++result.tuples;
            std::vector<Label> lambdas;
            for (auto x : tuple) lambdas.emplace_back(static_cast<std::int64_t>(x));
            const Label value = elementary_symmetric(a, lambdas);
            if (!any || value > result.max_value) {
                result.max_value = value;
                seen.clear();
                any = true;
            }
            if (value == result.max_value) {
                Tuple sorted = tuple;
                std::sort(sorted.rbegin(), sorted.rend());
                seen.emplace(std::move(sorted), true);
            }
            return;
        }
        for (std::uint64_t x = 1; x <= remaining; ++x) {
            tuple.push_back(x);
            self(self, remaining - x);
            tuple.pop_back();
        }
    };
    visit(visit, n);
    for (auto& [t, unused] : seen) result.argmax.push_back(t);
    return result;
}

LabeledMatrix random_nilpotent_matrix(const Label& n, std::size_t dim, std::uint64_t seed, std::uint64_t trial) {
    if (dim < 2) throw std::invalid_argument("random_nilpotent_matrix: dim must be at least 2");
    auto rng = trial_rng(seed, trial);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) cells.emplace_back(i, j);
    }
    // Every fourth trial uses the full strictly-upper support.
    const bool full = trial % 4 == 0;
    std::bernoulli_distribution keep(0.5);
    std::vector<bool> on(cells.size(), true);
    if (!full) {
        bool any = false;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            on[c] = keep(rng);
            any = any || on[c];
        }
        if (!any) on[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)] = true;
    }
    std::uniform_int_distribution<std::int64_t> entry(1, 1000);
    std::vector<std::int64_t> raw(cells.size(), 0);
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (on[c]) {
            raw[c] = entry(rng);
            sum += raw[c];
        }
    }
    LabeledMatrix a(dim);
    const Label scale = n / Label(sum);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (on[c]) a.at(cells[c].first, cells[c].second) = Label(raw[c]) * scale;
    }
    return a;
}

NilpotentBoundReport check_nilpotent_bound(const Label& n, std::uint64_t k, std::size_t dim, std::uint64_t trials,
                                           std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("check_nilpotent_bound: k must be at least 1");
    if (dim < 2) throw std::invalid_argument("check_nilpotent_bound: dim must be at least 2");
    NilpotentBoundReport report;
    report.n = n;
    report.k = k;
    report.dim = dim;
    report.trials = trials;
    report.seed = seed;
    report.bound = path_bound_real(n, k);

    struct Chunk {
        std::uint64_t holds = 0;
        Label max_observed;
        std::optional<std::string> violation;
    };
    constexpr std::uint64_t chunk_size = 64;
    const std::size_t chunks = static_cast<std::size_t>((trials + chunk_size - 1) / chunk_size);
    std::vector<Chunk> results(chunks);
    run_parts(chunks, [&](std::size_t c) {
        Chunk& out = results[c];
        const std::uint64_t end = std::min<std::uint64_t>(trials, (c + 1) * chunk_size);
        for (std::uint64_t trial = c * chunk_size; trial < end; ++trial) {
            const LabeledMatrix a = random_nilpotent_matrix(n, dim, seed, trial);
            if (mat_weight(a) != n || !is_nilpotent(a)) {
                throw std::logic_error("random_nilpotent_matrix produced a bad sample");
            }
            const Label observed = mat_weight(mat_pow(a, k));
            out.max_observed = std::max(out.max_observed, observed);
            if (observed <= report.bound) {
                ++out.holds;
            } else if (!out.violation) {
                out.violation = "trial " + std::to_string(trial) + ": |A^k| = " + observed.str() + " > " +
                                report.bound.str() + "\n" + to_matrix_text(a);
            }
        }
    });
    for (auto& chunk : results) {
        report.holds += chunk.holds;
        report.max_observed = std::max(report.max_observed, chunk.max_observed);
        if (!report.first_violation && chunk.violation) report.first_violation = chunk.violation;
    }
    if (!report.bound.is_zero()) report.max_ratio = report.max_observed / report.bound;

    report.witness_value = mat_weight(mat_pow(path_matrix(n / Label(static_cast<std::int64_t>(k)), k), k));
    report.witness_attains = report.witness_value == report.bound;
    return report;
}

ClassificationResult classify_coverage_graphs(std::size_t k, std::size_t max_vertices, std::size_t max_edges) {
    if (k < 2) throw std::invalid_argument("classify_coverage_graphs: k must be at least 2");
    const Pattern path = Pattern::path(k);
    const auto cells = make_cells(max_vertices, CellSpace::NoLoops);
    const LabeledDigraph empty = LabeledDigraph::with_vertices(max_vertices);

    struct Part {
        std::uint64_t candidates = 0;
        std::map<std::string, LabeledDigraph> survivors;
    };
    std::vector<Part> parts(cells.size());
    run_parts(cells.size(), [&](std::size_t first) {
        Part& out = parts[first];
        std::vector<std::size_t> chosen{first};
        for (std::size_t size = 1; size <= max_edges; ++size) {
            for_each_subset(first + 1, cells.size(), size - 1, chosen, [&] {
                ++out.candidates;
                LabeledDigraph g = empty;
                for (std::size_t c : chosen) g.add_edge(cells[c].src, cells[c].dst, Label{1});
                if (check_coverage(g, path).holds) {
                    LabeledDigraph canon = canonical_form(g);
                    std::string key = to_edge_list(canon);
                    out.survivors.try_emplace(std::move(key), std::move(canon));
                }
            });
        }
    });

    ClassificationResult result;
    result.k = k;
    result.max_vertices = max_vertices;
    result.max_edges = max_edges;
    std::map<std::string, LabeledDigraph> all;
    for (auto& part : parts) {
        result.candidates += part.candidates;
        all.merge(part.survivors);
    }
    for (auto& [key, g] : all) result.graphs.push_back(std::move(g));
    return result;
}

LabeledDigraph directed_cycle(std::size_t m) {
    auto g = LabeledDigraph::with_vertices(m);
    for (std::size_t i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m, Label{1});
    return g;
}

}  // namespace contentmax
