#include "contentmax/optimizer.hpp"

#include <sstream>

#include "contentmax/copies.hpp"

namespace contentmax {

namespace {

std::size_t require_edge(const LabeledDigraph& g, EdgeKey key, const char* what) {
    auto idx = g.edge_index(key);
    if (!idx) throw std::invalid_argument(std::string(what) + ": pair is not an edge of the graph");
    return *idx;
}

Label sigma_from_copies(const LabeledDigraph& g, const std::vector<Copy>& copies, const CopyIncidence& incidence,
                        std::size_t edge) {
    Label total;
    for (std::size_t c : incidence.copies_through(edge)) {
        Label product{1};
        for (std::size_t e : copies[c].edges) {
            if (e != edge) product *= g.edge(e).label;
        }
        total += product;
    }
    return total;
}

std::optional<std::pair<std::size_t, std::size_t>> first_uncovered(const LabeledDigraph& g,
                                                                   const CopyIncidence& incidence) {
    const std::size_t m = g.edge_count();
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t f = e + 1; f < m; ++f) {
            if (!incidence.share_copy(e, f)) return std::make_pair(e, f);
        }
    }
    return std::nullopt;
}

}  // namespace

Label sigma(const LabeledDigraph& g, const Pattern& pattern, EdgeKey e) {
    const std::size_t idx = require_edge(g, e, "sigma");
    const auto copies = enumerate_copies(g, pattern);
    return sigma_from_copies(g, copies, CopyIncidence(g, copies), idx);
}

std::optional<std::pair<EdgeKey, EdgeKey>> find_uncovered_pair(const LabeledDigraph& g, const Pattern& pattern) {
    const auto copies = enumerate_copies(g, pattern);
    if (auto pair = first_uncovered(g, CopyIncidence(g, copies))) {
        return std::make_pair(g.edge(pair->first).key(), g.edge(pair->second).key());
    }
    return std::nullopt;
}

MergeResult merge_step(const LabeledDigraph& g, const Pattern& pattern, EdgeKey survivor, EdgeKey removed) {
    const std::size_t e = require_edge(g, survivor, "merge_step");
    const std::size_t f = require_edge(g, removed, "merge_step");
    if (e == f) throw MergeError("merge_step: an edge cannot be merged into itself");

    const auto copies = enumerate_copies(g, pattern);
    const CopyIncidence incidence(g, copies);
    if (incidence.share_copy(e, f)) throw MergeError("merge_step: the two edges lie on a common copy");

    MergeStep step;
    step.survivor = survivor;
    step.removed = removed;
    step.removed_label = g.edge(f).label;
    step.sigma_survivor = sigma_from_copies(g, copies, incidence, e);
    step.sigma_removed = sigma_from_copies(g, copies, incidence, f);
    if (step.sigma_survivor < step.sigma_removed) {
        throw MergeError("merge_step: survivor sigma " + step.sigma_survivor.str() + " is below removed sigma " +
                         step.sigma_removed.str());
    }
    step.ct_before = pattern_content(g, copies);

    LabeledDigraph next = g.relabeled(survivor, g.edge(e).label + step.removed_label).without_edge(removed);
    step.ct_after = pattern_content(next, pattern);

    const Label predicted = step.ct_before + step.removed_label * (step.sigma_survivor - step.sigma_removed);
    if (predicted != step.ct_after) {
        throw std::logic_error("merge_step: content changed by " + (step.ct_after.str()) + " vs predicted " +
                               predicted.str());
    }
    if (weight(next) != weight(g)) throw std::logic_error("merge_step: weight not preserved");
    return MergeResult{std::move(next), std::move(step)};
}

OptimizeResult optimize(const LabeledDigraph& g, const Pattern& pattern) {
    OptimizeResult result{g, {}, false};
    while (true) {
        const auto copies = enumerate_copies(result.graph, pattern);
        const CopyIncidence incidence(result.graph, copies);
        const auto pair = first_uncovered(result.graph, incidence);
        if (!pair) {
            result.inclusive_coverage = check_coverage(result.graph, copies).holds;
            return result;
        }
        auto [e, f] = *pair;
        const Label sigma_e = sigma_from_copies(result.graph, copies, incidence, e);
        const Label sigma_f = sigma_from_copies(result.graph, copies, incidence, f);
        if (sigma_f > sigma_e) std::swap(e, f);
        MergeResult merged =
            merge_step(result.graph, pattern, result.graph.edge(e).key(), result.graph.edge(f).key());
        result.graph = std::move(merged.graph);
        result.trace.steps.push_back(std::move(merged.step));
    }
}

std::string format_step(const LabeledDigraph& g, const MergeStep& step) {
    std::ostringstream out;
    out << "merge " << g.name(step.removed.src) << ' ' << g.name(step.removed.dst) << " (" << step.removed_label
        << ") -> " << g.name(step.survivor.src) << ' ' << g.name(step.survivor.dst) << " | " << step.sigma_survivor
        << ' ' << step.sigma_removed << " | " << step.ct_before << " -> " << step.ct_after;
    return out.str();
}

}  // namespace contentmax
