#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contentmax/digraph.hpp"
#include "contentmax/pattern.hpp"

namespace contentmax {

/// A merge that the procedure does not allow: the two edges share a copy,
/// are the same edge, or are oriented against their sigma values.
class MergeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sum over the copies through `e` of the product of the copy's other
/// labels. Throws std::invalid_argument if `e` is not an edge of g.
Label sigma(const LabeledDigraph& g, const Pattern& pattern, EdgeKey e);

/// First pair (e, f) of distinct edges, in lexicographic edge insertion
/// order, that lie on no common copy of the pattern.
std::optional<std::pair<EdgeKey, EdgeKey>> find_uncovered_pair(const LabeledDigraph& g, const Pattern& pattern);

struct MergeStep {
    EdgeKey survivor;
    EdgeKey removed;
    Label removed_label;
    Label sigma_survivor;
    Label sigma_removed;
    Label ct_before;
    Label ct_after;
};

struct MergeResult {
    LabeledDigraph graph;
    MergeStep step;
};

/// Deletes `removed` and adds its label onto `survivor`. The change in
/// pattern content is removed_label * (sigma_survivor - sigma_removed) and
/// is checked against a full recount; a mismatch throws std::logic_error.
MergeResult merge_step(const LabeledDigraph& g, const Pattern& pattern, EdgeKey survivor, EdgeKey removed);

struct MergeTrace {
    std::vector<MergeStep> steps;
};

struct OptimizeResult {
    LabeledDigraph graph;
    MergeTrace trace;
    /// Whether the final graph also has every single edge on some copy, and
    /// not only every distinct pair.
    bool inclusive_coverage = false;
};

/// Merges uncovered pairs until every two distinct edges share a copy.
/// Pattern content never decreases and the weight is preserved. Of each
/// uncovered pair, the edge with the smaller sigma is folded into the other;
/// on a tie the later edge is folded into the earlier one.
OptimizeResult optimize(const LabeledDigraph& g, const Pattern& pattern);

/// `merge f_src f_dst (label) -> e_src e_dst | sigma_e sigma_f | ct_before -> ct_after`
std::string format_step(const LabeledDigraph& g, const MergeStep& step);

}  // namespace contentmax
