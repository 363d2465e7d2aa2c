#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contentmax/digraph.hpp"
#include "contentmax/label.hpp"

namespace contentmax {

using Tuple = std::vector<std::uint64_t>;

struct PathBoundInt {
    std::uint64_t quotient = 0;   // q in N = kq + r
    std::uint64_t remainder = 0;  // r
    Label value;                  // (q+1)^r q^(k-r)
    Tuple tuple;                  // q+1 repeated r times, then q repeated k-r times
};

/// Maximal number of length-k paths in an N-edge DAG. Throws
/// std::invalid_argument for k == 0.
PathBoundInt path_bound_int(std::uint64_t n, std::uint64_t k);

/// (N/k)^k, attained by the k-path with every label N/k.
Label path_bound_real(const Label& n, std::uint64_t k);

/// Replaces a pair (a, b) with a - b >= 2 by (a - 1, b + 1) until all
/// entries are within 1 of each other. `on_exchange`, if given, sees the
/// tuple after every exchange.
Tuple balanced_exchange(Tuple tuple, const std::function<void(const Tuple&)>& on_exchange = {});

/// e_a(λ) by the usual one-pass recurrence; 0 when a exceeds the tuple
/// length. Throws std::invalid_argument for a == 0.
Label elementary_symmetric(std::uint64_t a, const std::vector<Label>& lambdas);

/// C(N, a), the maximal number of a-arm 1-stars in an N-edge digraph.
Label star_bound_int(std::uint64_t n, std::uint64_t a);

struct StarSupremum {
    Label supremum;                    // N^a / a!, not attained
    std::optional<Label> finite_value; // C(t, a) (N/t)^a when t is given
};

/// Throws std::invalid_argument when t < a or a == 0.
StarSupremum star_sup_real(const Label& n, std::uint64_t a, std::optional<std::uint64_t> t = std::nullopt);

enum class BoundKind { PathInt, PathReal, StarInt, StarReal };

std::string_view to_string(BoundKind kind);
/// Throws std::invalid_argument on an unknown name.
BoundKind parse_bound_kind(std::string_view name);

struct BoundReport {
    BoundKind kind = BoundKind::PathInt;
    Label n;
    std::uint64_t parameter = 0;        // k for paths, a for stars
    std::optional<std::uint64_t> t;     // star-real only
    Label value;                        // the bound (supremum for star-real)
    std::optional<Label> finite_value;  // star-real with t
    std::optional<Tuple> tuple;         // path-int balanced tuple
    bool attained = true;
    std::string witness_description;
    /// Graph whose pattern content equals `value` (or `finite_value` for
    /// star-real), when one exists.
    std::optional<LabeledDigraph> witness;
};

/// Closed form plus witness. Integer kinds need an integral N; star-real
/// needs t >= a when t is given. Violations throw std::invalid_argument.
BoundReport make_bound_report(BoundKind kind, const Label& n, std::uint64_t parameter,
                              std::optional<std::uint64_t> t = std::nullopt);

/// Directed path v0 -> v1 -> ... with the given labels; zero labels leave
/// the corresponding pair without an edge.
LabeledDigraph labeled_path(const std::vector<Label>& labels);

/// 1-star with one arm per label, all pointing into vertex "c".
LabeledDigraph labeled_star(const std::vector<Label>& labels);

}  // namespace contentmax
