#include "contentmax/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace contentmax {

PathBoundInt path_bound_int(std::uint64_t n, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("path_bound_int: k must be at least 1");
    PathBoundInt b;
    b.quotient = n / k;
    b.remainder = n % k;
    b.value = pow(Label(static_cast<std::int64_t>(b.quotient + 1)), b.remainder) *
              pow(Label(static_cast<std::int64_t>(b.quotient)), k - b.remainder);
    b.tuple.assign(b.remainder, b.quotient + 1);
    b.tuple.resize(k, b.quotient);
    return b;
}

Label path_bound_real(const Label& n, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("path_bound_real: k must be at least 1");
    return pow(n / Label(static_cast<std::int64_t>(k)), k);
}

Tuple balanced_exchange(Tuple tuple, const std::function<void(const Tuple&)>& on_exchange) {
    if (tuple.empty()) return tuple;
    while (true) {
        auto [lo, hi] = std::minmax_element(tuple.begin(), tuple.end());
        if (*hi - *lo < 2) return tuple;
        --*hi;
        ++*lo;
        if (on_exchange) on_exchange(tuple);
    }
}

Label elementary_symmetric(std::uint64_t a, const std::vector<Label>& lambdas) {
    if (a == 0) throw std::invalid_argument("elementary_symmetric: a must be at least 1");
    if (a > lambdas.size()) return Label{};
    // e[j] holds e_j of the prefix processed so far.
    std::vector<Label> e(a + 1);
    e[0] = Label{1};
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const std::size_t top = std::min<std::size_t>(a, i + 1);
        for (std::size_t j = top; j >= 1; --j) e[j] += e[j - 1] * lambdas[i];
    }
    return e[a];
}

Label star_bound_int(std::uint64_t n, std::uint64_t a) {
    if (a == 0) throw std::invalid_argument("star_bound_int: a must be at least 1");
    return binomial(n, a);
}

StarSupremum star_sup_real(const Label& n, std::uint64_t a, std::optional<std::uint64_t> t) {
    if (a == 0) throw std::invalid_argument("star_sup_real: a must be at least 1");
    StarSupremum s;
    s.supremum = pow(n, a) / factorial(a);
    if (t) {
        if (*t < a) throw std::invalid_argument("star_sup_real: t must be at least a");
        s.finite_value = binomial(*t, a) * pow(n / Label(static_cast<std::int64_t>(*t)), a);
    }
    return s;
}

std::string_view to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::PathInt: return "path-int";
        case BoundKind::PathReal: return "path-real";
        case BoundKind::StarInt: return "star-int";
        case BoundKind::StarReal: return "star-real";
    }
    return "?";
}

BoundKind parse_bound_kind(std::string_view name) {
    for (BoundKind k : {BoundKind::PathInt, BoundKind::PathReal, BoundKind::StarInt, BoundKind::StarReal}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown bound kind '" + std::string(name) + "'");
}

LabeledDigraph labeled_path(const std::vector<Label>& labels) {
    auto g = LabeledDigraph::with_vertices(labels.size() + 1);
    for (std::size_t i = 0; i < labels.size(); ++i) g.add_edge(i, i + 1, labels[i]);
    return g;
}

LabeledDigraph labeled_star(const std::vector<Label>& labels) {
    LabeledDigraph g;
    const VertexId center = g.add_vertex("c");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const VertexId leaf = g.add_vertex("s" + std::to_string(i));
        g.add_edge(leaf, center, labels[i]);
    }
    return g;
}

BoundReport make_bound_report(BoundKind kind, const Label& n, std::uint64_t parameter,
                              std::optional<std::uint64_t> t) {
    if (parameter == 0) throw std::invalid_argument("k / a must be at least 1");
    const bool integral = kind == BoundKind::PathInt || kind == BoundKind::StarInt;
    if (integral && !n.is_integer()) {
        throw std::invalid_argument(std::string(to_string(kind)) + " needs an integer N, got " + n.str());
    }
    if (t && kind != BoundKind::StarReal) throw std::invalid_argument("--t only applies to star-real");

    BoundReport r;
    r.kind = kind;
    r.n = n;
    r.parameter = parameter;
    r.t = t;
    switch (kind) {
        case BoundKind::PathInt: {
            const auto b = path_bound_int(n.to_uint64(), parameter);
            r.value = b.value;
            r.tuple = b.tuple;
            std::vector<Label> labels;
            for (auto x : b.tuple) labels.emplace_back(static_cast<std::int64_t>(x));
            r.witness = labeled_path(labels);
            r.witness_description = "k-path labeled with the balanced tuple";
            break;
        }
        case BoundKind::PathReal: {
            r.value = path_bound_real(n, parameter);
            const Label each = n / Label(static_cast<std::int64_t>(parameter));
            r.witness = labeled_path(std::vector<Label>(parameter, each));
            r.witness_description = "k-path with every label N/k = " + each.str();
            break;
        }
        case BoundKind::StarInt: {
            const std::uint64_t count = n.to_uint64();
            r.value = star_bound_int(count, parameter);
            r.witness = labeled_star(std::vector<Label>(count, Label{1}));
            r.witness_description = "N-armed 1-star with every label 1";
            break;
        }
        case BoundKind::StarReal: {
            const auto s = star_sup_real(n, parameter, t);
            r.value = s.supremum;
            r.finite_value = s.finite_value;
            r.attained = n.is_zero();
            if (t) {
                const Label each = n / Label(static_cast<std::int64_t>(*t));
                r.witness = labeled_star(std::vector<Label>(*t, each));
                r.witness_description = "supremum not attained; t-armed 1-star with labels N/t = " + each.str() +
                                        " reaches the finite-t value, which increases to the supremum as t grows";
            } else {
                r.witness_description = "supremum not attained; approached by t-armed 1-stars with labels N/t as t grows";
            }
            break;
        }
    }
    return r;
}

}  // namespace contentmax
