// contentmax: command-line front end for pattern contents of labeled
// digraphs, the merge optimizer, closed-form bounds and the brute-force
// verification suites.
//
// Exit status: 0 success, 1 a check failed, 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "contentmax/bounds.hpp"
#include "contentmax/canonical.hpp"
#include "contentmax/copies.hpp"
#include "contentmax/matrix.hpp"
#include "contentmax/optimizer.hpp"
#include "contentmax/oracle.hpp"
#include "contentmax/pattern.hpp"
#include "contentmax/text_io.hpp"
#include "contentmax/verify.hpp"

namespace cm = contentmax;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Thrown for bad arguments that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void field(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(14) << (key + ":") << value << '\n';
}

std::string approx(const cm::Label& x) {
    return "~" + x.decimal(20);
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

cm::Label parse_rational_arg(const std::string& text, const char* flag) {
    try {
        return cm::Label::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

int run_ct(const std::string& graph_file, const std::string& spec) {
    const auto g = cm::read_edge_list_file(graph_file);
    const auto pattern = cm::parse_pattern_spec(spec);
    const auto copies = cm::enumerate_copies(g, pattern);
    const auto ct = cm::pattern_content(g, copies);
    field(std::cout, "pattern", pattern.description());
    field(std::cout, "copies", std::to_string(copies.size()));
    field(std::cout, "ct", ct.str());
    field(std::cout, "ct (approx)", approx(ct));
    field(std::cout, "weight", cm::weight(g).str());
    field(std::cout, "dag", yes_no(cm::is_dag(g)));
    return kOk;
}

int run_optimize(const std::string& graph_file, const std::string& spec, bool trace, const std::string& out_file) {
    const auto g = cm::read_edge_list_file(graph_file);
    const auto pattern = cm::parse_pattern_spec(spec);
    const auto before = cm::pattern_content(g, pattern);
    const auto result = cm::optimize(g, pattern);
    const auto after = cm::pattern_content(result.graph, pattern);

    if (trace) {
        for (const auto& step : result.trace.steps) std::cout << cm::format_step(result.graph, step) << '\n';
    }
    field(std::cout, "pattern", pattern.description());
    field(std::cout, "ct before", before.str());
    field(std::cout, "ct after", after.str());
    field(std::cout, "weight", cm::weight(result.graph).str());
    field(std::cout, "steps", std::to_string(result.trace.steps.size()));
    field(std::cout, "coverage", result.inclusive_coverage ? "every edge pair, and every edge, on a common copy"
                                                            : "distinct pairs only (some edge is on no copy)");
    const bool ok = after >= before && cm::weight(result.graph) == cm::weight(g) &&
                    !cm::find_uncovered_pair(result.graph, pattern);
    if (out_file.empty()) {
        std::cout << "# final graph\n" << cm::to_edge_list(result.graph);
    } else {
        std::ofstream out(out_file);
        if (!out) throw UsageError("cannot write " + out_file);
        cm::write_edge_list(out, result.graph);
    }
    return ok ? kOk : kCheckFailed;
}

int run_bound(const std::string& kind_text, const std::string& n_text, std::optional<std::uint64_t> k,
              std::optional<std::uint64_t> a, std::optional<std::uint64_t> t, const std::string& format) {
    const auto kind = cm::parse_bound_kind(kind_text);
    const bool is_path = kind == cm::BoundKind::PathInt || kind == cm::BoundKind::PathReal;
    if (is_path && !k) throw UsageError("--kind " + kind_text + " needs --k");
    if (!is_path && !a) throw UsageError("--kind " + kind_text + " needs --a");
    if (is_path && a) throw UsageError("--a does not apply to " + kind_text);
    if (!is_path && k) throw UsageError("--k does not apply to " + kind_text);
    const auto n = parse_rational_arg(n_text, "--N");
    cm::BoundReport report;
    try {
        report = cm::make_bound_report(kind, n, is_path ? *k : *a, t);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    // The witness must reproduce the value it stands for.
    std::optional<cm::Label> witness_ct;
    bool witness_ok = true;
    if (report.witness) {
        const auto pattern = is_path ? cm::Pattern::path(*k) : cm::Pattern::star(*a);
        witness_ct = cm::pattern_content(*report.witness, pattern);
        const cm::Label& target = report.finite_value ? *report.finite_value : report.value;
        witness_ok = *witness_ct == target;
    }

    if (format == "json") {
        nlohmann::json doc;
        doc["kind"] = std::string(cm::to_string(kind));
        doc["N"] = n.str();
        doc[is_path ? "k" : "a"] = is_path ? *k : *a;
        if (t) doc["t"] = *t;
        doc["value"] = report.value.str();
        doc["value_approx"] = report.value.decimal(20);
        if (report.finite_value) doc["finite_value"] = report.finite_value->str();
        if (report.tuple) doc["tuple"] = *report.tuple;
        doc["attained"] = report.attained;
        doc["witness"] = report.witness_description;
        if (report.witness) doc["witness_graph"] = cm::to_edge_list(*report.witness);
        if (witness_ct) doc["witness_ct"] = witness_ct->str();
        std::cout << doc.dump(2) << '\n';
    } else {
        field(std::cout, "kind", std::string(cm::to_string(kind)));
        field(std::cout, "N", n.str());
        field(std::cout, is_path ? "k" : "a", std::to_string(is_path ? *k : *a));
        if (t) field(std::cout, "t", std::to_string(*t));
        field(std::cout, kind == cm::BoundKind::StarReal ? "supremum" : "value", report.value.str());
        field(std::cout, "approx", approx(report.value));
        if (report.finite_value) {
            field(std::cout, "at t=" + std::to_string(*t), report.finite_value->str());
        }
        if (report.tuple) {
            std::string tuple;
            for (std::size_t i = 0; i < report.tuple->size(); ++i) {
                tuple += (i ? "," : "") + std::to_string((*report.tuple)[i]);
            }
            field(std::cout, "tuple", tuple);
        }
        field(std::cout, "attained", yes_no(report.attained));
        field(std::cout, "witness", report.witness_description);
        if (witness_ct) field(std::cout, "witness ct", witness_ct->str() + (witness_ok ? " (matches)" : " (MISMATCH)"));
        if (report.witness && report.witness->edge_count() <= 32) std::cout << cm::to_edge_list(*report.witness);
    }
    return witness_ok ? kOk : kCheckFailed;
}

void print_graph_block(std::ostream& out, std::size_t index, const cm::LabeledDigraph& g) {
    out << "# maximizer " << index + 1;
    if (auto shape = cm::shape_name(g)) out << " (" << *shape << ")";
    out << '\n' << cm::to_edge_list(g);
}

int run_search(std::uint64_t edges, const std::string& spec, std::optional<std::size_t> max_vertices,
               const std::string& out_file) {
    const auto pattern = cm::parse_pattern_spec(spec);
    const std::size_t vertices = max_vertices.value_or(pattern.vertex_count() + 2);
    if (vertices < pattern.vertex_count()) {
        throw UsageError("--max-vertices " + std::to_string(vertices) + " is below the pattern's " +
                         std::to_string(pattern.vertex_count()) + " vertices");
    }
    const auto result = cm::max_ct_over_dags(edges, pattern, vertices);
    // Every maximizer is re-evaluated independently of the search loop.
    bool ok = true;
    for (const auto& g : result.maximizers) ok = ok && cm::pattern_content(g, pattern) == result.best_value;

    field(std::cout, "pattern", result.pattern);
    field(std::cout, "space", result.space);
    field(std::cout, "space size", std::to_string(result.search_space_size));
    field(std::cout, "best", result.best_value.str());
    field(std::cout, "maximizers", std::to_string(result.maximizers.size()) + " up to isomorphism");
    constexpr std::size_t display_cap = 10;
    for (std::size_t i = 0; i < result.maximizers.size() && i < display_cap; ++i) {
        print_graph_block(std::cout, i, result.maximizers[i]);
    }
    if (result.maximizers.size() > display_cap) {
        std::cout << "# ... " << result.maximizers.size() - display_cap << " more"
                  << (out_file.empty() ? " (use --out for the full list)" : "") << '\n';
    }
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw UsageError("cannot write " + out_file);
        for (std::size_t i = 0; i < result.maximizers.size(); ++i) print_graph_block(out, i, result.maximizers[i]);
    }
    return ok ? kOk : kCheckFailed;
}

int run_verify(const std::string& suite, const cm::VerifyOptions& options) {
    const auto report = cm::run_suite(suite, options);
    for (const auto& c : report.cases) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    std::cout << "suite " << report.suite << ": " << report.cases.size() - report.failures() << "/"
              << report.cases.size() << " passed\n";
    return report.passed() ? kOk : kCheckFailed;
}

int run_matpow(const std::string& matrix_file, std::uint64_t k) {
    const auto a = cm::read_matrix_file(matrix_file);
    const auto power = cm::mat_pow(a, k);
    const auto weight = cm::mat_weight(a);
    const auto power_weight = cm::mat_weight(power);
    const bool nilpotent = cm::is_nilpotent(a);
    std::cout << "A^" << k << ":\n" << cm::to_matrix_text(power);
    field(std::cout, "|A|", weight.str());
    field(std::cout, "|A^" + std::to_string(k) + "|", power_weight.str());
    field(std::cout, "nilpotent", yes_no(nilpotent));
    if (!nilpotent) {
        std::cout << "not nilpotent: bound comparison skipped\n";
        return kOk;
    }
    const auto bound = cm::path_bound_real(weight, k);
    const bool holds = power_weight <= bound;
    field(std::cout, "bound", "(|A|/k)^k = " + bound.str());
    std::cout << power_weight << " <= " << bound << ": " << (holds ? "holds" : "VIOLATED") << '\n';
    return holds ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern contents of labeled digraphs: counting, merge optimization, extremal bounds"};
    app.require_subcommand(1);

    std::string graph_file;
    std::string spec;

    auto* ct = app.add_subcommand("ct", "Count copies of a pattern and their content sum");
    ct->add_option("--graph", graph_file, "Edge-list file")->required();
    ct->add_option("--pattern", spec, "path:K | star:A | equistar:A:L | file:PATH")->required();

    bool trace = false;
    std::string out_file;
    auto* opt = app.add_subcommand("optimize", "Apply label merges until every two edges share a copy");
    opt->add_option("--graph", graph_file, "Edge-list file")->required();
    opt->add_option("--pattern", spec, "Pattern spec")->required();
    opt->add_flag("--trace", trace, "Print one line per merge");
    opt->add_option("--out", out_file, "Write the final graph here instead of stdout");

    std::string kind;
    std::string n_text;
    std::optional<std::uint64_t> k_opt;
    std::optional<std::uint64_t> a_opt;
    std::optional<std::uint64_t> t_opt;
    std::string format = "text";
    auto* bound = app.add_subcommand("bound", "Closed-form extremal values with witnesses");
    bound->add_option("--kind", kind, "path-int | path-real | star-int | star-real")
        ->required()
        ->check(CLI::IsMember({"path-int", "path-real", "star-int", "star-real"}));
    bound->add_option("--N", n_text, "Total weight (p, p/q or decimal)")->required();
    bound->add_option("--k", k_opt, "Path length")->check(CLI::PositiveNumber);
    bound->add_option("--a", a_opt, "Star arm count")->check(CLI::PositiveNumber);
    bound->add_option("--t", t_opt, "Arm count of the finite star (star-real)")->check(CLI::PositiveNumber);
    bound->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::uint64_t edges = 0;
    std::optional<std::size_t> max_vertices;
    auto* search = app.add_subcommand("search", "Exhaustive maximum of the pattern content over weighted DAGs");
    search->add_option("--edges", edges, "Total weight N")->required()->check(CLI::PositiveNumber);
    search->add_option("--pattern", spec, "Pattern spec")->required();
    search->add_option("--max-vertices", max_vertices, "Vertices (default: pattern vertices + 2)");
    search->add_option("--out", out_file, "Write every maximizer here");

    std::string suite;
    cm::VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "paths | stars | matrix | lemma")
        ->required()
        ->check(CLI::IsMember({"paths", "stars", "matrix", "lemma"}));
    verify->add_option("--seed", vopts.seed, "Seed for the matrix suite");
    verify->add_option("--trials", vopts.trials, "Random matrices per (N, k, dim)");
    verify->add_option("--max-n", vopts.path_max_n, "Largest N for the DAG search (paths)");
    verify->add_option("--max-k", vopts.path_max_k, "Largest k for the DAG search (paths)");
    verify->add_option("--star-max-n", vopts.star_max_n, "Largest N for the tuple search (stars)");
    verify->add_option("--star-max-a", vopts.star_max_a, "Largest a (stars)");

    std::string matrix_file;
    std::uint64_t power = 1;
    auto* matpow = app.add_subcommand("matpow", "Exact matrix power, weight and nilpotent bound");
    matpow->add_option("--matrix", matrix_file, "Matrix file")->required();
    matpow->add_option("--k", power, "Exponent")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*ct) return run_ct(graph_file, spec);
        if (*opt) return run_optimize(graph_file, spec, trace, out_file);
        if (*bound) return run_bound(kind, n_text, k_opt, a_opt, t_opt, format);
        if (*search) return run_search(edges, spec, max_vertices, out_file);
        if (*verify) return run_verify(suite, vopts);
        if (*matpow) return run_matpow(matrix_file, power);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const cm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}
