#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "contentmax/digraph.hpp"
#include "contentmax/label.hpp"

namespace contentmax {

struct CaseResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool passed() const;
    std::size_t failures() const;
};

/// Ranges for the verification suites. Defaults are the desk-scale ranges
/// the acceptance tests run.
struct VerifyOptions {
    // paths
    std::uint64_t path_max_n = 8;
    std::uint64_t path_max_k = 3;
    std::uint64_t composition_max_n = 12;
    std::uint64_t composition_max_k = 5;
    // stars
    std::uint64_t star_max_n = 8;
    std::uint64_t star_max_a = 3;
    std::uint64_t star_digraph_max_n = 4;
    std::uint64_t star_t_max = 200;
    std::uint64_t star_t_far = 1'000'000;
    // matrix
    std::vector<std::uint64_t> matrix_ks{1, 2, 3};
    std::vector<std::size_t> matrix_dims{3, 4, 5};
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    // shared weights for the real-valued checks
    std::vector<Label> weights{Label{1}, Label{5}, Label::fraction(22, 7)};
};

/// Directed k-edge path whose integer labels differ pairwise by at most 1.
bool is_balanced_path(const LabeledDigraph& g, std::uint64_t k);

/// Oracle DAG search vs the closed path bound, maximizer shapes, and the
/// composition / balanced-exchange equivalence.
SuiteReport verify_paths(const VerifyOptions& options);
/// Tuple-space and digraph searches vs C(N, a); finite-t monotonicity and
/// convergence to N^a / a!.
SuiteReport verify_stars(const VerifyOptions& options);
/// Random nilpotent matrices vs (N/k)^k, and the equality witness.
SuiteReport verify_matrix(const VerifyOptions& options);
/// Coverage classification for k = 2 (caps 4/4) and k = 3 (caps 6/6).
SuiteReport verify_lemma(const VerifyOptions& options);

/// "paths", "stars", "matrix" or "lemma"; throws std::invalid_argument
/// otherwise.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

}  // namespace contentmax
