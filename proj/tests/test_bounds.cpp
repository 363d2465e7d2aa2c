#include <numeric>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "contentmax/bounds.hpp"
#include "contentmax/copies.hpp"
#include "contentmax/pattern.hpp"
#include "support/brute_force.hpp"

using namespace contentmax;

TEST(PathBoundInt, SpecExamples) {
    const auto b = path_bound_int(7, 3);
    EXPECT_EQ(b.quotient, 2U);
    EXPECT_EQ(b.remainder, 1U);
    EXPECT_EQ(b.value, Label{12});
    EXPECT_EQ(b.tuple, (Tuple{3, 2, 2}));
    EXPECT_EQ(b.value, brute::brute_force_max_product(7, 3));

    EXPECT_EQ(path_bound_int(9, 1).value, Label{9});
    EXPECT_EQ(path_bound_int(9, 1).tuple, (Tuple{9}));
    EXPECT_EQ(path_bound_int(3, 5).value, Label{});
    EXPECT_EQ(path_bound_int(3, 5).remainder, 3U);
    EXPECT_THROW(path_bound_int(3, 0), std::invalid_argument);
}

TEST(PathBoundInt, MatchesOdometerAndTupleSums) {
    for (std::uint64_t k = 1; k <= 4; ++k) {
        for (std::uint64_t n = 0; n <= 10; ++n) {
            const auto b = path_bound_int(n, k);
            EXPECT_EQ(b.value, brute::brute_force_max_product(n, k)) << n << "," << k;
            EXPECT_EQ(std::accumulate(b.tuple.begin(), b.tuple.end(), std::uint64_t{0}), n);
            Label product{1};
            for (auto x : b.tuple) product *= Label(static_cast<std::int64_t>(x));
            EXPECT_EQ(product, b.value);
        }
    }
}

TEST(PathBoundReal, SpecExamples) {
    EXPECT_EQ(path_bound_real(Label{6}, 3), Label{8});
    EXPECT_EQ(pattern_content(labeled_path({Label{2}, Label{2}, Label{2}}), Pattern::path(3)), Label{8});
    EXPECT_EQ(path_bound_real(Label::fraction(22, 7), 1), Label::fraction(22, 7));
    EXPECT_EQ(path_bound_real(Label{1}, 2), Label::fraction(1, 4));
    const Label half = Label::fraction(1, 2);
    EXPECT_EQ(pattern_content(labeled_path({half, half}), Pattern::path(2)), Label::fraction(1, 4));
}

TEST(PathBoundReal, DominatesRandomPathLabelings) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 200; ++i) {
        const std::size_t k = 1 + i % 4;
        std::vector<Label> labels;
        Label n;
        for (std::size_t j = 0; j < k; ++j) {
            labels.push_back(brute::random_label(rng));
            n += labels.back();
        }
        Label product{1};
        for (const auto& x : labels) product *= x;
        EXPECT_LE(product, path_bound_real(n, k));
    }
}

TEST(BalancedExchange, SpecExamples) {
    auto out = balanced_exchange({7, 0, 0});
    std::sort(out.rbegin(), out.rend());
    EXPECT_EQ(out, (Tuple{3, 2, 2}));
    EXPECT_EQ(balanced_exchange({2, 2, 3}), (Tuple{2, 2, 3}));

    // 5*1 < 4*2 < 3*3: every exchange strictly raises the product.
    std::vector<Tuple> seen;
    EXPECT_EQ(balanced_exchange({5, 1}, [&](const Tuple& t) { seen.push_back(t); }), (Tuple{3, 3}));
    EXPECT_EQ(seen, (std::vector<Tuple>{{4, 2}, {3, 3}}));
    EXPECT_EQ(balanced_exchange({}), Tuple{});
}

TEST(BalancedExchange, NeverLowersTheProduct) {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<std::uint64_t> entry(0, 9);
    for (int i = 0; i < 300; ++i) {
        Tuple t(1 + i % 5);
        for (auto& x : t) x = entry(rng);
        const auto sum = std::accumulate(t.begin(), t.end(), std::uint64_t{0});
        auto product = [](const Tuple& u) {
            Label p{1};
            for (auto x : u) p *= Label(static_cast<std::int64_t>(x));
            return p;
        };
        Label last = product(t);
        const auto out = balanced_exchange(t, [&](const Tuple& u) {
            EXPECT_EQ(std::accumulate(u.begin(), u.end(), std::uint64_t{0}), sum);
            EXPECT_GE(product(u), last);
            last = product(u);
        });
        EXPECT_EQ(product(out), path_bound_int(sum, t.size()).value);
    }
}

TEST(ElementarySymmetric, SpecExamplesAndBruteForce) {
    EXPECT_EQ(elementary_symmetric(2, {Label{1}, Label{2}, Label{3}}), Label{11});
    EXPECT_EQ(elementary_symmetric(2, std::vector<Label>(4, Label{1})), Label{6});
    EXPECT_EQ(elementary_symmetric(3, {Label{5}}), Label{});
    EXPECT_THROW(elementary_symmetric(0, {Label{5}}), std::invalid_argument);
    std::mt19937_64 rng(61);
    for (int i = 0; i < 100; ++i) {
        std::vector<Label> xs(1 + i % 7);
        for (auto& x : xs) x = brute::random_label(rng);
        for (std::size_t a = 1; a <= 4; ++a) EXPECT_EQ(elementary_symmetric(a, xs), brute::brute_force_elementary(a, xs));
        // e_a of star labels equals the star pattern content.
        if (xs.size() >= 2) {
            EXPECT_EQ(elementary_symmetric(2, xs), pattern_content(labeled_star(xs), Pattern::star(2)));
        }
    }
}

TEST(StarBoundInt, SpecExamples) {
    EXPECT_EQ(star_bound_int(4, 2), Label{6});
    EXPECT_EQ(star_bound_int(4, 2), brute::brute_force_elementary(2, std::vector<Label>(4, Label{1})));
    EXPECT_EQ(star_bound_int(7, 1), Label{7});
    EXPECT_EQ(star_bound_int(2, 3), Label{});
}

TEST(StarSupReal, SpecExamples) {
    const auto s = star_sup_real(Label{1}, 2, 2);
    EXPECT_EQ(s.supremum, Label::fraction(1, 2));
    EXPECT_EQ(*s.finite_value, Label::fraction(1, 4));
    for (std::uint64_t t = 1; t <= 20; ++t) EXPECT_EQ(*star_sup_real(Label{5}, 1, t).finite_value, Label{5});
    EXPECT_EQ(star_sup_real(Label{5}, 1).supremum, Label{5});
    const auto six = star_sup_real(Label{6}, 2, 3);
    EXPECT_EQ(*six.finite_value, Label{3 * 4});
    EXPECT_EQ(six.supremum, Label{18});
    EXPECT_THROW(star_sup_real(Label{6}, 3, 2), std::invalid_argument);
}

TEST(StarSupReal, FiniteValueMatchesStarWitness) {
    for (std::uint64_t t = 2; t <= 6; ++t) {
        const Label n = Label::fraction(22, 7);
        const Label each = n / Label(static_cast<std::int64_t>(t));
        const auto star = labeled_star(std::vector<Label>(t, each));
        EXPECT_EQ(pattern_content(star, Pattern::star(2)), *star_sup_real(n, 2, t).finite_value);
    }
}

TEST(BoundReport, WitnessesReachTheirValues) {
    const auto path = make_bound_report(BoundKind::PathInt, Label{7}, 3);
    EXPECT_EQ(path.value, Label{12});
    EXPECT_EQ(pattern_content(*path.witness, Pattern::path(3)), Label{12});
    const auto real = make_bound_report(BoundKind::PathReal, Label{6}, 3);
    EXPECT_EQ(pattern_content(*real.witness, Pattern::path(3)), Label{8});
    const auto star = make_bound_report(BoundKind::StarInt, Label{4}, 2);
    EXPECT_EQ(pattern_content(*star.witness, Pattern::star(2)), Label{6});
    const auto sup = make_bound_report(BoundKind::StarReal, Label{1}, 2, 2);
    EXPECT_FALSE(sup.attained);
    EXPECT_EQ(pattern_content(*sup.witness, Pattern::star(2)), Label::fraction(1, 4));

    EXPECT_THROW(make_bound_report(BoundKind::PathInt, Label::fraction(7, 2), 3), std::invalid_argument);
    EXPECT_THROW(make_bound_report(BoundKind::StarReal, Label{1}, 3, 2), std::invalid_argument);
    EXPECT_THROW(make_bound_report(BoundKind::PathReal, Label{1}, 3, 4), std::invalid_argument);
    EXPECT_EQ(parse_bound_kind("star-real"), BoundKind::StarReal);
    EXPECT_THROW(parse_bound_kind("cube"), std::invalid_argument);
}
