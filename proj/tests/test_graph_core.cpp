#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "contentmax/digraph.hpp"
#include "contentmax/matrix.hpp"
#include "contentmax/text_io.hpp"
#include "support/brute_force.hpp"

using namespace contentmax;

namespace {

LabeledDigraph graph_from(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

LabeledMatrix matrix_from(std::vector<std::vector<std::int64_t>> rows) {
    std::vector<std::vector<Label>> labels;
    for (auto& row : rows) {
        labels.emplace_back();
        for (auto x : row) labels.back().emplace_back(x);
    }
    return LabeledMatrix(labels);
}

EdgeKey key(const LabeledDigraph& g, const char* s, const char* d) {
    return EdgeKey{*g.find_vertex(s), *g.find_vertex(d)};
}

}  // namespace

TEST(Weight, SumsLabelsExactly) {
    EXPECT_EQ(weight(LabeledDigraph{}), Label{});
    EXPECT_EQ(weight(graph_from("a b 2\nb c 3\n")), Label{5});
    // 1/2 + 1/3 = (3 + 2) / 6
    EXPECT_EQ(weight(graph_from("a b 1/2\na c 1/3\n")), Label::fraction(3 + 2, 2 * 3));
}

TEST(Content, MultipliesLabels) {
    EXPECT_EQ(content(LabeledDigraph{}), Label{1});
    EXPECT_EQ(content(graph_from("a b 2\nb c 3\n")), Label{6});
    EXPECT_EQ(content(graph_from("a b 1/2\nb c 4\n")), Label{2});
}

TEST(ExclusiveContent, SkipsExcludedEdges) {
    const auto g = graph_from("a b 2\nb c 3\n");
    const EdgeKey ab = key(g, "a", "b");
    EXPECT_EQ(exclusive_content(g, std::vector{ab}), Label{3});
    EXPECT_EQ(exclusive_content(g, std::vector{ab, key(g, "b", "c")}), Label{1});
    EXPECT_EQ(exclusive_content(g, {}), content(g));

    const auto h = graph_from("a b 2\nb c 3\nc d 5\n");
    EXPECT_EQ(exclusive_content(h, std::vector{key(h, "b", "c")}), Label{10});
    EXPECT_THROW(exclusive_content(h, std::vector{key(h, "a", "c")}), std::invalid_argument);
}

TEST(Digraph, ZeroLabelsAreNonEdgesAndDuplicatesRejected) {
    LabeledDigraph g;
    g.add_edge("a", "b", Label{});
    EXPECT_EQ(g.vertex_count(), 2U);
    EXPECT_EQ(g.edge_count(), 0U);
    g.add_edge("a", "b", Label{1});
    EXPECT_THROW(g.add_edge("a", "b", Label{2}), std::invalid_argument);
    EXPECT_EQ(g.label(EdgeKey{1, 0}), Label{});
}

TEST(IsDag, DetectsCyclesAndLoops) {
    EXPECT_TRUE(is_dag(graph_from("a b 1\n")));
    EXPECT_FALSE(is_dag(graph_from("a b 1\nb a 1\n")));
    EXPECT_FALSE(is_dag(graph_from("a a 1\n")));

    const auto g = graph_from("c d 1\nb c 1\na b 1\nvertex z\n");
    const auto order = topological_order(g);
    ASSERT_TRUE(order.has_value());
    std::vector<std::size_t> position(g.vertex_count());
    for (std::size_t i = 0; i < order->size(); ++i) position[(*order)[i]] = i;
    for (const Edge& e : g.edges()) EXPECT_LT(position[e.src], position[e.dst]);
}

TEST(Adjacency, RoundTripsAndMatchesEntries) {
    const auto g = graph_from("a b 2\n");
    EXPECT_EQ(to_adjacency(g), matrix_from({{0, 2}, {0, 0}}));

    const auto empty = from_adjacency(matrix_from({{0, 0}, {0, 0}}));
    EXPECT_EQ(empty.vertex_count(), 2U);
    EXPECT_EQ(empty.edge_count(), 0U);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto h = brute::random_digraph(rng);
        const auto back = from_adjacency(to_adjacency(h), h.names());
        EXPECT_TRUE(same_labeling(h, back));
        EXPECT_EQ(mat_weight(to_adjacency(h)), weight(h));
    }
}

TEST(MatPow, ExactPowersAndWeights) {
    const auto a = matrix_from({{0, 2, 0}, {0, 0, 3}, {0, 0, 0}});
    EXPECT_EQ(mat_pow(a, 2), matrix_from({{0, 0, 6}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(mat_weight(mat_pow(a, 2)), Label{6});
    EXPECT_EQ(mat_pow(a, 1), a);
    EXPECT_THROW(mat_pow(a, 0), std::invalid_argument);

    // Superdiagonal of ones: the only length-3 walk is 0->1->2->3.
    const auto u = matrix_from({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    EXPECT_EQ(mat_weight(mat_pow(u, 3)), Label{1});
    EXPECT_EQ(mat_pow(u, 3), u * u * u);
}

TEST(MatPow, PowersCompose) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        const auto a = to_adjacency(brute::random_digraph(rng, 4, 0.5));
        for (std::uint64_t j = 1; j <= 3; ++j) {
            for (std::uint64_t k = 1; k <= 3; ++k) EXPECT_EQ(mat_pow(a, j + k), mat_pow(a, j) * mat_pow(a, k));
        }
    }
}

TEST(Nilpotent, SupportAcyclicityMatchesPowerTest) {
    EXPECT_FALSE(is_nilpotent(matrix_from({{0, 1}, {1, 0}})));
    EXPECT_TRUE(is_nilpotent(matrix_from({{0, 1, 5}, {0, 0, 2}, {0, 0, 0}})));
    const auto n2 = matrix_from({{0, 1}, {0, 0}});
    EXPECT_TRUE(is_nilpotent(n2));
    EXPECT_EQ(mat_weight(mat_pow(n2, 2)), Label{});

    // Every 0/1 matrix up to dimension 4.
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        const std::size_t cells = dim * dim;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
            LabeledMatrix a(dim);
            for (std::size_t c = 0; c < cells; ++c) {
                if (mask >> c & 1U) a.at(c / dim, c % dim) = Label{1};
            }
            ASSERT_EQ(is_nilpotent(a), is_nilpotent_by_power(a)) << to_matrix_text(a);
            ASSERT_EQ(is_nilpotent(a), is_dag(from_adjacency(a)));
        }
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto a = to_adjacency(brute::random_digraph(rng, 5, 0.25));
        EXPECT_EQ(is_nilpotent(a), is_nilpotent_by_power(a));
    }
}

TEST(EdgeListFormat, ParsesCommentsVerticesAndDecimals) {
    const auto g = graph_from("# header\n\nvertex z\na b 0.25\n  b c 3/6  \nc d 0\n");
    EXPECT_EQ(g.vertex_count(), 5U);
    EXPECT_EQ(g.edge_count(), 2U);
    EXPECT_EQ(g.name(0), "z");
    EXPECT_EQ(g.label(key(g, "a", "b")), Label::fraction(1, 4));
    EXPECT_EQ(g.label(key(g, "b", "c")), Label::fraction(1, 2));
    EXPECT_EQ(to_edge_list(g), "vertex z\na b 1/4\nb c 1/2\nvertex d\n");
}

TEST(EdgeListFormat, ErrorsNameTheLine) {
    try {
        graph_from("a b 1\nb c\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
    }
    try {
        graph_from("a b 1\n# x\na b 2\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
    }
    EXPECT_THROW(graph_from("a b -1\n"), ParseError);
    EXPECT_THROW(graph_from("vertex\n"), ParseError);
}

TEST(EdgeListFormat, WriterPreservesVertexOrderExactly) {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        auto g = brute::random_digraph(rng, 7, 0.2);
        std::istringstream in(to_edge_list(g));
        const auto back = read_edge_list(in);
        ASSERT_EQ(back, g) << to_edge_list(g);
        auto dag = brute::random_dag(rng, 7, 0.3);
        std::istringstream in2(to_edge_list(dag));
        ASSERT_EQ(read_edge_list(in2), dag);
    }
    // Only the vertex that must precede the edge's source is declared.
    LabeledDigraph star;
    star.add_vertex("c");
    star.add_edge("s0", "c", Label{1});
    EXPECT_EQ(to_edge_list(star), "vertex c\ns0 c 1\n");
    // A plain edge list in vertex order is reproduced byte for byte.
    const std::string text = "a b 2\nb c 3\n";
    EXPECT_EQ(to_edge_list(graph_from(text)), text);
}

TEST(MatrixFormat, ParsesAndRejectsNonSquare) {
    std::istringstream in("3\n0 2 0\n0 0 3/2\n0 0 0.5\n");
    const auto a = read_matrix(in);
    EXPECT_EQ(a.at(1, 2), Label::fraction(3, 2));
    EXPECT_EQ(to_matrix_text(a), "3\n0 2 0\n0 0 3/2\n0 0 1/2\n");

    std::istringstream short_row("2\n0 1\n0\n");
    EXPECT_THROW(read_matrix(short_row), ParseError);
    std::istringstream extra_row("2\n0 1\n0 0\n1 1\n");
    EXPECT_THROW(read_matrix(extra_row), ParseError);
    std::istringstream bad_dim("two\n");
    EXPECT_THROW(read_matrix(bad_dim), ParseError);
    std::istringstream negative("1\n-2\n");
    EXPECT_THROW(read_matrix(negative), ParseError);
}
