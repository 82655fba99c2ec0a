#include "support.hh"

#include <stopset/errors.hh>
#include <stopset/graphs.hh>

#include <gtest/gtest.h>

using namespace stopset;
using namespace stopset::testing;

using std::vector;

TEST(ParseGraph, SingleEdgeInfersVertexCount)
{
    auto g = parse_graph("0 1\n");
    EXPECT_EQ(g.vertex_count(), 2u);
    EXPECT_EQ(g.edges(), (vector<Edge>{ { 0, 1 } }));
}

TEST(ParseGraph, TriangleIsReorderedCanonically)
{
    auto g = parse_graph("0 1\n1 2\n0 2\n");
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edges(), (vector<Edge>{ { 0, 1 }, { 0, 2 }, { 1, 2 } }));
}

TEST(ParseGraph, ReversedPairsAreNormalized)
{
    EXPECT_EQ(parse_graph("2 0\n1 0\n").edges(), (vector<Edge>{ { 0, 1 }, { 0, 2 } }));
}

TEST(ParseGraph, SelfLoopReportsLine)
{
    try {
        parse_graph("# comment\n0 1\n0 0\n");
        FAIL() << "expected a parse error";
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    }
}

TEST(ParseGraph, HeaderWinsOverInferredCount)
{
    auto g = parse_graph("p 5 1\n0 1\n");
    EXPECT_EQ(g.vertex_count(), 5u);
    EXPECT_FALSE(is_connected(g));
}

TEST(ParseGraph, IndexBeyondHeaderIsRejected)
{
    EXPECT_THROW(parse_graph("p 2 1\n0 2\n"), ParseError);
}

TEST(ParseGraph, HeaderEdgeCountMismatchIsRejected)
{
    EXPECT_THROW(parse_graph("p 3 2\n0 1\n"), ParseError);
}

TEST(ParseGraph, DuplicatesCollapseWithCount)
{
    auto g = parse_graph("0 1\n1 0\n0 1\n1 2\n");
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.collapsed_duplicates(), 2u);
}

TEST(ParseGraph, CommentsAndBlankLinesAreIgnored)
{
    auto g = parse_graph("# a graph\n\n0 1 # trailing\n   \n1 2\n");
    EXPECT_EQ(g.edges(), (vector<Edge>{ { 0, 1 }, { 1, 2 } }));
}

TEST(ParseGraph, MalformedLinesAreRejected)
{
    EXPECT_THROW(parse_graph("0 x\n"), ParseError);
    EXPECT_THROW(parse_graph("0 1 2\n"), ParseError);
    EXPECT_THROW(parse_graph("-1 2\n"), ParseError);
    EXPECT_THROW(parse_graph("0 1\np 2 1\n"), ParseError);
}

TEST(ParseGraph, EmitRoundTripOnRandomGraphs)
{
    auto rng = make_rng(11);
    for (int i = 0 ; i < 200 ; ++i) {
        auto n = 1 + uniform_below(rng, 12);
        auto m = uniform_below(rng, n * (n - 1) / 2 + 1);
        auto g = random_graph(n, m, rng(), false).graph;
        EXPECT_EQ(parse_graph(emit_graph(g)), g);
    }
}

TEST(IsConnected, Examples)
{
    EXPECT_TRUE(is_connected(triangle()));
    EXPECT_FALSE(is_connected(Graph(3, { { 0, 1 } })));
    EXPECT_TRUE(is_connected(Graph(1, { })));
    EXPECT_TRUE(is_connected(Graph(0, { })));
    EXPECT_FALSE(is_connected(Graph(4, { { 0, 1 }, { 2, 3 } })));
}

TEST(IncidenceGraph, FourVerticesThreeEdgesShape)
{
    for (auto & g : { path4(), Graph(4, { { 0, 1 }, { 0, 2 }, { 0, 3 } }) }) {
        auto t = incidence_graph(g);
        EXPECT_EQ(t.var_count(), 4u);
        EXPECT_EQ(t.check_count(), 3u);
        for (std::size_t c = 0 ; c < 3 ; ++c)
            EXPECT_EQ(t.check_neighbors(c).size(), 2u);
    }
}

TEST(IncidenceGraph, SingleEdge)
{
    auto t = incidence_graph(single_edge());
    EXPECT_EQ(t.var_count(), 2u);
    ASSERT_EQ(t.check_count(), 1u);
    EXPECT_EQ(t.check_neighbors(0), (vector<std::size_t>{ 0, 1 }));
}

TEST(IncidenceGraph, TriangleVariablesHaveDegreeTwo)
{
    auto t = incidence_graph(triangle());
    EXPECT_EQ(t.var_count(), 3u);
    EXPECT_EQ(t.check_count(), 3u);
    for (std::size_t v = 0 ; v < 3 ; ++v)
        EXPECT_EQ(t.var_neighbors(v).size(), 2u);
}

TEST(IncidenceGraph, ChecksFollowCanonicalEdgeOrderAndHaveDegreeTwo)
{
    auto rng = make_rng(5);
    for (int i = 0 ; i < 100 ; ++i) {
        auto g = random_connected_graph(rng, 2, 10, 20);
        auto t = incidence_graph(g);
        EXPECT_EQ(t.edge_count(), 2 * g.edge_count());
        for (std::size_t c = 0 ; c < t.check_count() ; ++c)
            EXPECT_EQ(t.check_neighbors(c), (vector<std::size_t>{ g.edges()[c].first, g.edges()[c].second }));
    }
}

TEST(TannerGraph, RejectsBadAdjacency)
{
    EXPECT_THROW(TannerGraph(2, { { 0, 2 } }), InputError);
    EXPECT_THROW(TannerGraph(2, { { 1, 1 } }), InputError);
}

TEST(TannerGraph, ViewsAreConsistent)
{
    auto rng = make_rng(3);
    for (int i = 0 ; i < 50 ; ++i) {
        auto t = random_small_tanner(rng, 20, 15);
        std::size_t edges = 0;
        for (std::size_t c = 0 ; c < t.check_count() ; ++c) {
            edges += t.check_neighbors(c).size();
            for (auto v : t.check_neighbors(c)) {
                auto & checks = t.var_neighbors(v);
                EXPECT_TRUE(std::find(checks.begin(), checks.end(), c) != checks.end());
            }
        }
        EXPECT_EQ(edges, t.edge_count());
    }
}

TEST(MatrixConversion, OneByTwo)
{
    ParityCheckMatrix h(1, 2);
    h.set(0, 0, true);
    h.set(0, 1, true);
    auto t = tanner_from_matrix(h);
    EXPECT_EQ(t.var_count(), 2u);
    ASSERT_EQ(t.check_count(), 1u);
    EXPECT_EQ(t.check_neighbors(0), (vector<std::size_t>{ 0, 1 }));
}

TEST(MatrixConversion, ZeroMatrix)
{
    auto t = tanner_from_matrix(ParityCheckMatrix(3, 5));
    EXPECT_EQ(t.var_count(), 5u);
    EXPECT_EQ(t.check_count(), 3u);
    EXPECT_EQ(t.edge_count(), 0u);
}

TEST(MatrixConversion, Identity)
{
    ParityCheckMatrix h(3, 3);
    for (std::size_t i = 0 ; i < 3 ; ++i)
        h.set(i, i, true);
    auto t = tanner_from_matrix(h);
    for (std::size_t c = 0 ; c < 3 ; ++c)
        EXPECT_EQ(t.check_neighbors(c), (vector<std::size_t>{ c }));
}

TEST(MatrixConversion, MutuallyInverseOnRandomMatrices)
{
    auto rng = make_rng(17);
    for (int i = 0 ; i < 200 ; ++i) {
        ParityCheckMatrix h(uniform_below(rng, 9), uniform_below(rng, 13));
        for (std::size_t r = 0 ; r < h.rows() ; ++r)
            for (std::size_t c = 0 ; c < h.cols() ; ++c)
                h.set(r, c, bernoulli(rng, 0.4));
        auto t = tanner_from_matrix(h);
        EXPECT_EQ(matrix_from_tanner(t), h);
        EXPECT_EQ(tanner_from_matrix(matrix_from_tanner(t)), t);
    }
}

TEST(Alist, OneByTwo)
{
    auto h = parse_alist("2 1\n1 2\n1 1\n2\n1\n1\n1 2\n");
    EXPECT_EQ(h.rows(), 1u);
    EXPECT_EQ(h.cols(), 2u);
    EXPECT_TRUE(h.at(0, 0));
    EXPECT_TRUE(h.at(0, 1));
}

TEST(Alist, EmitsStandardLayout)
{
    ParityCheckMatrix h(2, 3);
    h.set(0, 0, true);
    h.set(0, 1, true);
    h.set(1, 1, true);
    h.set(1, 2, true);
    EXPECT_EQ(emit_alist(h), "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n");
}

TEST(Alist, RoundTripOnRandomSixByTwelve)
{
    auto rng = make_rng(23);
    for (int i = 0 ; i < 50 ; ++i) {
        ParityCheckMatrix h(6, 12);
        for (std::size_t r = 0 ; r < 6 ; ++r)
            for (std::size_t c = 0 ; c < 12 ; ++c)
                h.set(r, c, bernoulli(rng, 0.3));
        auto text = emit_alist(h);
        EXPECT_EQ(parse_alist(text), h);
        EXPECT_EQ(emit_alist(parse_alist(text)), text);
    }
}

TEST(Alist, AcceptsUnpaddedLists)
{
    auto h = parse_alist("3 2\n2 2\n1 2 1\n2 2\n1\n1 2\n2\n1 2\n2 3\n");
    EXPECT_TRUE(h.at(0, 0) && h.at(0, 1) && h.at(1, 1) && h.at(1, 2));
    EXPECT_FALSE(h.at(1, 0) || h.at(0, 2));
}

TEST(Alist, TruncatedInput)
{
    try {
        parse_alist("2 1\n1 2\n1 1\n2\n1\n");
        FAIL() << "expected a parse error";
    }
    catch (const ParseError & e) {
        EXPECT_NE(std::string(e.what()).find("unexpected end of input"), std::string::npos);
    }
}

TEST(Alist, InconsistentListsReportFirstMismatch)
{
    try {
        // Column 2 claims row 1, row 1 lists only column 1.
        parse_alist("2 1\n1 1\n1 1\n1\n1\n1\n1\n");
        FAIL() << "expected a parse error";
    }
    catch (const ParseError & e) {
        EXPECT_NE(std::string(e.what()).find("row 1, column 2"), std::string::npos) << e.what();
    }
}

TEST(Alist, NonNumericTokens)
{
    EXPECT_THROW(parse_alist("2 1\n1 2\n1 x\n2\n1\n1\n1 2\n"), ParseError);
}

TEST(Dense, RoundTripAndErrors)
{
    auto h = parse_dense("2 3\n1 0 1\n0 1 1\n");
    EXPECT_EQ(emit_dense(h), "2 3\n1 0 1\n0 1 1\n");
    EXPECT_THROW(parse_dense("2 3\n1 0 1\n"), ParseError);
    EXPECT_THROW(parse_dense("1 3\n1 2 1\n"), ParseError);
    EXPECT_THROW(parse_dense("1 3\n1 0\n"), ParseError);
}
