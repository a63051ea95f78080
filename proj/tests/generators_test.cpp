#include "drgspec/generators.hpp"
#include "drgspec/graph.hpp"

#include <gtest/gtest.h>

#include <set>

namespace drgspec {
namespace {

// Shortest cycle length by BFS from every vertex; brute force.
std::size_t girth(const Graph& g)
{
    std::size_t best = SIZE_MAX;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<std::size_t> dist(g.order(), SIZE_MAX);
        std::vector<Vertex> parent(g.order(), SIZE_MAX);
        std::vector<Vertex> queue{s};
        dist[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const Vertex u = queue[h];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == SIZE_MAX) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

TEST(Generators, PathOfFour)
{
    const Graph g = generate("path:4");
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Generators, TriangleIsCompleteThree)
{
    EXPECT_EQ(generate("complete:3"), cycle_graph(3));
    EXPECT_EQ(generate("complete:3").size(), 3u);
}

TEST(Generators, PetersenIsCubicWithGirthFive)
{
    const Graph g = generate("petersen");
    EXPECT_EQ(g.order(), 10u);
    EXPECT_EQ(g.size(), 15u);
    EXPECT_EQ(g.regular_degree(), 3u);
    EXPECT_EQ(girth(g), 5u);
}

TEST(Generators, Hypercube)
{
    for (std::size_t q = 1; q <= 6; ++q) {
        const Graph g = hypercube_graph(q);
        EXPECT_EQ(g.order(), std::size_t{1} << q);
        EXPECT_EQ(g.size(), q << (q - 1));
        EXPECT_EQ(g.regular_degree(), q);
    }
    EXPECT_EQ(girth(hypercube_graph(3)), 4u);
}

TEST(Generators, OtherFamilies)
{
    EXPECT_EQ(cycle_graph(5).regular_degree(), 2u);
    EXPECT_EQ(girth(cycle_graph(7)), 7u);
    const Graph k23 = generate("complete_bipartite:2,3");
    EXPECT_EQ(k23.order(), 5u);
    EXPECT_EQ(k23.size(), 6u);
    EXPECT_TRUE(k23.adjacent(0, 2));
    EXPECT_FALSE(k23.adjacent(0, 1));
    const Graph star = generate("star:3");
    EXPECT_EQ(star.degree(0), 3u);
    EXPECT_EQ(star, complete_bipartite_graph(1, 3));
    EXPECT_EQ(generate("complete:1").order(), 1u);
    EXPECT_EQ(generate("path:1").order(), 1u);
}

TEST(Generators, InvalidParameters)
{
    EXPECT_THROW(generate("cycle:2"), ParseError);
    EXPECT_THROW(generate("path:0"), ParseError);
    EXPECT_THROW(generate("hypercube:0"), ParseError);
    EXPECT_THROW(generate("complete_bipartite:0,3"), ParseError);
    EXPECT_THROW(generate("complete_bipartite:3"), ParseError);
    EXPECT_THROW(generate("petersen:3"), ParseError);
    EXPECT_THROW(generate("path"), ParseError);
    EXPECT_THROW(generate("path:x"), ParseError);
    EXPECT_THROW(generate("path:4,"), ParseError);
    EXPECT_THROW(generate("wheel:5"), ParseError);
}

TEST(Generators, DeterministicLabeling)
{
    EXPECT_EQ(to_edge_list(generate("hypercube:2")), "0 1\n0 2\n1 3\n2 3\n");
    EXPECT_EQ(to_edge_list(generate("cycle:4")), "0 1\n0 3\n1 2\n2 3\n");
    // {0,1} is disjoint from {2,3}, {2,4}, {3,4}: indices 7, 8, 9.
    EXPECT_EQ(petersen_graph().neighbors(0), (std::vector<Vertex>{7, 8, 9}));
}

} // namespace
} // namespace drgspec
