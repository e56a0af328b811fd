#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "starspec/error.hpp"
#include "starspec/shape.hpp"
#include "test_support.hpp"

namespace starspec {
namespace {

Errc error_code_of(const std::vector<Edge>& edges) {
  try {
    shape_from_edge_list(edges);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::kParse;
}

TEST(StarlikeShape, CanonicalOrderAndCounts) {
  const StarlikeShape shape({1, 2, 5});
  EXPECT_EQ(shape.branch_count(), 3);
  EXPECT_EQ(shape.vertex_count(), 9);
  EXPECT_EQ(std::vector<int>(shape.branches().begin(), shape.branches().end()),
            (std::vector<int>{5, 2, 1}));
  EXPECT_EQ(shape, StarlikeShape({2, 5, 1}));
  EXPECT_EQ(shape.to_string(), "3;5,2,1");
}

TEST(StarlikeShape, SingleVertex) {
  const StarlikeShape a1;
  EXPECT_TRUE(a1.is_single_vertex());
  EXPECT_EQ(a1.vertex_count(), 1);
  EXPECT_EQ(a1.to_string(), "0;");
}

TEST(StarlikeShape, RejectsNonPositiveBranch) {
  EXPECT_THROW(StarlikeShape({3, 0}), Error);
}

TEST(VertexNumbering, RootFirstThenContiguousBranches) {
  const StarlikeShape shape({2, 3});
  const VertexNumbering numbering(shape);
  EXPECT_EQ(numbering.index_of({}), 0);
  EXPECT_EQ(numbering.index_of({1, 1}), 1);
  EXPECT_EQ(numbering.index_of({1, 3}), 3);
  EXPECT_EQ(numbering.index_of({2, 2}), 5);
  for (int i = 0; i < numbering.size(); ++i) {
    EXPECT_EQ(numbering.index_of(numbering.vertex_at(i)), i);
  }
  EXPECT_THROW(numbering.index_of({2, 3}), std::out_of_range);
}

TEST(Adjacency, Claw) {
  const auto adj = adjacency(StarlikeShape({1, 1, 1}));
  EXPECT_EQ(adj.vertex_count, 4);
  EXPECT_EQ(adj.edges, (std::vector<Edge>{{1, 0}, {2, 0}, {3, 0}}));
}

TEST(Adjacency, PathOfFour) {
  const auto adj = adjacency(StarlikeShape({3}));
  EXPECT_EQ(adj.edges.size(), 3u);
  std::vector<int> degrees;
  for (int v = 0; v < adj.vertex_count; ++v) degrees.push_back(adj.degree(v));
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{1, 1, 2, 2}));
}

TEST(Adjacency, DegreeSequenceOf125) {
  const auto adj = adjacency(StarlikeShape({1, 2, 5}));
  EXPECT_EQ(adj.vertex_count, 9);
  EXPECT_EQ(adj.edges.size(), 8u);
  std::vector<int> degrees;
  for (int v = 0; v < adj.vertex_count; ++v) degrees.push_back(adj.degree(v));
  std::sort(degrees.rbegin(), degrees.rend());
  EXPECT_EQ(degrees, (std::vector<int>{3, 2, 2, 2, 2, 2, 1, 1, 1}));
}

TEST(Adjacency, ChainAndSpokeStructure) {
  const StarlikeShape shape({4, 2, 1});
  const VertexNumbering numbering(shape);
  const auto adj = adjacency(shape);
  EXPECT_EQ(adj.degree(0), 3);
  for (int k = 1; k <= shape.branch_count(); ++k) {
    const int n = shape.branch(k);
    for (int m = 1; m < n; ++m) {
      const auto& nb = adj.neighbors[static_cast<std::size_t>(numbering.index_of({k, m}))];
      EXPECT_NE(std::find(nb.begin(), nb.end(), numbering.index_of({k, m + 1})), nb.end());
    }
    const auto& last = adj.neighbors[static_cast<std::size_t>(numbering.index_of({k, n}))];
    EXPECT_NE(std::find(last.begin(), last.end(), 0), last.end());
  }
}

TEST(ShapeFromEdgeList, Star) {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  EXPECT_EQ(shape_from_edge_list(edges), StarlikeShape({1, 1, 1, 1}));
}

TEST(ShapeFromEdgeList, PathIsRootedAtAnEndpoint) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  EXPECT_EQ(shape_from_edge_list(edges), StarlikeShape({2}));
}

TEST(ShapeFromEdgeList, SingleVertexAndEdge) {
  EXPECT_EQ(shape_from_edge_list({}), StarlikeShape{});
  const std::vector<Edge> edge{{1, 0}};
  EXPECT_EQ(shape_from_edge_list(edge), StarlikeShape({1}));
}

TEST(ShapeFromEdgeList, HShapeHasTwoBranchVertices) {
  // 1 and 2 both have degree 3.
  const std::vector<Edge> edges{{0, 1}, {3, 1}, {1, 2}, {2, 4}, {2, 5}};
  EXPECT_EQ(error_code_of(edges), Errc::kMultipleBranchVertices);
}

TEST(ShapeFromEdgeList, CycleAndForestAreNotTrees) {
  EXPECT_EQ(error_code_of({{0, 1}, {1, 2}, {2, 0}}), Errc::kNotATree);
  EXPECT_EQ(error_code_of({{0, 1}, {2, 3}, {3, 4}, {4, 2}}), Errc::kNotATree);
  EXPECT_EQ(error_code_of({{0, 1}, {0, 1}}), Errc::kNotATree);
  EXPECT_EQ(error_code_of({{0, 0}}), Errc::kNotATree);
  EXPECT_EQ(error_code_of({{0, 2}}), Errc::kNotATree);
}

TEST(ShapeFromEdgeList, RoundTripAllSmallShapes) {
  for (const auto& shape : all_shapes(12)) {
    const auto back = shape_from_edge_list(adjacency(shape).edges);
    if (shape.branch_count() == 2) {
      EXPECT_EQ(back, StarlikeShape({shape.branch_sum()})) << shape;
    } else {
      EXPECT_EQ(back, shape) << shape;
    }
    EXPECT_EQ(static_cast<int>(adjacency(shape).edges.size()), shape.vertex_count() - 1);
  }
}

TEST(ShapeFromEdgeList, RelabelingAndBranchOrderDoNotMatter) {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    const auto shape = testing::random_shape(rng, 3 + trial % 14);
    auto edges = adjacency(shape).edges;
    std::vector<int> relabel(static_cast<std::size_t>(shape.vertex_count()));
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    for (auto& [u, v] : edges) {
      u = relabel[static_cast<std::size_t>(u)];
      v = relabel[static_cast<std::size_t>(v)];
      if (rng() % 2) std::swap(u, v);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    EXPECT_EQ(shape_from_edge_list(edges), canonical_graph(shape)) << shape;
  }
}

TEST(ReadEdgeList, CommentsAndBlankLines) {
  std::istringstream in("# star\n0 1\n\n  0 2\n0\t3\n# done\n");
  const auto edges = read_edge_list(in);
  EXPECT_EQ(edges, (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(ReadEdgeList, MalformedLines) {
  for (const char* text : {"0 1 2\n", "0\n", "a b\n", "-1 2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_edge_list(in), Error) << text;
  }
}

TEST(AllShapes, CountsArePartitionNumbers) {
  // p(1) + ... + p(k)
  EXPECT_EQ(all_shapes(3).size(), 6u);
  EXPECT_EQ(all_shapes(12).size(), 271u);
  const auto shapes = all_shapes(12);
  EXPECT_TRUE(std::adjacent_find(shapes.begin(), shapes.end()) == shapes.end());
}

}  // namespace
}  // namespace starspec
