#include "kaleido/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "kaleido/complete.hpp"
#include "kaleido/regular3.hpp"
#include "oracles.hpp"

namespace kaleido {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::Io;
}

ColoredGraph monochrome_k4(int k) {
  std::vector<ColoredEdge> edges;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) edges.push_back({u, v, 1});
  return ColoredGraph::build(4, k, edges);
}

TEST(BuildGraph, SingleEdge) {
  const auto g = ColoredGraph::build(2, 1, {{1, 2, 1}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.color_class(1), (std::vector<VertexPair>{{1, 2}}));
}

TEST(BuildGraph, CanonicalizesAndIgnoresInputOrder) {
  const auto a = ColoredGraph::build(3, 2, {{3, 1, 2}, {2, 1, 1}});
  const auto b = ColoredGraph::build(3, 2, {{1, 2, 1}, {1, 3, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edges().front(), (ColoredEdge{1, 2, 1}));
  EXPECT_EQ(a.color_of(3, 1), 2);
  EXPECT_FALSE(a.has_edge(2, 3));
}

TEST(BuildGraph, Errors) {
  EXPECT_EQ(code_of([] { ColoredGraph::build(3, 2, {{1, 2, 1}, {2, 1, 2}}); }),
            ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { ColoredGraph::build(3, 2, {{2, 2, 1}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { ColoredGraph::build(3, 2, {{1, 2, 3}}); }), ErrorCode::ColorOutOfRange);
  EXPECT_EQ(code_of([] { ColoredGraph::build(3, 2, {{1, 2, 0}}); }), ErrorCode::ColorOutOfRange);
  EXPECT_EQ(code_of([] { ColoredGraph::build(3, 2, {{1, 4, 1}}); }), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code_of([] { ColoredGraph::build(0, 2, {}); }), ErrorCode::InvalidArgument);
}

TEST(BuildGraph, Regular3AtSevenHas49Edges) {
  // 7-regular on 14 vertices: 7 * 14 / 2.
  const auto g = construct_regular3(7);
  const auto rebuilt = ColoredGraph::build(14, 3, g.edges());
  EXPECT_EQ(rebuilt.size(), 49u);
}

TEST(STuple, PaperTupleInEvenCase2) {
  // n = 12, k = 5: v_1 has {1,2}-tuple (2, n/2 - 2).
  const auto g = construct_complete(12, 5).graph;
  const std::vector<Color> s{1, 2};
  EXPECT_EQ(s_tuple(g, 1, s).counts, (std::vector<int>{2, 4}));
}

TEST(STuple, SingleColorEqualsDegree) {
  const auto g = monochrome_k4(3);
  const std::vector<Color> s{1};
  EXPECT_EQ(s_tuple(g, 2, s).counts, (std::vector<int>{3}));
}

TEST(STuple, Regular3VertexH15) {
  const int r = 7;
  const auto verts = regular3_vertices(r);
  const auto x = coord_of({Frame::H, 1, 5}, r);
  ASSERT_EQ(x, (TriCoord{5, 1, 1}));
  const auto it = std::find(verts.begin(), verts.end(), x);
  ASSERT_NE(it, verts.end());
  const Vertex v = static_cast<Vertex>(it - verts.begin()) + 1;
  const auto g = construct_regular3(r);
  const std::vector<Color> s{1, 2, 3};
  EXPECT_EQ(s_tuple(g, v, s).counts, (std::vector<int>{5, 1, 1}));
}

TEST(STuple, Errors) {
  const auto g = monochrome_k4(3);
  const std::vector<Color> bad{4};
  const std::vector<Color> ok{1};
  const std::vector<Color> none{};
  EXPECT_EQ(code_of([&] { s_tuple(g, 5, ok); }), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code_of([&] { s_tuple(g, 1, bad); }), ErrorCode::ColorOutOfRange);
  EXPECT_EQ(code_of([&] { s_tuple(g, 1, none); }), ErrorCode::InvalidArgument);
}

TEST(Verify, CompleteSixThree) {
  const auto report = verify_kaleidoscope(construct_complete(6, 3).graph);
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.regular_degree, 5);
}

TEST(Verify, EveryTwoColoringOfK4Fails) {
  std::vector<VertexPair> pairs;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) pairs.emplace_back(u, v);
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<ColoredEdge> edges;
    for (int i = 0; i < 6; ++i)
      edges.push_back({pairs[i].first, pairs[i].second, (mask >> i & 1) + 1});
    const auto report = verify_kaleidoscope(ColoredGraph::build(4, 2, edges));
    EXPECT_FALSE(report.valid) << mask;
    EXPECT_FALSE(report.duplicate_pairs.empty() && report.coverage_failures.empty()) << mask;
  }
}

TEST(Verify, MonochromeListsEveryMissingColor) {
  const auto report = verify_kaleidoscope(monochrome_k4(3));
  EXPECT_FALSE(report.valid);
  std::vector<CoverageFailure> expected;
  for (int v = 1; v <= 4; ++v) {
    expected.push_back({v, 2});
    expected.push_back({v, 3});
  }
  EXPECT_EQ(report.coverage_failures, expected);
  EXPECT_EQ(report.duplicate_pairs.size(), 6u);
  EXPECT_EQ(report.regular_degree, 3);
}

TEST(Verify, IrregularGraphHasNoRegularDegree) {
  const auto g = ColoredGraph::build(3, 1, {{1, 2, 1}});
  EXPECT_FALSE(verify_kaleidoscope(g).regular_degree.has_value());
}

TEST(TupleCount, SmallValues) {
  EXPECT_EQ(tuple_count(3), 1);
  EXPECT_EQ(tuple_count(5), 6);
  EXPECT_EQ(tuple_count(7), oracle::count_triples(7));
  EXPECT_EQ(tuple_count(7), 15);
  EXPECT_EQ(code_of([] { tuple_count(2); }), ErrorCode::DegreeTooSmall);
}

// Properties over randomly colored graphs and over relabeled constructions.

ColoredGraph random_coloring(int n, int k, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> color(1, k);
  std::vector<ColoredEdge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (keep(rng)) edges.push_back({u, v, color(rng)});
  return ColoredGraph::build(n, k, edges);
}

TEST(GraphProperties, TupleSumsAndHandshake) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 12;
    const int k = 1 + trial % 5;
    const auto g = random_coloring(n, k, 0.6, rng);
    const auto deg = g.degrees();
    const auto tuples = multiset_colors(g);
    std::vector<int> per_color(k, 0);
    for (int v = 1; v <= n; ++v) {
      EXPECT_EQ(tuples[v - 1].degree(), deg[v - 1]);
      EXPECT_EQ(tuples[v - 1], multiset_color(g, v));
      for (int c = 0; c < k; ++c) per_color[c] += tuples[v - 1].counts[c];
    }
    for (int c = 1; c <= k; ++c) {
      EXPECT_EQ(per_color[c - 1], 2 * static_cast<int>(g.color_class(c).size()));
    }
  }
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm, std::mt19937_64& rng) {
  std::vector<ColoredEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1], e.color});
  std::shuffle(edges.begin(), edges.end(), rng);
  return ColoredGraph::build(g.order(), g.palette(), edges);
}

TEST(GraphProperties, VerifierInvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  std::vector<ColoredGraph> samples{construct_complete(9, 4).graph, construct_complete(12, 5).graph,
                                    construct_regular3(7)};
  for (int i = 0; i < 20; ++i) samples.push_back(random_coloring(7, 3, 0.8, rng));
  for (const auto& g : samples) {
    const auto before = verify_kaleidoscope(g);
    for (int t = 0; t < 5; ++t) {
      const auto after = verify_kaleidoscope(relabel(g, oracle::random_permutation(g.order(), rng), rng));
      EXPECT_EQ(before.valid, after.valid);
      EXPECT_EQ(before.regular_degree, after.regular_degree);
      EXPECT_EQ(before.duplicate_pairs.size(), after.duplicate_pairs.size());
      EXPECT_EQ(before.coverage_failures.size(), after.coverage_failures.size());
    }
  }
}

// Any 2-coloring of a regular graph repeats a tuple: the color-1 subgraph
// has two vertices of equal degree. Exhaustive over every regular graph on
// at most 6 vertices and every 2-coloring of it; sampled for 7 and 8.
TEST(GraphProperties, RegularGraphsAreNeverTwoKaleidoscopes) {
  auto check = [](int n, const std::vector<VertexPair>& host, std::uint64_t mask) {
    std::vector<ColoredEdge> edges;
    for (std::size_t i = 0; i < host.size(); ++i)
      edges.push_back({host[i].first, host[i].second, static_cast<int>(mask >> i & 1) + 1});
    return ColoredGraph::build(n, 2, edges);
  };
  for (int n = 2; n <= 6; ++n) {
    std::vector<VertexPair> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
    for (std::uint64_t gmask = 0; gmask < (1ull << all.size()); ++gmask) {
      std::vector<VertexPair> host;
      std::vector<int> deg(n, 0);
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (gmask >> i & 1) {
          host.push_back(all[i]);
          ++deg[all[i].first - 1];
          ++deg[all[i].second - 1];
        }
      }
      if (host.empty() || std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end())
        continue;
      for (std::uint64_t cmask = 0; cmask < (1ull << host.size()); ++cmask) {
        ASSERT_FALSE(verify_kaleidoscope(check(n, host, cmask)).duplicate_pairs.empty());
      }
    }
  }
  std::mt19937_64 rng(3);
  for (int n : {7, 8}) {
    // Complete graphs and complements of perfect matchings / cycles.
    std::vector<std::vector<VertexPair>> hosts;
    std::vector<VertexPair> kn, cycle_complement;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) {
        kn.emplace_back(u, v);
        if (v - u != 1 && !(u == 1 && v == n)) cycle_complement.emplace_back(u, v);
      }
    hosts.push_back(kn);
    hosts.push_back(cycle_complement);
    for (const auto& host : hosts) {
      std::uniform_int_distribution<std::uint64_t> pick(0, (1ull << host.size()) - 1);
      for (int t = 0; t < 2000; ++t) {
        ASSERT_FALSE(verify_kaleidoscope(check(n, host, pick(rng))).duplicate_pairs.empty());
      }
    }
  }
}

}  // namespace
}  // namespace kaleido
