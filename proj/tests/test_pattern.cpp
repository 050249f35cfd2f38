//
// ... Standard header files
//
#include <algorithm>
#include <random>

//
// ... Testing header files
//
#include <gtest/gtest.h>

//
// ... chordext header files
//
#include <chordext/pattern.hpp>
#include <chordext/random.hpp>

#include "oracles.hpp"

using namespace chordext;

namespace {

  Pattern
  make(int n, std::vector<Edge> edges)
  {
    return validate_pattern(n, edges);
  }

  Pattern
  four_cycle()
  {
    return make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  }

  bool
  running_intersection(Clique_tree const& tree, int n)
  {
    for (int v = 0; v < n; ++v) {
      std::vector<int> holding;
      for (std::size_t c = 0; c < tree.cliques.size(); ++c) {
        auto const& clique = tree.cliques[c];
        if (std::find(clique.begin(), clique.end(), v) != clique.end()) {
          holding.push_back(static_cast<int>(c));
        }
      }
      if (holding.empty()) return false;
      std::vector<int> reached{holding.front()};
      for (std::size_t k = 0; k < reached.size(); ++k) {
        for (auto [a, b] : tree.tree_edges) {
          auto other = a == reached[k] ? b : (b == reached[k] ? a : -1);
          if (other < 0) continue;
          if (std::find(holding.begin(), holding.end(), other) == holding.end()) continue;
          if (std::find(reached.begin(), reached.end(), other) == reached.end()) {
            reached.push_back(other);
          }
        }
      }
      if (reached.size() != holding.size()) return false;
    }
    return true;
  }

  bool
  tree_connected(Clique_tree const& tree)
  {
    auto k = tree.cliques.size();
    if (tree.tree_edges.size() + 1 != k) return false;
    std::vector<int> reached{0};
    for (std::size_t i = 0; i < reached.size(); ++i) {
      for (auto [a, b] : tree.tree_edges) {
        auto other = a == reached[i] ? b : (b == reached[i] ? a : -1);
        if (other >= 0 && std::find(reached.begin(), reached.end(), other) == reached.end()) {
          reached.push_back(other);
        }
      }
    }
    return reached.size() == k;
  }

  std::vector<std::vector<int>>
  as_vertex_sets(std::vector<std::vector<Vertex>> cycles)
  {
    for (auto& c : cycles) std::sort(c.begin(), c.end());
    std::sort(cycles.begin(), cycles.end());
    return cycles;
  }

} // end of unnamed namespace

TEST(ValidatePattern, MergesDuplicatesAndReversedPairs)
{
  auto p = make(4, {{0, 1}, {1, 0}, {2, 3}});
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(ValidatePattern, EmptyEdgeListIsDiagonal)
{
  auto p = make(3, {});
  EXPECT_EQ(p.edge_count(), 0u);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(p.contains(i, i));
  EXPECT_FALSE(p.contains(0, 1));
}

TEST(ValidatePattern, OutOfRangeEndpoint)
{
  try {
    make(2, {{0, 5}});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), Error_kind::index_out_of_range);
  }
  EXPECT_THROW(make(2, {{-1, 0}}), Error);
}

TEST(ValidatePattern, LoopsIgnored)
{
  auto p = make(2, {{0, 0}, {1, 1}});
  EXPECT_EQ(p.edge_count(), 0u);
}

TEST(IsChordal, Examples)
{
  EXPECT_TRUE(is_chordal(complete_pattern(4)));
  EXPECT_FALSE(is_chordal(four_cycle()));
  auto band = band_pattern(6, 2);
  EXPECT_TRUE(is_chordal(band));
  EXPECT_TRUE(oracle::induced_cycle_vertex_sets(band).empty());
}

TEST(PerfectEliminationOrder, BandOne)
{
  auto p = band_pattern(4, 1);
  auto order = perfect_elimination_order(p).order;
  EXPECT_EQ(order, (std::vector<Vertex>{0, 1, 2, 3}));
  // later neighbours form cliques, checked by hand
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<Vertex> later;
    for (auto j = k + 1; j < order.size(); ++j) {
      if (p.adjacent(order[k], order[j])) later.push_back(order[j]);
    }
    EXPECT_TRUE(p.is_clique(later));
  }
}

TEST(PerfectEliminationOrder, CompleteIsIdentity)
{
  EXPECT_EQ(perfect_elimination_order(complete_pattern(3)).order,
            (std::vector<Vertex>{0, 1, 2}));
}

TEST(PerfectEliminationOrder, FourCycleRejected)
{
  auto p = four_cycle();
  std::vector<Vertex> order{0, 1, 2, 3};
  int valid = 0;
  do {
    valid += is_perfect_elimination_order(p, order) ? 1 : 0;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(valid, 0);
  try {
    perfect_elimination_order(p);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), Error_kind::not_chordal);
  }
}

TEST(MaximalCliques, Examples)
{
  auto band = band_pattern(4, 1);
  EXPECT_EQ(maximal_cliques(band), (std::vector<Vertex_set>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(maximal_cliques(band), oracle::maximal_cliques(band));
  EXPECT_EQ(maximal_cliques(complete_pattern(3)), (std::vector<Vertex_set>{{0, 1, 2}}));
  EXPECT_EQ(maximal_cliques(diagonal_pattern(2)), (std::vector<Vertex_set>{{0}, {1}}));
}

TEST(MaximalCliques, NonChordalFallback)
{
  auto p = four_cycle();
  EXPECT_EQ(maximal_cliques(p), oracle::maximal_cliques(p));
  EXPECT_EQ(maximal_cliques(cycle_pattern(7)), oracle::maximal_cliques(cycle_pattern(7)));
}

TEST(MaximalCliques, NonChordalTooLarge)
{
  try {
    maximal_cliques(cycle_pattern(21));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), Error_kind::too_large);
  }
  EXPECT_EQ(maximal_cliques(band_pattern(30, 2)).size(), 28u);
}

TEST(CliqueTree, BandOnePath)
{
  auto tree = clique_tree(band_pattern(4, 1));
  EXPECT_EQ(tree.cliques, (std::vector<Vertex_set>{{0, 1}, {1, 2}, {2, 3}}));
  ASSERT_EQ(tree.tree_edges.size(), 2u);
  auto edges = tree.tree_edges;
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  EXPECT_EQ(edges, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  auto seps = tree.separators;
  std::sort(seps.begin(), seps.end());
  EXPECT_EQ(seps, (std::vector<Vertex_set>{{1}, {2}}));
  EXPECT_TRUE(running_intersection(tree, 4));
}

TEST(CliqueTree, CompleteSingleNode)
{
  auto tree = clique_tree(complete_pattern(3));
  EXPECT_EQ(tree.cliques.size(), 1u);
  EXPECT_TRUE(tree.tree_edges.empty());
}

TEST(CliqueTree, DisjointBlocksJoinedByEmptySeparator)
{
  auto tree = clique_tree(make(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(tree.cliques, (std::vector<Vertex_set>{{0, 1}, {2, 3}}));
  ASSERT_EQ(tree.tree_edges.size(), 1u);
  EXPECT_TRUE(tree.separators.front().empty());
}

TEST(CliqueTree, NotChordal)
{
  EXPECT_THROW(clique_tree(four_cycle()), Error);
}

TEST(ChordlessCycles, Examples)
{
  EXPECT_EQ(chordless_cycles(four_cycle(), 4), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}}));
  EXPECT_TRUE(chordless_cycles(complete_pattern(4), 4).empty());
  EXPECT_EQ(chordless_cycles(cycle_pattern(5), 5),
            (std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}}));
  EXPECT_TRUE(chordless_cycles(cycle_pattern(5), 4).empty());
}

TEST(ChordlessCycles, TooLarge)
{
  EXPECT_THROW(chordless_cycles(cycle_pattern(13), 13), Error);
}

TEST(SquarePartition, Examples)
{
  EXPECT_EQ(square_partition(complete_pattern(3)), (std::vector<Vertex_set>{{0, 1, 2}}));
  EXPECT_EQ(square_partition(diagonal_pattern(3)), (std::vector<Vertex_set>{{0}, {1}, {2}}));
  EXPECT_EQ(square_partition(four_cycle()), (std::vector<Vertex_set>{{0, 1}, {2, 3}}));
}

TEST(PatternProperties, ChordalityEquivalencesOnRandomPatterns)
{
  Rng rng(20261015);
  for (int sample = 0; sample < 300; ++sample) {
    auto n = std::uniform_int_distribution<int>(1, 8)(rng);
    auto density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    auto p = random_pattern(rng, n, density);
    auto chordal = is_chordal(p);
    EXPECT_EQ(chordal, oracle::peo_exists(p));
    EXPECT_EQ(chordal, !oracle::has_chordless_cycle(p));
    EXPECT_EQ(chordal, chordless_cycles(p, n).empty());
    bool peo_ok = true;
    try {
      EXPECT_TRUE(is_perfect_elimination_order(p, perfect_elimination_order(p).order));
    } catch (Error const&) {
      peo_ok = false;
    }
    EXPECT_EQ(chordal, peo_ok);
    EXPECT_EQ(as_vertex_sets(chordless_cycles(p, n)), oracle::induced_cycle_vertex_sets(p));
  }
}

TEST(PatternProperties, CliquesTreesAndPartitions)
{
  Rng rng(7);
  for (int sample = 0; sample < 200; ++sample) {
    auto n = std::uniform_int_distribution<int>(1, 8)(rng);
    auto p = sample % 2 ? random_chordal_pattern(rng, n)
                        : random_pattern(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));

    auto cliques = maximal_cliques(p);
    EXPECT_EQ(cliques, oracle::maximal_cliques(p));
    for (auto [i, j] : p.edges()) {
      EXPECT_TRUE(std::any_of(cliques.begin(), cliques.end(), [&](auto const& c) {
        return std::find(c.begin(), c.end(), i) != c.end()
            && std::find(c.begin(), c.end(), j) != c.end();
      }));
    }

    if (is_chordal(p)) {
      auto tree = clique_tree(p);
      EXPECT_TRUE(tree_connected(tree));
      EXPECT_TRUE(running_intersection(tree, n));
      EXPECT_TRUE(is_valid_clique_tree(p, tree));
      for (std::size_t k = 0; k < tree.tree_edges.size(); ++k) {
        auto [a, b] = tree.tree_edges[k];
        Vertex_set common;
        std::set_intersection(tree.cliques.at(a).begin(), tree.cliques.at(a).end(),
                              tree.cliques.at(b).begin(), tree.cliques.at(b).end(),
                              std::back_inserter(common));
        EXPECT_EQ(tree.separators[k], common);
      }
    }

    auto blocks = square_partition(p);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (auto const& b : blocks) {
      EXPECT_TRUE(p.is_clique(b));
      for (auto v : b) ++seen[static_cast<std::size_t>(v)];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST(PatternProperties, ExhaustiveSmallPatterns)
{
  for (int n = 1; n <= 5; ++n) {
    for (auto const& p : oracle::all_patterns(n)) {
      auto chordal = is_chordal(p);
      EXPECT_EQ(chordal, oracle::peo_exists(p));
      EXPECT_EQ(chordal, !oracle::has_chordless_cycle(p));
    }
  }
}
