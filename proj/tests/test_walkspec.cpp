#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sympow/exact.hpp"
#include "sympow/graph.hpp"
#include "sympow/sympower.hpp"
#include "sympow/walkspec.hpp"

using namespace sympow;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng() & 1u) g.add_edge(i, j);
  return g;
}

Graph saltire_star() { return star_graph(4); }
Graph saltire_cycle() {
  return disjoint_union(cycle_graph(4), empty_graph(1));
}

// delete an independent set of the given size, first one found
Graph delete_independent(const Graph& g, int size, std::uint64_t skip) {
  const int n = g.order();
  std::vector<int> pick;
  std::uint64_t seen = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (__builtin_popcountll(mask) != size) continue;
    bool independent = true;
    for (int i = 0; i < n && independent; ++i)
      for (int j = i + 1; j < n && independent; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && g.has(i, j))
          independent = false;
    if (!independent) continue;
    if (seen++ < skip) continue;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) pick.push_back(i);
    return delete_vertices(g, VertexSet(pick));
  }
  throw std::runtime_error("no independent set of that size");
}

}  // namespace

TEST_CASE("walk series closed forms") {
  const WalkSeries self = walk_series(complete_graph(2), 0, 0, 4);
  REQUIRE(self.counts.size() == 5);
  const long expect_self[] = {1, 0, 1, 0, 1};
  for (int r = 0; r <= 4; ++r) CHECK(self.counts[r] == expect_self[r]);

  const WalkSeries all = all_walks_series(complete_graph(2), 3);
  REQUIRE(all.counts.size() == 4);
  for (int r = 0; r <= 3; ++r) CHECK(all.counts[r] == 2);

  CHECK_THROWS_AS(walk_series(complete_graph(2), 0, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(walk_series(complete_graph(2), 0, 0, -1),
                  std::invalid_argument);
}

TEST_CASE("walk series agrees with direct enumeration") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 8; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(n, rng);
    const int i = static_cast<int>(rng() % n);
    const int j = static_cast<int>(rng() % n);
    const WalkSeries s = walk_series(g, i, j, 6);
    for (int r = 0; r <= 6; ++r)
      CHECK(s.counts[r] == oracle::walk_count(g, i, j, r));
  }
}

TEST_CASE("all-walks series separates a cospectral pair from its complements") {
  const Graph s = saltire_star();
  const Graph c = saltire_cycle();
  REQUIRE(cospectral(s, c));
  const WalkSeries ws = all_walks_series(s, 4);
  const WalkSeries wc = all_walks_series(c, 4);
  CHECK(ws.counts[0] == 5);
  CHECK(ws.counts[1] == 8);
  CHECK(wc.counts[1] == 8);
  // first disagreement at length 2: sum of squared degrees
  CHECK(ws.counts[2] == 20);
  CHECK(wc.counts[2] == 16);
}

TEST_CASE("cospectrality decisions") {
  CHECK(cospectral(complete_graph(3), complete_graph(3)));
  CHECK_FALSE(cospectral(complete_graph(3), cycle_graph(4)));
  CHECK_FALSE(cospectral(complete_graph(3), complete_graph(4)));
  CHECK(cospectral(saltire_star(), saltire_cycle()));
  CHECK_FALSE(cospectral_with_complements(saltire_star(), saltire_cycle()));
  CHECK(cospectral_with_complements(petersen_graph(), petersen_graph()));
  CHECK(cospectral_with_complements(shrikhande_graph(), rook4_graph()));
}

TEST_CASE("complement cospectrality from truncated walk data") {
  // decided from the series, cross-checked internally against charpolys
  CHECK_FALSE(complements_cospectral_by_walks(saltire_star(), saltire_cycle()));
  CHECK(complements_cospectral_by_walks(petersen_graph(), petersen_graph()));
  CHECK(complements_cospectral_by_walks(shrikhande_graph(), rook4_graph()));
  CHECK_THROWS_AS(
      complements_cospectral_by_walks(complete_graph(3), cycle_graph(4)),
      std::invalid_argument);
  std::mt19937_64 rng(62);
  for (int t = 0; t < 6; ++t) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 6), rng);
    CHECK(complements_cospectral_by_walks(g, g));
  }
}

TEST_CASE("vertex and pair decks") {
  const auto deck3 = vertex_deck(complete_graph(3));
  REQUIRE(deck3.size() == 3);
  const IntPolynomial k2(std::vector<Int>{-1, 0, 1});  // t^2 - 1
  for (const auto& p : deck3) CHECK(p == k2);

  // vertex-transitive: one distinct card; edge/non-edge pairs: two
  const Graph pet = petersen_graph();
  auto vd = vertex_deck(pet);
  REQUIRE(vd.size() == 10);
  CHECK(std::adjacent_find(vd.begin(), vd.end(),
                           [](const auto& a, const auto& b) { return a != b; }) ==
        vd.end());
  auto pd = pair_deck(pet);
  REQUIRE(pd.size() == 45);
  std::map<IntPolynomial, int, decltype(&poly_less)> classes(&poly_less);
  for (const auto& p : pd) ++classes[p];
  REQUIRE(classes.size() == 2);
  // 15 edges, 30 non-adjacent pairs
  std::vector<int> sizes;
  for (const auto& [poly, cnt] : classes) sizes.push_back(cnt);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes[0] == 15);
  CHECK(sizes[1] == 30);
}

TEST_CASE("deleted-minor determinant identity") {
  CHECK(minor_identity_holds(petersen_graph(), VertexSet{3}));
  CHECK(minor_identity_holds(complete_graph(2), VertexSet{0, 1}));
  std::mt19937_64 rng(63);
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, rng);
    const int dsize = 1 + static_cast<int>(rng() % std::min(3, n));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> d(all.begin(), all.begin() + dsize);
    std::sort(d.begin(), d.end());
    CHECK(minor_identity_holds(g, VertexSet(d)));
  }
  CHECK_THROWS_AS(minor_identity_holds(complete_graph(3), VertexSet{}),
                  std::invalid_argument);
}

TEST_CASE("off-diagonal cofactor identity") {
  CHECK(offdiagonal_identity_holds(complete_graph(2), 0, 1));
  CHECK(offdiagonal_identity_holds(path_graph(3), 0, 2));
  std::mt19937_64 rng(64);
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, rng);
    const int i = static_cast<int>(rng() % n);
    int j = static_cast<int>(rng() % n);
    if (j == i) j = (j + 1) % n;
    CHECK(offdiagonal_identity_holds(g, i, j));
  }
  CHECK_THROWS_AS(offdiagonal_identity_holds(complete_graph(3), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("walk counts constant on relation classes of strongly regular graphs") {
  for (const Graph& g : {petersen_graph(), shrikhande_graph(), rook4_graph()}) {
    const IntMatrix a = g.adjacency<Int>();
    const int n = g.order();
    IntMatrix power(n, n);
    power.setIdentity();
    for (int r = 1; r <= 12; ++r) {
      power = (power * a).eval();
      // one value on the diagonal, one on edges, one on non-edges
      Int diag = power(0, 0), edge = 0, non = 0;
      bool have_edge = false, have_non = false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) {
            CHECK(power(i, j) == diag);
          } else if (g.has(i, j)) {
            if (!have_edge) { edge = power(i, j); have_edge = true; }
            CHECK(power(i, j) == edge);
          } else {
            if (!have_non) { non = power(i, j); have_non = true; }
            CHECK(power(i, j) == non);
          }
        }
    }
  }
}

TEST_CASE("independent-set deletions from a vertex-transitive-free pair") {
  // equal-size independent-set deletions of these cospectral-with-complement
  // graphs remain cospectral with cospectral complements
  const Graph s = shrikhande_graph();
  const Graph r = rook4_graph();
  for (int size : {2, 3}) {
    for (std::uint64_t skip : {0ull, 5ull}) {
      const Graph ds = delete_independent(s, size, skip);
      const Graph dr = delete_independent(r, size, skip);
      CHECK(cospectral_with_complements(ds, dr));
    }
  }
}

TEST_CASE("series entries never negative") {
  std::mt19937_64 rng(65);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 6), rng);
    const WalkSeries s = all_walks_series(g, 8);
    for (const Int& c : s.counts) CHECK(c >= 0);
  }
}
