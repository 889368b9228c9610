#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sympow/exact.hpp"
#include "sympow/graph.hpp"
#include "sympow/sympower.hpp"
#include "sympow/types.hpp"

using namespace sympow;

namespace {

std::vector<Graph> all_labelled(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  out.reserve(1u << pairs);
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if (mask >> bit & 1u) g.add_edge(i, j);
    out.push_back(g);
  }
  return out;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng() & 1u) g.add_edge(i, j);
  return g;
}

// spectrum of a possibly non-symmetric real matrix; must be real for these
// quotients (they are similar to symmetric compressions)
RealVector real_spectrum(const RealMatrix& m) {
  Eigen::EigenSolver<RealMatrix> solver(m);
  REQUIRE(solver.info() == Eigen::Success);
  RealVector v(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    CHECK(std::abs(solver.eigenvalues()[i].imag()) < 1e-9);
    v[i] = solver.eigenvalues()[i].real();
  }
  std::sort(v.data(), v.data() + v.size(), std::greater<double>());
  return v;
}

Graph saltire_star() { return star_graph(4); }
Graph saltire_cycle() {
  return disjoint_union(cycle_graph(4), empty_graph(1));
}

}  // namespace

TEST_CASE("k-subset colex ranking") {
  const KSubsetIndex ix(6, 3);
  CHECK(ix.ground() == 6);
  CHECK(ix.subset_size() == 3);
  CHECK(ix.count() == 20);
  CHECK(ix.rank({0, 1, 2}) == 0);
  CHECK(ix.rank({3, 4, 5}) == 19);
  CHECK(ix.unrank(0) == std::vector<int>{0, 1, 2});
  for (int v = 1; v <= 8; ++v)
    for (int k = 0; k <= v; ++k) {
      const KSubsetIndex index(v, k);
      std::vector<int> last;
      for (std::uint64_t r = 0; r < index.count(); ++r) {
        const auto s = index.unrank(r);
        CHECK(index.rank(s) == r);
        CHECK(static_cast<int>(s.size()) == k);
        CHECK(std::is_sorted(s.begin(), s.end()));
        if (r > 0)
          CHECK(std::lexicographical_compare(last.rbegin(), last.rend(),
                                             s.rbegin(), s.rend()));
        last = s;
      }
    }
}

TEST_CASE("subset power, fixed cases") {
  CHECK(symmetric_power_subsets(complete_graph(3), 2) == complete_graph(3));
  const Graph sq = symmetric_power_subsets(petersen_graph(), 2);
  CHECK(sq.order() == 45);
  CHECK(sq.edge_count() == 120);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 6), rng);
    CHECK(symmetric_power_subsets(g, 1) == g);
    CHECK(symmetric_power_subsets(g, 2).edge_count() ==
          g.edge_count() * (g.order() - 2));
  }
  CHECK_THROWS_AS(symmetric_power_subsets(complete_graph(3), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(symmetric_power_subsets(complete_graph(3), 4),
                  std::invalid_argument);
}

TEST_CASE("subset power adjacency is the symmetric-difference rule") {
  // vertices S,T adjacent exactly when S (+) T is an edge
  std::mt19937_64 rng(32);
  for (int t = 0; t < 10; ++t) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 2);
    const Graph g = random_graph(n, rng);
    const Graph p = symmetric_power_subsets(g, k);
    const KSubsetIndex ix(n, k);
    for (std::uint64_t r = 0; r < ix.count(); ++r)
      for (std::uint64_t s = r + 1; s < ix.count(); ++s) {
        const auto a = ix.unrank(r);
        const auto b = ix.unrank(s);
        std::vector<int> diff;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(diff));
        const bool expect = diff.size() == 2 && g.has(diff[0], diff[1]);
        CHECK(p.has(static_cast<int>(r), static_cast<int>(s)) == expect);
      }
  }
}

TEST_CASE("diagonal vertices of the cartesian square") {
  const Graph sq = cartesian_product(complete_graph(2), complete_graph(2));
  const VertexSet d = diagonal_vertices(sq);
  CHECK(d.members() == std::vector<int>{0, 3});
  const Graph p = petersen_graph();
  const VertexSet dp = diagonal_vertices(cartesian_product(p, p));
  CHECK(dp.size() == 10);
  for (int i = 0; i < 10; ++i) CHECK(dp.contains(11 * i));
}

TEST_CASE("coordinate flip is an automorphism of every square") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_labelled(n)) {
      const Graph sq = cartesian_product(g, g);
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          for (int c = 0; c < n && ok; ++c)
            for (int d = 0; d < n && ok; ++d) {
              if (a == c && b == d) continue;
              if (sq.has(a * n + b, c * n + d) !=
                  sq.has(b * n + a, d * n + c))
                ok = false;
            }
      CHECK(ok);
    }
}

TEST_CASE("flip orbits: diagonal singletons first, then pairs") {
  const Graph sq = cartesian_product(complete_graph(3), complete_graph(3));
  const OrbitPartition part = flip_orbits(sq);
  REQUIRE(part.cells.size() == 3 + 3);
  for (int i = 0; i < 3; ++i)
    CHECK(part.cells[static_cast<std::size_t>(i)] ==
          std::vector<int>{i * 3 + i});
  for (std::size_t c = 3; c < 6; ++c)
    CHECK(part.cells[c].size() == 2);
  std::mt19937_64 rng(33);
  for (int t = 0; t < 10; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(n, rng);
    CHECK(flip_orbits(cartesian_product(g, g)).cells.size() ==
          static_cast<std::size_t>(n + n * (n - 1) / 2));
  }
}

TEST_CASE("quotient construction equals the subset construction") {
  CHECK(symmetric_power_quotient(complete_graph(2)) == complete_graph(1));
  CHECK(symmetric_power_quotient(complete_graph(3)) == complete_graph(3));
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : all_labelled(n))
      CHECK(symmetric_power_quotient(g) == symmetric_power_subsets(g, 2));
  std::mt19937_64 rng(34);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(6 + static_cast<int>(rng() % 3), rng);
    CHECK(symmetric_power_quotient(g) == symmetric_power_subsets(g, 2));
  }
}

TEST_CASE("selector construction gives the same adjacency") {
  const IntMatrix z = selector_power(complete_graph(2), 2);
  REQUIRE(z.rows() == 1);
  CHECK(z(0, 0) == 0);
  const IntMatrix k3 = selector_power(complete_graph(3), 2);
  CHECK(oracle::mats_equal(k3, complete_graph(3).adjacency<Int>()));
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : all_labelled(n))
      for (int k = 1; k <= std::min(3, n); ++k)
        CHECK(oracle::mats_equal(selector_power(g, k),
                                 symmetric_power_subsets(g, k).adjacency<Int>()));
  std::mt19937_64 rng(35);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(5, rng);
    CHECK(oracle::mats_equal(selector_power(g, 3),
                             symmetric_power_subsets(g, 3).adjacency<Int>()));
  }
}

TEST_CASE("orbit characteristic matrix identities") {
  for (int n = 2; n <= 5; ++n) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 101);
    const Graph g = random_graph(n, rng);
    const Graph sq = cartesian_product(g, g);
    const RealMatrix r = orbit_characteristic(flip_orbits(sq), sq.order());
    const RealMatrix rtr = r.transpose() * r;
    CHECK((rtr - RealMatrix::Identity(rtr.rows(), rtr.cols()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    RealMatrix flip = RealMatrix::Zero(sq.order(), sq.order());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flip(i * n + j, j * n + i) = 1;
    const RealMatrix expect =
        0.5 * (RealMatrix::Identity(sq.order(), sq.order()) + flip);
    CHECK((r * r.transpose() - expect).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("full flip quotient of an edge") {
  const RealMatrix q = flip_quotient_full(complete_graph(2));
  REQUIRE(q.rows() == 3);
  const EigenSpectrum s = symmetric_eigenvalues(0.5 * (q + q.transpose()));
  CHECK(s.values[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(s.values[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(s.values[2] == doctest::Approx(-2.0).epsilon(1e-10));
}

TEST_CASE("combinatorial flip quotient of an edge") {
  const IntMatrix b = flip_quotient_combinatorial(complete_graph(2));
  IntMatrix expect(3, 3);
  expect << Int(0), Int(0), Int(2), Int(0), Int(0), Int(2), Int(1), Int(1),
      Int(0);
  CHECK(oracle::mats_equal(b, expect));
}

TEST_CASE("combinatorial and full quotients are similar") {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 12; ++t) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 4), rng);
    const IntMatrix b = flip_quotient_combinatorial(g);
    RealMatrix bd(b.rows(), b.cols());
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j) bd(i, j) = b(i, j).get_d();
    const RealVector from_b = real_spectrum(bd);
    const RealVector from_full = real_spectrum(flip_quotient_full(g));
    REQUIRE(from_b.size() == from_full.size());
    CHECK(spectra_close(from_b, from_full, 1e-7));
  }
}

TEST_CASE("predicted quotient spectrum") {
  const auto k2 = predicted_quotient_spectrum(complete_graph(2), 1e-8);
  REQUIRE(k2.size() == 3);
  CHECK(k2[0] == doctest::Approx(2.0));
  CHECK(k2[1] == doctest::Approx(0.0));
  CHECK(k2[2] == doctest::Approx(-2.0));

  const auto k3 = predicted_quotient_spectrum(complete_graph(3), 1e-8);
  REQUIRE(k3.size() == 6);
  const double expect3[] = {4, 1, 1, -2, -2, -2};
  for (int i = 0; i < 6; ++i) CHECK(k3[i] == doctest::Approx(expect3[i]).epsilon(1e-8));

  std::mt19937_64 rng(37);
  for (int t = 0; t < 15; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(n, rng);
    const auto predicted = predicted_quotient_spectrum(g, 1e-8);
    CHECK(predicted.size() == binomial64(n + 1, 2));
    const RealVector full = real_spectrum(flip_quotient_full(g));
    REQUIRE(static_cast<Eigen::Index>(predicted.size()) == full.size());
    for (Eigen::Index i = 0; i < full.size(); ++i)
      CHECK(std::abs(predicted[static_cast<std::size_t>(i)] - full[i]) < 1e-7);
  }
}

TEST_CASE("quotient transfers cospectrality to the classical pair") {
  const Graph x = saltire_star();
  const Graph y = saltire_cycle();
  REQUIRE(charpoly_exact(x.adjacency<Int>()) ==
          charpoly_exact(y.adjacency<Int>()));
  const RealVector qx = real_spectrum(flip_quotient_full(x));
  const RealVector qy = real_spectrum(flip_quotient_full(y));
  CHECK(spectra_close(qx, qy, 1e-7));
}

TEST_CASE("direct-product square analog") {
  const DirectSquareAnalog edge = direct_square_analog(complete_graph(2));
  CHECK(edge.graph.order() == 1);
  CHECK(edge.graph.edge_count() == 0);
  CHECK(edge.dropped_loops == 1);

  const DirectSquareAnalog tri = direct_square_analog(complete_graph(3));
  CHECK(tri.graph == complete_graph(3));
  CHECK(tri.dropped_loops == 3);

  std::mt19937_64 rng(38);
  for (int t = 0; t < 15; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, rng);
    const DirectSquareAnalog a = direct_square_analog(g);
    CHECK(a.graph.order() == n * (n - 1) / 2);
    // the flip glues (i,j) to (j,i); that orbit carries a loop iff ij is an
    // edge of g, and loops are dropped from the simple quotient
    CHECK(a.dropped_loops == static_cast<int>(g.edge_count()));
  }
}

TEST_CASE("cyclic cube analog") {
  CHECK(cyclic_cube_analog(complete_graph(2)) == complete_graph(2));
  std::mt19937_64 rng(39);
  for (int n = 2; n <= 6; ++n) {
    const Graph g = random_graph(n, rng);
    CHECK(cyclic_cube_analog(g).order() == (n * n * n - n) / 3);
  }
  CHECK(cyclic_cube_analog(petersen_graph()).order() == 330);
}
