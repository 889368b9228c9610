#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sympow/exact.hpp"
#include "sympow/graph.hpp"
#include "sympow/modarith.hpp"
#include "sympow/types.hpp"

using namespace sympow;

namespace {

IntMatrix random_int_matrix(int n, long span, std::mt19937_64& rng) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = static_cast<long>(rng() % (2 * span + 1)) - span;
  return m;
}

std::uint64_t reduce(const Int& c, std::uint64_t p) {
  Int r = c % Int(p);
  if (r < 0) r += p;
  return r.get_ui();
}

IntPolynomial t_minus(long root) {
  return IntPolynomial::variable() - IntPolynomial(root);
}

IntPolynomial pow_poly(const IntPolynomial& base, int e) {
  IntPolynomial out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

TEST_CASE("characteristic polynomial, small closed forms") {
  const IntPolynomial t = IntPolynomial::variable();
  CHECK(charpoly_exact(complete_graph(2).adjacency<Int>()) == t * t - 1);
  CHECK(charpoly_exact(IntMatrix(0, 0)) == IntPolynomial(1));
  IntMatrix one(1, 1);
  one(0, 0) = 7;
  CHECK(charpoly_exact(one) == t - IntPolynomial(7));
}

TEST_CASE("characteristic polynomial of petersen vs trace-recursion oracle") {
  const IntMatrix a = petersen_graph().adjacency<Int>();
  const IntPolynomial mine = charpoly_exact(a);
  CHECK(mine == oracle::charpoly(a));
  CHECK(mine == t_minus(3) * pow_poly(t_minus(1), 5) * pow_poly(t_minus(-2), 4));
}

TEST_CASE("classical smallest cospectral pair") {
  const IntPolynomial t = IntPolynomial::variable();
  const IntPolynomial expect = pow_poly(t, 5) - IntPolynomial(4) * pow_poly(t, 3);
  const IntMatrix star = star_graph(4).adjacency<Int>();
  const IntMatrix cyc =
      disjoint_union(cycle_graph(4), empty_graph(1)).adjacency<Int>();
  CHECK(charpoly_exact(star) == expect);
  CHECK(charpoly_exact(cyc) == expect);
  CHECK(oracle::charpoly(star) == expect);
}

TEST_CASE("oracle agreement on random matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const IntMatrix m = random_int_matrix(n, 9, rng);
    CHECK(charpoly_exact(m) == oracle::charpoly(m));
  }
}

TEST_CASE("modular charpoly is the exact one reduced") {
  std::mt19937_64 rng(43);
  const auto primes = modp::prime_stream(3);
  for (int trial = 0; trial < 3; ++trial) {
    const IntMatrix m = random_int_matrix(20, 50, rng);
    const IntPolynomial exact = charpoly_exact(m);
    for (std::uint64_t p : primes) {
      const ModPoly mod = charpoly_mod(m, p);
      REQUIRE(mod.coeffs.size() == 21);
      CHECK(mod.p == p);
      for (int k = 0; k <= 20; ++k)
        CHECK(mod.coeffs[static_cast<std::size_t>(k)] == reduce(exact.coeff(k), p));
    }
  }
}

TEST_CASE("constant term is the signed determinant") {
  std::mt19937_64 rng(44);
  for (int n : {3, 8, 15}) {
    const IntMatrix m = random_int_matrix(n, 100, rng);
    const IntPolynomial phi = charpoly_exact(m);
    const Int det = intdet(m);
    CHECK(phi.coeff(0) == (n % 2 ? -det : det));
  }
}

TEST_CASE("shifted determinants mod p") {
  CHECK(det_shift_mod(complete_graph(2).adjacency<Int>(), 0, 5) == 4);
  std::mt19937_64 rng(45);
  const std::uint64_t p = modp::prime_stream(1)[0];
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const IntMatrix m = random_int_matrix(n, 30, rng);
    const std::uint64_t alpha = rng() % 1000;
    IntMatrix shifted = m;
    for (int i = 0; i < n; ++i) shifted(i, i) += static_cast<long>(alpha);
    CHECK(det_shift_mod(m, alpha, p) == reduce(oracle::leibniz_det(shifted), p));
  }
  CHECK(det_shift_mod(IntMatrix(0, 0), 3, 7) == 1);
}

TEST_CASE("integer determinant vs permanent-style expansion") {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const IntMatrix m = random_int_matrix(n, 40, rng);
    CHECK(intdet(m) == oracle::leibniz_det(m));
  }
  CHECK(intdet(IntMatrix::Identity(6, 6)) == 1);
}

TEST_CASE("polynomial determinants, fraction free") {
  const IntPolynomial t = IntPolynomial::variable();
  Mat<IntPolynomial> char_k2(2, 2);
  char_k2 << t, IntPolynomial(-1), IntPolynomial(-1), t;
  CHECK(polydet(char_k2) == t * t - 1);

  Mat<IntPolynomial> single(1, 1);
  single(0, 0) = t * t + IntPolynomial(3) * t - IntPolynomial(5);
  CHECK(polydet(single) == single(0, 0));

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    Mat<IntPolynomial> m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        std::vector<Int> c(3);
        for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
        m(i, j) = IntPolynomial(std::move(c));
      }
    CHECK(polydet(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("symmetric eigenvalues, exact references") {
  const EigenSpectrum k2 = symmetric_eigenvalues(complete_graph(2).adjacency<double>());
  REQUIRE(k2.values.size() == 2);
  CHECK(k2.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k2.values[1] == doctest::Approx(-1.0).epsilon(1e-12));

  const EigenSpectrum id5 = symmetric_eigenvalues(RealMatrix::Identity(5, 5));
  for (int i = 0; i < 5; ++i)
    CHECK(id5.values[i] == doctest::Approx(1.0).epsilon(1e-12));

  const EigenSpectrum pet =
      symmetric_eigenvalues(petersen_graph().adjacency<double>());
  const auto grouped = group_spectrum(pet.values, 1e-8);
  REQUIRE(grouped.size() == 3);
  CHECK(grouped[0].first == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(grouped[0].second == 1);
  CHECK(grouped[1].first == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(grouped[1].second == 5);
  CHECK(grouped[2].first == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(grouped[2].second == 4);

  RealMatrix skew(2, 2);
  skew << 0, 1, -1, 0;
  CHECK_THROWS_AS(symmetric_eigenvalues(skew), std::invalid_argument);
}

TEST_CASE("eigenvalue moments match walk counts") {
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (rng() & 1u) g.add_edge(i, j);
    const EigenSpectrum s = symmetric_eigenvalues(g.adjacency<double>());
    double sum = 0, sumsq = 0;
    for (int i = 0; i < n; ++i) {
      sum += s.values[i];
      sumsq += s.values[i] * s.values[i];
    }
    CHECK(std::abs(sum) < 1e-9);
    CHECK(sumsq == doctest::Approx(2.0 * g.edge_count()).epsilon(1e-9));
  }
}

TEST_CASE("spectrum grouping chains within tolerance") {
  RealVector v(4);
  v << 2.0, 1.95, 1.9, 1.0;
  const auto grouped = group_spectrum(v, 0.06);
  REQUIRE(grouped.size() == 2);
  CHECK(grouped[0].second == 3);  // 1.9 joins through 1.95 despite |2-1.9| > tol
  CHECK(grouped[1].second == 1);
  CHECK(group_spectrum(RealVector(0), 0.1).empty());
}

TEST_CASE("spectra comparison") {
  RealVector a(3), b(3), c(3);
  a << 3, 1, -2;
  b << 3 + 1e-9, 1 - 1e-9, -2;
  c << 3, 1, -1.9;
  CHECK(spectra_close(a, b, 1e-7));
  CHECK_FALSE(spectra_close(a, c, 1e-7));
  CHECK_FALSE(spectra_close(a, RealVector(2), 1e-7));
}
