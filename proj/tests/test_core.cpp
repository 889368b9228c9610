#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympow/exact.hpp"
#include "sympow/intpoly.hpp"
#include "sympow/modarith.hpp"
#include "sympow/parallel.hpp"
#include "sympow/types.hpp"

using namespace sympow;

TEST_CASE("gmp scalars work inside eigen matrices") {
  IntMatrix a(2, 2), b(2, 2);
  a << Int(1), Int(2), Int(3), Int(4);
  b << Int(0), Int(1), Int(1), Int(0);
  IntMatrix c = a * b;
  CHECK(c(0, 0) == 2);
  CHECK(c(0, 1) == 1);
  CHECK(c(1, 0) == 4);
  CHECK(c(1, 1) == 3);
  IntMatrix d = a + b;
  CHECK(d(0, 0) == 1);
  CHECK(d(1, 1) == 4);
  // big values survive round trips
  IntMatrix e(1, 1);
  e(0, 0) = Int("123456789012345678901234567890");
  IntMatrix f = e * e;
  CHECK(f(0, 0) == Int("123456789012345678901234567890") *
                       Int("123456789012345678901234567890"));
}

TEST_CASE("kronecker product shape and values") {
  IntMatrix a(2, 2), id(2, 2);
  a << Int(0), Int(1), Int(1), Int(0);
  id << Int(1), Int(0), Int(0), Int(1);
  IntMatrix k = kron(a, id);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 2) == 1);
  CHECK(k(1, 3) == 1);
  CHECK(k(0, 1) == 0);
  CHECK(k(2, 0) == 1);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial64(16, 2) == 120);
  CHECK(binomial64(16, 3) == 560);
  CHECK(binomial64(0, 0) == 1);
  CHECK(binomial64(5, 7) == 0);
  CHECK(int_binomial(30, 15) == Int("155117520"));
  CHECK(factorial(6) == 720);
  CHECK_THROWS_AS((void)binomial64(200, 100), std::overflow_error);
}

TEST_CASE("modular arithmetic basics") {
  std::mt19937_64 rng(7);
  CHECK(modp::mul(3, 5, 17) == 15);
  CHECK(modp::pow(2, 10, 1000000007ull) == 1024);
  CHECK(modp::is_prime(1000000007ull, rng));
  CHECK_FALSE(modp::is_prime(1000000007ull * 3, rng));
  modp::u64 q = modp::random_prime(rng, 62);
  CHECK(q >= (1ull << 61));
  CHECK(modp::is_prime(q, rng));
  const modp::u64 a = 123456789123456789ull % q;
  CHECK(modp::mul(a, modp::inv(a, q), q) == 1);
}

TEST_CASE("prime stream is deterministic and prime") {
  auto p1 = modp::prime_stream(5);
  auto p2 = modp::prime_stream(8);
  REQUIRE(p1.size() == 5);
  REQUIRE(p2.size() == 8);
  for (std::size_t i = 0; i < 5; ++i) CHECK(p1[i] == p2[i]);
  std::mt19937_64 rng(1);
  for (auto p : p2) {
    CHECK(p >= (1ull << 61));
    CHECK(modp::is_prime(p, rng));
  }
  // pairwise distinct
  for (std::size_t i = 0; i < p2.size(); ++i)
    for (std::size_t j = i + 1; j < p2.size(); ++j) CHECK(p2[i] != p2[j]);
}

TEST_CASE("polynomial arithmetic and text form") {
  IntPolynomial t = IntPolynomial::variable();
  IntPolynomial p = t * t - IntPolynomial(2) * t + IntPolynomial(1);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == -2);
  CHECK(p.coeff(2) == 1);
  CHECK(p.to_string() == "1 -2 1");
  CHECK(IntPolynomial::parse("1 -2 1") == p);
  CHECK(IntPolynomial::parse("  1\t-2  1 ") == p);
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial::parse("0").is_zero());
  CHECK_THROWS_AS(IntPolynomial::parse("1 x 3"), std::invalid_argument);
  CHECK_THROWS_AS(IntPolynomial::parse(""), std::invalid_argument);
  CHECK(p.eval(3) == 4);
  // zero coefficients trim
  IntPolynomial q(std::vector<Int>{Int(1), Int(0), Int(0)});
  CHECK(q.degree() == 0);
}

TEST_CASE("polynomial exact division") {
  IntPolynomial t = IntPolynomial::variable();
  IntPolynomial a = (t - 3) * (t + 5) * (t * t + 1);
  CHECK(a.exact_div(t - 3) == (t + 5) * (t * t + 1));
  CHECK(a.exact_div(a) == IntPolynomial(1));
  CHECK_THROWS_AS((t * t - 1).exact_div(t - 2), std::domain_error);
  CHECK_THROWS_AS(a.exact_div(IntPolynomial()), std::domain_error);
  CHECK(IntPolynomial().exact_div(t - 3).is_zero());
}

TEST_CASE("polynomial deck ordering is total and stable") {
  IntPolynomial t = IntPolynomial::variable();
  IntPolynomial a = t;          // 0 1
  IntPolynomial b = t * t;      // 0 0 1
  IntPolynomial c(1);           // 1
  CHECK(poly_less(a, c));       // 0 < 1 at constant term
  CHECK(poly_less(b, a));       // equal at 0, 0 < 1 at t
  CHECK_FALSE(poly_less(a, a));
  CHECK((poly_less(a, b) || poly_less(b, a)));
}

TEST_CASE("parallel_for covers the range and propagates errors") {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, 4, [&](std::int64_t i) { hits[i]++; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(
      parallel_for(10, 3,
                   [&](std::int64_t i) {
                     if (i == 7) throw std::runtime_error("boom");
                   }),
      std::runtime_error);
  CHECK(default_workers() >= 1);
}
