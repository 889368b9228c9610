#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sympow/exact.hpp"
#include "sympow/graph.hpp"
#include "sympow/harness.hpp"
#include "sympow/isomorphism.hpp"
#include "sympow/modarith.hpp"
#include "sympow/sympower.hpp"

using namespace sympow;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.has(i, j)) h.add_edge(perm[i], perm[j]);
  return h;
}

std::vector<std::string> small_seed_pool(int max_order) {
  std::vector<std::string> seeds;
  for (int n = 1; n <= max_order; ++n)
    for (const Graph& g : enumerate_graphs(n)) seeds.push_back(write_graph6(g));
  return seeds;
}

bool same_modulo_timestamp(const PairRecord& a, const PairRecord& b) {
  return a.x_graph6 == b.x_graph6 && a.y_graph6 == b.y_graph6 &&
         a.square_charpoly == b.square_charpoly && a.properties == b.properties &&
         a.noniso_witness == b.noniso_witness;
}

const char* kStorePath = "test_harness_store.jsonl";

}  // namespace

TEST_CASE("fingerprints") {
  const std::uint64_t p = modp::prime_stream(1)[0];
  CHECK(fingerprint(shrikhande_graph(), p) == fingerprint(rook4_graph(), p));
  CHECK(fingerprint(complete_graph(3), p) != fingerprint(cycle_graph(4), p));
  // saltire pair: cospectral bases, distinct squares
  const Graph s = star_graph(4);
  const Graph c = disjoint_union(cycle_graph(4), empty_graph(1));
  CHECK(fingerprint(s, p) != fingerprint(c, p));

  std::mt19937_64 rng(81);
  const Graph pet = petersen_graph();
  std::vector<int> perm(10);
  for (int i = 0; i < 10; ++i) perm[i] = i;
  for (int t = 0; t < 5; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(fingerprint(relabel(pet, perm), p) == fingerprint(pet, p));
  }
  CHECK(fingerprint(Graph(1), p) != fingerprint(empty_graph(2), p));
}

TEST_CASE("mutation moves") {
  std::mt19937_64 rng(82);
  const Graph c4 = cycle_graph(4);
  const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));

  SUBCASE("edge swap reaches exactly the two rewirings") {
    int cycles = 0, matchings = 0;
    for (int t = 0; t < 500; ++t) {
      const auto out = mutate(c4, MutationOp::edge_swap, rng);
      REQUIRE(out.has_value());
      if (oracle::isomorphic(*out, c4))
        ++cycles;
      else if (oracle::isomorphic(*out, two_k2))
        ++matchings;
    }
    CHECK(cycles + matchings == 500);
    CHECK(cycles > 0);
    CHECK(matchings > 0);
    CHECK_FALSE(mutate(complete_graph(2), MutationOp::edge_swap, rng).has_value());
    CHECK_FALSE(mutate(star_graph(4), MutationOp::edge_swap, rng).has_value());
  }

  SUBCASE("vertex deletion") {
    const auto out = mutate(complete_graph(4), MutationOp::vertex_delete, rng);
    REQUIRE(out.has_value());
    CHECK(*out == complete_graph(3));
  }

  SUBCASE("edge deletion and addition") {
    CHECK_FALSE(mutate(empty_graph(3), MutationOp::edge_delete, rng).has_value());
    CHECK_FALSE(mutate(complete_graph(3), MutationOp::edge_add, rng).has_value());
    const auto del = mutate(complete_graph(3), MutationOp::edge_delete, rng);
    REQUIRE(del.has_value());
    CHECK(del->edge_count() == 2);
    const auto add = mutate(empty_graph(3), MutationOp::edge_add, rng);
    REQUIRE(add.has_value());
    CHECK(add->edge_count() == 1);
  }

  SUBCASE("one-factor toggle") {
    const auto out = mutate(complete_graph(4), MutationOp::one_factor_toggle, rng);
    REQUIRE(out.has_value());
    CHECK(oracle::isomorphic(*out, c4));
    const auto c4out = mutate(c4, MutationOp::one_factor_toggle, rng);
    REQUIRE(c4out.has_value());
    CHECK(oracle::isomorphic(*c4out, two_k2));
    CHECK_FALSE(
        mutate(complete_graph(3), MutationOp::one_factor_toggle, rng).has_value());
  }

  SUBCASE("op names") {
    CHECK(std::string(to_string(MutationOp::edge_swap)) == "edge_swap");
    CHECK(std::string(to_string(MutationOp::one_factor_toggle)) ==
          "one_factor_toggle");
  }
}

TEST_CASE("search configuration serialization") {
  SearchConfig c;
  c.seeds = {"D??", "DQo"};
  c.budget = 77;
  c.weights = {1, 0.5, 2, 0, 3};
  c.fingerprint_primes = {61, 67};
  c.rng_seed = 12345;
  c.workers = 4;
  c.store_path = "out.jsonl";
  const SearchConfig back = SearchConfig::from_json_text(c.to_json_text());
  CHECK(back.seeds == c.seeds);
  CHECK(back.budget == c.budget);
  CHECK(back.weights == c.weights);
  CHECK(back.fingerprint_primes == c.fingerprint_primes);
  CHECK(back.rng_seed == c.rng_seed);
  CHECK(back.workers == c.workers);
  CHECK(back.store_path == c.store_path);

  CHECK_THROWS_AS(SearchConfig::from_json_text(R"({"weights": [1, 2, 3]})"),
                  std::invalid_argument);
  const SearchConfig defaults = SearchConfig::from_json_text("{}");
  CHECK(defaults.budget == 0);
  CHECK(defaults.workers == 1);
  CHECK(defaults.weights == std::array<double, 5>{1, 1, 1, 1, 1});

  SearchConfig zero;
  zero.weights = {0, 0, 0, 0, 0};
  CHECK_THROWS_AS(search(zero), std::invalid_argument);
  SearchConfig negative;
  negative.weights = {1, 1, -1, 1, 1};
  CHECK_THROWS_AS(search(negative), std::invalid_argument);
}

TEST_CASE("pair record serialization") {
  PairRecord rec;
  rec.x_graph6 = write_graph6(shrikhande_graph());
  rec.y_graph6 = write_graph6(rook4_graph());
  rec.square_charpoly = charpoly_exact(complete_graph(3).adjacency<Int>());
  rec.properties = {true, false, true, true, false};
  rec.noniso_witness = "exhausted_search";
  rec.timestamp = "2026-01-01T00:00:00Z";
  const PairRecord back = PairRecord::from_json_line(rec.to_json_line());
  CHECK(back.x_graph6 == rec.x_graph6);
  CHECK(back.y_graph6 == rec.y_graph6);
  CHECK(back.square_charpoly == rec.square_charpoly);
  CHECK(back.properties == rec.properties);
  CHECK(back.noniso_witness == rec.noniso_witness);
  CHECK(back.timestamp == rec.timestamp);

  CHECK_THROWS(PairRecord::from_json_line("not json"));
  CHECK_THROWS(PairRecord::from_json_line(R"({"x": "D??"})"));
  CHECK_THROWS_AS(
      PairRecord::from_json_line(
          R"({"x":"A_","y":"A?","square_charpoly":"0 1","properties":[true],)"
          R"("noniso_witness":"w","timestamp":"s"})"),
      std::invalid_argument);
}

TEST_CASE("property reports") {
  const auto self = property_report(petersen_graph(), petersen_graph());
  for (bool flag : self) CHECK(flag);
  const auto pair = property_report(shrikhande_graph(), rook4_graph());
  for (bool flag : pair) CHECK(flag);
  // saltire squares are not cospectral, so the report refuses the pair
  CHECK_THROWS_AS(property_report(star_graph(4),
                                  disjoint_union(cycle_graph(4), empty_graph(1))),
                  std::invalid_argument);
  CHECK_THROWS_AS(property_report(Graph(1), complete_graph(2)),
                  std::invalid_argument);
}

TEST_CASE("modular distinctness certificates") {
  std::mt19937_64 rng(83);
  const IntMatrix a3 = complete_graph(3).adjacency<Int>();
  CHECK_FALSE(certify_distinct(a3, a3, 5, rng).has_value());

  const IntMatrix p3 = path_graph(3).adjacency<Int>();
  const auto cert = certify_distinct(a3, p3, 5, rng);
  REQUIRE(cert.has_value());
  CHECK(cert->r1 != cert->r2);
  CHECK(cert->p > (1ull << 61));
  CHECK(cert->alpha < cert->p);
  CHECK(det_shift_mod(a3, cert->alpha, cert->p) == cert->r1);
  CHECK(det_shift_mod(p3, cert->alpha, cert->p) == cert->r2);

  // cospectral matrices agree on every probe: no certificate exists
  const IntMatrix shr = shrikhande_graph().adjacency<Int>();
  const IntMatrix rook = rook4_graph().adjacency<Int>();
  CHECK_FALSE(certify_distinct(shr, rook, 3, rng).has_value());

  IntMatrix wide(2, 3);
  wide.setZero();
  CHECK_THROWS_AS(certify_distinct(a3, wide, 1, rng), std::invalid_argument);
}

TEST_CASE("search emits the known square-cospectral pair") {
  std::remove(kStorePath);
  SearchConfig config;
  config.seeds = {write_graph6(shrikhande_graph()), write_graph6(rook4_graph())};
  config.budget = 16;
  config.rng_seed = 11;
  config.store_path = kStorePath;
  const auto records = search(config);
  REQUIRE(records.size() == 1);
  const PairRecord& rec = records[0];
  CHECK(rec.x_graph6 == config.seeds[0]);
  CHECK(rec.y_graph6 == config.seeds[1]);
  CHECK(rec.square_charpoly ==
        charpoly_exact(
            symmetric_power_subsets(shrikhande_graph(), 2).adjacency<Int>()));
  for (bool flag : rec.properties) CHECK(flag);
  CHECK(rec.noniso_witness == "exhausted_search");
  CHECK_FALSE(rec.timestamp.empty());
  CHECK_NOTHROW(verify_record(rec));

  // appending across runs keeps earlier records
  const auto again = search(config);
  REQUIRE(again.size() == 1);
  const auto stored = load_store(kStorePath);
  REQUIRE(stored.size() == 2);
  CHECK(stored[0].to_json_line() == rec.to_json_line());
  CHECK(same_modulo_timestamp(stored[1], again[0]));
  CHECK(same_modulo_timestamp(records[0], again[0]));

  // worker count changes the schedule, not the result
  SearchConfig wide = config;
  wide.store_path.clear();
  wide.workers = 3;
  const auto parallel = search(wide);
  REQUIRE(parallel.size() == 1);
  CHECK(same_modulo_timestamp(parallel[0], rec));

  // tampered records fail verification
  PairRecord broken = rec;
  broken.y_graph6 = broken.x_graph6;
  CHECK_THROWS_AS(verify_record(broken), std::runtime_error);
  PairRecord wrong_poly = rec;
  wrong_poly.square_charpoly = charpoly_exact(complete_graph(3).adjacency<Int>());
  CHECK_THROWS_AS(verify_record(wrong_poly), std::runtime_error);
  PairRecord not_cospectral = rec;
  not_cospectral.y_graph6 = write_graph6(complement(rook4_graph()));
  CHECK_THROWS_AS(verify_record(not_cospectral), std::runtime_error);

  std::remove(kStorePath);
  CHECK_THROWS_AS(load_store("no_such_file.jsonl"), std::runtime_error);
  SearchConfig bad_store = config;
  bad_store.store_path = "no_such_dir/store.jsonl";
  CHECK_THROWS_AS(search(bad_store), std::runtime_error);
}

TEST_CASE("search finds nothing among the small orders") {
  // the order-2 classes hash apart (distinct base polynomials), so even the
  // pair with coinciding square polynomials is never reported
  SearchConfig config;
  config.seeds = small_seed_pool(4);
  config.budget = 250;
  config.rng_seed = 99;
  const auto records = search(config);
  CHECK(records.empty());
}
