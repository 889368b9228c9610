#pragma once

// Heuristic search for non-isomorphic graphs whose square powers are
// cospectral: cheap modular fingerprints, local mutations, exact
// verification of every emitted pair, modular distinctness certificates,
// and an append-only JSON-lines store.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sympow/graph.hpp"
#include "sympow/intpoly.hpp"
#include "sympow/isomorphism.hpp"

namespace sympow {

// Hash of (charpoly of g mod p, charpoly of g's square power mod p). Equal
// fingerprints are necessary for cospectral squares; collisions are always
// re-verified exactly. Graphs of order < 2 hash order and base charpoly only.
std::uint64_t fingerprint(const Graph& g, std::uint64_t p);

enum class MutationOp : int {
  edge_swap = 0,
  vertex_delete = 1,
  edge_delete = 2,
  edge_add = 3,
  one_factor_toggle = 4,
};
constexpr int kMutationOps = 5;
const char* to_string(MutationOp op);

// One local move; nullopt when the op does not apply (no second edge to
// swap, no perfect matching to toggle, ...).
std::optional<Graph> mutate(const Graph& g, MutationOp op,
                            std::mt19937_64& rng);

struct SearchConfig {
  std::vector<std::string> seeds;            // graph6
  long budget = 0;                           // mutation attempts
  std::array<double, kMutationOps> weights = {1, 1, 1, 1, 1};
  std::vector<std::uint64_t> fingerprint_primes;  // defaults to stream head
  std::uint64_t rng_seed = 0;
  int workers = 1;
  std::string store_path;  // empty = do not persist

  static SearchConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

struct PairRecord {
  std::string x_graph6;
  std::string y_graph6;
  IntPolynomial square_charpoly;      // shared by both squares
  std::array<bool, 5> properties{};   // report flags (a)-(e)
  std::string noniso_witness;         // refinement / exhausted_search
  std::string timestamp;              // ISO-8601 UTC

  std::string to_json_line() const;
  static PairRecord from_json_line(const std::string& line);
};

// Five exact checks on a pair whose squares are already cospectral
// (std::invalid_argument otherwise):
//   (a) cospectral and complement-cospectral
//   (b) squares of the complements cospectral
//   (c) complements of the squares cospectral
//   (d) equal vertex decks
//   (e) equal pair decks
std::array<bool, 5> property_report(const Graph& x, const Graph& y,
                                    int workers = 1);

struct Certificate {
  std::uint64_t p = 0;
  std::uint64_t alpha = 0;
  std::uint64_t r1 = 0, r2 = 0;  // det(m_i + alpha I) mod p, r1 != r2
};

// Random (alpha, fresh prime) probes; first disagreement is returned.
// nullopt after `trials` agreeing probes claims nothing.
std::optional<Certificate> certify_distinct(const IntMatrix& m1,
                                            const IntMatrix& m2, int trials,
                                            std::mt19937_64& rng);

// Runs the mutation search. Deterministic for a fixed seed; the record set
// does not depend on the worker count. Records are also appended to
// config.store_path when set.
std::vector<PairRecord> search(const SearchConfig& config);

// JSON-lines store helpers. load re-parses every line; verify re-runs the
// exact cospectrality and non-isomorphism checks of one record.
std::vector<PairRecord> load_store(const std::string& path);
void verify_record(const PairRecord& rec, int workers = 1);

}  // namespace sympow
