#pragma once

// Graph isomorphism for small orders: colour refinement as a sound
// non-isomorphism filter, backtracking search for the certificate, and
// exhaustive generation of isomorphism-class representatives.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sympow/graph.hpp"

namespace sympow {

// Stable-colouring signature: one hash per vertex, sorted. Isomorphic graphs
// always produce equal vectors, so unequal vectors certify non-isomorphism.
// (Equal vectors decide nothing; hash collisions only ever cause that safe
// direction.)
std::vector<std::uint64_t> refinement_signature(const Graph& g);

// Explicit mapping img with img[i] in h for i in g, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& g,
                                                 const Graph& h);

bool isomorphic(const Graph& g, const Graph& h);

// How a non-isomorphism conclusion was reached; stored in search records.
enum class NonIsoEvidence { order, degrees, refinement, exhausted_search };
NonIsoEvidence non_isomorphism_evidence(const Graph& g, const Graph& h);
const char* to_string(NonIsoEvidence e);

// Set of pairwise non-isomorphic graphs with invariant-bucketed lookup.
class IsoClassSet {
 public:
  // Returns the index of the class representative, inserting g as a new
  // representative if no existing class matches.
  int insert(const Graph& g);
  // Index of g's class, or -1.
  int find(const Graph& g) const;
  const std::vector<Graph>& representatives() const { return reps_; }

 private:
  std::uint64_t bucket_key(const Graph& g) const;
  std::vector<Graph> reps_;
  // invariant bucket -> representative indices sharing it
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

// All isomorphism-class representatives on exactly n vertices, built by
// extending the (n-1)-vertex classes with every possible attachment of a
// new last vertex. Counts match the classical sequence
// 1, 1, 2, 4, 11, 34, 156, 1044, 12346 for n = 0..8.
std::vector<Graph> enumerate_graphs(int n, int workers = 1);

}  // namespace sympow
