#pragma once

// Walk generating series, cospectrality decisions, and the determinant
// identities tying walk counts to characteristic polynomials of vertex-
// deleted subgraphs.

#include <vector>

#include "sympow/exact.hpp"
#include "sympow/graph.hpp"
#include "sympow/intpoly.hpp"

namespace sympow {

struct WalkSeries {
  std::vector<Int> counts;  // walks of length 0..N
  bool operator==(const WalkSeries&) const = default;
};

// Walks from i to j of each length up to N, exact.
WalkSeries walk_series(const Graph& g, int i, int j, int N);

// Sum over all ordered pairs (walks of each length), exact.
WalkSeries all_walks_series(const Graph& g, int N);

// Exact cospectrality via charpolys; unequal orders give false.
bool cospectral(const Graph& g, const Graph& h, int workers = 1);

// Cospectral and complement-cospectral (both checked exactly).
bool cospectral_with_complements(const Graph& g, const Graph& h,
                                 int workers = 1);

// Complement cospectrality decided from the all-walks series alone (equal
// through order 2n; enough, the series has at most n distinct poles). Only
// valid for cospectral inputs (std::invalid_argument otherwise). The answer
// is cross-checked against the complements' char polys; a disagreement
// would be a bug and throws std::logic_error.
bool complements_cospectral_by_walks(const Graph& g, const Graph& h,
                                     int workers = 1);

// Sorted multiset of charpolys of single-vertex (resp. unordered-pair)
// deleted subgraphs.
std::vector<IntPolynomial> vertex_deck(const Graph& g, int workers = 1);
std::vector<IntPolynomial> pair_deck(const Graph& g, int workers = 1);

// det of the D-rows-by-D-columns submatrix of adj(tI - A) equals
// phi(G \ D) * phi(G)^(|D|-1). Exact polynomial arithmetic; sizes capped
// (|D| <= 6, n <= 12) because the cofactor determinants are dense.
bool minor_identity_holds(const Graph& g, const VertexSet& d);

// adj(tI - A)_{ij}^2 == phi(G\i) phi(G\j) - phi(G) phi(G\{i,j}) for i != j.
bool offdiagonal_identity_holds(const Graph& g, int i, int j);

}  // namespace sympow
