#pragma once

// Symmetric powers of graphs. Vertices of the k-th power are the k-subsets
// of the base vertex set in colex order; two subsets are adjacent when their
// symmetric difference is an edge of the base graph. Also: the equivalent
// quotient construction through the Cartesian square, the exact selector
// route to the same adjacency matrix, and the direct/cyclic analogues that
// fail to reproduce it.

#include <cstdint>
#include <vector>

#include "sympow/exact.hpp"
#include "sympow/graph.hpp"

namespace sympow {

// Colex ranking of k-subsets of {0..v-1}: rank(S) = sum_i binom(s_i, i+1)
// over the sorted elements s_0 < s_1 < ... (0-based positions).
class KSubsetIndex {
 public:
  KSubsetIndex(int v, int k);
  int ground() const { return v_; }
  int subset_size() const { return k_; }
  std::uint64_t count() const { return count_; }  // binom(v, k)
  std::uint64_t rank(const std::vector<int>& sorted_subset) const;
  std::vector<int> unrank(std::uint64_t r) const;

 private:
  int v_, k_;
  std::uint64_t count_;
};

// The k-th symmetric power by the subset rule.
Graph symmetric_power_subsets(const Graph& g, int k);

// Diagonal vertices {(i,i)} of a Cartesian square on m^2 vertices, where
// m = sqrt(order). Throws std::invalid_argument when the order is not a
// perfect square.
VertexSet diagonal_vertices(const Graph& square);

struct OrbitPartition {
  // Cells of the coordinate-flip action (i,j) <-> (j,i): m singleton
  // diagonal cells first, then the pair cells in colex order of {i,j}.
  std::vector<std::vector<int>> cells;
};
OrbitPartition flip_orbits(const Graph& square);

// The square power again, built as the flip quotient of the Cartesian
// square with the diagonal removed. Label-identical to
// symmetric_power_subsets(g, 2), and the construction asserts no orbit
// collapses onto itself (no loops survive the quotient).
Graph symmetric_power_quotient(const Graph& g);

// Adjacency of the k-th power a third way: compress A(g) (x) I^(k-1) through
// the injection/selection matrix of distinct-entry tuples and divide by
// (k-1)!. Exact integers; inexact division throws (it would be a bug).
IntMatrix selector_power(const Graph& g, int k);

// Characteristic matrix of a partition with unit-length cell columns:
// R(v, c) = 1/sqrt(|cell c|) when v is in cell c. R^T R = I.
RealMatrix orbit_characteristic(const OrbitPartition& part, int ambient);

// Normalized quotient C = R^T A(g [] g) R over the full flip partition
// (diagonal kept), R the orbit characteristic matrix with unit columns.
RealMatrix flip_quotient_full(const Graph& g);

// Integer quotient matrix B of the same partition: B(c,d) = number of
// neighbours in cell d of any vertex of cell c (the partition is equitable,
// which is asserted). Similar to the normalized quotient, so same charpoly.
IntMatrix flip_quotient_combinatorial(const Graph& g);

// Spectrum the full flip quotient must have, assembled from the base
// spectrum: 2.theta_i with multiplicity binom(l_i + 1, 2) and theta_i +
// theta_j (i < j) with multiplicity l_i * l_j, sorted descending.
std::vector<double> predicted_quotient_spectrum(const Graph& g,
                                                double group_tol);

// "Symmetric square" attempt through the direct (tensor) square: quotient of
// distinct 2-subsets with adjacency inherited from g (x) g. Loops appear
// whenever {i,j} is an edge; they are dropped and counted.
struct DirectSquareAnalog {
  Graph graph;
  int dropped_loops = 0;
};
DirectSquareAnalog direct_square_analog(const Graph& g);

// Cube-power attempt through the cyclic (rotation) group C3 instead of S3:
// orbits of non-constant triples under coordinate rotation, adjacency
// inherited from the Cartesian cube. (n^3 - n)/3 vertices.
Graph cyclic_cube_analog(const Graph& g);

}  // namespace sympow
