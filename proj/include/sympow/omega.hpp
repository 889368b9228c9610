#pragma once

// The compression map Omega and its relatives: selector matrices that pick
// distinct-entry tuples out of tensor space, symmetric/antisymmetric
// projectors, spin-exchange Hamiltonian sectors, and the spectral bounds
// that compression preserves.

#include <cstdint>
#include <vector>

#include "sympow/exact.hpp"
#include "sympow/graph.hpp"

namespace sympow {

// P^(k): rows indexed by k-subsets (colex), columns by tuples in [v]^k
// (row-major mixed radix). Column t has a single 1 in the row of t's
// underlying set when t has k distinct entries, else the column is zero.
// Stored sparsely as that column -> row map.
struct SelectorMatrix {
  int v = 0, k = 0;
  std::uint64_t rows = 0;            // binom(v, k)
  std::uint64_t cols = 0;            // v^k
  std::vector<std::int64_t> col_to_row;  // -1 for repeated-entry tuples

  std::vector<int> column_tuple(std::uint64_t c) const;  // decode index
};

// Throws std::overflow_error when v^k or the dense work would not fit.
SelectorMatrix build_selector(int v, int k);

// (1/(k-1)!) P (G (x) I^(k-1)) P^T, binom(v,k) square. The integer version
// checks every division is exact and throws std::domain_error otherwise.
IntMatrix selector_compress_int(const SelectorMatrix& sel, const IntMatrix& g);
RealMatrix selector_compress_real(const SelectorMatrix& sel,
                                  const RealMatrix& g);

// Omega(G) = P (G (x) I) P^T for k = 2 (no division needed there beyond
// (k-1)! = 1).
IntMatrix omega_int(const IntMatrix& g);
RealMatrix omega_real(const RealMatrix& g);

// Trace identity: trace(Omega(G)) == (v - 1) * trace(G), exact.
bool trace_identity_holds(const IntMatrix& g);

// Orthogonal projector onto the symmetric (resp. antisymmetric) subspace of
// the k-fold tensor space, v^k square, entries +-(1/k!) times a 0/1 pattern.
RealMatrix sym_projector(int v, int k);
RealMatrix antisym_projector(int v, int k);

enum class TensorSector { symmetric, antisymmetric };

// B^T (G (x) I^(k-1)) B with B an orthonormal basis of the chosen sector:
// normalized symmetrized multiset vectors, or normalized alternating
// k-subset vectors. Columns ordered by colex rank of the multiset/subset.
RealMatrix sector_compression(const RealMatrix& g, TensorSector sector, int k);

// Eigenvalue bounds transported through the compression, checked within tol
// for every feasible index m:
//   PSD G:        lambda_m(G) <= lambda_m(Omega(G))          (m-th largest)
//   symmetric G:  lambda_m(G) + min_eig(G) <= lambda_m(Omega(G)), and the
//                 mirror image on the m-th smallest eigenvalues with the
//                 inequality reversed and max_eig(G) added.
// The PSD check throws std::invalid_argument when min eig < -tol.
bool psd_compression_bound_holds(const RealMatrix& g, double tol);
bool symmetric_compression_bounds_hold(const RealMatrix& g, double tol);

// Weight-k magnon sector of the XX exchange Hamiltonian with coupling graph
// g: basis = k-subsets of spins (colex = numeric order of the bitmasks),
// H restricted to that sector. Equals the adjacency matrix of the k-th
// symmetric power of g; the k = 0 vacuum sector is the 1x1 zero matrix.
IntMatrix exchange_sector(const Graph& g, int k);

}  // namespace sympow
