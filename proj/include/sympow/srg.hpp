#pragma once

// Strongly regular graphs: parameter detection, the 3-dimensional adjacency
// algebra span{I, A, J} with exact quadratic-surd coefficients, spectral
// idempotents and their Schur (Krein) expansions, equitable partitions, and
// the walk identities those support.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sympow/exact.hpp"
#include "sympow/graph.hpp"
#include "sympow/types.hpp"

namespace sympow {

struct SrgParams {
  long v = 0, k = 0, a = 0, c = 0;
  bool operator==(const SrgParams&) const = default;
};

// Exact elements of Q(sqrt(d)): a + b sqrt(d). Normal form: d squarefree
// and positive exactly when b != 0 (so rationals always carry d == 0).
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(long value) : a_(value) {}              // NOLINT: field literal
  Quadratic(Rat value) : a_(std::move(value)) {}    // NOLINT
  Quadratic(Rat a, Rat b, long d);

  static Quadratic sqrt_of(long n);  // exact sqrt(n), n >= 0

  const Rat& rational_part() const { return a_; }
  const Rat& surd_part() const { return b_; }
  long surd_base() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  Quadratic operator-() const;
  friend Quadratic operator+(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator-(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator*(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator/(const Quadratic& x, const Quadratic& y);
  Quadratic& operator+=(const Quadratic& y) { return *this = *this + y; }
  Quadratic& operator-=(const Quadratic& y) { return *this = *this - y; }
  Quadratic& operator*=(const Quadratic& y) { return *this = *this * y; }
  Quadratic pow(int e) const;
  bool operator==(const Quadratic& y) const {
    return a_ == y.a_ && b_ == y.b_ && d_ == y.d_;
  }
  bool operator!=(const Quadratic& y) const { return !(*this == y); }

  double to_double() const;
  std::string to_string() const;

 private:
  void normalize();
  Rat a_ = 0, b_ = 0;
  long d_ = 0;
};

// x I + y A + z J for a fixed SRG adjacency A.
struct AlgebraElement {
  Quadratic x, y, z;
  bool operator==(const AlgebraElement&) const = default;
};

// Ring product, using A^2 = (a-c) A + (k-c) I + c J, AJ = kJ, JJ = vJ.
AlgebraElement algebra_mul(const AlgebraElement& s, const AlgebraElement& t,
                           const SrgParams& p);
// Entrywise product: I.I=I, I.J=I, A.A=A, A.J=A, J.J=J, I.A=0.
AlgebraElement schur_mul(const AlgebraElement& s, const AlgebraElement& t);

struct SpectralIdempotent {
  Quadratic eigenvalue;
  AlgebraElement element;
};

// Parameters when common-neighbour counts are constant per relation class;
// none for complete/empty graphs.
std::optional<SrgParams> detect_srg(const Graph& g);

// A^2 - (a-c) A - (k-c) I == c J, exact integers. Throws
// std::invalid_argument when detect_srg(g) != params.
bool srg_identity_holds(const Graph& g, const SrgParams& params);

struct PairQuotient {
  // Quotient of the edge/non-edge pair partition of the square power.
  Eigen::Matrix<long, 2, 2> b;
  Quadratic eig_hi, eig_lo;  // k + delta +- sqrt((k-delta)^2 - 4c)
};
PairQuotient pair_partition_quotient(const SrgParams& p);

// The three principal idempotents, valency eigenvalue first, then the
// larger and smaller of the remaining pair. Requires c >= 1 (connected),
// else the valency eigenvalue is not simple and the formula divides by 0.
std::vector<SpectralIdempotent> spectral_idempotents(const SrgParams& p);

// Coefficients q with E_i . E_j = sum_m q_m E_m (Schur product), exact.
// Throws std::logic_error if the expansion fails (cannot happen for genuine
// SRG parameters; guards against corrupted idempotents).
std::array<Quadratic, 3> krein_expansion(
    const std::vector<SpectralIdempotent>& basis, int i, int j);

// Diagonal walk identity on the Cartesian square: the matrix of walk counts
// between diagonal vertices equals sum_{theta,tau} (theta+tau)^r E_theta .
// E_tau for every order r <= N. Left side counted on the actual product
// graph, right side assembled exactly from the idempotents.
bool diag_walk_check(const Graph& g, int N);

struct EquitablePartition {
  std::vector<std::vector<int>> cells;
  IntMatrix quotient;  // b_ij = neighbours in cell j of any vertex of cell i
};

// Coarsest equitable partition refining the seed. Cells split by the vector
// of neighbour counts into current cells; new cells ordered by (parent
// index, count-signature descending).
EquitablePartition equitable_refine(const Graph& g,
                                    const std::vector<std::vector<int>>& seed);

// (B^r)_{st} equals the number of length-r walks from each vertex of cell s
// ending anywhere in cell t, for all r <= kmax (kmax <= 8).
bool quotient_walk_check(const Graph& g, const EquitablePartition& part,
                         int kmax);

// Cell sizes of the square power's valency partition, verified against
// (vk/2, v(v-1-k)/2) and against the actual degree classes of the square.
std::array<long, 2> edge_pair_cell_sizes(const Graph& g);

}  // namespace sympow
