#include "sympow/omega.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "sympow/sympower.hpp"

namespace sympow {

namespace {

std::uint64_t checked_pow(int v, int k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= static_cast<std::uint64_t>(v);
    if (r > cap) throw std::overflow_error("tuple space too large");
  }
  return r;
}

constexpr std::uint64_t kSelectorCap = 1ull << 24;
constexpr std::uint64_t kDenseTensorCap = 4096;

}  // namespace

std::vector<int> SelectorMatrix::column_tuple(std::uint64_t c) const {
  std::vector<int> t(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(c % v);
    c /= static_cast<std::uint64_t>(v);
  }
  return t;
}

SelectorMatrix build_selector(int v, int k) {
  if (v < 1 || k < 1 || k > v)
    throw std::invalid_argument("selector shape out of range");
  SelectorMatrix sel;
  sel.v = v;
  sel.k = k;
  sel.cols = checked_pow(v, k, kSelectorCap);
  sel.rows = binomial64(v, k);
  sel.col_to_row.assign(sel.cols, -1);
  KSubsetIndex ix(v, k);
  std::vector<int> sorted;
  for (std::uint64_t c = 0; c < sel.cols; ++c) {
    std::vector<int> t = sel.column_tuple(c);
    sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      continue;  // repeated entry, zero column
    sel.col_to_row[c] = static_cast<std::int64_t>(ix.rank(sorted));
  }
  return sel;
}

namespace {

// Shared core of the compression: M = P (G (x) I^(k-1)) P^T entry sums.
// Each nonzero column u of P meets G (x) I^(k-1) only at columns (w0, tail)
// sharing u's tail, so the sum collapses to one loop over w0.
template <typename Scalar>
Mat<Scalar> compress(const SelectorMatrix& sel, const Mat<Scalar>& g) {
  if (g.rows() != g.cols() || g.rows() != sel.v)
    throw std::invalid_argument("matrix shape does not match selector");
  const auto rows = static_cast<Eigen::Index>(sel.rows);
  Mat<Scalar> m(rows, rows);
  m.setZero();
  const std::uint64_t tailspan = sel.cols / static_cast<std::uint64_t>(sel.v);
  for (std::uint64_t c = 0; c < sel.cols; ++c) {
    const std::int64_t s = sel.col_to_row[c];
    if (s < 0) continue;
    const int u0 = static_cast<int>(c / tailspan);
    const std::uint64_t tail = c % tailspan;
    for (int w0 = 0; w0 < sel.v; ++w0) {
      const std::int64_t t =
          sel.col_to_row[static_cast<std::uint64_t>(w0) * tailspan + tail];
      if (t < 0) continue;
      m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) +=
          g(u0, w0);
    }
  }
  return m;
}

}  // namespace

IntMatrix selector_compress_int(const SelectorMatrix& sel, const IntMatrix& g) {
  IntMatrix m = compress<Int>(sel, g);
  const Int div = factorial(sel.k - 1);
  if (div != 1) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (!mpz_divisible_p(m(i, j).get_mpz_t(), div.get_mpz_t()))
          throw std::domain_error("compression division not exact");
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(),
                     div.get_mpz_t());
      }
  }
  return m;
}

RealMatrix selector_compress_real(const SelectorMatrix& sel,
                                  const RealMatrix& g) {
  RealMatrix m = compress<double>(sel, g);
  const double div = factorial(sel.k - 1).get_d();
  if (div != 1.0) m /= div;
  return m;
}

IntMatrix omega_int(const IntMatrix& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("matrix not square");
  return selector_compress_int(build_selector(static_cast<int>(g.rows()), 2), g);
}

RealMatrix omega_real(const RealMatrix& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("matrix not square");
  return selector_compress_real(build_selector(static_cast<int>(g.rows()), 2),
                                g);
}

bool trace_identity_holds(const IntMatrix& g) {
  const Int lhs = omega_int(g).trace();
  const Int rhs = Int(g.rows() - 1) * g.trace();
  return lhs == rhs;
}

namespace {

void permutations(int k, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
  // iterate in lexicographic order, tracking parity by inversion count
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    fn(perm, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

RealMatrix group_projector(int v, int k, bool alternating) {
  if (v < 1 || k < 1) throw std::invalid_argument("projector shape out of range");
  const std::uint64_t dim = checked_pow(v, k, kDenseTensorCap);
  RealMatrix p = RealMatrix::Zero(static_cast<Eigen::Index>(dim),
                                  static_cast<Eigen::Index>(dim));
  const double w = 1.0 / factorial(k).get_d();
  std::vector<int> t(static_cast<std::size_t>(k));
  for (std::uint64_t c = 0; c < dim; ++c) {
    std::uint64_t x = c;
    for (int i = k - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::uint64_t>(v));
      x /= static_cast<std::uint64_t>(v);
    }
    permutations(k, [&](const std::vector<int>& perm, int sign) {
      std::uint64_t r = 0;
      for (int i = 0; i < k; ++i)
        r = r * static_cast<std::uint64_t>(v) +
            static_cast<std::uint64_t>(t[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      p(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +=
          (alternating && sign < 0) ? -w : w;
    });
  }
  return p;
}

}  // namespace

RealMatrix sym_projector(int v, int k) { return group_projector(v, k, false); }

RealMatrix antisym_projector(int v, int k) {
  return group_projector(v, k, true);
}

RealMatrix sector_compression(const RealMatrix& g, TensorSector sector,
                              int k) {
  if (g.rows() != g.cols()) throw std::invalid_argument("matrix not square");
  const int v = static_cast<int>(g.rows());
  if (k < 1 || (sector == TensorSector::antisymmetric && k > v))
    throw std::invalid_argument("sector shape out of range");
  const std::uint64_t dim = checked_pow(v, k, kDenseTensorCap);

  // Orthonormal basis columns of the chosen sector.
  std::vector<std::vector<int>> basis_tuples;
  if (sector == TensorSector::antisymmetric) {
    KSubsetIndex ix(v, k);
    for (std::uint64_t r = 0; r < ix.count(); ++r)
      basis_tuples.push_back(ix.unrank(r));
  } else {
    // multisets of size k, stored ascending, listed in colex order
    std::vector<int> cur(static_cast<std::size_t>(k), 0);
    for (;;) {
      std::vector<int> asc(cur.rbegin(), cur.rend());
      basis_tuples.push_back(std::move(asc));
      int i = 0;
      while (i < k && cur[static_cast<std::size_t>(i)] == v - 1) ++i;
      if (i == k) break;
      const int nv = cur[static_cast<std::size_t>(i)] + 1;
      for (int j = 0; j <= i; ++j) cur[static_cast<std::size_t>(j)] = nv;
    }
    // colex: compare ascending representatives from the largest element
    std::sort(basis_tuples.begin(), basis_tuples.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return std::lexicographical_compare(a.rbegin(), a.rend(),
                                                    b.rbegin(), b.rend());
              });
  }

  const auto m = static_cast<Eigen::Index>(basis_tuples.size());
  RealMatrix b = RealMatrix::Zero(static_cast<Eigen::Index>(dim), m);
  for (Eigen::Index col = 0; col < m; ++col) {
    const auto& base = basis_tuples[static_cast<std::size_t>(col)];
    // accumulate sum over permutations, then normalize
    permutations(k, [&](const std::vector<int>& perm, int sign) {
      std::uint64_t r = 0;
      for (int i = 0; i < k; ++i)
        r = r * static_cast<std::uint64_t>(v) +
            static_cast<std::uint64_t>(base[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      b(static_cast<Eigen::Index>(r), col) +=
          (sector == TensorSector::antisymmetric && sign < 0) ? -1.0 : 1.0;
    });
    const double norm = b.col(col).norm();
    b.col(col) /= norm;
  }

  // K B with K = G (x) I^(k-1), using the tail-sharing structure.
  const std::uint64_t tailspan = dim / static_cast<std::uint64_t>(v);
  RealMatrix kb = RealMatrix::Zero(static_cast<Eigen::Index>(dim), m);
  for (std::uint64_t row = 0; row < dim; ++row) {
    const int u0 = static_cast<int>(row / tailspan);
    const std::uint64_t tail = row % tailspan;
    for (int w0 = 0; w0 < v; ++w0) {
      const double gv = g(u0, w0);
      if (gv == 0.0) continue;
      kb.row(static_cast<Eigen::Index>(row)) +=
          gv * b.row(static_cast<Eigen::Index>(
                   static_cast<std::uint64_t>(w0) * tailspan + tail));
    }
  }
  return b.transpose() * kb;
}

bool psd_compression_bound_holds(const RealMatrix& g, double tol) {
  EigenSpectrum base = symmetric_eigenvalues(g);
  const int v = static_cast<int>(g.rows());
  if (v < 2) throw std::invalid_argument("need at least two rows");
  if (base.values[v - 1] < -tol)
    throw std::invalid_argument("matrix is not positive semidefinite");
  EigenSpectrum comp = symmetric_eigenvalues(omega_real(g));
  const Eigen::Index upto =
      std::min<Eigen::Index>(v, comp.values.size());
  for (Eigen::Index mi = 0; mi < upto; ++mi)
    if (base.values[mi] > comp.values[mi] + tol) return false;
  return true;
}

bool symmetric_compression_bounds_hold(const RealMatrix& g, double tol) {
  const int v = static_cast<int>(g.rows());
  if (v < 2) throw std::invalid_argument("need at least two rows");
  EigenSpectrum base = symmetric_eigenvalues(g);  // descending
  EigenSpectrum comp = symmetric_eigenvalues(omega_real(g));
  const Eigen::Index dim = comp.values.size();
  const double lo = base.values[v - 1], hi = base.values[0];
  const Eigen::Index upto = std::min<Eigen::Index>(v, dim);
  for (Eigen::Index m = 0; m < upto; ++m) {
    // m-th largest: lambda_m(G) + min eig(G) <= lambda_m(Omega(G))
    if (base.values[m] + lo > comp.values[m] + tol) return false;
    // m-th smallest: lambda_m^up(G) + max eig(G) >= lambda_m^up(Omega(G))
    if (base.values[v - 1 - m] + hi < comp.values[dim - 1 - m] - tol)
      return false;
  }
  return true;
}

IntMatrix exchange_sector(const Graph& g, int k) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("spin system too large");
  if (k < 0 || k > n) throw std::invalid_argument("sector out of range");
  if (k == 0) return IntMatrix::Zero(1, 1);  // vacuum sector
  std::vector<std::uint32_t> masks;
  masks.reserve(binomial64(n, k));
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) == k) masks.push_back(m);
  const auto N = static_cast<Eigen::Index>(masks.size());
  std::vector<std::int64_t> index(1u << n, -1);
  for (Eigen::Index i = 0; i < N; ++i) index[masks[static_cast<std::size_t>(i)]] = i;
  IntMatrix h(N, N);
  h.setZero();
  // S+_i S-_j moves one excitation from j to i when g couples them.
  for (Eigen::Index a = 0; a < N; ++a) {
    const std::uint32_t m = masks[static_cast<std::size_t>(a)];
    for (int j = 0; j < n; ++j) {
      if (!((m >> j) & 1)) continue;
      for (int i : g.neighbors(j)) {
        if ((m >> i) & 1) continue;
        const std::uint32_t m2 = (m & ~(1u << j)) | (1u << i);
        h(a, static_cast<Eigen::Index>(index[m2])) += 1;
      }
    }
  }
  return h;
}

}  // namespace sympow
