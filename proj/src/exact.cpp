#include "sympow/exact.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "sympow/modarith.hpp"
#include "sympow/parallel.hpp"

namespace sympow {

using modp::u64;

namespace {

// Entries reduced into [0, p).
std::vector<u64> reduce_mod(const IntMatrix& m, u64 p) {
  const int n = static_cast<int>(m.rows());
  std::vector<u64> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] =
          mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
  return a;
}

void require_square(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
}

// In-place similarity reduction to upper Hessenberg form over F_p.
void hessenberg_mod(std::vector<u64>& a, int n, u64 p) {
  for (int col = 0; col + 2 < n; ++col) {
    int piv = -1;
    for (int r = col + 1; r < n; ++r)
      if (a[static_cast<std::size_t>(r) * n + col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != col + 1) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * n + j],
                  a[static_cast<std::size_t>(col + 1) * n + j]);
      for (int i = 0; i < n; ++i)
        std::swap(a[static_cast<std::size_t>(i) * n + piv],
                  a[static_cast<std::size_t>(i) * n + col + 1]);
    }
    const u64 pivinv = modp::inv(a[static_cast<std::size_t>(col + 1) * n + col], p);
    for (int r = col + 2; r < n; ++r) {
      const u64 f = modp::mul(a[static_cast<std::size_t>(r) * n + col], pivinv, p);
      if (!f) continue;
      // row_r -= f * row_{col+1}, then col_{col+1} += f * col_r to keep the
      // conjugation a similarity.
      for (int j = col; j < n; ++j)
        a[static_cast<std::size_t>(r) * n + j] =
            modp::sub(a[static_cast<std::size_t>(r) * n + j],
                      modp::mul(f, a[static_cast<std::size_t>(col + 1) * n + j], p), p);
      for (int i = 0; i < n; ++i)
        a[static_cast<std::size_t>(i) * n + col + 1] =
            modp::add(a[static_cast<std::size_t>(i) * n + col + 1],
                      modp::mul(f, a[static_cast<std::size_t>(i) * n + r], p), p);
    }
  }
}

// Leading-minor recurrence for det(tI - H), H upper Hessenberg:
//   p_k = (t - h_kk) p_{k-1} - sum_{m<k} h_mk (prod_{j=m..k-1} h_{j+1,j}) p_{m-1}
std::vector<u64> hessenberg_charpoly(const std::vector<u64>& a, int n, u64 p) {
  std::vector<std::vector<u64>> P(static_cast<std::size_t>(n) + 1);
  P[0] = {1 % p};
  for (int k = 1; k <= n; ++k) {
    auto& pk = P[k];
    pk.assign(static_cast<std::size_t>(k) + 1, 0);
    const auto& prev = P[k - 1];
    for (int i = 0; i < k; ++i) pk[i + 1] = prev[i];
    const u64 hkk = a[static_cast<std::size_t>(k - 1) * n + (k - 1)];
    if (hkk)
      for (int i = 0; i < k; ++i)
        pk[i] = modp::sub(pk[i], modp::mul(hkk, prev[i], p), p);
    u64 subprod = 1 % p;
    for (int m = k - 1; m >= 1; --m) {
      subprod = modp::mul(subprod, a[static_cast<std::size_t>(m) * n + (m - 1)], p);
      if (!subprod) break;
      const u64 c = modp::mul(a[static_cast<std::size_t>(m - 1) * n + (k - 1)], subprod, p);
      if (!c) continue;
      const auto& pm = P[m - 1];
      for (int i = 0; i < m; ++i)
        pk[i] = modp::sub(pk[i], modp::mul(c, pm[i], p), p);
    }
  }
  return P[n];
}

}  // namespace

ModPoly charpoly_mod(const IntMatrix& m, u64 p) {
  require_square(m);
  if (p < 2 || p >= (1ull << 62))
    throw std::invalid_argument("modulus out of range");
  const int n = static_cast<int>(m.rows());
  std::vector<u64> a = reduce_mod(m, p);
  hessenberg_mod(a, n, p);
  return ModPoly{p, hessenberg_charpoly(a, n, p)};
}

u64 det_shift_mod(const IntMatrix& m, u64 alpha, u64 p) {
  require_square(m);
  if (p < 2 || p >= (1ull << 62))
    throw std::invalid_argument("modulus out of range");
  const int n = static_cast<int>(m.rows());
  std::vector<u64> a = reduce_mod(m, p);
  alpha %= p;
  for (int i = 0; i < n; ++i) {
    auto& d = a[static_cast<std::size_t>(i) * n + i];
    d = modp::add(d, alpha, p);
  }
  u64 det = 1 % p;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[static_cast<std::size_t>(r) * n + col]) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = col; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * n + j],
                  a[static_cast<std::size_t>(col) * n + j]);
      det = p - det;
      if (det == p) det = 0;
    }
    const u64 pv = a[static_cast<std::size_t>(col) * n + col];
    det = modp::mul(det, pv, p);
    const u64 pvinv = modp::inv(pv, p);
    for (int r = col + 1; r < n; ++r) {
      const u64 f = modp::mul(a[static_cast<std::size_t>(r) * n + col], pvinv, p);
      if (!f) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<std::size_t>(r) * n + j] =
            modp::sub(a[static_cast<std::size_t>(r) * n + j],
                      modp::mul(f, a[static_cast<std::size_t>(col) * n + j], p), p);
    }
  }
  return det;
}

IntPolynomial charpoly_exact(const IntMatrix& m, int workers) {
  require_square(m);
  const int n = static_cast<int>(m.rows());
  if (n == 0) return IntPolynomial::constant(1);

  Int maxabs = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int v = abs(m(i, j));
      if (v > maxabs) maxabs = v;
    }
  if (maxabs == 0) maxabs = 1;

  // Coefficient bound: binom(n, n/2) * (ceil(sqrt(n)) * maxabs)^n, doubled
  // so symmetric residues recover signs.
  long root = 1;
  while (root * root < n) ++root;
  Int bound = int_binomial(n, n / 2);
  Int base = root * maxabs;
  mpz_pow_ui(base.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= base;
  bound *= 2;

  std::vector<u64> primes;
  {
    Int prod = 1;
    std::size_t count = 0;
    while (prod <= bound) {
      ++count;
      primes = modp::prime_stream(count);
      prod = 1;
      for (u64 p : primes) prod *= Int(p);
    }
  }

  std::vector<ModPoly> residues(primes.size());
  parallel_for(static_cast<std::int64_t>(primes.size()), workers,
               [&](std::int64_t i) {
                 residues[static_cast<std::size_t>(i)] =
                     charpoly_mod(m, primes[static_cast<std::size_t>(i)]);
               });

  // CRT per coefficient, then symmetric lift.
  Int modulus = 1;
  for (u64 p : primes) modulus *= Int(p);
  std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Int x = 0, mprod = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const Int p(primes[i]);
      // incremental CRT: adjust x by a multiple of mprod to match residue i
      Int r = residues[i].coeffs[k];
      Int cur = x % p;
      Int diff = (r - cur) % p;
      if (diff < 0) diff += p;
      Int minv;
      if (mpz_invert(minv.get_mpz_t(), Int(mprod % p).get_mpz_t(),
                     p.get_mpz_t()) == 0)
        throw std::logic_error("prime stream produced duplicate primes");
      x += mprod * ((diff * minv) % p);
      mprod *= p;
    }
    if (2 * x > modulus) x -= modulus;
    coeffs[k] = x;
  }
  IntPolynomial out{std::move(coeffs)};
  if (out.degree() != n || out.coeff(n) != 1)
    throw std::logic_error("characteristic polynomial not monic");
  return out;
}

namespace {

template <typename Scalar>
struct RingOps;

template <>
struct RingOps<Int> {
  static bool is_zero(const Int& x) { return x == 0; }
  static Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("inexact division in elimination");
    return q;
  }
};

template <>
struct RingOps<IntPolynomial> {
  static bool is_zero(const IntPolynomial& x) { return x.is_zero(); }
  static IntPolynomial exact_div(const IntPolynomial& a,
                                 const IntPolynomial& b) {
    return a.exact_div(b);
  }
};

// One-step Bareiss: after step k the trailing block holds (k+2)-minors
// divided by the previous pivot; divisions stay exact under row swaps.
template <typename Scalar>
Scalar bareiss_det(Mat<Scalar> m) {
  const int n = static_cast<int>(m.rows());
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar prev = Scalar(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (RingOps<Scalar>::is_zero(m(k, k))) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!RingOps<Scalar>::is_zero(m(r, k))) {
          piv = r;
          break;
        }
      if (piv < 0) return Scalar(0);
      for (int j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = RingOps<Scalar>::exact_div(
            m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

}  // namespace

IntPolynomial polydet(const Mat<IntPolynomial>& m) {
  return bareiss_det<IntPolynomial>(m);
}

Int intdet(const IntMatrix& m) { return bareiss_det<Int>(m); }

EigenSpectrum symmetric_eigenvalues(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale)
    throw std::invalid_argument("matrix not symmetric");
  RealMatrix s = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(s, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue iteration failed");
  RealVector v = solver.eigenvalues();
  std::sort(v.data(), v.data() + v.size(), std::greater<double>());
  EigenSpectrum out;
  out.values = std::move(v);
  out.tol = 1e-9 * scale * std::max<double>(1, m.rows());
  return out;
}

std::vector<std::pair<double, int>> group_spectrum(const RealVector& values,
                                                   double tol) {
  std::vector<std::pair<double, int>> groups;
  double last = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!groups.empty() && std::abs(last - v) <= tol) {
      // chained grouping: compare against the previous member, not the
      // representative, so near-degenerate clusters stay together
      ++groups.back().second;
    } else {
      groups.emplace_back(v, 1);
    }
    last = v;
  }
  return groups;
}

bool spectra_close(const RealVector& a, const RealVector& b, double tol) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace sympow
