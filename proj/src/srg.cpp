#include "sympow/srg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "sympow/sympower.hpp"

namespace sympow {

Quadratic::Quadratic(Rat a, Rat b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  normalize();
}

void Quadratic::normalize() {
  if (d_ < 0) throw std::domain_error("negative surd base");
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  // pull square factors out of the base
  long square = 1, rem = d_;
  for (long f = 2; f * f <= rem; ++f)
    while (rem % (f * f) == 0) {
      rem /= f * f;
      square *= f;
    }
  d_ = rem;
  if (square != 1) b_ *= square;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

Quadratic Quadratic::sqrt_of(long n) {
  if (n < 0) throw std::domain_error("negative surd base");
  return Quadratic(Rat(0), Rat(1), n);
}

Quadratic Quadratic::operator-() const {
  Quadratic r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

namespace {

long merge_base(const Quadratic& x, const Quadratic& y) {
  if (x.surd_part() == 0) return y.surd_base();
  if (y.surd_part() == 0) return x.surd_base();
  if (x.surd_base() != y.surd_base())
    throw std::logic_error("incompatible surd bases");
  return x.surd_base();
}

}  // namespace

Quadratic operator+(const Quadratic& x, const Quadratic& y) {
  const long d = merge_base(x, y);
  return Quadratic(x.rational_part() + y.rational_part(),
                   x.surd_part() + y.surd_part(), d);
}

Quadratic operator-(const Quadratic& x, const Quadratic& y) {
  const long d = merge_base(x, y);
  return Quadratic(x.rational_part() - y.rational_part(),
                   x.surd_part() - y.surd_part(), d);
}

Quadratic operator*(const Quadratic& x, const Quadratic& y) {
  const long d = merge_base(x, y);
  return Quadratic(x.rational_part() * y.rational_part() +
                       x.surd_part() * y.surd_part() * Rat(d),
                   x.rational_part() * y.surd_part() +
                       x.surd_part() * y.rational_part(),
                   d);
}

Quadratic operator/(const Quadratic& x, const Quadratic& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  if (y.surd_part() == 0)
    return Quadratic(x.rational_part() / y.rational_part(),
                     x.surd_part() / y.rational_part(), x.surd_base());
  // multiply by the conjugate; the norm is rational and nonzero because the
  // base is squarefree (no rational square roots to cancel)
  const Rat norm = y.rational_part() * y.rational_part() -
                   y.surd_part() * y.surd_part() * Rat(y.surd_base());
  const Quadratic conj(y.rational_part() / norm, -y.surd_part() / norm,
                       y.surd_base());
  return x * conj;
}

Quadratic Quadratic::pow(int e) const {
  if (e < 0) throw std::domain_error("negative exponent");
  Quadratic r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

double Quadratic::to_double() const {
  double r = a_.get_d();
  if (d_ != 0) r += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return r;
}

std::string Quadratic::to_string() const {
  if (d_ == 0) return a_.get_str();
  std::string s = a_.get_str();
  s += " + ";
  s += b_.get_str();
  s += "*sqrt(";
  s += std::to_string(d_);
  s += ")";
  return s;
}

AlgebraElement algebra_mul(const AlgebraElement& s, const AlgebraElement& t,
                           const SrgParams& p) {
  const Quadratic kc(p.k - p.c), ac(p.a - p.c), c(p.c), k(p.k), v(p.v);
  AlgebraElement r;
  r.x = s.x * t.x + s.y * t.y * kc;
  r.y = s.x * t.y + s.y * t.x + s.y * t.y * ac;
  r.z = s.x * t.z + s.z * t.x + s.y * t.y * c + (s.y * t.z + s.z * t.y) * k +
        s.z * t.z * v;
  return r;
}

AlgebraElement schur_mul(const AlgebraElement& s, const AlgebraElement& t) {
  AlgebraElement r;
  r.x = s.x * t.x + s.x * t.z + s.z * t.x;
  r.y = s.y * t.y + s.y * t.z + s.z * t.y;
  r.z = s.z * t.z;
  return r;
}

std::optional<SrgParams> detect_srg(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  const int k = g.degree(0);
  for (int i = 1; i < n; ++i)
    if (g.degree(i) != k) return std::nullopt;
  long a = -1, c = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long common = 0;
      for (int t = 0; t < n; ++t)
        if (g.has(i, t) && g.has(j, t)) ++common;
      if (g.has(i, j)) {
        if (a < 0)
          a = common;
        else if (a != common)
          return std::nullopt;
      } else {
        if (c < 0)
          c = common;
        else if (c != common)
          return std::nullopt;
      }
    }
  if (a < 0 || c < 0) return std::nullopt;  // complete or empty
  SrgParams p{n, k, a, c};
  // edge count between a neighbourhood and its complement, counted twice
  if (p.k * (p.k - p.a - 1) != (p.v - p.k - 1) * p.c)
    throw std::logic_error("constant counts violate the feasibility identity");
  return p;
}

bool srg_identity_holds(const Graph& g, const SrgParams& params) {
  auto found = detect_srg(g);
  if (!found || !(*found == params))
    throw std::invalid_argument("parameters do not match the graph");
  const IntMatrix a = g.adjacency<Int>();
  const int n = g.order();
  IntMatrix lhs = a * a;
  const Int ac(params.a - params.c), kc(params.k - params.c), c(params.c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      lhs(i, j) -= ac * a(i, j);
      if (i == j) lhs(i, j) -= kc;
      if (lhs(i, j) != c) return false;
    }
  return true;
}

PairQuotient pair_partition_quotient(const SrgParams& p) {
  PairQuotient q;
  q.b << 2 * p.a, 2 * p.k - 2 * p.a - 2, 2 * p.c, 2 * p.k - 2 * p.c;
  const long delta = p.a - p.c;
  const long disc = (p.k - delta) * (p.k - delta) - 4 * p.c;
  const Quadratic root = Quadratic::sqrt_of(disc);
  q.eig_hi = Quadratic(p.k + delta) + root;
  q.eig_lo = Quadratic(p.k + delta) - root;
  return q;
}

std::vector<SpectralIdempotent> spectral_idempotents(const SrgParams& p) {
  if (p.c < 1)
    throw std::invalid_argument(
        "need c >= 1 (otherwise the valency eigenvalue is not simple)");
  const long delta = p.a - p.c;
  const long disc = delta * delta + 4 * (p.k - p.c);
  const Quadratic half(Rat(1, 2));
  const Quadratic root = Quadratic::sqrt_of(disc);
  const Quadratic k(p.k);
  const Quadratic theta = (Quadratic(delta) + root) * half;
  const Quadratic tau = (Quadratic(delta) - root) * half;

  const Quadratic eigs[3] = {k, theta, tau};
  std::vector<SpectralIdempotent> out;
  for (int i = 0; i < 3; ++i) {
    AlgebraElement e{Quadratic(1), Quadratic(0), Quadratic(0)};
    Quadratic denom(1);
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      // multiply by (A - eig_j I)
      AlgebraElement factor{-eigs[j], Quadratic(1), Quadratic(0)};
      e = algebra_mul(e, factor, p);
      denom *= eigs[i] - eigs[j];
    }
    e.x = e.x / denom;
    e.y = e.y / denom;
    e.z = e.z / denom;
    out.push_back({eigs[i], e});
  }
  return out;
}

std::array<Quadratic, 3> krein_expansion(
    const std::vector<SpectralIdempotent>& basis, int i, int j) {
  if (basis.size() != 3) throw std::invalid_argument("need three idempotents");
  if (i < 0 || i > 2 || j < 0 || j > 2)
    throw std::invalid_argument("idempotent index out of range");
  const AlgebraElement s = schur_mul(basis[static_cast<std::size_t>(i)].element,
                                     basis[static_cast<std::size_t>(j)].element);
  // Solve [columns = basis triples] q = s by Gaussian elimination over the
  // surd field.
  Quadratic m[3][4];
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) {
      const AlgebraElement& e = basis[static_cast<std::size_t>(col)].element;
      m[r][col] = (r == 0) ? e.x : (r == 1) ? e.y : e.z;
    }
    m[r][3] = (r == 0) ? s.x : (r == 1) ? s.y : s.z;
  }
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = col; r < 3; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("idempotents are not independent");
    if (piv != col)
      for (int t = 0; t < 4; ++t) std::swap(m[piv][t], m[col][t]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Quadratic f = m[r][col] / m[col][col];
      for (int t = col; t < 4; ++t) m[r][t] -= f * m[col][t];
    }
  }
  std::array<Quadratic, 3> q;
  for (int col = 0; col < 3; ++col) q[static_cast<std::size_t>(col)] =
      m[col][3] / m[col][col];
  return q;
}

bool diag_walk_check(const Graph& g, int N) {
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("graph too large for walk check");
  if (N < 0) throw std::invalid_argument("negative order");
  auto params = detect_srg(g);
  if (!params) throw std::invalid_argument("graph is not strongly regular");
  const auto idems = spectral_idempotents(*params);

  // Left side: walk counts on the Cartesian square between diagonal
  // vertices. Entries stay below (2k)^N, comfortably inside int64.
  const Graph sq = cartesian_product(g, g);
  using LongMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
  const int m = sq.order();
  LongMatrix adj(m, m), walk(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) adj(i, j) = sq.has(i, j) ? 1 : 0;
  walk.setIdentity();

  for (int r = 0; r <= N; ++r) {
    if (r > 0) walk = (walk * adj).eval();
    // Right side at order r: sum over ordered eigenvalue pairs.
    AlgebraElement rhs{Quadratic(0), Quadratic(0), Quadratic(0)};
    for (const auto& ei : idems)
      for (const auto& ej : idems) {
        const Quadratic w = (ei.eigenvalue + ej.eigenvalue).pow(r);
        const AlgebraElement prod = schur_mul(ei.element, ej.element);
        rhs.x += w * prod.x;
        rhs.y += w * prod.y;
        rhs.z += w * prod.z;
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Quadratic expect = rhs.z;
        if (i == j) expect += rhs.x;
        if (g.has(i, j)) expect += rhs.y;
        const long counted = walk(i * n + i, j * n + j);
        if (expect != Quadratic(counted)) return false;
      }
  }
  return true;
}

EquitablePartition equitable_refine(
    const Graph& g, const std::vector<std::vector<int>>& seed) {
  const int n = g.order();
  std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> cells;
  for (const auto& cell : seed) {
    if (cell.empty()) throw std::invalid_argument("empty seed cell");
    std::vector<int> sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
      if (v < 0 || v >= n) throw std::out_of_range("vertex index out of range");
      if (cell_of[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("seed cells overlap");
      cell_of[static_cast<std::size_t>(v)] = static_cast<int>(cells.size());
    }
    cells.push_back(std::move(sorted));
  }
  for (int v = 0; v < n; ++v)
    if (cell_of[static_cast<std::size_t>(v)] == -1)
      throw std::invalid_argument("seed does not cover every vertex");

  for (;;) {
    bool split = false;
    std::vector<std::vector<int>> next;
    for (const auto& cell : cells) {
      // signature: neighbour counts into each current cell; within a parent,
      // larger signatures come first so a seed like {{u}, rest} lists the
      // neighbour cell before the distance-2 cell
      std::map<std::vector<int>, std::vector<int>, std::greater<>> groups;
      for (int v : cell) {
        std::vector<int> sig(cells.size(), 0);
        for (int u : g.neighbors(v))
          ++sig[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) split = true;
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    if (!split) break;
    cells = std::move(next);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }

  EquitablePartition part;
  part.cells = cells;
  const int nc = static_cast<int>(cells.size());
  part.quotient = IntMatrix(nc, nc);
  part.quotient.setZero();
  for (int ci = 0; ci < nc; ++ci) {
    std::vector<long> counts(static_cast<std::size_t>(nc), 0);
    bool first = true;
    for (int v : cells[static_cast<std::size_t>(ci)]) {
      std::vector<long> mine(static_cast<std::size_t>(nc), 0);
      for (int u : g.neighbors(v))
        ++mine[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
      if (first) {
        counts = mine;
        first = false;
      } else if (mine != counts) {
        throw std::logic_error("refinement fixpoint is not equitable");
      }
    }
    for (int cj = 0; cj < nc; ++cj)
      part.quotient(ci, cj) = counts[static_cast<std::size_t>(cj)];
  }
  return part;
}

bool quotient_walk_check(const Graph& g, const EquitablePartition& part,
                         int kmax) {
  if (kmax < 0 || kmax > 8) throw std::invalid_argument("order out of range");
  const int n = g.order();
  const int nc = static_cast<int>(part.cells.size());
  std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < nc; ++c)
    for (int v : part.cells[static_cast<std::size_t>(c)])
      cell_of[static_cast<std::size_t>(v)] = c;
  for (int v = 0; v < n; ++v)
    if (cell_of[static_cast<std::size_t>(v)] < 0)
      throw std::invalid_argument("partition does not cover every vertex");

  // AR == RB is the defining identity; require it before counting.
  const IntMatrix a = g.adjacency<Int>();
  IntMatrix r(n, nc);
  r.setZero();
  for (int v = 0; v < n; ++v) r(v, cell_of[static_cast<std::size_t>(v)]) = 1;
  const IntMatrix mismatch = a * r - r * part.quotient;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < nc; ++c)
      if (mismatch(i, c) != 0)
        throw std::invalid_argument("partition is not equitable");

  IntMatrix bpow(nc, nc);
  bpow.setIdentity();
  // per-vertex walk counts, advanced one step at a time
  std::vector<Vec<Int>> counts(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    counts[static_cast<std::size_t>(v)] = Vec<Int>(n);
    for (int t = 0; t < n; ++t)
      counts[static_cast<std::size_t>(v)](t) = (t == v) ? 1 : 0;
  }
  for (int step = 0; step <= kmax; ++step) {
    if (step > 0) {
      bpow = (bpow * part.quotient).eval();
      for (int v = 0; v < n; ++v) {
        Vec<Int> next(n);
        for (int t = 0; t < n; ++t) next(t) = 0;
        for (int t = 0; t < n; ++t) {
          const Int& cur = counts[static_cast<std::size_t>(v)](t);
          if (cur == 0) continue;
          for (int u : g.neighbors(t)) next(u) += cur;
        }
        counts[static_cast<std::size_t>(v)] = std::move(next);
      }
    }
    for (int v = 0; v < n; ++v) {
      const int s = cell_of[static_cast<std::size_t>(v)];
      Vec<Int> per_cell(nc);
      for (int c = 0; c < nc; ++c) per_cell(c) = 0;
      for (int t = 0; t < n; ++t)
        per_cell(cell_of[static_cast<std::size_t>(t)]) +=
            counts[static_cast<std::size_t>(v)](t);
      for (int c = 0; c < nc; ++c)
        if (per_cell(c) != bpow(s, c)) return false;
    }
  }
  return true;
}

std::array<long, 2> edge_pair_cell_sizes(const Graph& g) {
  auto params = detect_srg(g);
  if (!params) throw std::invalid_argument("graph is not strongly regular");
  const long v = params->v, k = params->k;
  long edges = 0, nonedges = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) (g.has(i, j) ? edges : nonedges)++;
  if (edges != v * k / 2 || nonedges != v * (v - 1 - k) / 2)
    throw std::logic_error("pair counts disagree with the parameter formula");
  // the same split must be the valency partition of the square power
  const Graph sq = symmetric_power_subsets(g, 2);
  KSubsetIndex ix(g.order(), 2);
  for (int r = 0; r < sq.order(); ++r) {
    const auto s = ix.unrank(static_cast<std::uint64_t>(r));
    const int expect = g.has(s[0], s[1]) ? static_cast<int>(2 * k - 2)
                                         : static_cast<int>(2 * k);
    if (sq.degree(r) != expect)
      throw std::logic_error("square valencies disagree with the pair split");
  }
  return {edges, nonedges};
}

}  // namespace sympow
