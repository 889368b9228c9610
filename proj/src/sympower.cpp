#include "sympow/sympower.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "sympow/omega.hpp"

namespace sympow {

KSubsetIndex::KSubsetIndex(int v, int k) : v_(v), k_(k) {
  if (k < 0 || k > v) throw std::invalid_argument("subset size out of range");
  count_ = binomial64(v, k);
}

std::uint64_t KSubsetIndex::rank(const std::vector<int>& s) const {
  if (static_cast<int>(s.size()) != k_)
    throw std::invalid_argument("subset has wrong size");
  std::uint64_t r = 0;
  for (int i = 0; i < k_; ++i) {
    if (s[i] < 0 || s[i] >= v_ || (i > 0 && s[i] <= s[i - 1]))
      throw std::invalid_argument("subset not strictly increasing in range");
    r += binomial64(s[i], i + 1);
  }
  return r;
}

std::vector<int> KSubsetIndex::unrank(std::uint64_t r) const {
  if (r >= count_) throw std::out_of_range("subset rank out of range");
  std::vector<int> s(static_cast<std::size_t>(k_));
  for (int i = k_; i >= 1; --i) {
    // largest m with binom(m, i) <= r
    int m = i - 1;
    while (binomial64(m + 1, i) <= r) ++m;
    s[i - 1] = m;
    r -= binomial64(m, i);
  }
  return s;
}

Graph symmetric_power_subsets(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n) throw std::invalid_argument("power out of range");
  KSubsetIndex ix(n, k);
  if (ix.count() > static_cast<std::uint64_t>(Graph::kMaxOrder))
    throw std::invalid_argument("power order out of range");
  const int N = static_cast<int>(ix.count());
  Graph p(N);
  // neighbours of S: replace one element a by b with {a,b} an edge of g
  std::vector<int> s, t;
  for (int r = 0; r < N; ++r) {
    s = ix.unrank(static_cast<std::uint64_t>(r));
    for (int pos = 0; pos < k; ++pos) {
      const int a = s[pos];
      for (int b : g.neighbors(a)) {
        if (std::binary_search(s.begin(), s.end(), b)) continue;
        t = s;
        t[pos] = b;
        std::sort(t.begin(), t.end());
        const auto r2 = static_cast<int>(ix.rank(t));
        if (r < r2) p.add_edge(r, r2);
      }
    }
  }
  return p;
}

namespace {

int square_side(const Graph& square) {
  const int n = square.order();
  const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (m * m != n)
    throw std::invalid_argument("order is not a perfect square");
  return m;
}

}  // namespace

VertexSet diagonal_vertices(const Graph& square) {
  const int m = square_side(square);
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) d.push_back(i * m + i);
  return VertexSet(std::move(d));
}

OrbitPartition flip_orbits(const Graph& square) {
  const int m = square_side(square);
  OrbitPartition part;
  part.cells.reserve(static_cast<std::size_t>(m) + binomial64(m, 2));
  for (int i = 0; i < m; ++i) part.cells.push_back({i * m + i});
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i) part.cells.push_back({i * m + j, j * m + i});
  return part;
}

Graph symmetric_power_quotient(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("power out of range");
  KSubsetIndex ix(n, 2);
  const int N = static_cast<int>(ix.count());
  Graph q(N);
  // Orbits {i,j} of the flip action on the square minus its diagonal;
  // adjacency lifts along any of the four representative pairs.
  for (int r = 0; r < N; ++r) {
    const auto s = ix.unrank(static_cast<std::uint64_t>(r));
    const int i = s[0], j = s[1];
    // a loop would need (i,j) ~ (j,i) in the Cartesian square, impossible
    // for i != j; assert the guard anyway
    const bool self = (i == j && g.has(i, j));
    if (self) throw std::logic_error("flip orbit folded onto itself");
    for (int r2 = r + 1; r2 < N; ++r2) {
      const auto t = ix.unrank(static_cast<std::uint64_t>(r2));
      const int k = t[0], l = t[1];
      const bool adj = (i == k && g.has(j, l)) || (j == l && g.has(i, k)) ||
                       (i == l && g.has(j, k)) || (j == k && g.has(i, l));
      if (adj) q.add_edge(r, r2);
    }
  }
  return q;
}

IntMatrix selector_power(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n) throw std::invalid_argument("power out of range");
  SelectorMatrix sel = build_selector(n, k);
  return selector_compress_int(sel, g.adjacency<Int>());
}

RealMatrix orbit_characteristic(const OrbitPartition& part, int ambient) {
  const int cells = static_cast<int>(part.cells.size());
  RealMatrix r = RealMatrix::Zero(ambient, cells);
  for (int c = 0; c < cells; ++c) {
    const double w = 1.0 / std::sqrt(static_cast<double>(part.cells[c].size()));
    for (int v : part.cells[c]) r(v, c) = w;
  }
  return r;
}

RealMatrix flip_quotient_full(const Graph& g) {
  const Graph sq = cartesian_product(g, g);
  const RealMatrix r = orbit_characteristic(flip_orbits(sq), sq.order());
  RealMatrix a = sq.adjacency<double>();
  return r.transpose() * a * r;
}

IntMatrix flip_quotient_combinatorial(const Graph& g) {
  const Graph sq = cartesian_product(g, g);
  const OrbitPartition part = flip_orbits(sq);
  const int cells = static_cast<int>(part.cells.size());
  std::vector<int> cell_of(static_cast<std::size_t>(sq.order()), -1);
  for (int c = 0; c < cells; ++c)
    for (int v : part.cells[c]) cell_of[static_cast<std::size_t>(v)] = c;
  IntMatrix b(cells, cells);
  b.setZero();
  for (int c = 0; c < cells; ++c) {
    std::vector<long> counts(static_cast<std::size_t>(cells), 0);
    bool first = true;
    for (int v : part.cells[c]) {
      std::vector<long> mine(static_cast<std::size_t>(cells), 0);
      for (int w : sq.neighbors(v)) ++mine[static_cast<std::size_t>(cell_of[w])];
      if (first) {
        counts = mine;
        first = false;
      } else if (mine != counts) {
        throw std::logic_error("flip orbit partition is not equitable");
      }
    }
    for (int d = 0; d < cells; ++d) b(c, d) = counts[static_cast<std::size_t>(d)];
  }
  return b;
}

std::vector<double> predicted_quotient_spectrum(const Graph& g,
                                                double group_tol) {
  EigenSpectrum base = symmetric_eigenvalues(g.adjacency<double>());
  auto groups = group_spectrum(base.values, group_tol);
  std::vector<double> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto [ti, li] = groups[i];
    const std::uint64_t reps = binomial64(li + 1, 2);
    for (std::uint64_t c = 0; c < reps; ++c) out.push_back(2 * ti);
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const auto [tj, lj] = groups[j];
      for (long c = 0; c < static_cast<long>(li) * lj; ++c)
        out.push_back(ti + tj);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<double>());
  const std::size_t expect =
      binomial64(g.order() + 1, 2);
  if (out.size() != expect)
    throw std::logic_error("predicted spectrum has wrong size");
  return out;
}

DirectSquareAnalog direct_square_analog(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("power out of range");
  KSubsetIndex ix(n, 2);
  const int N = static_cast<int>(ix.count());
  DirectSquareAnalog out{Graph(N), 0};
  for (int r = 0; r < N; ++r) {
    const auto s = ix.unrank(static_cast<std::uint64_t>(r));
    const int i = s[0], j = s[1];
    // loop of the quotient: (i,j) ~ (j,i) in the tensor square iff {i,j} is
    // an edge; dropped from the simple graph but reported
    if (g.has(i, j)) ++out.dropped_loops;
    for (int r2 = r + 1; r2 < N; ++r2) {
      const auto t = ix.unrank(static_cast<std::uint64_t>(r2));
      const int k = t[0], l = t[1];
      if ((g.has(i, k) && g.has(j, l)) || (g.has(i, l) && g.has(j, k)))
        out.graph.add_edge(r, r2);
    }
  }
  return out;
}

Graph cyclic_cube_analog(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("power out of range");
  const long n3 = static_cast<long>(n) * n * n;
  // representative = rotation-minimal triple, skipping constants
  std::vector<long> orbit_index(static_cast<std::size_t>(n3), -1);
  std::vector<std::array<int, 3>> reps;
  auto encode = [n](int a, int b, int c) {
    return (static_cast<long>(a) * n + b) * n + c;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b && b == c) continue;
        const long self = encode(a, b, c);
        const long r1 = encode(c, a, b), r2 = encode(b, c, a);
        if (self <= r1 && self <= r2) {
          orbit_index[static_cast<std::size_t>(self)] =
              static_cast<long>(reps.size());
          reps.push_back({a, b, c});
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b && b == c) continue;
        const long self = encode(a, b, c);
        if (orbit_index[static_cast<std::size_t>(self)] < 0) {
          const long r1 = encode(c, a, b), r2 = encode(b, c, a);
          const long rep = std::min(self, std::min(r1, r2));
          orbit_index[static_cast<std::size_t>(self)] =
              orbit_index[static_cast<std::size_t>(rep)];
        }
      }
  if (reps.size() != static_cast<std::size_t>((n3 - n) / 3))
    throw std::logic_error("rotation orbit count is off");
  if (reps.size() > static_cast<std::size_t>(Graph::kMaxOrder))
    throw std::invalid_argument("power order out of range");

  Graph q(static_cast<int>(reps.size()));
  // Cartesian-cube neighbours of each representative; a quotient loop would
  // need a triple adjacent to its own rotation, which forces a constant.
  for (std::size_t u = 0; u < reps.size(); ++u) {
    const auto [a, b, c] = reps[u];
    auto visit = [&](int x, int y, int z) {
      if (x == y && y == z) return;
      const long w = orbit_index[static_cast<std::size_t>(encode(x, y, z))];
      if (w == static_cast<long>(u))
        throw std::logic_error("rotation orbit folded onto itself");
      if (w > static_cast<long>(u))
        q.add_edge(static_cast<int>(u), static_cast<int>(w));
    };
    for (int x : g.neighbors(a)) visit(x, b, c);
    for (int y : g.neighbors(b)) visit(a, y, c);
    for (int z : g.neighbors(c)) visit(a, b, z);
  }
  return q;
}

}  // namespace sympow
