#include "sympow/walkspec.hpp"

#include <algorithm>
#include <stdexcept>

#include "sympow/parallel.hpp"

namespace sympow {

WalkSeries walk_series(const Graph& g, int i, int j, int N) {
  const int n = g.order();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::out_of_range("vertex index out of range");
  if (N < 0) throw std::invalid_argument("negative walk length");
  WalkSeries out;
  out.counts.reserve(static_cast<std::size_t>(N) + 1);
  Vec<Int> cur(n);
  for (int t = 0; t < n; ++t) cur(t) = (t == i) ? 1 : 0;
  out.counts.push_back(cur(j));
  for (int len = 1; len <= N; ++len) {
    Vec<Int> next(n);
    for (int t = 0; t < n; ++t) next(t) = 0;
    for (int t = 0; t < n; ++t) {
      if (cur(t) == 0) continue;
      for (int u : g.neighbors(t)) next(u) += cur(t);
    }
    cur = std::move(next);
    out.counts.push_back(cur(j));
  }
  return out;
}

WalkSeries all_walks_series(const Graph& g, int N) {
  const int n = g.order();
  if (N < 0) throw std::invalid_argument("negative walk length");
  WalkSeries out;
  out.counts.reserve(static_cast<std::size_t>(N) + 1);
  Vec<Int> cur(n);
  for (int t = 0; t < n; ++t) cur(t) = 1;
  Int total = 0;
  for (int t = 0; t < n; ++t) total += cur(t);
  out.counts.push_back(total);
  for (int len = 1; len <= N; ++len) {
    Vec<Int> next(n);
    for (int t = 0; t < n; ++t) next(t) = 0;
    for (int t = 0; t < n; ++t)
      for (int u : g.neighbors(t)) next(u) += cur(t);
    cur = std::move(next);
    total = 0;
    for (int t = 0; t < n; ++t) total += cur(t);
    out.counts.push_back(total);
  }
  return out;
}

bool cospectral(const Graph& g, const Graph& h, int workers) {
  if (g.order() != h.order()) return false;
  return charpoly_exact(g.adjacency<Int>(), workers) ==
         charpoly_exact(h.adjacency<Int>(), workers);
}

bool cospectral_with_complements(const Graph& g, const Graph& h, int workers) {
  return cospectral(g, h, workers) &&
         cospectral(complement(g), complement(h), workers);
}

bool complements_cospectral_by_walks(const Graph& g, const Graph& h,
                                     int workers) {
  if (!cospectral(g, h, workers))
    throw std::invalid_argument("inputs must be cospectral");
  const int order = 2 * g.order();
  const bool by_walks =
      all_walks_series(g, order).counts == all_walks_series(h, order).counts;
  const bool direct = cospectral(complement(g), complement(h), workers);
  if (by_walks != direct)
    throw std::logic_error(
        "all-walks criterion disagrees with direct complement spectra");
  return by_walks;
}

std::vector<IntPolynomial> vertex_deck(const Graph& g, int workers) {
  const int n = g.order();
  std::vector<IntPolynomial> deck(static_cast<std::size_t>(n));
  parallel_for(n, workers, [&](std::int64_t i) {
    deck[static_cast<std::size_t>(i)] = charpoly_exact(
        delete_vertices(g, VertexSet{static_cast<int>(i)}).adjacency<Int>());
  });
  std::sort(deck.begin(), deck.end(), poly_less);
  return deck;
}

std::vector<IntPolynomial> pair_deck(const Graph& g, int workers) {
  const int n = g.order();
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::vector<IntPolynomial> deck(pairs.size());
  parallel_for(static_cast<std::int64_t>(pairs.size()), workers,
               [&](std::int64_t t) {
                 const auto [i, j] = pairs[static_cast<std::size_t>(t)];
                 deck[static_cast<std::size_t>(t)] = charpoly_exact(
                     delete_vertices(g, VertexSet{i, j}).adjacency<Int>());
               });
  std::sort(deck.begin(), deck.end(), poly_less);
  return deck;
}

namespace {

// tI - A as a polynomial matrix.
Mat<IntPolynomial> char_matrix(const Graph& g) {
  const int n = g.order();
  Mat<IntPolynomial> m(n, n);
  const IntPolynomial t = IntPolynomial::variable();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        m(i, j) = t;
      else
        m(i, j) = g.has(i, j) ? IntPolynomial(-1) : IntPolynomial(0);
    }
  return m;
}

// Cofactor expansion entry of the adjugate: adj(M)_{rc} = (-1)^{r+c} times
// the minor with row c and column r removed. M symmetric here, so the
// transpose does not matter, but keep the general orientation.
IntPolynomial adjugate_entry(const Mat<IntPolynomial>& m, int r, int c) {
  const int n = static_cast<int>(m.rows());
  Mat<IntPolynomial> sub(n - 1, n - 1);
  for (int i = 0, si = 0; i < n; ++i) {
    if (i == c) continue;
    for (int j = 0, sj = 0; j < n; ++j) {
      if (j == r) continue;
      sub(si, sj) = m(i, j);
      ++sj;
    }
    ++si;
  }
  IntPolynomial d = polydet(sub);
  return ((r + c) % 2 == 0) ? d : -d;
}

}  // namespace

bool minor_identity_holds(const Graph& g, const VertexSet& d) {
  const int n = g.order();
  if (n > 12) throw std::invalid_argument("graph too large for minor check");
  if (d.size() < 1 || d.size() > 6)
    throw std::invalid_argument("deleted set size out of range");
  for (int v : d.members())
    if (v >= n) throw std::out_of_range("vertex index out of range");

  const Mat<IntPolynomial> m = char_matrix(g);
  const int s = d.size();
  Mat<IntPolynomial> sub(s, s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      sub(a, b) = adjugate_entry(m, d.members()[static_cast<std::size_t>(a)],
                                 d.members()[static_cast<std::size_t>(b)]);
  const IntPolynomial lhs = polydet(sub);

  IntPolynomial rhs = charpoly_exact(delete_vertices(g, d).adjacency<Int>());
  const IntPolynomial phi = charpoly_exact(g.adjacency<Int>());
  for (int i = 0; i + 1 < s; ++i) rhs *= phi;
  return lhs == rhs;
}

bool offdiagonal_identity_holds(const Graph& g, int i, int j) {
  const int n = g.order();
  if (n > 12) throw std::invalid_argument("graph too large for minor check");
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::out_of_range("vertex index out of range");
  if (i == j) throw std::invalid_argument("need two distinct vertices");

  const Mat<IntPolynomial> m = char_matrix(g);
  const IntPolynomial nij = adjugate_entry(m, i, j);
  const IntPolynomial phi = charpoly_exact(g.adjacency<Int>());
  const IntPolynomial phi_i =
      charpoly_exact(delete_vertices(g, VertexSet{i}).adjacency<Int>());
  const IntPolynomial phi_j =
      charpoly_exact(delete_vertices(g, VertexSet{j}).adjacency<Int>());
  const IntPolynomial phi_ij = charpoly_exact(
      delete_vertices(g, VertexSet{std::min(i, j), std::max(i, j)})
          .adjacency<Int>());
  return nij * nij == phi_i * phi_j - phi * phi_ij;
}

}  // namespace sympow
