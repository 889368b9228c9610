#include "sympow/acceptance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "sympow/exact.hpp"
#include "sympow/graph.hpp"
#include "sympow/harness.hpp"
#include "sympow/isomorphism.hpp"
#include "sympow/omega.hpp"
#include "sympow/parallel.hpp"
#include "sympow/srg.hpp"
#include "sympow/sympower.hpp"
#include "sympow/walkspec.hpp"

namespace sympow::acceptance {

namespace {

// Pinned gate tolerances.
constexpr double kSpectraTol = 1e-7;  // floating spectra comparisons
constexpr double kBoundTol = 1e-9;    // eigenvalue inequality slack

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng() & 1) g.add_edge(i, j);
  return g;
}

IntMatrix random_int_symmetric(int v, std::mt19937_64& rng) {
  IntMatrix m(v, v);
  for (int j = 0; j < v; ++j)
    for (int i = 0; i <= j; ++i) {
      const long x = static_cast<long>(rng() % 11) - 5;
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

RealMatrix random_real_symmetric(int v, std::mt19937_64& rng) {
  RealMatrix m(v, v);
  for (int j = 0; j < v; ++j)
    for (int i = 0; i <= j; ++i) {
      const double x = 2 * uniform01(rng) - 1;
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

RealMatrix random_orthogonal(int v, std::mt19937_64& rng) {
  RealMatrix m(v, v);
  for (int j = 0; j < v; ++j)
    for (int i = 0; i < v; ++i) m(i, j) = 2 * uniform01(rng) - 1;
  Eigen::HouseholderQR<RealMatrix> qr(m);
  RealMatrix q = qr.householderQ();
  return q;
}

// Orthogonal projector onto the top-m eigenvectors of a random symmetric
// matrix: PSD, eigenvalues exactly {1^m, 0^(v-m)} up to roundoff.
RealMatrix random_projector(int v, int m, std::mt19937_64& rng) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(random_real_symmetric(v, rng));
  RealMatrix basis = es.eigenvectors().rightCols(m);
  return basis * basis.transpose();
}

RealMatrix laplacian(const Graph& g) {
  RealMatrix a = g.adjacency<double>();
  RealMatrix l = -a;
  for (int i = 0; i < g.order(); ++i) l(i, i) = static_cast<double>(g.degree(i));
  return l;
}

bool int_matrices_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

RealVector to_vector(const std::vector<double>& v) {
  RealVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

Graph saltire_star() { return star_graph(4); }  // K_{1,4}
Graph saltire_cycle() {
  return disjoint_union(cycle_graph(4), empty_graph(1));  // C_4 + isolated
}

// ---- criteria ------------------------------------------------------------

bool crit_square_cospectrality(const Options& opt, std::string& detail) {
  const IntPolynomial px = charpoly_exact(
      symmetric_power_subsets(shrikhande_graph(), 2).adjacency<Int>(),
      opt.workers);
  const IntPolynomial py = charpoly_exact(
      symmetric_power_subsets(rook4_graph(), 2).adjacency<Int>(), opt.workers);
  const bool ok = px == py;
  detail = ok ? "120x120 exact char polys of the two square powers identical"
              : "square-power char polys differ";
  return ok;
}

bool crit_cube_certificate(const Options& opt, std::string& detail) {
  (void)opt;
  const IntMatrix a1 =
      symmetric_power_subsets(shrikhande_graph(), 3).adjacency<Int>();
  const IntMatrix a2 =
      symmetric_power_subsets(rook4_graph(), 3).adjacency<Int>();
  std::mt19937_64 rng(0x5ca1e5u);
  for (int probe = 1; probe <= 20; ++probe) {
    if (auto cert = certify_distinct(a1, a2, 1, rng)) {
      std::ostringstream os;
      os << "560x560 cube powers separated at probe " << probe << ": det(A+"
         << cert->alpha << " I) mod " << cert->p << " gives " << cert->r1
         << " vs " << cert->r2;
      detail = os.str();
      return true;
    }
  }
  detail = "no separating residue in 20 probes";
  return false;
}

bool connected_graph(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int found = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++found;
        stack.push_back(w);
      }
  }
  return found == n;
}

bool crit_small_order_uniqueness(const Options& opt, std::string& detail) {
  static const long kCounts[] = {1,    1,    2,      4,     11,      34,
                                 156,  1044, 12346,  274668, 12005168};
  const int limit = opt.extended ? 10 : 8;
  long total = 0;
  std::ostringstream os;
  for (int n = 2; n <= limit; ++n) {
    const std::vector<Graph> reps = enumerate_graphs(n, opt.workers);
    if (static_cast<long>(reps.size()) != kCounts[n]) {
      os << "order " << n << ": enumerated " << reps.size() << " classes, expected "
         << kCounts[n];
      detail = os.str();
      return false;
    }
    total += static_cast<long>(reps.size());
    std::vector<std::string> polys(reps.size());
    parallel_for(static_cast<std::int64_t>(reps.size()), opt.workers,
                 [&](std::int64_t i) {
                   polys[static_cast<std::size_t>(i)] =
                       charpoly_exact(symmetric_power_subsets(
                                          reps[static_cast<std::size_t>(i)], 2)
                                          .adjacency<Int>())
                           .to_string();
                 });
    std::unordered_map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < polys.size(); ++i) groups[polys[i]].push_back(i);
    std::vector<std::vector<std::size_t>> collisions;
    for (auto& [poly, members] : groups)
      if (members.size() > 1) collisions.push_back(members);
    if (n == 2) {
      // Forced identification: every 2-vertex graph has the 1-vertex square,
      // so the two order-2 classes collide. Anything else would be a bug.
      if (collisions.size() != 1 || collisions[0].size() != 2) {
        detail = "order 2 did not produce exactly the forced collision";
        return false;
      }
      continue;
    }
    if (!collisions.empty()) {
      os << "order " << n << ": " << collisions.size()
         << " colliding group(s) of square char polys:";
      for (const auto& members : collisions) {
        os << " {";
        for (std::size_t k = 0; k < members.size(); ++k)
          os << (k ? " " : "") << write_graph6(reps[members[k]])
             << (connected_graph(reps[members[k]]) ? "" : "*");
        os << '}';
      }
      os << " (* = disconnected)";
      detail = os.str();
      return false;
    }
  }
  os << total << " graphs, orders 2.." << limit
     << ": all square spectra distinct except the degenerate order-2 pair "
        "(both squares are a single vertex)";
  detail = os.str();
  return true;
}

bool crit_pair_properties(const Options& opt, std::string& detail) {
  const Graph x = shrikhande_graph();
  const Graph y = rook4_graph();
  const std::array<bool, 5> flags = property_report(x, y, opt.workers);
  const bool walks = complements_cospectral_by_walks(x, y, opt.workers);
  std::ostringstream os;
  os << "flags a..e:";
  bool all = true;
  for (bool f : flags) {
    os << ' ' << (f ? "true" : "false");
    all = all && f;
  }
  os << "; all-walks complement criterion " << (walks ? "agrees" : "fails");
  detail = os.str();
  return all && walks;
}

bool crit_cut_diagonal(const Options& opt, std::string& detail) {
  auto cut_poly = [&](const Graph& g) {
    const Graph prod = cartesian_product(g, g);
    const Graph cut = delete_vertices(prod, diagonal_vertices(prod));
    return charpoly_exact(cut.adjacency<Int>(), opt.workers);
  };
  const IntPolynomial px = cut_poly(shrikhande_graph());
  const IntPolynomial py = cut_poly(rook4_graph());
  const bool ok = px == py;
  detail = ok ? "240x240 char polys of the diagonal-deleted products identical"
              : "diagonal-deleted product char polys differ";
  return ok;
}

bool crit_complement_cospectrality(const Options& opt, std::string& detail) {
  const Graph sx = symmetric_power_subsets(shrikhande_graph(), 2);
  const Graph sy = symmetric_power_subsets(rook4_graph(), 2);
  const bool ok = cospectral(complement(sx), complement(sy), opt.workers);
  detail = ok ? "complements of the 120-vertex squares exactly cospectral"
              : "complements of the squares differ";
  return ok;
}

bool crit_flip_quotient_transfer(const Options& opt, std::string& detail) {
  const Graph x = saltire_star();
  const Graph y = saltire_cycle();
  if (!cospectral(x, y, opt.workers)) {
    detail = "base pair unexpectedly not cospectral";
    return false;
  }
  const EigenSpectrum ex = symmetric_eigenvalues(flip_quotient_full(x));
  const EigenSpectrum ey = symmetric_eigenvalues(flip_quotient_full(y));
  const bool close = spectra_close(ex.values, ey.values, kSpectraTol);
  const IntPolynomial bx =
      charpoly_exact(flip_quotient_combinatorial(x), opt.workers);
  const IntPolynomial by =
      charpoly_exact(flip_quotient_combinatorial(y), opt.workers);
  const bool exact = bx == by;
  std::ostringstream os;
  os << "15x15 flip quotients: float spectra "
     << (close ? "within 1e-7" : "DIFFER") << ", integer quotient char polys "
     << (exact ? "identical" : "DIFFER");
  detail = os.str();
  return close && exact;
}

bool crit_construction_agreement(const Options& opt, std::string& detail) {
  long squares = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n, opt.workers)) {
      const Graph a = symmetric_power_subsets(g, 2);
      if (!(a == symmetric_power_quotient(g))) {
        detail = "subset and quotient squares differ on " + write_graph6(g);
        return false;
      }
      if (!int_matrices_equal(a.adjacency<Int>(), selector_power(g, 2))) {
        detail = "selector square differs on " + write_graph6(g);
        return false;
      }
      ++squares;
    }
  std::mt19937_64 rng(0xf005ba11u);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);  // 2..10
    const Graph g = random_graph(n, rng);
    const Graph a = symmetric_power_subsets(g, 2);
    if (!(a == symmetric_power_quotient(g)) ||
        !int_matrices_equal(a.adjacency<Int>(), selector_power(g, 2))) {
      detail = "construction mismatch on random " + write_graph6(g);
      return false;
    }
    ++squares;
  }
  long cubes = 0;
  for (int n = 3; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, opt.workers)) {
      if (!int_matrices_equal(
              symmetric_power_subsets(g, 3).adjacency<Int>(),
              selector_power(g, 3))) {
        detail = "cube selector mismatch on " + write_graph6(g);
        return false;
      }
      ++cubes;
    }
  std::ostringstream os;
  os << "subset == quotient == selector on " << squares
     << " squares; selector cubes match on " << cubes << " graphs";
  detail = os.str();
  return true;
}

bool selector_identities_hold(int v) {
  const SelectorMatrix sel = build_selector(v, 2);
  // P P^T == 2 I: each column hits at most one row, so off-diagonal entries
  // vanish structurally and the diagonal counts columns per row.
  std::vector<int> per_row(sel.rows, 0);
  std::vector<std::int64_t> row_of(sel.cols);
  for (std::uint64_t c = 0; c < sel.cols; ++c) {
    row_of[c] = sel.col_to_row[c];
    if (row_of[c] >= 0) ++per_row[static_cast<std::size_t>(row_of[c])];
  }
  for (int count : per_row)
    if (count != 2) return false;
  // P^T P against its matrix-basis expansion, entry by entry over tuple
  // pairs ((a,b),(c,d)).
  for (std::uint64_t s = 0; s < sel.cols; ++s) {
    const int a = static_cast<int>(s / static_cast<std::uint64_t>(v));
    const int b = static_cast<int>(s % static_cast<std::uint64_t>(v));
    for (std::uint64_t t = 0; t < sel.cols; ++t) {
      const int c = static_cast<int>(t / static_cast<std::uint64_t>(v));
      const int d = static_cast<int>(t % static_cast<std::uint64_t>(v));
      const int expansion = (a == c && b == d ? 1 : 0) +
                            (a == d && b == c ? 1 : 0) -
                            (a == b && b == c && c == d ? 2 : 0);
      const int sparse =
          (row_of[s] >= 0 && row_of[s] == row_of[t]) ? 1 : 0;
      if (expansion != sparse) return false;
    }
  }
  return true;
}

bool crit_identity_suites(const Options& opt, std::string& detail) {
  std::vector<std::pair<std::string, bool>> suites;

  {
    std::mt19937_64 rng(0xdecafu);
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
      const int n = 2 + static_cast<int>(rng() % 7);  // 2..8
      const Graph g = random_graph(n, rng);
      std::vector<int> verts(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
      for (std::size_t i = verts.size(); i > 1; --i)
        std::swap(verts[i - 1], verts[rng() % i]);
      const int dsize = 1 + static_cast<int>(rng() % std::min(n, 3));
      std::vector<int> d(verts.begin(), verts.begin() + dsize);
      std::sort(d.begin(), d.end());
      ok = minor_identity_holds(g, VertexSet(d));
    }
    suites.emplace_back("cofactor-minor", ok);
  }
  {
    std::mt19937_64 rng(0xdecaf2u);
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const Graph g = random_graph(n, rng);
      const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      if (j == i) j = (j + 1) % n;
      ok = offdiagonal_identity_holds(g, i, j);
    }
    suites.emplace_back("offdiagonal-square", ok);
  }
  {
    bool ok = diag_walk_check(petersen_graph(), 8) &&
              diag_walk_check(shrikhande_graph(), 8) &&
              diag_walk_check(rook4_graph(), 8);
    suites.emplace_back("diagonal-walks", ok);
  }
  {
    bool ok = true;
    const Graph p = petersen_graph();
    std::vector<int> rest;
    for (int i = 1; i < 10; ++i) rest.push_back(i);
    const EquitablePartition dist = equitable_refine(p, {{0}, rest});
    ok = ok && dist.cells.size() == 3 && quotient_walk_check(p, dist, 8);
    const Graph sq = symmetric_power_subsets(shrikhande_graph(), 2);
    std::vector<int> low, high;
    for (int i = 0; i < sq.order(); ++i)
      (sq.degree(i) == 10 ? low : high).push_back(i);
    const EquitablePartition val = equitable_refine(sq, {low, high});
    ok = ok && val.cells.size() == 2 && quotient_walk_check(sq, val, 8);
    suites.emplace_back("quotient-walks", ok);
  }
  {
    bool ok = true;
    for (int v = 3; v <= 8 && ok; ++v) ok = selector_identities_hold(v);
    suites.emplace_back("selector-identities", ok);
  }
  {
    std::mt19937_64 rng(0x7ace5u);
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
      const int v = 2 + static_cast<int>(rng() % 9);  // 2..10
      ok = trace_identity_holds(random_int_symmetric(v, rng));
    }
    suites.emplace_back("compression-trace", ok);
  }
  {
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n)
      for (const Graph& g : enumerate_graphs(n, opt.workers)) {
        const RealVector predicted =
            to_vector(predicted_quotient_spectrum(g, 1e-8));
        const EigenSpectrum full = symmetric_eigenvalues(flip_quotient_full(g));
        if (!spectra_close(predicted, full.values, kSpectraTol)) {
          ok = false;
          break;
        }
      }
    suites.emplace_back("predicted-quotient-spectrum", ok);
  }

  bool all = true;
  std::ostringstream os;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    all = all && suites[i].second;
    os << (i ? ", " : "") << suites[i].first << '='
       << (suites[i].second ? "ok" : "FAIL");
  }
  detail = os.str();
  return all;
}

bool crit_eigenvalue_bounds(const Options& opt, std::string& detail) {
  (void)opt;
  std::mt19937_64 rng(0xb0317u);
  int psd_pass = 0;
  for (int t = 0; t < 200; ++t) {
    const int v = 3 + t % 10;  // 3..12
    RealMatrix m;
    switch (t % 3) {
      case 0: m = laplacian(random_graph(v, rng)); break;
      case 1: {
        RealMatrix b = random_real_symmetric(v, rng);
        m = b.transpose() * b;
        break;
      }
      default:
        m = random_projector(v, 1 + static_cast<int>(rng() % (v - 1)), rng);
    }
    if (psd_compression_bound_holds(m, kBoundTol)) ++psd_pass;
  }
  // same bound on entrywise-nonnegative PSD inputs (Gram matrices of
  // nonnegative vectors), tracked separately
  int nonneg_pass = 0;
  for (int t = 0; t < 100; ++t) {
    const int v = 3 + t % 10;
    RealMatrix b(v, v);
    for (int j = 0; j < v; ++j)
      for (int i = 0; i < v; ++i) b(i, j) = uniform01(rng);
    if (psd_compression_bound_holds(b.transpose() * b, kBoundTol))
      ++nonneg_pass;
  }
  int herm_pass = 0;
  for (int t = 0; t < 200; ++t) {
    const int v = 3 + t % 10;
    if (symmetric_compression_bounds_hold(random_real_symmetric(v, rng),
                                          kBoundTol))
      ++herm_pass;
  }
  bool sharp = true;
  for (int v = 4; v <= 8 && sharp; ++v)
    for (int m = 1; m < v && sharp; ++m) {
      const RealMatrix p = random_projector(v, m, rng);
      const EigenSpectrum comp = symmetric_eigenvalues(omega_real(p));
      const double lm = comp.values[m - 1];
      sharp = lm >= 1 - kBoundTol && lm <= 2 + kBoundTol;
    }
  std::ostringstream os;
  os << "psd " << psd_pass << "/200, nonneg psd " << nonneg_pass
     << "/100, symmetric " << herm_pass
     << "/200, projector sharpness 1 <= lambda_m <= 2 "
     << (sharp ? "holds" : "FAILS");
  detail = os.str();
  return psd_pass == 200 && nonneg_pass == 100 && herm_pass == 200 && sharp;
}

// Diagnostic companions to the two analog constructions: the same quotients
// in counting form, entry (O,O') = number of neighbours a fixed member of
// orbit O has inside O'.  The Graph-valued constructions reduce these to
// simple graphs (loops dropped, doubled adjacencies clamped to 1); the
// detail line reports both forms so a spectral mismatch can be attributed.
RealMatrix flip_tensor_quotient_counting(const Graph& g) {
  KSubsetIndex ix(g.order(), 2);
  const int N = static_cast<int>(ix.count());
  RealMatrix b = RealMatrix::Zero(N, N);
  for (int r = 0; r < N; ++r) {
    const auto s = ix.unrank(static_cast<std::uint64_t>(r));
    const int i = s[0], j = s[1];
    // (i,j) ~ (j,i) in the tensor square iff ij is an edge: a quotient loop
    if (g.has(i, j)) b(r, r) = 1;
    for (int r2 = 0; r2 < N; ++r2) {
      if (r2 == r) continue;
      const auto t = ix.unrank(static_cast<std::uint64_t>(r2));
      b(r, r2) = (g.has(i, t[0]) && g.has(j, t[1]) ? 1 : 0) +
                 (g.has(i, t[1]) && g.has(j, t[0]) ? 1 : 0);
    }
  }
  return b;
}

RealMatrix rotation_cube_quotient_counting(const Graph& g) {
  const int n = g.order();
  const long n3 = static_cast<long>(n) * n * n;
  auto enc = [n](int a, int b, int c) {
    return (static_cast<long>(a) * n + b) * n + c;
  };
  std::vector<long> orbit(static_cast<std::size_t>(n3), -1);
  std::vector<int> ra, rb, rc;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b && b == c) continue;
        const long self = enc(a, b, c);
        if (self <= enc(c, a, b) && self <= enc(b, c, a)) {
          orbit[static_cast<std::size_t>(self)] = static_cast<long>(ra.size());
          ra.push_back(a);
          rb.push_back(b);
          rc.push_back(c);
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b && b == c) continue;
        const long self = enc(a, b, c);
        if (orbit[static_cast<std::size_t>(self)] < 0)
          orbit[static_cast<std::size_t>(self)] =
              orbit[static_cast<std::size_t>(
                  std::min(self, std::min(enc(c, a, b), enc(b, c, a))))];
      }
  const int N = static_cast<int>(ra.size());
  RealMatrix q = RealMatrix::Zero(N, N);
  for (int u = 0; u < N; ++u) {
    auto visit = [&](int x, int y, int z) {
      if (x == y && y == z) return;
      q(u, orbit[static_cast<std::size_t>(enc(x, y, z))]) += 1.0;
    };
    for (int x : g.neighbors(ra[u])) visit(x, rb[u], rc[u]);
    for (int y : g.neighbors(rb[u])) visit(ra[u], y, rc[u]);
    for (int z : g.neighbors(rc[u])) visit(ra[u], rb[u], z);
  }
  return q;
}

bool crit_analog_spectra(const Options& opt, std::string& detail) {
  (void)opt;
  const DirectSquareAnalog dx = direct_square_analog(shrikhande_graph());
  const DirectSquareAnalog dy = direct_square_analog(rook4_graph());
  const bool direct_ok =
      dx.dropped_loops == dy.dropped_loops &&
      spectra_close(symmetric_eigenvalues(dx.graph.adjacency<double>()).values,
                    symmetric_eigenvalues(dy.graph.adjacency<double>()).values,
                    kSpectraTol);
  const Graph cx = cyclic_cube_analog(shrikhande_graph());
  const Graph cy = cyclic_cube_analog(rook4_graph());
  const bool cyclic_ok =
      spectra_close(symmetric_eigenvalues(cx.adjacency<double>()).values,
                    symmetric_eigenvalues(cy.adjacency<double>()).values,
                    kSpectraTol);
  // Counting-form diagnostics; informational only, the verdict stays with
  // the Graph-valued constructions above.
  const bool direct_counting = spectra_close(
      symmetric_eigenvalues(flip_tensor_quotient_counting(shrikhande_graph()))
          .values,
      symmetric_eigenvalues(flip_tensor_quotient_counting(rook4_graph()))
          .values,
      kSpectraTol);
  const bool cyclic_counting = spectra_close(
      symmetric_eigenvalues(rotation_cube_quotient_counting(shrikhande_graph()))
          .values,
      symmetric_eigenvalues(rotation_cube_quotient_counting(rook4_graph()))
          .values,
      kSpectraTol);
  std::ostringstream os;
  os << "direct analogs (120 vertices, " << dx.dropped_loops
     << " loops dropped) " << (direct_ok ? "cospectral" : "DIFFER")
     << "; cyclic cube analogs (" << cx.order() << " vertices) "
     << (cyclic_ok ? "cospectral" : "DIFFER") << " within 1e-7"
     << "; counting-form quotients (loops and multiplicities kept): "
     << (direct_counting ? "cospectral" : "DIFFER") << " / "
     << (cyclic_counting ? "cospectral" : "DIFFER");
  detail = os.str();
  return direct_ok && cyclic_ok;
}

bool crit_exchange_sectors(const Options& opt, std::string& detail) {
  long checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, opt.workers))
      for (int k = 1; k <= std::min(3, n); ++k) {
        if (!int_matrices_equal(
                exchange_sector(g, k),
                symmetric_power_subsets(g, k).adjacency<Int>())) {
          std::ostringstream os;
          os << "sector mismatch at " << write_graph6(g) << " k=" << k;
          detail = os.str();
          return false;
        }
        ++checked;
      }
  std::ostringstream os;
  os << checked << " (graph, k) sectors equal the power adjacency exactly";
  detail = os.str();
  return true;
}

bool crit_projector_compressions(const Options& opt, std::string& detail) {
  std::mt19937_64 rng(0xc05e7a1u);
  int pairs_ok = 0;
  for (int t = 0; t < 50; ++t) {
    const int v = 4 + t % 5;  // 4..8
    const RealMatrix g1 = random_real_symmetric(v, rng);
    const RealMatrix q = random_orthogonal(v, rng);
    const RealMatrix g2 = q.transpose() * g1 * q;
    bool ok = true;
    for (TensorSector sector :
         {TensorSector::symmetric, TensorSector::antisymmetric}) {
      const EigenSpectrum e1 =
          symmetric_eigenvalues(sector_compression(g1, sector, 2));
      const EigenSpectrum e2 =
          symmetric_eigenvalues(sector_compression(g2, sector, 2));
      ok = ok && spectra_close(e1.values, e2.values, kSpectraTol);
    }
    if (ok) ++pairs_ok;
  }
  const IntPolynomial ox = charpoly_exact(
      omega_int(saltire_star().adjacency<Int>()), opt.workers);
  const IntPolynomial oy = charpoly_exact(
      omega_int(saltire_cycle().adjacency<Int>()), opt.workers);
  const bool distinct = !(ox == oy);
  std::ostringstream os;
  os << pairs_ok
     << "/50 conjugated pairs keep cospectral sector compressions; "
        "distinct-tuple compressions of the cospectral 5-vertex pair "
     << (distinct ? "differ exactly (as they must)" : "UNEXPECTEDLY AGREE");
  detail = os.str();
  return pairs_ok == 50 && distinct;
}

using Criterion = bool (*)(const Options&, std::string&);

struct Entry {
  const char* name;
  Criterion fn;
};

constexpr Entry kCriteria[] = {
    {"square-cospectrality", crit_square_cospectrality},
    {"cube-certificate", crit_cube_certificate},
    {"small-order-uniqueness", crit_small_order_uniqueness},
    {"pair-properties", crit_pair_properties},
    {"cut-diagonal-cospectrality", crit_cut_diagonal},
    {"complement-cospectrality", crit_complement_cospectrality},
    {"flip-quotient-transfer", crit_flip_quotient_transfer},
    {"construction-agreement", crit_construction_agreement},
    {"identity-suites", crit_identity_suites},
    {"eigenvalue-bounds", crit_eigenvalue_bounds},
    {"analog-spectra", crit_analog_spectra},
    {"exchange-sectors", crit_exchange_sectors},
    {"projector-compressions", crit_projector_compressions},
};

}  // namespace

std::vector<Outcome> run_all(std::ostream& out, const Options& opt) {
  std::vector<Outcome> outcomes;
  const int total = static_cast<int>(std::size(kCriteria));
  for (int i = 0; i < total; ++i) {
    Outcome o;
    o.name = kCriteria[i].name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o.pass = kCriteria[i].fn(opt, o.detail);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    out << (o.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << (i + 1)
        << "/" << total << "] " << o.name << "  (" << std::fixed
        << std::setprecision(1) << o.seconds << "s)  " << o.detail << '\n';
    out.flush();
    outcomes.push_back(std::move(o));
  }
  const int bad = failures(outcomes);
  if (bad == 0)
    out << "ALL " << total << " CRITERIA PASS\n";
  else
    out << bad << " OF " << total << " CRITERIA FAIL\n";
  out.flush();
  return outcomes;
}

int failures(const std::vector<Outcome>& outcomes) {
  int bad = 0;
  for (const Outcome& o : outcomes)
    if (!o.pass) ++bad;
  return bad;
}

}  // namespace sympow::acceptance
