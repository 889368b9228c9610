#include "sympow/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "sympow/exact.hpp"
#include "sympow/modarith.hpp"
#include "sympow/parallel.hpp"

namespace sympow {

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t hash_u64s(const std::vector<std::uint64_t>& v) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto x : v) h = mix(h, x);
  return h;
}

}  // namespace

std::vector<std::uint64_t> refinement_signature(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> colour(n), next(n);
  for (int i = 0; i < n; ++i) colour[i] = static_cast<std::uint64_t>(g.degree(i));
  // n rounds reach the stable partition; usually far fewer distinct rounds
  // matter, but n is small everywhere this runs.
  for (int round = 0; round < n; ++round) {
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> nb;
      nb.reserve(static_cast<std::size_t>(g.degree(i)));
      for (int j : g.neighbors(i)) nb.push_back(colour[j]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = mix(0x100001b3ull, colour[i]);
      for (auto x : nb) h = mix(h, x);
      next[i] = h;
    }
    if (next == colour) break;
    colour = next;
  }
  std::sort(colour.begin(), colour.end());
  return colour;
}

namespace {

struct BacktrackState {
  const Graph* g;
  const Graph* h;
  std::vector<int> order;       // vertices of g in assignment order
  std::vector<int> img;         // g vertex -> h vertex or -1
  std::vector<char> used;       // h vertex taken
  std::vector<std::uint64_t> gcol, hcol;  // refinement colours (unsorted)
};

// Unsorted per-vertex colours after stable refinement; mapping may only pair
// equal colours.
std::vector<std::uint64_t> vertex_colours(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> colour(n), next(n);
  for (int i = 0; i < n; ++i) colour[i] = static_cast<std::uint64_t>(g.degree(i));
  for (int round = 0; round < n; ++round) {
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> nb;
      for (int j : g.neighbors(i)) nb.push_back(colour[j]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = mix(0x100001b3ull, colour[i]);
      for (auto x : nb) h = mix(h, x);
      next[i] = h;
    }
    if (next == colour) break;
    colour = next;
  }
  return colour;
}

bool extend(BacktrackState& st, std::size_t depth) {
  if (depth == st.order.size()) return true;
  const int v = st.order[depth];
  const int n = st.h->order();
  for (int w = 0; w < n; ++w) {
    if (st.used[w] || st.gcol[v] != st.hcol[w]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const int u = st.order[d];
      if (st.g->has(u, v) != st.h->has(st.img[u], w)) ok = false;
    }
    if (!ok) continue;
    st.img[v] = w;
    st.used[w] = 1;
    if (extend(st, depth + 1)) return true;
    st.img[v] = -1;
    st.used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g,
                                                 const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  if (refinement_signature(g) != refinement_signature(h)) return std::nullopt;

  BacktrackState st;
  st.g = &g;
  st.h = &h;
  st.img.assign(n, -1);
  st.used.assign(n, 0);
  st.gcol = vertex_colours(g);
  st.hcol = vertex_colours(h);

  // Assign rare colours first, then high degree; keeps the tree narrow.
  std::vector<int> freq_rank(n);
  {
    std::vector<std::uint64_t> sorted = st.gcol;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
      auto lo = std::lower_bound(sorted.begin(), sorted.end(), st.gcol[i]);
      auto hi = std::upper_bound(sorted.begin(), sorted.end(), st.gcol[i]);
      freq_rank[i] = static_cast<int>(hi - lo);
    }
  }
  st.order.resize(n);
  for (int i = 0; i < n; ++i) st.order[i] = i;
  std::sort(st.order.begin(), st.order.end(), [&](int a, int b) {
    if (freq_rank[a] != freq_rank[b]) return freq_rank[a] < freq_rank[b];
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  if (!extend(st, 0)) return std::nullopt;
  return st.img;
}

bool isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

NonIsoEvidence non_isomorphism_evidence(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return NonIsoEvidence::order;
  std::vector<int> dg(g.order()), dh(h.order());
  for (int i = 0; i < g.order(); ++i) dg[i] = g.degree(i);
  for (int i = 0; i < h.order(); ++i) dh[i] = h.degree(i);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return NonIsoEvidence::degrees;
  if (refinement_signature(g) != refinement_signature(h))
    return NonIsoEvidence::refinement;
  if (isomorphic(g, h))
    throw std::invalid_argument("graphs are isomorphic, no evidence exists");
  return NonIsoEvidence::exhausted_search;
}

const char* to_string(NonIsoEvidence e) {
  switch (e) {
    case NonIsoEvidence::order: return "order";
    case NonIsoEvidence::degrees: return "degrees";
    case NonIsoEvidence::refinement: return "refinement";
    case NonIsoEvidence::exhausted_search: return "exhausted_search";
  }
  return "?";
}

std::uint64_t IsoClassSet::bucket_key(const Graph& g) const {
  std::vector<std::uint64_t> parts;
  parts.push_back(static_cast<std::uint64_t>(g.order()));
  parts.push_back(static_cast<std::uint64_t>(g.edge_count()));
  auto sig = refinement_signature(g);
  for (auto s : sig) parts.push_back(s);
  // spectral invariant mod one fixed prime; cheap and sharp
  if (g.order() > 0 && g.order() <= 64) {
    auto cp = charpoly_mod(g.adjacency<Int>(), modp::prime_stream(1)[0]);
    for (auto c : cp.coeffs) parts.push_back(c);
  }
  return hash_u64s(parts);
}

int IsoClassSet::insert(const Graph& g) {
  const std::uint64_t key = bucket_key(g);
  auto& members = buckets_[key];
  for (int idx : members)
    if (isomorphic(reps_[static_cast<std::size_t>(idx)], g)) return idx;
  members.push_back(static_cast<int>(reps_.size()));
  reps_.push_back(g);
  return static_cast<int>(reps_.size()) - 1;
}

int IsoClassSet::find(const Graph& g) const {
  auto it = buckets_.find(bucket_key(g));
  if (it == buckets_.end()) return -1;
  for (int idx : it->second)
    if (isomorphic(reps_[static_cast<std::size_t>(idx)], g)) return idx;
  return -1;
}

std::vector<Graph> enumerate_graphs(int n, int workers) {
  if (n < 0) throw std::invalid_argument("negative order");
  if (n == 0) return {Graph(0)};
  std::vector<Graph> prev = enumerate_graphs(n - 1, workers);

  // Candidate pool: every previous representative with every attachment of
  // the new vertex n-1. Invariants are computed in parallel; merging stays
  // sequential so the result is worker-count independent.
  const std::uint64_t masks = 1ull << (n - 1);
  const std::int64_t total =
      static_cast<std::int64_t>(prev.size()) * static_cast<std::int64_t>(masks);
  std::vector<Graph> candidates(static_cast<std::size_t>(total));
  parallel_for(total, workers, [&](std::int64_t t) {
    const auto pi = static_cast<std::size_t>(t / static_cast<std::int64_t>(masks));
    const auto mask = static_cast<std::uint64_t>(t % static_cast<std::int64_t>(masks));
    Graph g(n);
    const Graph& base = prev[pi];
    for (int i = 0; i < n - 1; ++i)
      for (int j = i + 1; j < n - 1; ++j)
        if (base.has(i, j)) g.add_edge(i, j);
    for (int i = 0; i < n - 1; ++i)
      if ((mask >> i) & 1) g.add_edge(i, n - 1);
    candidates[static_cast<std::size_t>(t)] = std::move(g);
  });

  IsoClassSet classes;
  for (const Graph& g : candidates) classes.insert(g);
  return classes.representatives();
}

}  // namespace sympow
