#include "sympow/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "sympow/exact.hpp"
#include "sympow/modarith.hpp"
#include "sympow/parallel.hpp"
#include "sympow/sympower.hpp"
#include "sympow/walkspec.hpp"

namespace sympow {

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

std::uint64_t fingerprint(const Graph& g, std::uint64_t p) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = mix(h, static_cast<std::uint64_t>(g.order()));
  if (g.order() > 0) {
    const ModPoly base = charpoly_mod(g.adjacency<Int>(), p);
    for (auto c : base.coeffs) h = mix(h, c);
  }
  if (g.order() >= 2) {
    const ModPoly sq =
        charpoly_mod(symmetric_power_subsets(g, 2).adjacency<Int>(), p);
    for (auto c : sq.coeffs) h = mix(h, c);
  }
  return h;
}

const char* to_string(MutationOp op) {
  switch (op) {
    case MutationOp::edge_swap: return "edge_swap";
    case MutationOp::vertex_delete: return "vertex_delete";
    case MutationOp::edge_delete: return "edge_delete";
    case MutationOp::edge_add: return "edge_add";
    case MutationOp::one_factor_toggle: return "one_factor_toggle";
  }
  return "?";
}

namespace {

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.has(i, j)) edges.emplace_back(i, j);
  return edges;
}

// Randomized backtracking perfect matching; nullopt when none exists. The
// node budget keeps worst cases bounded (treated as "not found", which only
// makes the mutation a skip).
std::optional<std::vector<std::pair<int, int>>> perfect_matching(
    const Graph& g, std::mt19937_64& rng) {
  const int n = g.order();
  if (n % 2 != 0) return std::nullopt;
  std::vector<int> mate(static_cast<std::size_t>(n), -1);
  long nodes = 0;
  const long node_budget = 200000;

  std::function<bool(int)> solve = [&](int covered) -> bool {
    if (covered == n) return true;
    if (++nodes > node_budget) return false;
    int u = 0;
    while (mate[static_cast<std::size_t>(u)] != -1) ++u;
    std::vector<int> nb = g.neighbors(u);
    for (std::size_t i = nb.size(); i > 1; --i)
      std::swap(nb[i - 1], nb[pick(rng, i)]);
    for (int w : nb) {
      if (mate[static_cast<std::size_t>(w)] != -1) continue;
      mate[static_cast<std::size_t>(u)] = w;
      mate[static_cast<std::size_t>(w)] = u;
      if (solve(covered + 2)) return true;
      mate[static_cast<std::size_t>(u)] = -1;
      mate[static_cast<std::size_t>(w)] = -1;
    }
    return false;
  };
  if (!solve(0)) return std::nullopt;
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    if (mate[static_cast<std::size_t>(u)] > u)
      out.emplace_back(u, mate[static_cast<std::size_t>(u)]);
  return out;
}

}  // namespace

std::optional<Graph> mutate(const Graph& g, MutationOp op,
                            std::mt19937_64& rng) {
  switch (op) {
    case MutationOp::edge_swap: {
      const auto edges = edge_list(g);
      if (edges.size() < 2) return std::nullopt;
      for (int attempt = 0; attempt < 40; ++attempt) {
        const auto [a, b] = edges[pick(rng, edges.size())];
        const auto [c, d] = edges[pick(rng, edges.size())];
        if (a == c || a == d || b == c || b == d) continue;
        Graph out = g;
        out.remove_edge(a, b);
        out.remove_edge(c, d);
        // two rewirings; duplicates collapse (the result stays simple)
        if (pick(rng, 2) == 0) {
          out.add_edge(a, c);
          out.add_edge(b, d);
        } else {
          out.add_edge(a, d);
          out.add_edge(b, c);
        }
        return out;
      }
      return std::nullopt;
    }
    case MutationOp::vertex_delete: {
      if (g.order() < 1) return std::nullopt;
      const int v = static_cast<int>(pick(rng, g.order()));
      return delete_vertices(g, VertexSet{v});
    }
    case MutationOp::edge_delete: {
      const auto edges = edge_list(g);
      if (edges.empty()) return std::nullopt;
      const auto [a, b] = edges[pick(rng, edges.size())];
      Graph out = g;
      out.remove_edge(a, b);
      return out;
    }
    case MutationOp::edge_add: {
      std::vector<std::pair<int, int>> gaps;
      for (int j = 0; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
          if (!g.has(i, j)) gaps.emplace_back(i, j);
      if (gaps.empty()) return std::nullopt;
      const auto [a, b] = gaps[pick(rng, gaps.size())];
      Graph out = g;
      out.add_edge(a, b);
      return out;
    }
    case MutationOp::one_factor_toggle: {
      if (g.order() < 2 || g.order() % 2 != 0) return std::nullopt;
      if (auto m = perfect_matching(g, rng)) {
        Graph out = g;
        for (auto [a, b] : *m) out.remove_edge(a, b);
        return out;
      }
      if (auto m = perfect_matching(complement(g), rng)) {
        Graph out = g;
        for (auto [a, b] : *m) out.add_edge(a, b);
        return out;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

SearchConfig SearchConfig::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SearchConfig c;
  if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::string>>();
  if (j.contains("budget")) c.budget = j["budget"].get<long>();
  if (j.contains("weights")) {
    auto w = j["weights"].get<std::vector<double>>();
    if (w.size() != kMutationOps)
      throw std::invalid_argument("expected one weight per mutation op");
    std::copy(w.begin(), w.end(), c.weights.begin());
  }
  if (j.contains("fingerprint_primes"))
    c.fingerprint_primes =
        j["fingerprint_primes"].get<std::vector<std::uint64_t>>();
  if (j.contains("seed")) c.rng_seed = j["seed"].get<std::uint64_t>();
  if (j.contains("workers")) c.workers = j["workers"].get<int>();
  if (j.contains("store")) c.store_path = j["store"].get<std::string>();
  return c;
}

std::string SearchConfig::to_json_text() const {
  nlohmann::json j;
  j["seeds"] = seeds;
  j["budget"] = budget;
  j["weights"] = std::vector<double>(weights.begin(), weights.end());
  j["fingerprint_primes"] = fingerprint_primes;
  j["seed"] = rng_seed;
  j["workers"] = workers;
  if (!store_path.empty()) j["store"] = store_path;
  return j.dump();
}

std::string PairRecord::to_json_line() const {
  nlohmann::json j;
  j["x"] = x_graph6;
  j["y"] = y_graph6;
  j["square_charpoly"] = square_charpoly.to_string();
  j["properties"] = std::vector<bool>(properties.begin(), properties.end());
  j["noniso_witness"] = noniso_witness;
  j["timestamp"] = timestamp;
  return j.dump();
}

PairRecord PairRecord::from_json_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  PairRecord r;
  r.x_graph6 = j.at("x").get<std::string>();
  r.y_graph6 = j.at("y").get<std::string>();
  r.square_charpoly =
      IntPolynomial::parse(j.at("square_charpoly").get<std::string>());
  auto props = j.at("properties").get<std::vector<bool>>();
  if (props.size() != r.properties.size())
    throw std::invalid_argument("expected five property flags");
  std::copy(props.begin(), props.end(), r.properties.begin());
  r.noniso_witness = j.at("noniso_witness").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

std::array<bool, 5> property_report(const Graph& x, const Graph& y,
                                    int workers) {
  if (x.order() < 2 || y.order() < 2)
    throw std::invalid_argument("graphs too small for square powers");
  const Graph xs = symmetric_power_subsets(x, 2);
  const Graph ys = symmetric_power_subsets(y, 2);
  if (!cospectral(xs, ys, workers))
    throw std::invalid_argument("square powers are not cospectral");
  std::array<bool, 5> flags{};
  flags[0] = cospectral_with_complements(x, y, workers);
  flags[1] = cospectral(symmetric_power_subsets(complement(x), 2),
                        symmetric_power_subsets(complement(y), 2), workers);
  flags[2] = cospectral(complement(xs), complement(ys), workers);
  flags[3] = vertex_deck(x, workers) == vertex_deck(y, workers);
  flags[4] = pair_deck(x, workers) == pair_deck(y, workers);
  return flags;
}

std::optional<Certificate> certify_distinct(const IntMatrix& m1,
                                            const IntMatrix& m2, int trials,
                                            std::mt19937_64& rng) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols())
    throw std::invalid_argument("dimension mismatch");
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t p = modp::random_prime(rng, 62);
    const std::uint64_t alpha = rng() % p;
    const std::uint64_t r1 = det_shift_mod(m1, alpha, p);
    const std::uint64_t r2 = det_shift_mod(m2, alpha, p);
    if (r1 != r2) return Certificate{p, alpha, r1, r2};
  }
  return std::nullopt;
}

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double weight_total(const std::array<double, kMutationOps>& w) {
  double total = 0;
  for (double x : w) {
    if (x < 0) throw std::invalid_argument("negative mutation weight");
    total += x;
  }
  if (total <= 0) throw std::invalid_argument("no positive mutation weight");
  return total;
}

MutationOp pick_op(std::mt19937_64& rng,
                   const std::array<double, kMutationOps>& w, double total) {
  // fixed 53-bit uniform draw, identical across platforms
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
  double acc = 0;
  for (int i = 0; i < kMutationOps; ++i) {
    acc += w[static_cast<std::size_t>(i)];
    if (u < acc) return static_cast<MutationOp>(i);
  }
  return static_cast<MutationOp>(kMutationOps - 1);
}

}  // namespace

std::vector<PairRecord> search(const SearchConfig& config) {
  const double total_weight = weight_total(config.weights);
  const std::uint64_t fp_prime = config.fingerprint_primes.empty()
                                     ? modp::prime_stream(1)[0]
                                     : config.fingerprint_primes[0];

  std::ofstream store;
  if (!config.store_path.empty()) {
    store.open(config.store_path, std::ios::app);
    if (!store) throw std::runtime_error("cannot open store for append: " +
                                         config.store_path);
  }

  IsoClassSet classes;
  std::vector<std::uint64_t> fps;
  std::vector<std::optional<IntPolynomial>> square_polys;  // lazy cache
  std::vector<PairRecord> records;

  auto square_poly = [&](int idx) -> const IntPolynomial& {
    auto& slot = square_polys[static_cast<std::size_t>(idx)];
    if (!slot) {
      const Graph& g = classes.representatives()[static_cast<std::size_t>(idx)];
      slot = charpoly_exact(symmetric_power_subsets(g, 2).adjacency<Int>(),
                            config.workers);
    }
    return *slot;
  };

  auto emit = [&](int i, int j) {
    const Graph& x = classes.representatives()[static_cast<std::size_t>(i)];
    const Graph& y = classes.representatives()[static_cast<std::size_t>(j)];
    PairRecord rec;
    rec.x_graph6 = write_graph6(x);
    rec.y_graph6 = write_graph6(y);
    rec.square_charpoly = square_poly(i);
    rec.properties = property_report(x, y, config.workers);
    rec.noniso_witness = to_string(non_isomorphism_evidence(x, y));
    rec.timestamp = utc_timestamp();
    if (store.is_open()) {
      store << rec.to_json_line() << '\n';
      store.flush();
      if (!store) throw std::runtime_error("store append failed");
    }
    records.push_back(std::move(rec));
  };

  // Inserts one candidate, comparing fingerprints against the whole pool;
  // pool members are pairwise non-isomorphic by construction, so a verified
  // collision is already a reportable pair.
  auto consider = [&](const Graph& g, std::uint64_t fp) {
    const int before = static_cast<int>(classes.representatives().size());
    const int idx = classes.insert(g);
    if (idx < before) return;  // known isomorphism class
    fps.push_back(fp);
    square_polys.emplace_back();
    for (int j = 0; j < idx; ++j) {
      if (fps[static_cast<std::size_t>(j)] != fp) continue;
      if (square_poly(j) == square_poly(idx)) emit(j, idx);
    }
  };

  for (const std::string& s : config.seeds) {
    const Graph g = parse_graph6(s);
    if (g.order() < 2) continue;
    consider(g, fingerprint(g, fp_prime));
  }

  std::mt19937_64 rng(config.rng_seed);
  long remaining = config.budget;
  while (remaining > 0 && !classes.representatives().empty()) {
    const long batch =
        std::min<long>(remaining, 64);
    remaining -= batch;
    // candidates are drawn sequentially so the stream of rng values never
    // depends on the worker count
    std::vector<Graph> batch_graphs;
    batch_graphs.reserve(static_cast<std::size_t>(batch));
    for (long t = 0; t < batch; ++t) {
      const auto base = static_cast<std::size_t>(
          pick(rng, classes.representatives().size()));
      const MutationOp op = pick_op(rng, config.weights, total_weight);
      auto cand = mutate(classes.representatives()[base], op, rng);
      if (cand && cand->order() >= 2) batch_graphs.push_back(std::move(*cand));
    }
    // fingerprints in parallel, merge sequentially
    std::vector<std::uint64_t> batch_fps(batch_graphs.size());
    parallel_for(static_cast<std::int64_t>(batch_graphs.size()),
                 config.workers, [&](std::int64_t i) {
                   batch_fps[static_cast<std::size_t>(i)] =
                       fingerprint(batch_graphs[static_cast<std::size_t>(i)],
                                   fp_prime);
                 });
    for (std::size_t i = 0; i < batch_graphs.size(); ++i)
      consider(batch_graphs[i], batch_fps[i]);
  }
  return records;
}

std::vector<PairRecord> load_store(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open store: " + path);
  std::vector<PairRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(PairRecord::from_json_line(line));
  }
  return out;
}

void verify_record(const PairRecord& rec, int workers) {
  const Graph x = parse_graph6(rec.x_graph6);
  const Graph y = parse_graph6(rec.y_graph6);
  if (isomorphic(x, y))
    throw std::runtime_error("record holds isomorphic graphs");
  const IntPolynomial px = charpoly_exact(
      symmetric_power_subsets(x, 2).adjacency<Int>(), workers);
  const IntPolynomial py = charpoly_exact(
      symmetric_power_subsets(y, 2).adjacency<Int>(), workers);
  if (px != py)
    throw std::runtime_error("record squares are not cospectral");
  if (px != rec.square_charpoly)
    throw std::runtime_error("stored charpoly does not match the squares");
}

}  // namespace sympow
