// Command-line front end: constructions, exact spectra, cospectrality
// reports, SRG algebra dumps, compression maps, modular distinctness
// certificates, and the mutation search. Exit codes: 0 success/true,
// 1 false/distinct, 2 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "sympow/acceptance.hpp"
#include "sympow/exact.hpp"
#include "sympow/graph.hpp"
#include "sympow/harness.hpp"
#include "sympow/omega.hpp"
#include "sympow/srg.hpp"
#include "sympow/sympower.hpp"
#include "sympow/walkspec.hpp"

namespace {

using namespace sympow;
using nlohmann::json;

// Graph arguments are a path to a file whose first non-empty line is a
// graph6 string, or the graph6 string itself.
Graph load_graph(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) return parse_graph6(line);
    }
    throw std::runtime_error(arg + ": no graph6 line found");
  }
  return parse_graph6(arg);
}

IntMatrix load_int_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<Int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": empty matrix");
  const auto cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw std::runtime_error(path + ": ragged rows");
  IntMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

void print_int_matrix(std::ostream& out, const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << m(i, j).get_str();
    out << '\n';
  }
}

Graph graph_from_adjacency(const IntMatrix& m) {
  Graph g(static_cast<int>(m.rows()));
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i) {
      if (m(i, j) == 0) continue;
      if (m(i, j) != 1)
        throw std::runtime_error("adjacency entries must be 0/1");
      g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

int run_power(const std::string& file, int k, const std::string& method) {
  const Graph g = load_graph(file);
  Graph result(0);
  if (method == "subsets") {
    result = symmetric_power_subsets(g, k);
  } else if (method == "quotient") {
    if (k != 2)
      throw std::runtime_error("the quotient construction is square-only");
    result = symmetric_power_quotient(g);
  } else if (method == "selector") {
    result = graph_from_adjacency(selector_power(g, k));
  } else {
    throw std::runtime_error("unknown method " + method);
  }
  std::cout << write_graph6(result) << '\n';
  return 0;
}

int run_charpoly(const std::string& file, int power, int workers) {
  Graph g = load_graph(file);
  if (power > 1) g = symmetric_power_subsets(g, power);
  std::cout << charpoly_exact(g.adjacency<Int>(), workers).to_string() << '\n';
  return 0;
}

int run_cospectral(const std::string& f1, const std::string& f2,
                   bool complements, bool decks, int workers) {
  const Graph g = load_graph(f1);
  const Graph h = load_graph(f2);
  json report;
  bool verdict = cospectral(g, h, workers);
  report["cospectral"] = verdict;
  if (complements && verdict) {
    const bool cc = complements_cospectral_by_walks(g, h, workers);
    report["complements_cospectral"] = cc;
    verdict = verdict && cc;
  } else if (complements) {
    report["complements_cospectral"] = nullptr;  // undecided, base test failed
  }
  if (decks) {
    const bool vd = vertex_deck(g, workers) == vertex_deck(h, workers);
    const bool pd = pair_deck(g, workers) == pair_deck(h, workers);
    report["vertex_decks_equal"] = vd;
    report["pair_decks_equal"] = pd;
    verdict = verdict && vd && pd;
  }
  std::cout << report.dump(2) << '\n';
  return verdict ? 0 : 1;
}

int run_srg_info(const std::string& file) {
  const Graph g = load_graph(file);
  const auto params = detect_srg(g);
  json report;
  if (!params) {
    report["srg"] = false;
    std::cout << report.dump(2) << '\n';
    return 1;
  }
  report["srg"] = true;
  report["parameters"] = {{"v", params->v},
                          {"k", params->k},
                          {"a", params->a},
                          {"c", params->c}};
  const auto idem = spectral_idempotents(*params);
  json eigs = json::array();
  for (const auto& e : idem) {
    // multiplicity = trace of the idempotent = v (x + z) for traceless A
    Quadratic mult = (e.element.x + e.element.z) * Quadratic(params->v);
    eigs.push_back({{"value", e.eigenvalue.to_string()},
                    {"multiplicity", mult.to_string()},
                    {"idempotent_IAJ",
                     {e.element.x.to_string(), e.element.y.to_string(),
                      e.element.z.to_string()}}});
  }
  report["eigenvalues"] = eigs;
  json krein = json::array();
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = i; j < idem.size(); ++j) {
      const auto coeff =
          krein_expansion(idem, static_cast<int>(i), static_cast<int>(j));
      krein.push_back({{"pair", {i, j}},
                       {"coefficients",
                        {coeff[0].to_string(), coeff[1].to_string(),
                         coeff[2].to_string()}}});
    }
  report["krein_expansions"] = krein;
  const PairQuotient pq = pair_partition_quotient(*params);
  report["pair_quotient"] = {{"matrix",
                              {{pq.b(0, 0), pq.b(0, 1)},
                               {pq.b(1, 0), pq.b(1, 1)}}},
                             {"eigenvalues",
                              {pq.eig_hi.to_string(), pq.eig_lo.to_string()}}};
  std::vector<int> rest;
  for (int i = 1; i < g.order(); ++i) rest.push_back(i);
  const EquitablePartition dist = equitable_refine(g, {{0}, rest});
  json cells = json::array();
  for (const auto& cell : dist.cells) cells.push_back(cell.size());
  json qm = json::array();
  for (Eigen::Index i = 0; i < dist.quotient.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < dist.quotient.cols(); ++j)
      row.push_back(dist.quotient(i, j).get_si());
    qm.push_back(row);
  }
  report["distance_quotient"] = {{"cell_sizes", cells}, {"matrix", qm}};
  std::cout << report.dump(2) << '\n';
  return 0;
}

int run_omega(const std::string& file, int k) {
  const IntMatrix m = load_int_matrix(file);
  if (m.rows() != m.cols()) throw std::runtime_error("matrix must be square");
  IntMatrix result;
  if (k == 2) {
    result = omega_int(m);
  } else {
    const SelectorMatrix sel = build_selector(static_cast<int>(m.rows()), k);
    result = selector_compress_int(sel, m);
  }
  print_int_matrix(std::cout, result);
  return 0;
}

int run_hamiltonian(const std::string& file, int sector) {
  const Graph g = load_graph(file);
  print_int_matrix(std::cout, exchange_sector(g, sector));
  return 0;
}

int run_certify(const std::string& f1, const std::string& f2, int power,
                int trials, std::uint64_t seed) {
  Graph g = load_graph(f1);
  Graph h = load_graph(f2);
  if (power > 1) {
    g = symmetric_power_subsets(g, power);
    h = symmetric_power_subsets(h, power);
  }
  json report;
  if (g.order() != h.order()) {
    report["distinct"] = true;
    report["reason"] = "different orders";
    std::cout << report.dump(2) << '\n';
    return 1;
  }
  std::mt19937_64 rng(seed);
  const IntMatrix a = g.adjacency<Int>();
  const IntMatrix b = h.adjacency<Int>();
  for (int probe = 1; probe <= trials; ++probe) {
    if (auto cert = certify_distinct(a, b, 1, rng)) {
      report["distinct"] = true;
      report["probes"] = probe;
      report["certificate"] = {{"p", cert->p},
                               {"alpha", cert->alpha},
                               {"r1", cert->r1},
                               {"r2", cert->r2}};
      std::cout << report.dump(2) << '\n';
      return 1;
    }
  }
  report["distinct"] = false;
  report["probes"] = trials;
  report["note"] = "agreeing probes never prove cospectrality";
  std::cout << report.dump(2) << '\n';
  return 0;
}

int run_search(const std::string& config_path, const std::string& seeds_path,
               std::vector<std::string> seed_strings, long budget,
               std::uint64_t seed, int workers, const std::string& store) {
  SearchConfig config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    config = SearchConfig::from_json_text(buf.str());
  }
  if (!seeds_path.empty()) {
    std::ifstream in(seeds_path);
    if (!in) throw std::runtime_error("cannot open " + seeds_path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) config.seeds.push_back(line);
  }
  for (auto& s : seed_strings) config.seeds.push_back(std::move(s));
  if (budget >= 0) config.budget = budget;
  config.rng_seed = seed;
  config.workers = workers;
  if (!store.empty()) config.store_path = store;
  const auto records = search(config);
  for (const auto& rec : records) std::cout << rec.to_json_line() << '\n';
  std::cerr << "search: " << records.size() << " verified pair(s) from "
            << config.seeds.size() << " seed(s), budget " << config.budget
            << '\n';
  return 0;
}

int run_verify_suite(bool extended, int workers) {
  acceptance::Options opt;
  opt.workers = workers;
  opt.extended = extended;
  const auto outcomes = acceptance::run_all(std::cout, opt);
  return acceptance::failures(outcomes) == 0 ? 0 : 1;
}

int run_fixture(const std::string& name) {
  Graph g(0);
  if (name == "petersen") g = petersen_graph();
  else if (name == "shrikhande") g = shrikhande_graph();
  else if (name == "rook4") g = rook4_graph();
  else if (name == "star4") g = star_graph(4);
  else if (name == "c4k1") g = disjoint_union(cycle_graph(4), empty_graph(1));
  else throw std::runtime_error("unknown fixture " + name);
  std::cout << write_graph6(g) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Symmetric powers of graphs: exact spectra, identity checks, and the "
      "cospectral-pair search"};
  app.require_subcommand(1);
  int rc = 0;

  std::uint64_t seed = 0;
  int workers = 1;
  std::string store;

  auto* power = app.add_subcommand("power", "k-th symmetric power as graph6");
  std::string power_file, power_method = "subsets";
  int power_k = 2;
  power->add_option("graph", power_file, "graph6 file or literal")->required();
  power->add_option("--k", power_k, "power order (default 2)");
  power->add_option("--method", power_method, "subsets|quotient|selector");
  power->callback([&] { rc = run_power(power_file, power_k, power_method); });

  auto* charpoly = app.add_subcommand(
      "charpoly", "exact characteristic polynomial (constant term first)");
  std::string charpoly_file;
  int charpoly_power = 1;
  charpoly->add_option("graph", charpoly_file, "graph6 file or literal")
      ->required();
  charpoly->add_option("--power", charpoly_power,
                       "take the k-th symmetric power first");
  charpoly->add_option("--workers", workers, "parallel modular passes");
  charpoly->callback(
      [&] { rc = run_charpoly(charpoly_file, charpoly_power, workers); });

  auto* cosp = app.add_subcommand("cospectral",
                                  "exact cospectrality report (JSON)");
  std::string cosp_a, cosp_b;
  bool cosp_complements = false, cosp_decks = false;
  cosp->add_option("graph1", cosp_a, "graph6 file or literal")->required();
  cosp->add_option("graph2", cosp_b, "graph6 file or literal")->required();
  cosp->add_flag("--complements", cosp_complements,
                 "also decide complement cospectrality (all-walks route)");
  cosp->add_flag("--decks", cosp_decks,
                 "also compare vertex and pair polynomial decks");
  cosp->add_option("--workers", workers, "parallel modular passes");
  cosp->callback([&] {
    rc = run_cospectral(cosp_a, cosp_b, cosp_complements, cosp_decks, workers);
  });

  auto* srg = app.add_subcommand(
      "srg-info", "strong regularity parameters and exact algebra (JSON)");
  std::string srg_file;
  srg->add_option("graph", srg_file, "graph6 file or literal")->required();
  srg->callback([&] { rc = run_srg_info(srg_file); });

  auto* omega = app.add_subcommand(
      "omega", "distinct-tuple compression of an integer symmetric matrix");
  std::string omega_file;
  int omega_k = 2;
  omega->add_option("matrix", omega_file,
                    "text file: one row per line, decimal entries")
      ->required();
  omega->add_option("--k", omega_k, "tuple length (default 2)");
  omega->callback([&] { rc = run_omega(omega_file, omega_k); });

  auto* ham = app.add_subcommand(
      "hamiltonian", "weight-k sector of the exchange Hamiltonian");
  std::string ham_file;
  int ham_sector = 1;
  ham->add_option("graph", ham_file, "graph6 file or literal")->required();
  ham->add_option("--sector", ham_sector, "excitation number k")->required();
  ham->callback([&] { rc = run_hamiltonian(ham_file, ham_sector); });

  auto* certify = app.add_subcommand(
      "certify", "modular certificate that two spectra differ");
  std::string cert_a, cert_b;
  int cert_power = 1, cert_trials = 20;
  certify->add_option("graph1", cert_a, "graph6 file or literal")->required();
  certify->add_option("graph2", cert_b, "graph6 file or literal")->required();
  certify->add_option("--power", cert_power,
                      "compare k-th symmetric powers instead");
  certify->add_option("--trials", cert_trials, "probe budget (default 20)");
  certify->add_option("--seed", seed, "probe stream seed");
  certify->callback([&] {
    rc = run_certify(cert_a, cert_b, cert_power, cert_trials, seed);
  });

  auto* search = app.add_subcommand(
      "search", "mutation search for cospectral square-power pairs");
  std::string search_config, search_seeds;
  std::vector<std::string> search_seed_strings;
  long search_budget = -1;
  search->add_option("--config", search_config, "JSON config file");
  search->add_option("--seeds", search_seeds, "file: one graph6 per line");
  search->add_option("--seed-graph", search_seed_strings,
                     "extra seed graph6 literal (repeatable)");
  search->add_option("--budget", search_budget, "mutation attempts");
  search->add_option("--seed", seed, "rng seed");
  search->add_option("--workers", workers, "worker threads");
  search->add_option("--store", store, "JSON-lines store to append to");
  search->callback([&] {
    rc = run_search(search_config, search_seeds, search_seed_strings,
                    search_budget, seed, workers, store);
  });

  auto* verify = app.add_subcommand("verify-suite",
                                    "run the full release acceptance battery");
  bool verify_extended = false;
  verify->add_flag("--extended", verify_extended,
                   "exhaustive uniqueness sweep up to order 10 (slow)");
  verify->add_option("--workers", workers, "worker threads");
  verify->callback([&] { rc = run_verify_suite(verify_extended, workers); });

  auto* fixture =
      app.add_subcommand("fixture", "emit a named example graph as graph6");
  std::string fixture_name;
  fixture
      ->add_option("name", fixture_name,
                   "petersen|shrikhande|rook4|star4|c4k1")
      ->required();
  fixture->callback([&] { rc = run_fixture(fixture_name); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
