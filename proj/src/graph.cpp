#include "sympow/graph.hpp"

#include <algorithm>
#include <sstream>

namespace sympow {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder)
    throw std::invalid_argument("graph order out of range");
  n_ = n;
  stride_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
}

void Graph::check_pair(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw std::out_of_range("vertex index out of range");
}

void Graph::set_bit(int i, int j, bool v) {
  auto& w = bits_[static_cast<std::size_t>(i) * stride_ +
                  static_cast<std::size_t>(j >> 6)];
  const std::uint64_t m = 1ull << (j & 63);
  if (v)
    w |= m;
  else
    w &= ~m;
}

void Graph::add_edge(int i, int j) {
  check_pair(i, j);
  if (i == j) throw std::invalid_argument("loops are not allowed");
  set_bit(i, j, true);
  set_bit(j, i, true);
}

void Graph::remove_edge(int i, int j) {
  check_pair(i, j);
  set_bit(i, j, false);
  set_bit(j, i, false);
}

void Graph::toggle_edge(int i, int j) {
  check_pair(i, j);
  if (i == j) throw std::invalid_argument("loops are not allowed");
  set_bit(i, j, !bit(i, j));
  set_bit(j, i, !bit(j, i));
}

long Graph::edge_count() const {
  long total = 0;
  for (std::uint64_t w : bits_) total += __builtin_popcountll(w);
  return total / 2;
}

int Graph::degree(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("vertex index out of range");
  int d = 0;
  for (int w = 0; w < stride_; ++w)
    d += __builtin_popcountll(bits_[static_cast<std::size_t>(i) * stride_ + w]);
  return d;
}

std::vector<int> Graph::neighbors(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("vertex index out of range");
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (bit(i, j)) out.push_back(j);
  return out;
}

VertexSet::VertexSet(std::initializer_list<int> v)
    : VertexSet(std::vector<int>(v)) {}

VertexSet::VertexSet(std::vector<int> v) : v_(std::move(v)) {
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 0) throw std::invalid_argument("negative vertex label");
    if (i > 0 && v_[i] <= v_[i - 1])
      throw std::invalid_argument("vertex set must be strictly increasing");
  }
}

bool VertexSet::contains(int x) const {
  return std::binary_search(v_.begin(), v_.end(), x);
}

Graph6Error::Graph6Error(const std::string& msg, std::size_t off)
    : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"),
      offset(off) {}

namespace {

// graph6 alphabet: printable bytes 63..126 encoding 6-bit groups.
int g6_value(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw Graph6Error("truncated graph6 data", s.size());
  unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 alphabet", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  // Strip one trailing newline, as emitted by most tools.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 input", 0);

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = g6_value(text, pos++);
  } else if (text.size() >= 2 && text[1] != '~') {
    ++pos;
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | g6_value(text, pos++);
  } else {
    pos += 2;
    n = 0;
    for (int k = 0; k < 6; ++k) n = (n << 6) | g6_value(text, pos++);
  }
  if (n > Graph::kMaxOrder)
    throw Graph6Error("graph order exceeds supported maximum", 0);

  Graph g(static_cast<int>(n));
  int buf = 0, avail = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        buf = g6_value(text, pos++);
        avail = 6;
      }
      --avail;
      if ((buf >> avail) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits of the final group must be zero; trailing bytes are junk.
  if (avail > 0 && (buf & ((1 << avail) - 1)) != 0)
    throw Graph6Error("nonzero padding bits", pos - 1);
  if (pos != text.size()) throw Graph6Error("trailing bytes after graph", pos);
  return g;
}

std::string write_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int k = 2; k >= 0; --k)
      out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int k = 5; k >= 0; --k)
      out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
  }
  int buf = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      buf = (buf << 1) | (g.has(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + buf));
        buf = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (buf << (6 - used))));
  return out;
}

std::string format_adjacency_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << " vertices, " << g.edge_count() << " edges\n";
  for (int i = 0; i < g.order(); ++i) {
    os << i << ':';
    for (int j : g.neighbors(i)) os << ' ' << j;
    os << '\n';
  }
  return os.str();
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has(i, j)) h.add_edge(i, j);
  return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.order() + h.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.has(i, j)) u.add_edge(i, j);
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j)
      if (h.has(i, j)) u.add_edge(g.order() + i, g.order() + j);
  return u;
}

Graph delete_vertices(const Graph& g, const VertexSet& drop) {
  for (int v : drop.members())
    if (v >= g.order()) throw std::out_of_range("deleted vertex out of range");
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!drop.contains(v)) keep.push_back(v);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (g.has(keep[a], keep[b]))
        h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

Graph line_graph(const Graph& g) {
  // Edge {i,j}, i<j, listed in colex order: sort by (j, i).
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.has(i, j)) edges.emplace_back(i, j);
  Graph h(static_cast<int>(edges.size()));
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      auto [i1, j1] = edges[a];
      auto [i2, j2] = edges[b];
      if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2)
        h.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  return h;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const long n = static_cast<long>(g.order()) * h.order();
  if (n > Graph::kMaxOrder)
    throw std::invalid_argument("product order out of range");
  Graph p(static_cast<int>(n));
  const int m = h.order();
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < m; ++j) {
      for (int j2 = j + 1; j2 < m; ++j2)
        if (h.has(j, j2)) p.add_edge(i * m + j, i * m + j2);
      for (int i2 = i + 1; i2 < g.order(); ++i2)
        if (g.has(i, i2)) p.add_edge(i * m + j, i2 * m + j);
    }
  return p;
}

Graph direct_product(const Graph& g, const Graph& h) {
  const long n = static_cast<long>(g.order()) * h.order();
  if (n > Graph::kMaxOrder)
    throw std::invalid_argument("product order out of range");
  Graph p(static_cast<int>(n));
  const int m = h.order();
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < m; ++j)
      for (int i2 = 0; i2 < g.order(); ++i2)
        for (int j2 = 0; j2 < m; ++j2) {
          const int u = i * m + j, v = i2 * m + j2;
          if (u < v && g.has(i, i2) && h.has(j, j2)) p.add_edge(u, v);
        }
  return p;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(int n) {
  Graph g(n + 1);
  for (int i = 1; i <= n; ++i) g.add_edge(0, i);
  return g;
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph rook4_graph() {
  return cartesian_product(complete_graph(4), complete_graph(4));
}

Graph shrikhande_graph() {
  // Cayley graph on Z4 x Z4 with connection set +-{(1,0),(0,1),(1,1)}.
  Graph g(16);
  const int dx[] = {1, 3, 0, 0, 1, 3};
  const int dy[] = {0, 0, 1, 3, 1, 3};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int d = 0; d < 6; ++d) {
        int u = 4 * x + y;
        int v = 4 * ((x + dx[d]) % 4) + (y + dy[d]) % 4;
        if (u < v) g.add_edge(u, v);
      }
  return g;
}

}  // namespace sympow
