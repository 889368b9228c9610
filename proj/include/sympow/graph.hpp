#pragma once

// Simple undirected graphs on labelled vertices 0..n-1, packed adjacency
// bitset rows, plus graph6 interchange and the generators used throughout.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sympow/types.hpp"

namespace sympow {

class Graph {
 public:
  static constexpr int kMaxOrder = 10000;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  long edge_count() const;

  bool edge(int i, int j) const {
    check_pair(i, j);
    return bit(i, j);
  }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  void toggle_edge(int i, int j);

  int degree(int i) const;
  std::vector<int> neighbors(int i) const;

  // Equality is label-sensitive (same order, same edge set).
  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  template <typename Scalar>
  Mat<Scalar> adjacency() const {
    Mat<Scalar> a(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a(i, j) = Scalar(bit(i, j) ? 1 : 0);
    return a;
  }

  // Raw row access for hot loops; bounds unchecked.
  bool has(int i, int j) const { return bit(i, j); }

 private:
  void check_pair(int i, int j) const;
  bool bit(int i, int j) const {
    return (bits_[static_cast<std::size_t>(i) * stride_ +
                  static_cast<std::size_t>(j >> 6)] >>
            (j & 63)) &
           1u;
  }
  void set_bit(int i, int j, bool v);

  int n_ = 0;
  int stride_ = 0;  // 64-bit words per row
  std::vector<std::uint64_t> bits_;
};

// Sorted strictly increasing vertex labels; the constructor validates.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> v);
  explicit VertexSet(std::vector<int> v);
  const std::vector<int>& members() const { return v_; }
  int size() const { return static_cast<int>(v_.size()); }
  bool contains(int x) const;

 private:
  std::vector<int> v_;
};

// graph6 (both long forms included). Parse errors carry the byte offset.
struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& msg, std::size_t offset);
  std::size_t offset;
};

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One vertex per line: "i: <sorted neighbours>". Debugging aid only.
std::string format_adjacency_list(const Graph& g);

// Derived graphs.
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);  // h shifted past g
Graph delete_vertices(const Graph& g, const VertexSet& drop);
Graph line_graph(const Graph& g);  // vertices = edges of g in colex order
Graph cartesian_product(const Graph& g, const Graph& h);  // (i,j) -> i*|h|+j
Graph direct_product(const Graph& g, const Graph& h);

// Generators.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);      // n >= 3
Graph path_graph(int n);
Graph star_graph(int n);       // K_{1,n}: n+1 vertices, centre 0
Graph petersen_graph();
Graph rook4_graph();           // K4 x K4 Cartesian square, srg(16,6,2,2)
Graph shrikhande_graph();      // Cayley graph on Z4 x Z4, srg(16,6,2,2)

}  // namespace sympow
