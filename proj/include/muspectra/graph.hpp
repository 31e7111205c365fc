#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "muspectra/bitset64.hpp"

namespace muspectra {

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 64;

/// Raised when a graph description violates the Graph invariants
/// (loops, duplicates, disconnection, size caps, unknown labels).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  int other(int w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor = 0;
  int edge = 0;
};

/// Immutable simple connected undirected graph. Vertex indices follow the
/// order labels were given in; edge indices follow the order edges were
/// given in.
class Graph {
 public:
  static Graph build(std::string name, std::vector<std::string> labels,
                     const std::vector<std::pair<int, int>>& edges);
  static Graph build_from_labels(
      std::string name, std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

  const std::string& name() const { return name_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  std::optional<int> find_vertex(std::string_view label) const;
  int vertex(std::string_view label) const;  // throws GraphError

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  std::optional<int> find_edge(int a, int b) const;
  std::string edge_label(int e) const;  // "<u>-<v>"

  std::span<const Incidence> incident(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }
  VertexSet neighbors(int v) const { return neighbor_masks_[v]; }
  bool adjacent(int a, int b) const { return neighbors(a).contains(b); }

  int min_degree() const;
  int max_degree() const;
  bool is_regular() const { return min_degree() == max_degree(); }
  bool is_cubic() const { return is_regular() && max_degree() == 3; }

  VertexSet all_vertices() const { return VertexSet::first_n(vertex_count()); }
  EdgeSet all_edges() const { return EdgeSet::first_n(edge_count()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<VertexSet> neighbor_masks_;
};

/// Vertices of `s` and every edge of the parent graph with both ends in `s`.
/// Not required to be connected. Holds a pointer to its parent graph.
struct InducedView {
  const Graph* graph = nullptr;
  VertexSet vertices;
  EdgeSet edges;

  int vertex_count() const { return vertices.size(); }
  int edge_count() const { return edges.size(); }
  int degree(int v) const { return (graph->neighbors(v) & vertices).size(); }
  bool connected() const;
  std::vector<std::string> labels() const;
};

// Catalog.
Graph petersen();
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);

VertexSet vertex_set(const Graph& g, std::initializer_list<std::string_view> labels);

InducedView induced_subgraph(const Graph& g, VertexSet s);
InducedView whole(const Graph& g);

bool is_path_forest(const InducedView& view);
bool is_path_forest(const Graph& g);

bool contains_induced_claw(const Graph& g, VertexSet s);
bool contains_induced_c6(const Graph& g, VertexSet s);

using Matching = EdgeSet;
std::vector<Matching> all_perfect_matchings(const Graph& g);

/// Least t admitting a proper edge coloring from [1,t].
int chromatic_index(const Graph& g);

/// Removes `v` and its edges; rejects results that are disconnected or edgeless.
Graph delete_vertex(const Graph& g, int v);

int girth(const Graph& g);  // 0 for acyclic graphs
bool is_connected(const Graph& g);

// Vertex permutations preserving adjacency, identity first; stops after
// `limit` of them.
std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t limit = 100'000);

}  // namespace muspectra
