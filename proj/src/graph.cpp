#include "muspectra/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>

namespace muspectra {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Connectivity of the subgraph induced on `vertices` by BFS over neighbor masks.
bool mask_connected(const Graph& g, VertexSet vertices) {
  if (vertices.empty()) return true;
  VertexSet seen;
  seen.insert(vertices.min());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier.members()) next = next | (g.neighbors(v) & vertices);
    frontier = next - seen;
    seen = seen | next;
  }
  return seen == vertices;
}

bool edge_colorable(const Graph& g, int t, std::vector<int>& color,
                    std::vector<std::uint64_t>& used, int e) {
  if (e == g.edge_count()) return true;
  const Edge& ed = g.edge(e);
  const std::uint64_t blocked = used[ed.u] | used[ed.v];
  // Colors are interchangeable here: never open more than one fresh color.
  int highest = 0;
  for (int i = 0; i < e; ++i) highest = std::max(highest, color[i]);
  const int limit = std::min(t, highest + 1);
  for (int c = 1; c <= limit; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    if (blocked & bit) continue;
    color[e] = c;
    used[ed.u] |= bit;
    used[ed.v] |= bit;
    if (edge_colorable(g, t, color, used, e + 1)) return true;
    used[ed.u] &= ~bit;
    used[ed.v] &= ~bit;
  }
  color[e] = 0;
  return false;
}

}  // namespace

Graph Graph::build(std::string name, std::vector<std::string> labels,
                   const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw GraphError("graph has no vertices");
  if (n > kMaxVertices) {
    throw GraphError("graph has " + std::to_string(n) + " vertices; the cap is " +
                     std::to_string(kMaxVertices));
  }
  if (edges.empty()) throw GraphError("graph has no edges");
  if (static_cast<int>(edges.size()) > kMaxEdges) {
    throw GraphError("graph has " + std::to_string(edges.size()) +
                     " edges; the cap is " + std::to_string(kMaxEdges));
  }
  {
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (static_cast<int>(distinct.size()) != n) throw GraphError("duplicate vertex label");
    if (distinct.count("")) throw GraphError("empty vertex label");
  }

  Graph g;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.adjacency_.resize(n);
  g.neighbor_masks_.resize(n);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw GraphError("edge endpoint out of range");
    if (a == b) throw GraphError("loop at vertex " + g.labels_[a]);
    const Edge e{std::min(a, b), std::max(a, b)};
    if (g.neighbor_masks_[e.u].contains(e.v)) {
      throw GraphError("duplicate edge " + g.labels_[e.u] + "-" + g.labels_[e.v]);
    }
    const int index = static_cast<int>(g.edges_.size());
    g.edges_.push_back(e);
    g.adjacency_[e.u].push_back({e.v, index});
    g.adjacency_[e.v].push_back({e.u, index});
    g.neighbor_masks_[e.u].insert(e.v);
    g.neighbor_masks_[e.v].insert(e.u);
  }
  if (!mask_connected(g, g.all_vertices())) {
    throw GraphError("graph '" + g.name_ + "' is not connected");
  }
  return g;
}

Graph Graph::build_from_labels(
    std::string name, std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::pair<int, int>> indexed;
  indexed.reserve(edges.size());
  auto index_of = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw GraphError("edge mentions unknown vertex '" + l + "'");
    return static_cast<int>(it - labels.begin());
  };
  for (const auto& [a, b] : edges) indexed.emplace_back(index_of(a), index_of(b));
  return build(std::move(name), std::move(labels), indexed);
}

std::optional<int> Graph::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

int Graph::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw GraphError("unknown vertex '" + std::string(label) + "' in graph '" + name_ + "'");
}

std::optional<int> Graph::find_edge(int a, int b) const {
  for (const Incidence& inc : incident(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

std::string Graph::edge_label(int e) const {
  const Edge& ed = edge(e);
  return label(ed.u) + "-" + label(ed.v);
}

int Graph::min_degree() const {
  int d = degree(0);
  for (int v = 1; v < vertex_count(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = degree(0);
  for (int v = 1; v < vertex_count(); ++v) d = std::max(d, degree(v));
  return d;
}

bool InducedView::connected() const { return mask_connected(*graph, vertices); }

std::vector<std::string> InducedView::labels() const {
  std::vector<std::string> out;
  for (int v : vertices.members()) out.push_back(graph->label(v));
  return out;
}

Graph petersen() {
  return Graph::build_from_labels(
      "petersen", {"x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5"},
      {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x4", "x5"}, {"x1", "x5"},
       {"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"x4", "y4"}, {"x5", "y5"},
       {"y1", "y3"}, {"y1", "y4"}, {"y2", "y4"}, {"y2", "y5"}, {"y3", "y5"}});
}

namespace {

std::vector<std::string> canonical_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

}  // namespace

Graph path(int n) {
  if (n < 2) throw GraphError("path needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build("path:" + std::to_string(n), canonical_labels(n), edges);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph::build("cycle:" + std::to_string(n), canonical_labels(n), edges);
}

Graph complete(int n) {
  if (n < 3) throw GraphError("complete graph needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::build("complete:" + std::to_string(n), canonical_labels(n), edges);
}

VertexSet vertex_set(const Graph& g, std::initializer_list<std::string_view> labels) {
  VertexSet s;
  for (std::string_view l : labels) s.insert(g.vertex(l));
  return s;
}

InducedView induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw GraphError("induced subgraph of an empty vertex set");
  if (!s.subset_of(g.all_vertices())) throw GraphError("vertex set exceeds the graph");
  InducedView view{&g, s, {}};
  for (int e = 0; e < g.edge_count(); ++e) {
    if (s.contains(g.edge(e).u) && s.contains(g.edge(e).v)) view.edges.insert(e);
  }
  return view;
}

InducedView whole(const Graph& g) { return InducedView{&g, g.all_vertices(), g.all_edges()}; }

bool is_path_forest(const InducedView& view) {
  for (int v : view.vertices.members()) {
    if (view.degree(v) > 2) return false;
  }
  // With max degree 2 every component is a path or a cycle; a forest has
  // exactly |V| - components edges.
  std::vector<int> parent(view.graph->vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (int e : view.edges.members()) {
    const Edge& ed = view.graph->edge(e);
    const int a = find_root(parent, ed.u);
    const int b = find_root(parent, ed.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_path_forest(const Graph& g) { return is_path_forest(whole(g)); }

namespace {

// Calls `fn` on every k-subset of `s` until it returns true.
template <class Fn>
bool any_subset(VertexSet s, int k, Fn&& fn) {
  const std::vector<int> members = s.members();
  const int n = static_cast<int>(members.size());
  if (k > n) return false;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    VertexSet sub;
    for (int i : pick) sub.insert(members[i]);
    if (fn(sub)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) {
      pick[j] = pick[j - 1] + 1;
    }
  }
}

}  // namespace

bool contains_induced_claw(const Graph& g, VertexSet s) {
  if (s.size() < 4) return false;
  return any_subset(s, 4, [&](VertexSet sub) {
    std::array<int, 4> deg{};
    int i = 0;
    int edges = 0;
    for (int v : sub.members()) {
      deg[i] = (g.neighbors(v) & sub).size();
      edges += deg[i];
      ++i;
    }
    std::sort(deg.begin(), deg.end());
    return edges == 6 && deg == std::array<int, 4>{1, 1, 1, 3};
  });
}

bool contains_induced_c6(const Graph& g, VertexSet s) {
  if (s.size() < 6) return false;
  return any_subset(s, 6, [&](VertexSet sub) {
    for (int v : sub.members()) {
      if ((g.neighbors(v) & sub).size() != 2) return false;
    }
    // 2-regular on 6 vertices is C6 or two triangles.
    return mask_connected(g, sub);
  });
}

namespace {

void extend_matching(const Graph& g, VertexSet covered, EdgeSet chosen,
                     std::vector<Matching>& out) {
  if (covered == g.all_vertices()) {
    out.push_back(chosen);
    return;
  }
  const int v = (g.all_vertices() - covered).min();
  for (const Incidence& inc : g.incident(v)) {
    if (covered.contains(inc.neighbor)) continue;
    VertexSet next_cover = covered;
    next_cover.insert(v);
    next_cover.insert(inc.neighbor);
    EdgeSet next = chosen;
    next.insert(inc.edge);
    extend_matching(g, next_cover, next, out);
  }
}

}  // namespace

std::vector<Matching> all_perfect_matchings(const Graph& g) {
  std::vector<Matching> out;
  if (g.vertex_count() % 2 != 0) return out;
  extend_matching(g, VertexSet{}, EdgeSet{}, out);
  return out;
}

int chromatic_index(const Graph& g) {
  const int delta = g.max_degree();
  for (int t = delta; t <= delta + 1; ++t) {
    std::vector<int> color(g.edge_count(), 0);
    std::vector<std::uint64_t> used(g.vertex_count(), 0);
    if (edge_colorable(g, t, color, used, 0)) return t;
  }
  throw std::logic_error("no proper edge coloring with Delta+1 colors");
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex index out of range");
  std::vector<std::string> labels;
  std::vector<int> remap(g.vertex_count(), -1);
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == v) continue;
    remap[w] = static_cast<int>(labels.size());
    labels.push_back(g.label(w));
  }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.emplace_back(remap[e.u], remap[e.v]);
  }
  return Graph::build(g.name() + "-" + g.label(v), std::move(labels), edges);
}

int girth(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> via(g.vertex_count(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(u)) {
        const int w = inc.neighbor;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          via[w] = inc.edge;
          queue.push_back(inc.neighbor);
        } else if (via[u] != inc.edge) {
          const int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_connected(const Graph& g) { return mask_connected(g, g.all_vertices()); }

std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t limit) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  std::vector<int> image(n, -1);
  std::vector<bool> taken(n, false);
  auto extend = [&](auto&& self, int v) -> void {
    if (out.size() >= limit) return;
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (taken[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      taken[w] = true;
      self(self, v + 1);
      taken[w] = false;
    }
    image[v] = -1;
  };
  extend(extend, 0);
  return out;
}

}  // namespace muspectra
