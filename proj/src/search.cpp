#include "muspectra/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

namespace muspectra {

namespace {

using Clock = std::chrono::steady_clock;

// Above this the mu2 search enumerates vertex subsets too slowly.
constexpr int kMaxWindowSearchVertices = 26;

enum VertexState : std::uint8_t { kOpen = 0, kInterval = 1, kNonInterval = 2 };

// State shared by all workers of one solve() call.
struct Shared {
  Objective objective;
  int target = 0;  // incumbent reaching this closes the query
  std::atomic<int> incumbent{0};
  std::mutex witness_mutex;
  std::vector<int> witness;  // colors by edge index, empty if none found

  std::uint64_t node_limit = 0;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> aborted{false};

  bool improves(int f) const {
    const int inc = incumbent.load(std::memory_order_relaxed);
    return objective == Objective::Mu2 ? f > inc : f < inc;
  }

  void offer(int f, const std::vector<int>& colors) {
    std::lock_guard lock(witness_mutex);
    if (!improves(f)) return;
    incumbent.store(f, std::memory_order_relaxed);
    witness = colors;
    if (f == target) stop.store(true, std::memory_order_relaxed);
  }
};

// Depth-first branch and bound over a fixed edge order. Vertices are
// classified as soon as their partial spectrum decides intervalness:
// non-interval once the colors seen span more than d-1, interval once every
// completion must span exactly d-1. When maximizing, a vertex is also
// non-interval once no window of d consecutive colors can be completed with
// colors still free at both ends of its uncolored edges.
class Engine {
 public:
  Engine(const Graph& g, int t, const std::vector<int>& order, bool symmetry, Shared& shared)
      : g_(g),
        t_(t),
        n_(g.vertex_count()),
        m_(g.edge_count()),
        symmetry_(symmetry),
        lookahead_(shared.objective == Objective::Mu2),
        shared_(shared),
        order_(order),
        degree_(n_),
        color_(m_, 0),
        used_(n_, 0),
        count_(n_, 0),
        state_(n_, kOpen),
        usage_(t + 1, 0),
        unused_(t) {
    for (int v = 0; v < n_; ++v) degree_[v] = g.degree(v);
    for (int e : order_) {
      ends_u_.push_back(g.edge(e).u);
      ends_v_.push_back(g.edge(e).v);
    }
    for (int v = 0; v < n_; ++v) set_state(v, classify(v));
  }

  // Replays an assignment prefix; false if the prefix is already pruned.
  bool replay(const std::vector<int>& prefix) {
    for (std::size_t pos = 0; pos < prefix.size(); ++pos) assign(static_cast<int>(pos), prefix[pos]);
    return !prune();
  }

  void run(int pos) { dfs(pos); }

  // Top-level branches at depth `depth`, for splitting work across threads.
  void collect_prefixes(int pos, int depth, std::vector<int>& prefix,
                        std::vector<std::vector<int>>& out) {
    if (pos == depth || pos == m_) {
      out.push_back(prefix);
      return;
    }
    for_each_choice(pos, [&](int c) {
      prefix.push_back(c);
      const std::size_t mark = trail_.size();
      assign(pos, c);
      collect_prefixes(pos + 1, depth, prefix, out);
      unassign(pos, c, mark);
      prefix.pop_back();
    });
  }

  std::uint64_t flush_nodes() {
    const std::uint64_t n = local_nodes_;
    local_nodes_ = 0;
    return shared_.nodes.fetch_add(n, std::memory_order_relaxed) + n;
  }

 private:
  static constexpr std::uint8_t kDead = 3;  // no completion exists at all

  std::uint8_t classify(int v) const {
    const std::uint64_t mask = used_[v];
    const int cnt = count_[v];
    const int d = degree_[v];
    int max_span = 0;
    if (cnt == 0) {
      max_span = d >= 2 ? t_ - 1 : 0;
    } else {
      const int lo = std::countr_zero(mask) + 1;
      const int hi = 64 - std::countl_zero(mask);
      if (hi - lo > d - 1) return kNonInterval;
      if (cnt == d) return kInterval;
      max_span = d - cnt >= 2 ? t_ - 1 : std::max(t_ - lo, hi - 1);
      if (lookahead_ && !interval_completable(v, lo, hi)) {
        return max_span <= d - 1 ? std::uint8_t{kDead} : std::uint8_t{kNonInterval};
      }
    }
    return max_span <= d - 1 ? kInterval : kOpen;
  }

  // Some window [a, a+d-1] containing the colors at v can be finished by
  // giving each uncolored edge at v a distinct missing color that is free
  // at the edge's other end.
  bool interval_completable(int v, int lo, int hi) const {
    const int d = degree_[v];
    std::uint64_t allowed[kMaxVertices];
    int r = 0;
    for (const Incidence& inc : g_.incident(v)) {
      if (color_[inc.edge] == 0) allowed[r++] = ~used_[inc.neighbor];
    }
    const int first = std::max(1, hi - d + 1);
    const int last = std::min(lo, t_ - d + 1);
    for (int a = first; a <= last; ++a) {
      const std::uint64_t window = ((d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1))
                                   << (a - 1);
      if (can_match(allowed, r, 0, window & ~used_[v])) return true;
    }
    return false;
  }

  static bool can_match(const std::uint64_t* allowed, int r, int i, std::uint64_t free) {
    if (i == r) return true;
    for (std::uint64_t b = allowed[i] & free; b != 0; b &= b - 1) {
      if (can_match(allowed, r, i + 1, free & ~(b & (~b + 1)))) return true;
    }
    return false;
  }

  void set_state(int v, std::uint8_t s) {
    if (state_[v] == kInterval) --n_int_;
    if (state_[v] == kNonInterval) --n_non_;
    if (state_[v] == kDead) --n_dead_;
    state_[v] = s;
    if (s == kInterval) ++n_int_;
    if (s == kNonInterval) ++n_non_;
    if (s == kDead) ++n_dead_;
  }

  void reclassify(int v) {
    const std::uint8_t s = classify(v);
    if (s == state_[v]) return;
    trail_.emplace_back(v, state_[v]);
    set_state(v, s);
  }

  void assign(int pos, int c) {
    const int u = ends_u_[pos];
    const int v = ends_v_[pos];
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    color_[order_[pos]] = c;
    used_[u] |= bit;
    used_[v] |= bit;
    ++count_[u];
    ++count_[v];
    if (usage_[c]++ == 0) --unused_;
    reclassify(u);
    reclassify(v);
    if (lookahead_) {
      // Neighbors whose uncolored edge to u or v just lost color c.
      for (int end : {u, v}) {
        for (const Incidence& inc : g_.incident(end)) {
          const int w = inc.neighbor;
          if (color_[inc.edge] == 0 && state_[w] != kNonInterval && count_[w] > 0) reclassify(w);
        }
      }
    }
  }

  void unassign(int pos, int c, std::size_t mark) {
    const int u = ends_u_[pos];
    const int v = ends_v_[pos];
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    color_[order_[pos]] = 0;
    used_[u] &= ~bit;
    used_[v] &= ~bit;
    --count_[u];
    --count_[v];
    if (--usage_[c] == 0) ++unused_;
    while (trail_.size() > mark) {
      set_state(trail_.back().first, trail_.back().second);
      trail_.pop_back();
    }
  }

  bool prune() const {
    if (n_dead_ > 0) return true;
    const int inc = shared_.incumbent.load(std::memory_order_relaxed);
    if (shared_.objective == Objective::Mu2) return n_ - n_non_ <= inc;
    return n_int_ >= inc;
  }

  template <class Fn>
  void for_each_choice(int pos, Fn&& fn) {
    const int u = ends_u_[pos];
    const int v = ends_v_[pos];
    const std::uint64_t blocked = used_[u] | used_[v];
    const bool must_open_color = unused_ == m_ - pos;
    const int max_color = pos == 0 && symmetry_ ? (t_ + 1) / 2 : t_;
    int choices[kMaxEdges];
    int scores[kMaxEdges];
    int k = 0;
    for (int c = 1; c <= max_color; ++c) {
      if ((blocked >> (c - 1)) & 1U) continue;
      if (must_open_color && usage_[c] != 0) continue;
      choices[k] = c;
      scores[k] = lookahead_ ? spread(u, c) + spread(v, c) : 0;
      ++k;
    }
    if (lookahead_) {
      // Insertion sort, stable: tight spectra first.
      for (int i = 1; i < k; ++i) {
        for (int j = i; j > 0 && scores[j - 1] > scores[j]; --j) {
          std::swap(scores[j - 1], scores[j]);
          std::swap(choices[j - 1], choices[j]);
        }
      }
    }
    for (int i = 0; i < k; ++i) fn(choices[i]);
  }

  // Span of v's colors after adding c; large when v would lose intervalness.
  int spread(int v, int c) const {
    if (count_[v] == 0) return 0;
    const std::uint64_t mask = used_[v] | (std::uint64_t{1} << (c - 1));
    const int span = 63 - std::countl_zero(mask) - std::countr_zero(mask);
    return span > degree_[v] - 1 ? 64 : span;
  }

  bool out_of_budget() {
    const std::uint64_t total = flush_nodes();
    if (total >= shared_.node_limit ||
        (shared_.deadline && Clock::now() >= *shared_.deadline)) {
      shared_.aborted.store(true, std::memory_order_relaxed);
      shared_.stop.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  void dfs(int pos) {
    if ((++local_nodes_ & 0x3FF) == 0 && out_of_budget()) return;
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    if (pos == m_) {
      if (shared_.improves(n_int_)) shared_.offer(n_int_, color_);
      return;
    }
    for_each_choice(pos, [&](int c) {
      if (shared_.stop.load(std::memory_order_relaxed)) return;
      const std::size_t mark = trail_.size();
      assign(pos, c);
      if (!prune()) dfs(pos + 1);
      unassign(pos, c, mark);
    });
  }

  const Graph& g_;
  const int t_;
  const int n_;
  const int m_;
  const bool symmetry_;
  const bool lookahead_;
  Shared& shared_;
  const std::vector<int>& order_;
  std::vector<int> ends_u_;
  std::vector<int> ends_v_;
  std::vector<int> degree_;

  std::vector<int> color_;  // by edge index, 0 = unassigned
  std::vector<std::uint64_t> used_;
  std::vector<int> count_;
  std::vector<std::uint8_t> state_;
  std::vector<std::pair<int, std::uint8_t>> trail_;  // (vertex, previous state)
  std::vector<int> usage_;
  int unused_;
  int n_int_ = 0;
  int n_non_ = 0;
  int n_dead_ = 0;
  std::uint64_t local_nodes_ = 0;
};

// Feasibility search for a coloring in which every vertex of `required`
// has an interval spectrum. A required vertex with colors in [lo, hi]
// confines its remaining edges to [hi-d+1, lo+d-1]; each uncolored edge's
// domain is the intersection of its ends' windows minus colors already
// present there. Pruned when a domain empties, a required vertex can no
// longer complete any window, or the unused colors cannot all still appear.
class WindowSearch {
 public:
  WindowSearch(const Graph& g, int t, const std::vector<int>& order, bool symmetry, Shared& shared)
      : g_(g),
        t_(t),
        n_(g.vertex_count()),
        m_(g.edge_count()),
        symmetry_(symmetry),
        shared_(shared),
        order_(order),
        degree_(n_),
        palette_(t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1) {
    for (int v = 0; v < n_; ++v) degree_[v] = g.degree(v);
  }

  // True with colors() filled when a coloring exists; false when refuted or
  // out of budget (check shared.aborted).
  bool run(std::uint64_t required) {
    required_ = required;
    color_.assign(m_, 0);
    used_.assign(n_, 0);
    count_.assign(n_, 0);
    usage_.assign(t_ + 1, 0);
    unused_ = t_;
    const bool found = dfs(0);
    flush_nodes();
    return found;
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  bool required(int v) const { return (required_ >> v) & 1U; }

  std::uint64_t window(int v) const {
    if (!required(v) || count_[v] == 0) return palette_;
    const int lo = std::countr_zero(used_[v]) + 1;
    const int hi = 64 - std::countl_zero(used_[v]);
    const int a = std::max(1, hi - degree_[v] + 1);
    const int b = std::min(t_, lo + degree_[v] - 1);
    if (a > b) return 0;
    const int len = b - a + 1;
    return (len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1) << (a - 1);
  }

  std::uint64_t domain(int e) const {
    const Edge& ed = g_.edge(e);
    return palette_ & ~used_[ed.u] & ~used_[ed.v] & window(ed.u) & window(ed.v);
  }

  bool completable(int v) const {
    const int d = degree_[v];
    if (count_[v] == 0) return true;
    const int lo = std::countr_zero(used_[v]) + 1;
    const int hi = 64 - std::countl_zero(used_[v]);
    if (hi - lo > d - 1) return false;
    if (count_[v] == d) return true;
    std::uint64_t allowed[kMaxVertices];
    int r = 0;
    for (const Incidence& inc : g_.incident(v)) {
      if (color_[inc.edge] == 0) allowed[r++] = domain(inc.edge);
    }
    const int first = std::max(1, hi - d + 1);
    const int last = std::min(lo, t_ - d + 1);
    for (int a = first; a <= last; ++a) {
      const std::uint64_t w = ((d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1))
                              << (a - 1);
      if (match(allowed, r, 0, w & ~used_[v])) return true;
    }
    return false;
  }

  static bool match(const std::uint64_t* allowed, int r, int i, std::uint64_t free) {
    if (i == r) return true;
    for (std::uint64_t b = allowed[i] & free; b != 0; b &= b - 1) {
      if (match(allowed, r, i + 1, free & ~(b & (~b + 1)))) return true;
    }
    return false;
  }

  bool consistent(int pos) const {
    const Edge& ed = g_.edge(order_[pos]);
    for (int x : {ed.u, ed.v}) {
      if (required(x) && !completable(x)) return false;
      for (const Incidence& inc : g_.incident(x)) {
        if (color_[inc.edge] != 0) continue;
        if (domain(inc.edge) == 0) return false;
        if (required(inc.neighbor) && !completable(inc.neighbor)) return false;
      }
    }
    if (unused_ > m_ - pos - 1) return false;
    if (unused_ > 0) {
      std::uint64_t missing = 0;
      for (int c = 1; c <= t_; ++c) {
        if (usage_[c] == 0) missing |= std::uint64_t{1} << (c - 1);
      }
      std::uint64_t reachable = 0;
      for (int p = pos + 1; p < m_; ++p) reachable |= domain(order_[p]);
      if ((missing & ~reachable) != 0) return false;
    }
    return true;
  }

  void flush_nodes() {
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

  bool out_of_budget() {
    flush_nodes();
    if (shared_.nodes.load(std::memory_order_relaxed) >= shared_.node_limit ||
        (shared_.deadline && Clock::now() >= *shared_.deadline)) {
      shared_.aborted.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  bool dfs(int pos) {
    if ((++local_nodes_ & 0x3FF) == 0 && out_of_budget()) return false;
    if (shared_.aborted.load(std::memory_order_relaxed)) return false;
    if (pos == m_) return true;
    const int e = order_[pos];
    const Edge& ed = g_.edge(e);
    const bool must_open_color = unused_ == m_ - pos;
    const int max_color = pos == 0 && symmetry_ ? (t_ + 1) / 2 : t_;
    for (std::uint64_t b = domain(e); b != 0; b &= b - 1) {
      const int c = std::countr_zero(b) + 1;
      if (c > max_color) break;
      if (must_open_color && usage_[c] != 0) continue;
      const std::uint64_t bit = std::uint64_t{1} << (c - 1);
      color_[e] = c;
      used_[ed.u] |= bit;
      used_[ed.v] |= bit;
      ++count_[ed.u];
      ++count_[ed.v];
      if (usage_[c]++ == 0) --unused_;
      if (consistent(pos) && dfs(pos + 1)) return true;
      if (--usage_[c] == 0) ++unused_;
      --count_[ed.u];
      --count_[ed.v];
      used_[ed.u] &= ~bit;
      used_[ed.v] &= ~bit;
      color_[e] = 0;
    }
    return false;
  }

  const Graph& g_;
  const int t_;
  const int n_;
  const int m_;
  const bool symmetry_;
  Shared& shared_;
  const std::vector<int>& order_;
  std::vector<int> degree_;
  const std::uint64_t palette_;

  std::uint64_t required_ = 0;
  std::vector<int> color_;
  std::vector<std::uint64_t> used_;
  std::vector<int> count_;
  std::vector<int> usage_;
  int unused_ = 0;
  std::uint64_t local_nodes_ = 0;
};

// Smallest-first k-subsets of [0, n) in colex order (Gosper's hack).
std::uint64_t next_subset(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t ripple = x + low;
  return (((ripple ^ x) >> 2) / low) | ripple;
}

// A set is tried only if no automorphism maps it to a numerically smaller
// set; feasibility is invariant under automorphisms.
bool orbit_minimal(std::uint64_t s, const std::vector<std::vector<int>>& autos) {
  for (std::size_t i = 1; i < autos.size(); ++i) {
    std::uint64_t image = 0;
    for (std::uint64_t b = s; b != 0; b &= b - 1) image |= std::uint64_t{1} << autos[i][std::countr_zero(b)];
    if (image < s) return false;
  }
  return true;
}

// Raises the incumbent level by level: the query is closed once every
// (incumbent+1)-set of vertices is refuted as simultaneously interval.
void run_window_search(const Graph& g, int t, const std::vector<int>& order,
                       const SearchConfig& cfg, Shared& shared) {
  const int n = g.vertex_count();
  WindowSearch search(g, t, order, cfg.use_reflection_symmetry, shared);
  auto record = [&] {
    const EdgeColoring c(t, search.colors());
    shared.offer(analyze(g, c).f, search.colors());
  };
  if (shared.incumbent < 0) {
    if (!search.run(0)) return;
    record();
  }
  const std::vector<std::vector<int>> autos = automorphisms(g);
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (!shared.stop && shared.incumbent < shared.target) {
    const int k = shared.incumbent + 1;
    bool raised = false;
    for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit; s = next_subset(s)) {
      if (!orbit_minimal(s, autos)) continue;
      if (search.run(s)) {
        record();
        raised = true;
        break;
      }
      if (shared.aborted) return;
    }
    if (!raised) return;
  }
}

void run_search(const Graph& g, int t, const std::vector<int>& order, const SearchConfig& cfg,
                Shared& shared) {
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    Engine engine(g, t, order, cfg.use_reflection_symmetry, shared);
    if (engine.replay({})) engine.run(0);
    engine.flush_nodes();
    return;
  }
  std::vector<std::vector<int>> tasks;
  {
    Engine splitter(g, t, order, cfg.use_reflection_symmetry, shared);
    std::vector<int> prefix;
    for (int depth = 1; depth <= g.edge_count(); ++depth) {
      tasks.clear();
      splitter.collect_prefixes(0, depth, prefix, tasks);
      if (static_cast<int>(tasks.size()) >= 8 * threads || depth == g.edge_count()) break;
    }
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (int i = 0; i < threads; ++i) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < tasks.size(); k = next++) {
        if (shared.stop.load(std::memory_order_relaxed)) break;
        Engine engine(g, t, order, cfg.use_reflection_symmetry, shared);
        if (engine.replay(tasks[k])) engine.run(static_cast<int>(tasks[k].size()));
        engine.flush_nodes();
      }
    });
  }
}

}  // namespace

std::string_view to_string(Objective o) { return o == Objective::Mu1 ? "mu1" : "mu2"; }

std::string_view to_string(Status s) { return s == Status::Exact ? "exact" : "bounds"; }

int SearchOutcome::value() const {
  if (!exact()) throw std::logic_error("search outcome is not exact");
  return lo;
}

std::vector<int> assignment_order(const Graph& g, EdgeOrder order) {
  std::vector<int> out;
  if (order == EdgeOrder::PaperOrder) {
    for (int e = 0; e < g.edge_count(); ++e) out.push_back(e);
    return out;
  }
  std::vector<int> colored(g.vertex_count(), 0);
  std::vector<bool> taken(g.edge_count(), false);
  for (int step = 0; step < g.edge_count(); ++step) {
    int best = -1;
    int best_score = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (taken[e]) continue;
      const int score = colored[g.edge(e).u] + colored[g.edge(e).v];
      if (score > best_score) {
        best = e;
        best_score = score;
      }
    }
    taken[best] = true;
    ++colored[g.edge(best).u];
    ++colored[g.edge(best).v];
    out.push_back(best);
  }
  return out;
}

SearchOutcome solve(const Graph& g, int t, Objective objective, const SearchConfig& cfg) {
  const StructuralBounds bounds = cfg.use_structural_bounds ? structural_bounds(g) : StructuralBounds{};
  return solve(g, t, objective, cfg, bounds);
}

SearchOutcome solve(const Graph& g, int t, Objective objective, const SearchConfig& cfg,
                    const StructuralBounds& bounds) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int chi = chromatic_index(g);
  if (t < chi || t > m) {
    throw RangeError("t=" + std::to_string(t) + " is outside the legal range [" +
                         std::to_string(chi) + "," + std::to_string(m) + "] for " + g.name(),
                     chi, m);
  }
  if (cfg.node_limit < 1) throw std::invalid_argument("node_limit must be at least 1");

  const bool mu2 = objective == Objective::Mu2;
  const int floor = cfg.use_structural_bounds ? bounds.mu1_lower(t) : 0;
  const int cap = cfg.use_structural_bounds ? bounds.mu2_upper(g, t) : n;

  Shared shared;
  shared.objective = objective;
  shared.target = mu2 ? cap : floor;
  shared.incumbent = mu2 ? -1 : n + 1;
  shared.node_limit = cfg.node_limit;
  if (cfg.time_limit_ms) shared.deadline = Clock::now() + std::chrono::milliseconds(*cfg.time_limit_ms);

  if (cfg.initial_bound) {
    shared.incumbent = mu2 ? std::max(shared.incumbent.load(), *cfg.initial_bound)
                           : std::min(shared.incumbent.load(), *cfg.initial_bound);
  }
  for (const EdgeColoring& seed : cfg.seed_witnesses) {
    if (seed.t() != t || !validate(g, seed).empty()) continue;
    const int f = analyze(g, seed).f;
    if (shared.improves(f) || (f == shared.incumbent && shared.witness.empty())) {
      shared.incumbent = f;
      shared.witness.assign(seed.colors().begin(), seed.colors().end());
    }
  }

  SearchOutcome out;
  out.objective = objective;
  out.t = t;
  if (cfg.use_structural_bounds) out.evidence = bounds.evidence_for(g, t, mu2);

  const bool closed_by_bounds = shared.incumbent == shared.target;
  if (!closed_by_bounds) {
    const std::vector<int> order = assignment_order(g, cfg.edge_order);
    if (mu2 && cfg.use_window_search && n <= kMaxWindowSearchVertices) {
      run_window_search(g, t, order, cfg, shared);
    } else {
      run_search(g, t, order, cfg, shared);
    }
    out.search_completed = !shared.aborted;
  }
  out.nodes_visited = shared.nodes;

  const int best = shared.incumbent;
  const bool found = mu2 ? best >= 0 : best <= n;
  if (closed_by_bounds || out.search_completed || best == shared.target) {
    if (!found) throw std::logic_error("alpha(G,t) searched exhaustively but found empty");
    out.status = Status::Exact;
    out.lo = out.hi = best;
  } else {
    out.status = Status::BoundsOnly;
    out.lo = mu2 ? std::max(best, 0) : floor;
    out.hi = mu2 ? cap : std::min(best, n);
  }
  if (!shared.witness.empty()) {
    out.witness = EdgeColoring(t, shared.witness);
    out.evidence.push_back(certificate_lower_bound(g, *out.witness));
  }
  return out;
}

}  // namespace muspectra
