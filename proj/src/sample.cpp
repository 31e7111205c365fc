#include <algorithm>
#include <numeric>
#include <random>

#include "muspectra/search.hpp"

namespace muspectra {

namespace {

// Backtracking fill of one proper, surjective t-coloring. With an rng the
// color order at every step is shuffled and the attempt gives up after
// `budget` nodes.
class Filler {
 public:
  Filler(const Graph& g, int t, std::vector<int> order)
      : g_(g), t_(t), order_(std::move(order)), color_(g.edge_count(), 0),
        used_(g.vertex_count(), 0), usage_(t + 1, 0), unused_(t) {}

  bool fill(std::mt19937_64* rng, std::uint64_t budget) {
    std::fill(color_.begin(), color_.end(), 0);
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(usage_.begin(), usage_.end(), 0);
    unused_ = t_;
    rng_ = rng;
    budget_ = budget;
    return step(0);
  }

  EdgeColoring result() const { return EdgeColoring(t_, color_); }

 private:
  bool step(int pos) {
    if (budget_ == 0) return false;
    --budget_;
    const int m = g_.edge_count();
    if (pos == m) return true;
    const Edge& ed = g_.edge(order_[pos]);
    const std::uint64_t blocked = used_[ed.u] | used_[ed.v];
    const bool must_open_color = unused_ == m - pos;
    std::vector<int> choices;
    for (int c = 1; c <= t_; ++c) {
      if ((blocked >> (c - 1)) & 1U) continue;
      if (must_open_color && usage_[c] != 0) continue;
      choices.push_back(c);
    }
    if (rng_) std::shuffle(choices.begin(), choices.end(), *rng_);
    for (int c : choices) {
      const std::uint64_t bit = std::uint64_t{1} << (c - 1);
      color_[order_[pos]] = c;
      used_[ed.u] |= bit;
      used_[ed.v] |= bit;
      if (usage_[c]++ == 0) --unused_;
      if (step(pos + 1)) return true;
      if (--usage_[c] == 0) ++unused_;
      used_[ed.u] &= ~bit;
      used_[ed.v] &= ~bit;
      color_[order_[pos]] = 0;
      if (budget_ == 0) return false;
    }
    return false;
  }

  const Graph& g_;
  const int t_;
  const std::vector<int> order_;
  std::vector<int> color_;
  std::vector<std::uint64_t> used_;
  std::vector<int> usage_;
  int unused_;
  std::mt19937_64* rng_ = nullptr;
  std::uint64_t budget_ = 0;
};

// Most-constrained-first order with random tie-breaking.
std::vector<int> random_order(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> priority(g.edge_count());
  std::iota(priority.begin(), priority.end(), 0);
  std::shuffle(priority.begin(), priority.end(), rng);
  std::vector<int> colored(g.vertex_count(), 0);
  std::vector<bool> taken(g.edge_count(), false);
  std::vector<int> out;
  for (int step = 0; step < g.edge_count(); ++step) {
    int best = -1;
    int best_score = -1;
    for (int e : priority) {
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

}  // namespace

std::vector<EdgeColoring> sample(const Graph& g, int t, std::uint64_t seed, int count) {
  const int chi = chromatic_index(g);
  if (t < chi || t > g.edge_count()) {
    throw RangeError("t=" + std::to_string(t) + " is outside the legal range [" +
                         std::to_string(chi) + "," + std::to_string(g.edge_count()) + "]",
                     chi, g.edge_count());
  }
  constexpr int kRestarts = 64;
  constexpr std::uint64_t kAttemptBudget = 20'000;
  std::mt19937_64 rng(seed);
  std::vector<EdgeColoring> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    bool done = false;
    for (int attempt = 0; attempt < kRestarts && !done; ++attempt) {
      Filler filler(g, t, random_order(g, rng));
      if (filler.fill(&rng, kAttemptBudget)) {
        out.push_back(filler.result());
        done = true;
      }
    }
    if (!done) {
      Filler filler(g, t, assignment_order(g, EdgeOrder::MostConstrainedFirst));
      if (!filler.fill(nullptr, ~std::uint64_t{0})) {
        throw std::logic_error("no proper " + std::to_string(t) + "-coloring exists");
      }
      out.push_back(filler.result());
    }
  }
  return out;
}

}  // namespace muspectra
