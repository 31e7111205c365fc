#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "muspectra/coloring.hpp"
#include "muspectra/graph.hpp"
#include "muspectra/structural.hpp"

namespace muspectra {

enum class Objective { Mu1, Mu2 };  // minimize / maximize f over alpha(G,t)
enum class Status { Exact, BoundsOnly };
enum class EdgeOrder { PaperOrder, MostConstrainedFirst };

std::string_view to_string(Objective o);
std::string_view to_string(Status s);

struct SearchConfig {
  std::uint64_t node_limit = 100'000'000;
  std::optional<std::int64_t> time_limit_ms;
  EdgeOrder edge_order = EdgeOrder::MostConstrainedFirst;
  // Restricts the first assigned edge to colors <= ceil(t/2). Sound because
  // k -> t+1-k preserves membership in alpha(G,t) and f. Permuting colors in
  // general is NOT sound: intervalness depends on the color values.
  bool use_reflection_symmetry = true;
  // Seeds the incumbent with a value known to be achievable.
  std::optional<int> initial_bound;
  // Colorings used as starting incumbents; ones that do not validate at the
  // requested t are ignored.
  std::vector<EdgeColoring> seed_witnesses;
  bool use_structural_bounds = true;
  // mu2 only: refute "some k vertices are all interval" set by set, up to
  // automorphism, instead of plain branch and bound. Graphs above 26
  // vertices always use branch and bound.
  bool use_window_search = true;
  int threads = 1;
};

struct SearchOutcome {
  Objective objective = Objective::Mu1;
  int t = 0;
  Status status = Status::BoundsOnly;
  int lo = 0;
  int hi = 0;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes_visited = 0;
  bool search_completed = false;  // false when closed by bounds alone or out of budget
  std::vector<BoundEvidence> evidence;

  bool exact() const { return status == Status::Exact; }
  int value() const;  // throws unless exact
};

/// Raised for queries outside the legal range t in [chi'(G), |E(G)|].
class RangeError : public std::invalid_argument {
 public:
  RangeError(const std::string& what, int lo, int hi)
      : std::invalid_argument(what), lo_(lo), hi_(hi) {}
  int lo() const { return lo_; }
  int hi() const { return hi_; }

 private:
  int lo_;
  int hi_;
};

/// Exact min (Mu1) or max (Mu2) of f over alpha(G,t) by branch and bound.
SearchOutcome solve(const Graph& g, int t, Objective objective, const SearchConfig& cfg = {});

/// Same, reusing structural bounds already computed for `g`.
SearchOutcome solve(const Graph& g, int t, Objective objective, const SearchConfig& cfg,
                    const StructuralBounds& bounds);

/// Edge indices in the order the search assigns them.
std::vector<int> assignment_order(const Graph& g, EdgeOrder order);

// Min/max of the per-t values, as an interval when some entries are bounds.
struct Aggregate {
  int lo = 0;
  int hi = 0;
  bool exact() const { return lo == hi; }
};

struct MuProfile {
  int chromatic_index = 0;
  std::vector<SearchOutcome> mu1;  // index t - chromatic_index
  std::vector<SearchOutcome> mu2;
  Aggregate mu11, mu12, mu21, mu22;
};

/// mu1/mu2 at every legal t, seeded with `seeds` (colorings of g at any t),
/// then aggregated.
MuProfile profile(const Graph& g, const SearchConfig& cfg = {},
                  const std::vector<EdgeColoring>& seeds = {});

/// Recomputes the four aggregates from per-t entries.
void aggregate(MuProfile& p);

/// Pseudo-random members of alpha(G,t); deterministic for a given seed.
std::vector<EdgeColoring> sample(const Graph& g, int t, std::uint64_t seed, int count);

}  // namespace muspectra
