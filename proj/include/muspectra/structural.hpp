#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muspectra/coloring.hpp"
#include "muspectra/graph.hpp"

namespace muspectra {

/// Raised when a structural argument's hypotheses do not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class BoundKind {
  NotIntervalColorable,   // f <= |V|-1 for every coloring
  PathForestCap,          // mu2(G,|E|) <= largest induced path forest
  ModReduction,           // f <= |V|-2 for cubic graphs with 4-chromatic G-v
  MatchingIntersection,   // mu1(G,4) >= 2 for cubic graphs
  CertificateLowerBound,  // a witness coloring achieves f
};

std::string_view kind_name(BoundKind kind);

/// A bound plus the counts that let a reader replay the argument.
struct BoundEvidence {
  BoundKind kind;
  int value = 0;
  std::string detail;
  std::vector<std::pair<std::string, std::int64_t>> counts;
};

bool is_interval_colorable_regular(const Graph& g);

BoundEvidence mu22_cap_from_noninterval(const Graph& g);

/// Largest vertex subset inducing a path forest. Exhaustive over subsets, so
/// limited to graphs with at most kMaxPathForestVertices vertices.
inline constexpr int kMaxPathForestVertices = 26;
int max_path_forest_subset(const Graph& g);

BoundEvidence mu2_top_cap(const Graph& g);

/// Residue-class recoloring of the edges inside `s`: colors 1,2,0 (mod 3)
/// become 1,2,3.
struct ModReduction {
  InducedView subgraph;
  std::vector<int> residue_color;  // per edge of the parent graph, 0 outside `s`
  std::vector<std::string> failures;

  bool proper() const { return failures.empty(); }
};

ModReduction mod_reduction(const Graph& g, const EdgeColoring& c, VertexSet s);

BoundEvidence mu22_cap_cubic(const Graph& g);

/// The floor on mu1 at t = Delta+1 = 4 for cubic graphs whose perfect
/// matchings pairwise intersect.
BoundEvidence mu1_floor_from_matchings(const Graph& g);

BoundEvidence certificate_lower_bound(const Graph& g, const EdgeColoring& c);

// Replays of the finite checks behind the bounds.

struct MatchingIntersectionCheck {
  int matchings = 0;
  int pairs = 0;
  int intersecting_pairs = 0;
  bool holds() const { return pairs == intersecting_pairs; }
};
MatchingIntersectionCheck check_matching_intersection(const Graph& g);

struct SubsetObstructionCheck {
  int subsets = 0;
  int obstructed = 0;
  std::optional<VertexSet> counterexample;
  bool holds() const { return subsets == obstructed; }
};
/// Every vertex subset of size >= min_size contains an induced claw or an
/// induced 6-cycle.
SubsetObstructionCheck check_subset_obstruction(const Graph& g, int min_size);

struct VertexDeletionCheck {
  int deletions = 0;
  int at_expected_index = 0;
  int expected_index = 0;
  bool holds() const { return deletions == at_expected_index; }
};
/// chi'(G - v) == expected for every vertex v.
VertexDeletionCheck check_vertex_deletions(const Graph& g, int expected);

/// Structural bounds that hold for every palette size, plus the ones tied to
/// a single t. Computed once per graph and reused across searches.
struct StructuralBounds {
  std::optional<BoundEvidence> mu2_cap;      // any t
  std::optional<BoundEvidence> mu2_top_cap;  // t = |E|
  std::optional<BoundEvidence> mu1_floor;    // t = mu1_floor_t
  int mu1_floor_t = 0;

  /// Tightest applicable cap on mu2(G,t) and floor on mu1(G,t).
  int mu2_upper(const Graph& g, int t) const;
  int mu1_lower(int t) const;
  std::vector<BoundEvidence> evidence_for(const Graph& g, int t, bool mu2) const;
};

StructuralBounds structural_bounds(const Graph& g);

}  // namespace muspectra
