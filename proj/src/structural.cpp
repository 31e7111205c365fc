#include "muspectra/structural.hpp"

#include <algorithm>
#include <bit>

namespace muspectra {

namespace {

// Path forest test on a vertex mask: max degree 2 and no cycles.
bool mask_is_path_forest(const Graph& g, std::uint64_t mask) {
  int degree_sum = 0;
  for (std::uint64_t b = mask; b != 0; b &= b - 1) {
    const int d = std::popcount(g.neighbors(std::countr_zero(b)).bits() & mask);
    if (d > 2) return false;
    degree_sum += d;
  }
  int components = 0;
  std::uint64_t left = mask;
  while (left != 0) {
    std::uint64_t seen = left & (~left + 1);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
        next |= g.neighbors(std::countr_zero(b)).bits() & mask;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    left &= ~seen;
    ++components;
  }
  return degree_sum / 2 == std::popcount(mask) - components;
}

// Next k-subset mask in colex order (Gosper's hack).
std::uint64_t next_subset(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t ripple = x + low;
  return (((ripple ^ x) >> 2) / low) | ripple;
}

template <class Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
  // Callers keep n <= kMaxPathForestVertices, far below the word size.
  if (k == 0 || k > n) return;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit; s = next_subset(s)) {
    if (!fn(s)) return;
  }
}

void require_subset_scan(const Graph& g) {
  if (g.vertex_count() > kMaxPathForestVertices) {
    throw PreconditionError("subset scan needs |V| <= " + std::to_string(kMaxPathForestVertices) +
                            ", got " + std::to_string(g.vertex_count()));
  }
}

}  // namespace

std::string_view kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::NotIntervalColorable: return "not-interval-colorable";
    case BoundKind::PathForestCap: return "path-forest-cap";
    case BoundKind::ModReduction: return "mod-reduction";
    case BoundKind::MatchingIntersection: return "matching-intersection";
    case BoundKind::CertificateLowerBound: return "certificate-lower-bound";
  }
  return "unknown";
}

bool is_interval_colorable_regular(const Graph& g) {
  if (!g.is_regular()) {
    throw PreconditionError("interval colorability is only decided for regular graphs");
  }
  return chromatic_index(g) == g.max_degree();
}

BoundEvidence mu22_cap_from_noninterval(const Graph& g) {
  if (is_interval_colorable_regular(g)) {
    throw PreconditionError(g.name() + " has an interval edge coloring (chi' = Delta)");
  }
  const int chi = chromatic_index(g);
  return {BoundKind::NotIntervalColorable, g.vertex_count() - 1,
          "regular with chi'=" + std::to_string(chi) + " > Delta=" +
              std::to_string(g.max_degree()) + ", so no coloring makes every spectrum an interval",
          {{"chromatic_index", chi}, {"max_degree", g.max_degree()}}};
}

int max_path_forest_subset(const Graph& g) {
  if (g.min_degree() < 2) throw PreconditionError("path forest cap needs minimum degree >= 2");
  require_subset_scan(g);
  const int n = g.vertex_count();
  for (int k = n; k >= 1; --k) {
    bool found = false;
    for_each_subset_of_size(n, k, [&](std::uint64_t s) {
      found = mask_is_path_forest(g, s);
      return !found;
    });
    if (found) return k;
  }
  return 0;
}

BoundEvidence mu2_top_cap(const Graph& g) {
  const int cap = max_path_forest_subset(g);
  return {BoundKind::PathForestCap, cap,
          "with all " + std::to_string(g.edge_count()) +
              " colors distinct the interval vertices induce a path forest; the largest "
              "induced path forest has " + std::to_string(cap) + " vertices",
          {{"t", g.edge_count()}, {"vertices_scanned", g.vertex_count()}}};
}

ModReduction mod_reduction(const Graph& g, const EdgeColoring& c, VertexSet s) {
  if (!g.is_cubic()) throw PreconditionError("mod-3 reduction needs a cubic graph");
  if (s.empty()) throw PreconditionError("mod-3 reduction needs a nonempty vertex set");
  const SpectrumReport report = analyze(g, c);
  if (!s.subset_of(report.v_int)) {
    throw PreconditionError("mod-3 reduction: every vertex of s must have an interval spectrum");
  }
  ModReduction out{induced_subgraph(g, s), std::vector<int>(g.edge_count(), 0), {}};
  for (int e : out.subgraph.edges.members()) {
    const int r = c.color(e) % 3;
    out.residue_color[e] = r == 0 ? 3 : r;
  }
  for (int v : s.members()) {
    ColorSet seen;
    for (const Incidence& inc : g.incident(v)) {
      if (!out.subgraph.edges.contains(inc.edge)) continue;
      const int r = out.residue_color[inc.edge];
      if (seen.contains(r)) {
        out.failures.push_back("vertex " + g.label(v) + " repeats residue class " +
                               std::to_string(r));
      }
      seen.insert(r);
    }
  }
  return out;
}

BoundEvidence mu22_cap_cubic(const Graph& g) {
  std::vector<std::string> failed;
  if (!g.is_cubic()) failed.emplace_back("graph is not cubic");
  if (failed.empty() && is_interval_colorable_regular(g)) {
    failed.emplace_back("graph has an interval edge coloring (chi' = Delta)");
  }
  int deletions = 0;
  if (failed.empty()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      try {
        const int chi = chromatic_index(delete_vertex(g, v));
        if (chi != 4) {
          failed.push_back("chi'(G - " + g.label(v) + ") = " + std::to_string(chi) + ", not 4");
        }
      } catch (const GraphError& e) {
        failed.push_back("G - " + g.label(v) + ": " + e.what());
      }
      ++deletions;
    }
  }
  if (!failed.empty()) {
    std::string msg = "mod-3 cap preconditions fail for " + g.name() + ":";
    for (const auto& f : failed) msg += " " + f + ";";
    throw PreconditionError(msg);
  }
  return {BoundKind::ModReduction, g.vertex_count() - 2,
          "f = |V|-1 would make the colors mod 3 a proper 3-edge-coloring of some G - v, but "
          "every G - v has chromatic index 4; f = |V| is excluded since chi' > Delta",
          {{"vertex_deletions_checked", deletions}}};
}

BoundEvidence mu1_floor_from_matchings(const Graph& g) {
  if (!g.is_cubic()) throw PreconditionError("matching floor needs a cubic graph");
  if (chromatic_index(g) != 4) throw PreconditionError("matching floor needs chi' = 4");
  const MatchingIntersectionCheck check = check_matching_intersection(g);
  if (!check.holds()) {
    throw PreconditionError(g.name() + " has two disjoint perfect matchings");
  }
  return {BoundKind::MatchingIntersection, 2,
          "with 4 colors a non-interval cubic vertex sees both 1 and 4; f <= 1 would make color "
          "classes 1 and 4 disjoint perfect matchings, but all perfect matchings intersect",
          {{"t", 4}, {"perfect_matchings", check.matchings}, {"pairs", check.pairs}}};
}

BoundEvidence certificate_lower_bound(const Graph& g, const EdgeColoring& c) {
  const SpectrumReport report = analyze(g, c);
  return {BoundKind::CertificateLowerBound, report.f,
          "witness " + std::to_string(c.t()) + "-coloring with f=" + std::to_string(report.f),
          {{"t", c.t()}}};
}

MatchingIntersectionCheck check_matching_intersection(const Graph& g) {
  const std::vector<Matching> matchings = all_perfect_matchings(g);
  MatchingIntersectionCheck check;
  check.matchings = static_cast<int>(matchings.size());
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    for (std::size_t j = i + 1; j < matchings.size(); ++j) {
      ++check.pairs;
      if (!(matchings[i] & matchings[j]).empty()) ++check.intersecting_pairs;
    }
  }
  return check;
}

SubsetObstructionCheck check_subset_obstruction(const Graph& g, int min_size) {
  require_subset_scan(g);
  SubsetObstructionCheck check;
  const int n = g.vertex_count();
  for (int k = std::max(min_size, 1); k <= n; ++k) {
    for_each_subset_of_size(n, k, [&](std::uint64_t bits) {
      const VertexSet s(bits);
      ++check.subsets;
      if (contains_induced_claw(g, s) || contains_induced_c6(g, s)) {
        ++check.obstructed;
      } else if (!check.counterexample) {
        check.counterexample = s;
      }
      return true;
    });
  }
  return check;
}

VertexDeletionCheck check_vertex_deletions(const Graph& g, int expected) {
  VertexDeletionCheck check;
  check.expected_index = expected;
  for (int v = 0; v < g.vertex_count(); ++v) {
    ++check.deletions;
    try {
      if (chromatic_index(delete_vertex(g, v)) == expected) ++check.at_expected_index;
    } catch (const GraphError&) {
    }
  }
  return check;
}

int StructuralBounds::mu2_upper(const Graph& g, int t) const {
  int cap = g.vertex_count();
  if (mu2_cap) cap = std::min(cap, mu2_cap->value);
  if (mu2_top_cap && t == g.edge_count()) cap = std::min(cap, mu2_top_cap->value);
  return cap;
}

int StructuralBounds::mu1_lower(int t) const {
  return mu1_floor && t == mu1_floor_t ? mu1_floor->value : 0;
}

std::vector<BoundEvidence> StructuralBounds::evidence_for(const Graph& g, int t, bool mu2) const {
  std::vector<BoundEvidence> out;
  if (mu2) {
    if (mu2_cap) out.push_back(*mu2_cap);
    if (mu2_top_cap && t == g.edge_count()) out.push_back(*mu2_top_cap);
  } else if (mu1_floor && t == mu1_floor_t) {
    out.push_back(*mu1_floor);
  }
  return out;
}

StructuralBounds structural_bounds(const Graph& g) {
  StructuralBounds b;
  if (g.is_regular() && !is_interval_colorable_regular(g)) {
    b.mu2_cap = mu22_cap_from_noninterval(g);
    if (g.is_cubic()) {
      try {
        b.mu2_cap = mu22_cap_cubic(g);
      } catch (const PreconditionError&) {
      }
    }
  }
  if (g.min_degree() >= 2 && g.vertex_count() <= kMaxPathForestVertices) {
    b.mu2_top_cap = mu2_top_cap(g);
  }
  if (g.is_cubic()) {
    try {
      b.mu1_floor = mu1_floor_from_matchings(g);
      b.mu1_floor_t = 4;
    } catch (const PreconditionError&) {
    }
  }
  return b;
}

}  // namespace muspectra
