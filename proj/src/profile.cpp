#include <algorithm>

#include "muspectra/search.hpp"

namespace muspectra {

void aggregate(MuProfile& p) {
  auto fold = [](const std::vector<SearchOutcome>& row, bool take_max) {
    Aggregate a{row.front().lo, row.front().hi};
    for (const SearchOutcome& o : row) {
      a.lo = take_max ? std::max(a.lo, o.lo) : std::min(a.lo, o.lo);
      a.hi = take_max ? std::max(a.hi, o.hi) : std::min(a.hi, o.hi);
    }
    return a;
  };
  p.mu11 = fold(p.mu1, false);
  p.mu12 = fold(p.mu1, true);
  p.mu21 = fold(p.mu2, false);
  p.mu22 = fold(p.mu2, true);
}

MuProfile profile(const Graph& g, const SearchConfig& cfg, const std::vector<EdgeColoring>& seeds) {
  MuProfile p;
  p.chromatic_index = chromatic_index(g);
  const StructuralBounds bounds = cfg.use_structural_bounds ? structural_bounds(g) : StructuralBounds{};
  for (int t = p.chromatic_index; t <= g.edge_count(); ++t) {
    SearchConfig at_t = cfg;
    for (const EdgeColoring& c : seeds) {
      if (c.t() == t) at_t.seed_witnesses.push_back(c);
    }
    p.mu1.push_back(solve(g, t, Objective::Mu1, at_t, bounds));
    p.mu2.push_back(solve(g, t, Objective::Mu2, at_t, bounds));
  }
  aggregate(p);
  return p;
}

}  // namespace muspectra
