#include <doctest.h>

#include "muspectra/fixtures.hpp"
#include "muspectra/search.hpp"
#include "muspectra/structural.hpp"
#include "oracle.hpp"

using namespace muspectra;

namespace {

// Two K4s, each with one edge subdivided, joined by a bridge between the
// subdivision vertices. Cubic, and a bridge rules out 3 colors.
Graph bridged_cubic() {
  std::vector<std::string> labels{"a0", "a1", "a2", "a3", "s", "b0", "b1", "b2", "b3", "r"};
  std::vector<std::pair<int, int>> edges{{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                         {5, 9}, {9, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8},
                                         {4, 9}};
  return Graph::build("bridged", labels, edges);
}

Graph without_edge(const Graph& g, int drop) {
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e != drop) edges.emplace_back(g.edge(e).u, g.edge(e).v);
  }
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  return Graph::build(g.name() + "-e" + std::to_string(drop), labels, edges);
}

}  // namespace

TEST_SUITE("structural") {

TEST_CASE("interval colorability of regular graphs") {
  CHECK_FALSE(is_interval_colorable_regular(petersen()));
  CHECK(is_interval_colorable_regular(cycle(4)));
  CHECK_FALSE(is_interval_colorable_regular(cycle(3)));
  CHECK(is_interval_colorable_regular(complete(4)));
  CHECK_THROWS_AS(is_interval_colorable_regular(path(3)), PreconditionError);
}

TEST_CASE("non-interval cap") {
  CHECK(mu22_cap_from_noninterval(petersen()).value == 9);
  CHECK(mu22_cap_from_noninterval(cycle(3)).value == 2);
  CHECK(mu22_cap_from_noninterval(petersen()).kind == BoundKind::NotIntervalColorable);
  CHECK_THROWS_AS(mu22_cap_from_noninterval(cycle(4)), PreconditionError);
  // Exhaustive check of the cap on odd cycles.
  for (int n : {3, 5}) {
    for (int t = 3; t <= n; ++t) CHECK(oracle::naive_mu(oracle::plain(cycle(n)), t)->mu2 <= n - 1);
  }
}

TEST_CASE("largest induced path forest") {
  CHECK(max_path_forest_subset(petersen()) == 6);
  CHECK(max_path_forest_subset(cycle(6)) == 5);
  CHECK(max_path_forest_subset(complete(4)) == oracle::naive_max_path_forest(oracle::plain(complete(4))));
  CHECK(max_path_forest_subset(complete(4)) == 2);
  CHECK_THROWS_AS(max_path_forest_subset(path(3)), PreconditionError);
  for (const Graph& g : {petersen(), cycle(3), cycle(7), complete(5), bridged_cubic()}) {
    CHECK(max_path_forest_subset(g) == oracle::naive_max_path_forest(oracle::plain(g)));
  }
}

TEST_CASE("path forest cap never drops when an edge is removed") {
  for (const Graph& g : {complete(4), complete(5), petersen(), bridged_cubic()}) {
    const int before = max_path_forest_subset(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.name() == "bridged" && e == 14) continue;  // the bridge
      const Graph h = without_edge(g, e);
      const int after = h.min_degree() >= 2 ? max_path_forest_subset(h)
                                            : oracle::naive_max_path_forest(oracle::plain(h));
      CHECK(after >= before);
    }
  }
}

TEST_CASE("top cap") {
  const BoundEvidence p = mu2_top_cap(petersen());
  CHECK(p.value == 6);
  CHECK(p.kind == BoundKind::PathForestCap);
  CHECK(mu2_top_cap(cycle(6)).value == 5);
  CHECK(oracle::naive_mu(oracle::plain(cycle(6)), 6)->mu2 == 5);
  CHECK_THROWS_AS(mu2_top_cap(path(3)), PreconditionError);
  for (int n = 3; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(mu2_top_cap(cycle(n)).value == oracle::naive_mu(oracle::plain(cycle(n)), n)->mu2);
  }
}

TEST_CASE("interval vertices at t = |E| induce a path forest") {
  for (const Graph& g : {petersen(), cycle(5), complete(4), complete(5), bridged_cubic()}) {
    for (const EdgeColoring& c : sample(g, g.edge_count(), 5, 60)) {
      const VertexSet vint = analyze(g, c).v_int;
      if (!vint.empty()) CHECK(is_path_forest(induced_subgraph(g, vint)));
    }
  }
}

TEST_CASE("mod-3 reduction") {
  const Graph p = petersen();
  const Certificate psi = fixtures().at("psi");
  const SpectrumReport r = analyze(p, psi.coloring);
  const ModReduction red = mod_reduction(p, psi.coloring, r.v_int);
  CHECK(red.proper());
  for (int v : r.v_int.members()) {
    ColorSet residues;
    for (int c : r.spectra[v].members()) residues.insert(c % 3 + 1);
    CHECK(residues == ColorSet{1, 2, 3});
  }
  for (int e = 0; e < 15; ++e) {
    if (red.subgraph.edges.contains(e)) {
      CHECK(red.residue_color[e] >= 1);
      CHECK(red.residue_color[e] <= 3);
    } else {
      CHECK(red.residue_color[e] == 0);
    }
  }

  VertexSet outside = r.v_int;
  for (int v = 0; v < 10; ++v) {
    if (!r.v_int.contains(v)) {
      outside.insert(v);
      break;
    }
  }
  CHECK_THROWS_AS(mod_reduction(p, psi.coloring, outside), PreconditionError);
  CHECK_THROWS_AS(mod_reduction(p, psi.coloring, VertexSet{}), PreconditionError);
  CHECK_THROWS_AS(mod_reduction(cycle(4), EdgeColoring(2, {1, 2, 1, 2}), cycle(4).all_vertices()),
                  PreconditionError);
}

TEST_CASE("three consecutive colors hit every residue") {
  for (int k = 1; k <= 60; ++k) {
    ColorSet residues;
    for (int c : {k, k + 1, k + 2}) residues.insert(c % 3 + 1);
    CHECK(residues.size() == 3);
  }
  // On every sampled petersen coloring the reduction is proper on V_int.
  const Graph p = petersen();
  for (int t = 4; t <= 15; ++t) {
    for (const EdgeColoring& c : sample(p, t, 17, 30)) {
      const VertexSet vint = analyze(p, c).v_int;
      if (!vint.empty()) CHECK(mod_reduction(p, c, vint).proper());
    }
  }
}

TEST_CASE("cubic cap") {
  const BoundEvidence cap = mu22_cap_cubic(petersen());
  CHECK(cap.value == 8);
  CHECK(cap.kind == BoundKind::ModReduction);
  CHECK(check_vertex_deletions(petersen(), 4).deletions == 10);
  CHECK(check_vertex_deletions(petersen(), 4).at_expected_index == 10);
  CHECK_THROWS_AS(mu22_cap_cubic(complete(4)), PreconditionError);
  CHECK_THROWS_AS(mu22_cap_cubic(cycle(5)), PreconditionError);
  const Graph b = bridged_cubic();
  CHECK(chromatic_index(b) == 4);
  try {
    mu22_cap_cubic(b);
    FAIL("bridged graph accepted");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("G - ") != std::string::npos);
  }
}

TEST_CASE("matching floor") {
  const BoundEvidence floor = mu1_floor_from_matchings(petersen());
  CHECK(floor.value == 2);
  CHECK(floor.kind == BoundKind::MatchingIntersection);
  const MatchingIntersectionCheck m = check_matching_intersection(petersen());
  CHECK(m.matchings == 6);
  CHECK(m.pairs == 15);
  CHECK(m.intersecting_pairs == 15);
  CHECK_THROWS_AS(mu1_floor_from_matchings(complete(4)), PreconditionError);
  CHECK_THROWS_AS(mu1_floor_from_matchings(cycle(4)), PreconditionError);
  // In a cubic graph two disjoint perfect matchings leave a third, so a
  // 4-chromatic cubic graph always passes the intersection test.
  CHECK(check_matching_intersection(bridged_cubic()).holds());
  CHECK_FALSE(check_matching_intersection(complete(4)).holds());
}

TEST_CASE("subset obstruction replay") {
  const SubsetObstructionCheck s = check_subset_obstruction(petersen(), 7);
  CHECK(s.subsets == 176);
  CHECK(s.obstructed == 176);
  CHECK_FALSE(s.counterexample.has_value());
  const SubsetObstructionCheck six = check_subset_obstruction(petersen(), 6);
  CHECK_FALSE(six.holds());
  REQUIRE(six.counterexample);
  CHECK(six.counterexample->size() == 6);
}

TEST_CASE("bounds agree with exhaustive search at t = 4") {
  const Graph p = petersen();
  const StructuralBounds b = structural_bounds(p);
  REQUIRE(b.mu2_cap);
  REQUIRE(b.mu2_top_cap);
  REQUIRE(b.mu1_floor);
  CHECK(b.mu2_cap->value == 8);
  CHECK(b.mu2_top_cap->value == 6);
  CHECK(b.mu1_floor_t == 4);
  CHECK(b.mu2_upper(p, 15) == 6);
  CHECK(b.mu2_upper(p, 7) == 8);
  CHECK(b.mu1_lower(4) == 2);
  CHECK(b.mu1_lower(5) == 0);

  SearchConfig raw;
  raw.use_structural_bounds = false;
  const SearchOutcome lo = solve(p, 4, Objective::Mu1, raw);
  const SearchOutcome hi = solve(p, 4, Objective::Mu2, raw);
  REQUIRE(lo.exact());
  REQUIRE(hi.exact());
  CHECK(lo.value() >= b.mu1_floor->value);
  CHECK(hi.value() <= b.mu2_cap->value);
  const SearchOutcome top = solve(p, 15, Objective::Mu2, raw);
  REQUIRE(top.exact());
  CHECK(top.value() <= b.mu2_top_cap->value);
}

TEST_CASE("evidence for non-petersen graphs") {
  const StructuralBounds c5 = structural_bounds(cycle(5));
  REQUIRE(c5.mu2_cap);
  CHECK(c5.mu2_cap->value == 4);
  CHECK_FALSE(c5.mu1_floor);
  const StructuralBounds c4 = structural_bounds(cycle(4));
  CHECK_FALSE(c4.mu2_cap);
  const StructuralBounds p4 = structural_bounds(path(4));
  CHECK_FALSE(p4.mu2_top_cap);
}

}  // TEST_SUITE
