#include <doctest.h>

#include "muspectra/fixtures.hpp"
#include "muspectra/search.hpp"
#include "oracle.hpp"

using namespace muspectra;

namespace {

std::vector<Graph> oracle_graphs() {
  std::vector<Graph> gs{path(2), path(3), path(4), path(5), cycle(3), cycle(4),
                        cycle(5), cycle(6), cycle(7), complete(4)};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) gs.push_back(oracle::random_connected(seed, 7));
  return gs;
}

std::vector<EdgeColoring> petersen_seeds() {
  std::vector<EdgeColoring> out;
  for (const auto& [name, cert] : fixtures()) out.push_back(cert.coloring);
  return out;
}

void check_witness(const Graph& g, const SearchOutcome& o) {
  REQUIRE(o.witness);
  CHECK(validate(g, *o.witness).empty());
  CHECK(o.witness->t() == o.t);
  CHECK(analyze(g, *o.witness).f == o.lo);
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("petersen at 4 colors") {
  const Graph p = petersen();
  SearchConfig raw;
  raw.use_structural_bounds = false;
  const SearchOutcome lo = solve(p, 4, Objective::Mu1, raw);
  CHECK(lo.exact());
  CHECK(lo.search_completed);
  CHECK(lo.value() == 2);
  check_witness(p, lo);
  const SearchOutcome hi = solve(p, 4, Objective::Mu2, raw);
  CHECK(hi.exact());
  CHECK(hi.search_completed);
  CHECK(hi.value() == 8);
  check_witness(p, hi);

  raw.use_window_search = false;
  const SearchOutcome plain = solve(p, 4, Objective::Mu2, raw);
  CHECK(plain.search_completed);
  CHECK(plain.value() == 8);

  CHECK(solve(p, 4, Objective::Mu1).value() == 2);
  CHECK(solve(p, 4, Objective::Mu2).value() == 8);
}

TEST_CASE("petersen at 15 colors") {
  const Graph p = petersen();
  SearchConfig seeded;
  seeded.seed_witnesses = petersen_seeds();
  const SearchOutcome hi = solve(p, 15, Objective::Mu2, seeded);
  CHECK(hi.value() == 6);
  CHECK(hi.nodes_visited == 0);
  check_witness(p, hi);
  const SearchOutcome lo = solve(p, 15, Objective::Mu1, seeded);
  CHECK(lo.value() == 0);
  check_witness(p, lo);

  SearchConfig raw;
  raw.use_structural_bounds = false;
  CHECK(solve(p, 15, Objective::Mu2, raw).value() == 6);
  CHECK(solve(p, 15, Objective::Mu1, raw).value() == 0);
}

TEST_CASE("triangle") {
  CHECK(solve(cycle(3), 3, Objective::Mu1).value() == 2);
  CHECK(solve(cycle(3), 3, Objective::Mu2).value() == 2);
  const auto naive = oracle::naive_mu(oracle::plain(cycle(3)), 3);
  CHECK(naive->members == 6);
  CHECK(naive->mu1 == 2);
  CHECK(naive->mu2 == 2);
}

TEST_CASE("illegal palette sizes") {
  const Graph p = petersen();
  try {
    solve(p, 3, Objective::Mu1);
    FAIL("t=3 accepted");
  } catch (const RangeError& e) {
    CHECK(e.lo() == 4);
    CHECK(e.hi() == 15);
  }
  CHECK_THROWS_AS(solve(p, 16, Objective::Mu2), RangeError);
  CHECK_THROWS_AS(solve(cycle(4), 1, Objective::Mu2), RangeError);
  SearchConfig zero;
  zero.node_limit = 0;
  CHECK_THROWS_AS(solve(cycle(4), 2, Objective::Mu2, zero), std::invalid_argument);
}

TEST_CASE("solve equals full enumeration on small graphs") {
  for (const Graph& g : oracle_graphs()) {
    const oracle::Plain pl = oracle::plain(g);
    for (int t = chromatic_index(g); t <= g.edge_count(); ++t) {
      CAPTURE(g.name());
      CAPTURE(t);
      const auto naive = oracle::naive_mu(pl, t);
      REQUIRE(naive);
      for (bool symmetry : {true, false}) {
        for (bool window : {true, false}) {
          SearchConfig cfg;
          cfg.use_reflection_symmetry = symmetry;
          cfg.use_window_search = window;
          const SearchOutcome lo = solve(g, t, Objective::Mu1, cfg);
          const SearchOutcome hi = solve(g, t, Objective::Mu2, cfg);
          REQUIRE(lo.exact());
          REQUIRE(hi.exact());
          CHECK(lo.value() == naive->mu1);
          CHECK(hi.value() == naive->mu2);
          check_witness(g, lo);
          check_witness(g, hi);
        }
      }
      SearchConfig ordered;
      ordered.edge_order = EdgeOrder::PaperOrder;
      ordered.use_structural_bounds = false;
      CHECK(solve(g, t, Objective::Mu1, ordered).value() == naive->mu1);
      CHECK(solve(g, t, Objective::Mu2, ordered).value() == naive->mu2);
    }
  }
}

TEST_CASE("seeding never changes an exact value") {
  for (const Graph& g : {cycle(5), complete(4), petersen()}) {
    for (int t = chromatic_index(g); t <= std::min(g.edge_count(), 6); ++t) {
      for (Objective obj : {Objective::Mu1, Objective::Mu2}) {
        const SearchOutcome base = solve(g, t, obj);
        REQUIRE(base.exact());
        SearchConfig bound;
        bound.initial_bound = base.value();
        const SearchOutcome b = solve(g, t, obj, bound);
        CHECK(b.value() == base.value());
        CHECK(b.nodes_visited <= base.nodes_visited);
        SearchConfig seeded;
        seeded.seed_witnesses = sample(g, t, 3, 5);
        seeded.seed_witnesses.push_back(EdgeColoring(t, std::vector<int>(g.edge_count(), 1)));
        CHECK(solve(g, t, obj, seeded).value() == base.value());
      }
    }
  }
}

TEST_CASE("thread count does not change results") {
  const std::vector<std::pair<Graph, int>> cases{
      {cycle(7), 3}, {cycle(7), 6}, {complete(4), 3}, {complete(4), 5}, {petersen(), 4}};
  for (const auto& [g, t] : cases) {
    for (Objective obj : {Objective::Mu1, Objective::Mu2}) {
      SearchConfig one;
      one.use_structural_bounds = false;
      one.use_window_search = false;
      SearchConfig many = one;
      many.threads = 3;
      const SearchOutcome a = solve(g, t, obj, one);
      const SearchOutcome b = solve(g, t, obj, many);
      CHECK(a.status == b.status);
      CHECK(a.lo == b.lo);
      CHECK(a.hi == b.hi);
    }
  }
}

TEST_CASE("exhausted budgets report sound bounds") {
  const Graph p = petersen();
  SearchConfig tiny;
  tiny.node_limit = 1;
  tiny.use_window_search = false;
  const SearchOutcome o = solve(p, 12, Objective::Mu2, tiny);
  CHECK_FALSE(o.search_completed);
  CHECK(o.lo <= 6);
  CHECK(o.hi >= 6);
  CHECK(o.hi == 8);

  SearchConfig timed;
  timed.time_limit_ms = 0;
  timed.use_window_search = false;
  const SearchOutcome t = solve(p, 12, Objective::Mu2, timed);
  CHECK(t.lo <= 6);
  CHECK(t.hi >= 6);

  SearchConfig window = tiny;
  window.use_window_search = true;
  window.node_limit = 2000;
  const SearchOutcome w = solve(p, 12, Objective::Mu2, window);
  CHECK(w.lo <= 6);
  CHECK(w.hi >= 6);
  if (!w.exact()) CHECK_THROWS(w.value());
}

TEST_CASE("mu1 never exceeds mu2") {
  for (const Graph& g : {cycle(5), cycle(6), complete(4)}) {
    for (int t = chromatic_index(g); t <= g.edge_count(); ++t) {
      CHECK(solve(g, t, Objective::Mu1).value() <= solve(g, t, Objective::Mu2).value());
    }
  }
}

TEST_CASE("samples never beat exact values") {
  for (const Graph& g : {cycle(5), complete(4), oracle::random_connected(4, 7)}) {
    for (int t = chromatic_index(g); t <= g.edge_count(); ++t) {
      const int lo = solve(g, t, Objective::Mu1).value();
      const int hi = solve(g, t, Objective::Mu2).value();
      for (const EdgeColoring& c : sample(g, t, 9, 40)) {
        const int f = analyze(g, c).f;
        CHECK(f >= lo);
        CHECK(f <= hi);
      }
    }
  }
}

TEST_CASE("edge orders") {
  const Graph p = petersen();
  const auto paper = assignment_order(p, EdgeOrder::PaperOrder);
  for (int e = 0; e < 15; ++e) CHECK(paper[e] == e);
  auto mcf = assignment_order(p, EdgeOrder::MostConstrainedFirst);
  CHECK(mcf.front() == 0);
  std::sort(mcf.begin(), mcf.end());
  CHECK(mcf == paper);
}

}  // TEST_SUITE

TEST_SUITE("profile") {

TEST_CASE("petersen") {
  const Graph p = petersen();
  const MuProfile prof = profile(p, {}, petersen_seeds());
  CHECK(prof.chromatic_index == 4);
  REQUIRE(prof.mu1.size() == 12);
  CHECK(prof.mu11.exact());
  CHECK(prof.mu11.lo == 0);
  CHECK(prof.mu12.exact());
  CHECK(prof.mu12.lo == 2);
  CHECK(prof.mu21.exact());
  CHECK(prof.mu21.lo == 6);
  CHECK(prof.mu22.exact());
  CHECK(prof.mu22.lo == 8);
  for (const SearchOutcome& o : prof.mu1) CHECK(o.value() == (o.t == 4 ? 2 : 0));
  for (const SearchOutcome& o : prof.mu2) {
    if (o.t >= 5 && o.t <= 7) CHECK(o.lo >= 7);
    if (o.t >= 8 && o.t <= 14) CHECK(o.lo >= 6);
  }
}

// Found by this solver; cross-checked at t=10 and t=12 by the plain branch
// and bound with an unlimited budget.
TEST_CASE("petersen mu2 for every palette size") {
  const Graph p = petersen();
  const MuProfile prof = profile(p);
  const std::vector<int> expected{8, 8, 8, 8, 8, 8, 7, 7, 6, 6, 6, 6};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(prof.mu2[i].t);
    REQUIRE(prof.mu2[i].exact());
    CHECK(prof.mu2[i].value() == expected[i]);
  }
}

TEST_CASE("petersen with a tiny budget still pins the aggregates") {
  SearchConfig cfg;
  cfg.node_limit = 1000;
  const MuProfile prof = profile(petersen(), cfg, petersen_seeds());
  int bounded = 0;
  for (const SearchOutcome& o : prof.mu2) bounded += o.exact() ? 0 : 1;
  CHECK(bounded > 0);
  CHECK(prof.mu11.exact());
  CHECK(prof.mu12.exact());
  CHECK(prof.mu21.exact());
  CHECK(prof.mu22.exact());
  CHECK(prof.mu21.lo == 6);
  CHECK(prof.mu22.lo == 8);
}

TEST_CASE("small graphs match enumeration") {
  for (const Graph& g : {cycle(4), cycle(5), complete(4), path(4)}) {
    const MuProfile prof = profile(g);
    int mu11 = 1 << 20, mu12 = -1, mu21 = 1 << 20, mu22 = -1;
    for (int t = chromatic_index(g); t <= g.edge_count(); ++t) {
      const auto naive = oracle::naive_mu(oracle::plain(g), t);
      const SearchOutcome& a = prof.mu1[t - prof.chromatic_index];
      const SearchOutcome& b = prof.mu2[t - prof.chromatic_index];
      CHECK(a.value() == naive->mu1);
      CHECK(b.value() == naive->mu2);
      mu11 = std::min(mu11, naive->mu1);
      mu12 = std::max(mu12, naive->mu1);
      mu21 = std::min(mu21, naive->mu2);
      mu22 = std::max(mu22, naive->mu2);
    }
    CHECK(prof.mu11.lo == mu11);
    CHECK(prof.mu12.lo == mu12);
    CHECK(prof.mu21.lo == mu21);
    CHECK(prof.mu22.lo == mu22);
  }
}

TEST_CASE("aggregation over bounds") {
  auto row = [](int t, int lo, int hi) {
    SearchOutcome o;
    o.t = t;
    o.lo = lo;
    o.hi = hi;
    o.status = lo == hi ? Status::Exact : Status::BoundsOnly;
    return o;
  };
  MuProfile p;
  p.mu1 = {row(4, 2, 2), row(5, 0, 3), row(6, 0, 0)};
  p.mu2 = {row(4, 8, 8), row(5, 6, 8), row(6, 6, 6)};
  aggregate(p);
  CHECK(p.mu11.exact());
  CHECK(p.mu11.lo == 0);
  CHECK_FALSE(p.mu12.exact());
  CHECK(p.mu12.lo == 2);
  CHECK(p.mu12.hi == 3);
  CHECK(p.mu21.exact());
  CHECK(p.mu21.lo == 6);
  CHECK(p.mu22.exact());
  CHECK(p.mu22.lo == 8);
}

}  // TEST_SUITE

TEST_SUITE("sample") {

TEST_CASE("samples are members of alpha(G,t)") {
  const Graph p = petersen();
  for (int t = 4; t <= 15; ++t) {
    const auto cs = sample(p, t, 42, 20);
    CHECK(cs.size() == 20);
    for (const EdgeColoring& c : cs) {
      CHECK(c.t() == t);
      CHECK(validate(p, c).empty());
    }
  }
  CHECK(sample(p, 4, 1, 0).empty());
  CHECK_THROWS_AS(sample(p, 3, 1, 1), RangeError);
}

TEST_CASE("same seed, same output") {
  CHECK(sample(petersen(), 9, 123, 10) == sample(petersen(), 9, 123, 10));
  CHECK_FALSE(sample(petersen(), 9, 123, 10) == sample(petersen(), 9, 124, 10));
}

TEST_CASE("petersen samples respect the bounds") {
  const Graph p = petersen();
  for (const EdgeColoring& c : sample(p, 15, 7, 100)) CHECK(analyze(p, c).f <= 6);
  for (const EdgeColoring& c : sample(p, 4, 7, 100)) {
    const int f = analyze(p, c).f;
    CHECK(f >= 2);
    CHECK(f <= 8);
  }
}

}  // TEST_SUITE
