#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "test_support.hpp"
#include "tgr/oracles.hpp"

using namespace tgr;
using namespace tgr::test;

TEST_CASE("fixpoint on the sample network") {
  const TemporalGraph g = sample9();
  const auto eat = eat_fixpoint(g, 0, 3);
  CHECK(eat == sample9_eat_rt3());
  CHECK(eat[8] == 12);
  CHECK(eat[4] == 9);
}

TEST_CASE("fixpoint on a single vertex") {
  const TemporalGraph g(1, {});
  const auto eat = eat_fixpoint(g, 0, 7);
  REQUIRE(eat.size() == 1);
  CHECK(eat[0] == 7);
}

TEST_CASE("fixpoint round cap") {
  // Edge order forces one extra pass per hop.
  const TemporalGraph g(3, {{1, 2, 5, 1}, {0, 1, 3, 1}});
  OracleConfig cfg;
  cfg.max_rounds = 1;
  CHECK_THROWS_AS(eat_fixpoint(g, 0, 0, cfg), InternalError);
  CHECK(eat_fixpoint(g, 0, 0)[2] == 6);  // default cap suffices
}

TEST_CASE("edge stream equals fixpoint") {
  const TemporalGraph g = sample9();
  CHECK(eat_edge_stream(g, 0, 3) == eat_fixpoint(g, 0, 3));

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const TemporalGraph r = random_graph(seed);
    SplitMix64 rng(seed * 1000);
    for (int q = 0; q < 5; ++q) {
      const VertexId s = static_cast<VertexId>(rng.next_below(r.vertex_count()));
      const Time rt = static_cast<Time>(rng.next_below(101));
      CHECK(eat_edge_stream(r, s, rt) == eat_fixpoint(r, s, rt));
    }
  }
}

TEST_CASE("edge stream is insensitive to input edge order") {
  const TemporalGraph g = sample9();
  std::vector<TemporalEdge> shuffled(g.edges().rbegin(), g.edges().rend());
  const TemporalGraph r(g.vertex_count(), std::move(shuffled));
  CHECK(eat_edge_stream(r, 0, 3) == eat_edge_stream(g, 0, 3));
}

TEST_CASE("no admissible departure leaves everything unreachable") {
  const TemporalGraph g = sample9();
  const auto eat = eat_edge_stream(g, 0, 10);
  CHECK(eat[0] == 10);
  for (VertexId z = 1; z < 9; ++z) CHECK(eat[z] == kUnreachable);
}

TEST_CASE("fastest durations by repeated earliest arrival") {
  const TemporalGraph g = sample9();
  const auto journey = fpd_by_repeated_eat(g, 0);
  CHECK(journey == sample9_journeys());
  CHECK(journey[8] == 6);  // attained by starting at 9
  CHECK(journey[2] == 1);

  // vertex 8 has no out-edges
  const auto isolated = fpd_by_repeated_eat(g, 8);
  CHECK(isolated[8] == 0);
  for (VertexId z = 0; z < 8; ++z) CHECK(isolated[z] == kUnreachable);
}

TEST_CASE("useful dominating enumeration on the sample network") {
  const TemporalGraph g = sample9();
  const auto paths = enumerate_useful_dominating(g, 0, 4);
  const std::set<EdgeSeq> set(paths.begin(), paths.end());
  CHECK(set.count({6, 9, 11, 13}) == 1);
  CHECK(set.count({7, 9, 11, 13}) == 0);
  CHECK(set.count({8, 10, 12, 14}) == 0);

  const auto singles = enumerate_useful_dominating(g, 0, 1);
  const std::set<EdgeSeq> single_set(singles.begin(), singles.end());
  // only the minimal-arrival member of the (0,1) parallels qualifies
  CHECK(single_set == std::set<EdgeSeq>{{0}, {3}, {6}});

  CHECK(enumerate_useful_dominating(g, 8, 4).empty());
}

TEST_CASE("enumeration honors its cap") {
  const TemporalGraph g = sample9();
  OracleConfig cfg;
  cfg.enumeration_cap = 2;
  CHECK_THROWS_AS(enumerate_useful_dominating(g, 0, 4, cfg), InputError);
}

TEST_CASE("enumerated paths attain the oracle optima on small graphs") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    for (bool distinct : {false, true}) {
      const TemporalGraph g =
          distinct ? random_small_distinct(seed) : random_small_graph(seed);
      for (VertexId s = 0; s < g.vertex_count(); ++s) {
        const auto udps = enumerate_useful_dominating(g, s, g.edge_count());

        // earliest arrival: some useful dominating path departing >= rt
        // realizes every finite optimum
        for (Time rt : {Time{0}, Time{20}, Time{60}}) {
          const auto eat = eat_fixpoint(g, s, rt);
          for (VertexId z = 0; z < g.vertex_count(); ++z) {
            if (z == s || eat[z] == kUnreachable) continue;
            bool attained = false;
            for (const auto& seq : udps) {
              if (g.edge(seq.front()).t < rt) continue;
              if (g.edge(seq.back()).v != z) continue;
              if (g.edge(seq.back()).arrival() == eat[z]) {
                attained = true;
                break;
              }
            }
            CHECK(attained);
          }
        }

        // fastest duration: likewise
        const auto journey = fpd_by_repeated_eat(g, s);
        for (VertexId z = 0; z < g.vertex_count(); ++z) {
          if (z == s || journey[z] == kUnreachable) continue;
          bool attained = false;
          for (const auto& seq : udps) {
            if (g.edge(seq.back()).v != z) continue;
            if (g.edge(seq.back()).arrival() - g.edge(seq.front()).t ==
                journey[z]) {
              attained = true;
              break;
            }
          }
          CHECK(attained);
        }
      }
    }
  }
}

TEST_CASE("oracle argument validation") {
  const TemporalGraph g = sample9();
  CHECK_THROWS_AS(eat_fixpoint(g, 9, 0), InputError);
  CHECK_THROWS_AS(eat_edge_stream(g, 0, -1), InputError);
  CHECK_THROWS_AS(fpd_by_repeated_eat(g, 99), InputError);
  CHECK_THROWS_AS(enumerate_useful_dominating(g, 99, 1), InputError);
}
