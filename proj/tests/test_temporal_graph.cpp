#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <sstream>

#include "test_support.hpp"
#include "tgr/temporal_graph.hpp"

using namespace tgr;
using namespace tgr::test;

TEST_CASE("parse single edge") {
  std::istringstream in("2 1\n0 1 3 2\n");
  const TemporalGraph g = parse_edge_list(in);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge(0) == TemporalEdge{0, 1, 3, 2});
  CHECK(g.edge(0).arrival() == 5);
}

TEST_CASE("parse accepts comments and blank lines") {
  std::istringstream in("# header\n\n2 1\n# mid comment\n0 1 3 2\n");
  const TemporalGraph g = parse_edge_list(in);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  const auto expect_error = [](const char* text, const char* fragment) {
    std::istringstream in(text);
    try {
      parse_edge_list(in);
      FAIL_CHECK("expected InputError for: " << text);
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error("2 1\n0 1 3 0\n", "lambda");                  // lambda < 1
  expect_error("2 1\n0 2 3 1\n", "line 2");                  // v >= n
  expect_error("2 1\n0 1 -1 1\n", "line 2");                 // negative time
  expect_error("2 1\n0 1 3\n", "line 2");                    // missing field
  expect_error("2 1\n0 1 3 2 9\n", "fields");                // extra field
  expect_error("2 1\n0 1  3 2\n", "fields");                 // double space
  expect_error("2 1\nx 1 3 2\n", "not a non-negative");      // junk
  expect_error("2 2\n0 1 3 2\n", "expected 2 edge lines");   // too few
  expect_error("2 1\n0 1 3 2\n0 1 4 2\n", "more than 1");    // too many
  expect_error("", "header");                                // empty input
  expect_error("2 1\n0 1 2147483647 1\n", "maximum");        // arrival overflow
}

TEST_CASE("sample network indexes") {
  const TemporalGraph g = sample9();
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 15);

  auto parallel = g.edges_on_pair(0, 1);
  REQUIRE(parallel.size() == 3);
  CHECK(parallel[0] == 6);
  CHECK(parallel[1] == 7);
  CHECK(parallel[2] == 8);
  for (EdgeId id : parallel) CHECK(g.edge(id).t == 3);

  auto succ = g.static_successors(0);
  REQUIRE(succ.size() == 3);
  CHECK(succ[0] == 1);
  CHECK(succ[1] == 2);
  CHECK(succ[2] == 3);
  CHECK(g.static_successors(8).empty());
  CHECK(g.edges_on_pair(1, 0).empty());
}

TEST_CASE("constructor rejects invalid edges") {
  CHECK_THROWS_AS(TemporalGraph(2, {{0, 2, 3, 1}}), InputError);
  CHECK_THROWS_AS(TemporalGraph(2, {{0, 1, 3, 0}}), InputError);
  CHECK_THROWS_AS(TemporalGraph(2, {{0, 1, -1, 1}}), InputError);
}

TEST_CASE("time-respecting predicate") {
  const TemporalGraph g = sample9();
  CHECK(is_time_respecting(g, std::vector<EdgeId>{0, 1, 2}));
  CHECK(is_time_respecting(g, std::vector<EdgeId>{0}));
  CHECK_FALSE(is_time_respecting(g, std::vector<EdgeId>{1, 0}));
  CHECK_FALSE(is_time_respecting(g, std::vector<EdgeId>{}));
  // chains at vertex 4 but departs (9) before the previous arrival (10)
  CHECK_FALSE(is_time_respecting(g, std::vector<EdgeId>{10, 11}));
  CHECK_THROWS_AS(is_time_respecting(g, std::vector<EdgeId>{99}), InputError);
}

TEST_CASE("journey time") {
  const TemporalGraph g = sample9();
  CHECK(journey_time(g, {{0, 1, 2}}) == 9);
  CHECK(journey_time(g, {{3, 4, 5}}) == 6);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    CHECK(journey_time(g, {{id}}) == g.edge(id).lambda);
  }
  CHECK_THROWS_AS(journey_time(g, {{1, 0}}), InputError);
}

TEST_CASE("dominance on the parallel corridor") {
  const TemporalGraph g = sample9();
  const Route corridor{{0, 1, 4, 7, 8}};
  const TemporalPath p{{6, 9, 11, 13}};   // (3,2)(6,3)(9,2)(11,4)
  const TemporalPath q{{7, 9, 11, 13}};   // (3,3)(6,3)(9,2)(11,4)
  const TemporalPath r{{8, 10, 12, 14}};  // (3,4)(7,3)(10,3)(16,3)

  CHECK(is_dominating(g, p, corridor));
  CHECK(is_dominating(g, q, corridor));
  CHECK_FALSE(is_dominating(g, r, corridor));

  CHECK(is_useful_dominating(g, p, corridor));
  CHECK_FALSE(is_useful_dominating(g, q, corridor));  // (0,1) prefix arrives 6 > 5
  CHECK_FALSE(is_useful_dominating(g, r, corridor));

  // a unique edge on its pair dominates trivially
  CHECK(is_dominating(g, {{0}}, Route{{0, 2}}));

  // mismatched route
  CHECK_THROWS_AS(is_dominating(g, p, Route{{0, 1, 4, 7}}), InputError);
}

TEST_CASE("prefixes of a useful dominating path stay useful dominating") {
  const TemporalGraph g = sample9();
  const std::vector<EdgeId> p{6, 9, 11, 13};
  const std::vector<VertexId> corridor{0, 1, 4, 7, 8};
  for (std::size_t len = 1; len <= p.size(); ++len) {
    TemporalPath prefix{{p.begin(), p.begin() + len}};
    Route route{{corridor.begin(), corridor.begin() + len + 1}};
    CHECK(is_useful_dominating(g, prefix, route));
  }
}

TEST_CASE("dominance enumeration cap") {
  // Three hops with 101 same-departure parallels each on the first hop and
  // wide-open continuations: more than 10^6 candidate combinations.
  std::vector<TemporalEdge> edges;
  for (Time i = 0; i < 101; ++i) edges.push_back({0, 1, 0, 1 + i});
  for (Time i = 0; i < 101; ++i) edges.push_back({1, 2, 200 + i, 1 + i});
  for (Time i = 0; i < 101; ++i) edges.push_back({2, 3, 600 + i, 1 + i});
  const TemporalGraph g(4, std::move(edges));
  const TemporalPath p{{0, 101, 202}};
  const Route r{{0, 1, 2, 3}};
  CHECK_THROWS_AS(is_dominating(g, p, r, 1000), InputError);
  CHECK_THROWS_AS((void)is_dominating(g, p, r), InputError);  // default cap too
}

TEST_CASE("edge list round trip") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TemporalGraph g = random_graph(seed);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    const TemporalGraph back = parse_edge_list(in);
    CHECK(back == g);
  }
}

TEST_CASE("journey time of enumerated paths is at least the final duration") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TemporalGraph g = random_small_graph(seed);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      for (const auto& seq : all_time_respecting_paths(g, s)) {
        const Time j = journey_time(g, {seq});
        CHECK(j >= g.edge(seq.back()).lambda);
        CHECK(j == g.edge(seq.back()).arrival() - g.edge(seq.front()).t);
      }
    }
  }
}

TEST_CASE("prefixes of useful dominating paths are useful dominating") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const TemporalGraph g = random_small_graph(seed);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      for (const auto& seq : all_time_respecting_paths(g, s)) {
        const TemporalPath p{seq};
        const Route r = route_of(g, p);
        if (!is_useful_dominating(g, p, r)) continue;
        for (std::size_t len = 1; len < seq.size(); ++len) {
          TemporalPath prefix{{seq.begin(), seq.begin() + len}};
          Route prefix_route{{r.vertices.begin(), r.vertices.begin() + len + 1}};
          CHECK(is_useful_dominating(g, prefix, prefix_route));
        }
      }
    }
  }
}

TEST_CASE("every departing route admits a useful dominating path") {
  // Group all time-respecting paths from s by (route, departure); at least one
  // member of each group must be useful dominating.
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const TemporalGraph g = random_small_graph(seed);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      std::map<std::pair<std::vector<VertexId>, Time>, std::vector<EdgeSeq>>
          groups;
      for (const auto& seq : all_time_respecting_paths(g, s)) {
        TemporalPath p{seq};
        groups[{route_of(g, p).vertices, g.edge(seq.front()).t}].push_back(seq);
      }
      for (const auto& [key, members] : groups) {
        bool any = false;
        for (const auto& seq : members) {
          if (is_useful_dominating(g, {seq}, Route{key.first})) {
            any = true;
            break;
          }
        }
        CHECK(any);
      }
    }
  }
}
