#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "test_support.hpp"
#include "tgr/analytics.hpp"
#include "tgr/oracles.hpp"

using namespace tgr;
using namespace tgr::test;

TEST_CASE("sample network coverage") {
  const TemporalGraph g = sample9();
  const Esdg e = build_validated(g);

  // journeys from vertex 0 are {0,2,1,3,6,6,5,8,6}: the oracle agrees
  REQUIRE(fpd_by_repeated_eat(g, 0) == sample9_journeys());

  CHECK(eccentricity(e, 0) == 8);
  CHECK(coverage_count(e, 0, 2) == 3);  // vertices 0, 2, 1
  CHECK(coverage_count(e, 0, 0) == 1);  // the source alone
  CHECK(coverage_count(e, 0, 1000) == 9);
  CHECK(coverage_time(e, 0, 100.0) == 8);
  CHECK(coverage_time(e, 0, 1.0) == 0);  // one vertex needed: the source

  // vertex 8 reaches nothing
  CHECK(eccentricity(e, 8) == kUnreachable);
  CHECK(coverage_count(e, 8, 1000) == 1);
  CHECK(coverage_time(e, 8, 100.0) == kUnreachable);
}

TEST_CASE("single edge graph") {
  const Esdg e = build_validated(TemporalGraph(2, {{0, 1, 3, 2}}));
  CHECK(eccentricity(e, 0) == 2);
  CHECK(eccentricity(e, 1) == kUnreachable);
  CHECK(coverage_time(e, 1, 100.0) == kUnreachable);
  CHECK(coverage_time(e, 1, 50.0) == 0);
}

TEST_CASE("count matches the unpruned journeys everywhere") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TemporalGraph g = random_graph(seed);
    const Esdg e = build_validated(g);
    SplitMix64 rng(seed * 13);
    const VertexId s = static_cast<VertexId>(rng.next_below(g.vertex_count()));
    const auto journey = fastest_duration(e, s).journey;
    for (Time k : {Time{0}, Time{3}, Time{10}, Time{30}}) {
      const auto expected = static_cast<std::uint64_t>(
          std::count_if(journey.begin(), journey.end(),
                        [&](Time j) { return j <= k; }));
      CHECK(coverage_count(e, s, k) == expected);
    }
  }
}

TEST_CASE("coverage count is monotone and coverage time inverts it") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const TemporalGraph g = random_graph(seed);
    const Esdg e = build_validated(g);
    SplitMix64 rng(seed * 17);
    const VertexId s = static_cast<VertexId>(rng.next_below(g.vertex_count()));

    std::uint64_t prev = 0;
    for (Time k = 0; k <= 40; k += 4) {
      const std::uint64_t count = coverage_count(e, s, k);
      CHECK(count >= prev);
      prev = count;
    }

    const std::uint64_t n = g.vertex_count();
    for (double percent : {10.0, 33.0, 50.0, 100.0}) {
      const Time t = coverage_time(e, s, percent);
      if (t == kUnreachable) continue;
      const std::uint64_t need =
          static_cast<std::uint64_t>((percent * static_cast<double>(n) + 99.0) / 100.0);
      CHECK(coverage_count(e, s, t) >= need);
      if (t > 0) CHECK(coverage_count(e, s, t - 1) < need);
    }
  }
}

TEST_CASE("full-coverage time equals the eccentricity when everything is reachable") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const TemporalGraph g = random_graph(seed);
    const Esdg e = build_validated(g);
    for (VertexId s = 0; s < std::min<VertexId>(g.vertex_count(), 4); ++s) {
      const Time ecc = eccentricity(e, s);
      if (ecc != kUnreachable) {
        CHECK(coverage_time(e, s, 100.0) == ecc);
      } else {
        CHECK(coverage_time(e, s, 100.0) == kUnreachable);
      }
    }
  }
}

TEST_CASE("combined report matches the individual queries") {
  const Esdg e = build_validated(sample9());
  const CoverageReport r = coverage_report(e, 0, Time{2}, 100.0);
  CHECK(r.source == 0);
  CHECK(r.eccentricity == 8);
  REQUIRE(r.coverage_count.has_value());
  CHECK(*r.coverage_count == 3);
  REQUIRE(r.coverage_time.has_value());
  CHECK(*r.coverage_time == 8);

  const CoverageReport only_ecc = coverage_report(e, 0, std::nullopt, std::nullopt);
  CHECK_FALSE(only_ecc.coverage_count.has_value());
  CHECK_FALSE(only_ecc.coverage_time.has_value());
}

TEST_CASE("argument validation") {
  const Esdg e = build_validated(sample9());
  CHECK_THROWS_AS(coverage_count(e, 0, -1), InputError);
  CHECK_THROWS_AS(coverage_time(e, 0, 0.0), InputError);
  CHECK_THROWS_AS(coverage_time(e, 0, 100.5), InputError);
  CHECK_THROWS_AS(eccentricity(e, 9), InputError);
}
