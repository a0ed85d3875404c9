#pragma once

#include <cstdint>
#include <vector>

#include "tgr/temporal_graph.hpp"
#include "tgr/types.hpp"

namespace tgr {

// Slow, obviously-correct reference implementations. They work directly on the
// timetable graph and never touch the dependency-graph machinery, so they can
// arbitrate it. Pure functions; correctness over speed throughout.
struct OracleConfig {
  // Cap on fixpoint passes; 0 means vertex_count + 1 (always sufficient: an
  // optimal arrival never needs to revisit a vertex).
  std::uint32_t max_rounds = 0;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// Repeats full relaxation passes over all edges (eat[v] <- t + lambda whenever
// t >= eat[u]) until a pass changes nothing. Throws InternalError if the cap
// is hit: relaxation is monotone, so that indicates a bug.
std::vector<Time> eat_fixpoint(const TemporalGraph& g, VertexId source,
                               Time ready_time, const OracleConfig& cfg = {});

// The classic single-pass baseline: scan all m edges in non-decreasing
// departure order, relaxing arrivals. Agrees with eat_fixpoint on every input.
std::vector<Time> eat_edge_stream(const TemporalGraph& g, VertexId source,
                                  Time ready_time);

// Fastest durations by definition: one earliest-arrival fixpoint per distinct
// departure time out of the source, taking the best arrival-minus-start.
std::vector<Time> fpd_by_repeated_eat(const TemporalGraph& g, VertexId source,
                                      const OracleConfig& cfg = {});

// All time-respecting paths from source with at most max_len edges whose every
// prefix is dominating on its own route. Prefix-pruned DFS: extensions of a
// non-dominating path can never qualify.
std::vector<std::vector<EdgeId>> enumerate_useful_dominating(
    const TemporalGraph& g, VertexId source, std::size_t max_len,
    const OracleConfig& cfg = {});

}  // namespace tgr
