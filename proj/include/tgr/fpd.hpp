#pragma once

#include <cstdint>
#include <vector>

#include "tgr/esdg.hpp"
#include "tgr/types.hpp"

namespace tgr {

struct FpdOptions {
  // Skip a phase whose seed node already carries a start time from an earlier
  // phase (an earlier phase starts no earlier, so re-running cannot improve
  // any journey).
  bool skip_visited_source = true;
  // Stop expanding a node once arr - start exceeds this bound. Journeys at or
  // below the bound are unaffected; entries above it may be missing. Used by
  // the coverage analytics.
  Time max_duration = kUnreachable;
};

struct FpdResult {
  std::vector<Time> journey;  // per vertex; journey[source] == 0
  VertexId source = 0;
  std::uint64_t nodes_dequeued = 0;
  std::uint64_t arcs_scanned = 0;
  std::uint64_t phases_run = 0;
};

// Single-source fastest path duration: one BFS phase per source-incident node,
// phases ordered by decreasing departure (ties by ascending node id). Each
// phase stamps reached nodes with its start time; stamped nodes stop later
// phases, so every node is processed at most once per query. A node's journey
// contribution at dequeue is arr(node) - start stamp.
FpdResult fastest_duration(const Esdg& e, VertexId source,
                           const FpdOptions& opts = {},
                           std::vector<NodeId>* dequeue_trace = nullptr);

}  // namespace tgr
