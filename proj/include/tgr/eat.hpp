#pragma once

#include <cstdint>
#include <vector>

#include "tgr/esdg.hpp"
#include "tgr/types.hpp"

namespace tgr {

struct EatOptions {
  // When the dequeued node cannot improve the arrival at its right endpoint,
  // skip scanning its arcs (equal-arrival nodes share their continuations, so
  // an earlier node already enqueued them).
  bool skip_no_improve = true;
  // Stronger variant: skip also when the arrival merely ties the current
  // value. Off by default; output-equivalent either way.
  bool skip_on_equal = false;
};

struct EatResult {
  std::vector<Time> eat;  // per vertex; kUnreachable when no admissible path
  VertexId source = 0;
  Time ready_time = 0;
  std::uint64_t nodes_dequeued = 0;
  std::uint64_t arcs_scanned = 0;
};

// Single-source earliest arrival over the dependency graph: every node whose
// left endpoint is the source and whose departure is at least rt seeds a BFS;
// the visited bitset is shared across seeds so each node is processed at most
// once. Arrival labels are relaxed at dequeue time.
//
// dequeue_trace, when non-null, receives every node id in dequeue order
// (instrumentation for tests).
EatResult earliest_arrival(const Esdg& e, VertexId source, Time ready_time,
                           const EatOptions& opts = {},
                           std::vector<NodeId>* dequeue_trace = nullptr);

}  // namespace tgr
