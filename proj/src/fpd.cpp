#include "tgr/fpd.hpp"

namespace tgr {

namespace {

constexpr Time kStUnset = -1;

}  // namespace

FpdResult fastest_duration(const Esdg& e, VertexId source,
                           const FpdOptions& opts,
                           std::vector<NodeId>* dequeue_trace) {
  if (source >= e.vertex_count()) {
    throw InputError("source vertex " + std::to_string(source) + " out of range");
  }

  FpdResult res;
  res.source = source;
  res.journey.assign(e.vertex_count(), kUnreachable);
  res.journey[source] = 0;

  std::vector<Time> start(e.node_count(), kStUnset);
  std::vector<NodeId> queue;

  auto src = e.source_nodes(source);  // sorted by (dep, id)
  std::size_t hi = src.size();
  while (hi > 0) {
    // Next phase group: the latest unprocessed departure, ids ascending.
    const Time d = e.dep(src[hi - 1]);
    std::size_t lo = hi;
    while (lo > 0 && e.dep(src[lo - 1]) == d) --lo;

    for (std::size_t j = lo; j < hi; ++j) {
      const NodeId seed = src[j];
      if (opts.skip_visited_source && start[seed] != kStUnset) continue;
      ++res.phases_run;
      start[seed] = e.dep(seed);
      queue.clear();
      queue.push_back(seed);
      std::size_t head = 0;
      while (head < queue.size()) {
        const NodeId x = queue[head++];
        ++res.nodes_dequeued;
        if (dequeue_trace) dequeue_trace->push_back(x);

        const Time duration = e.arr(x) - start[x];
        Time& slot = res.journey[e.right(x)];
        if (duration < slot) slot = duration;
        if (duration > opts.max_duration) continue;  // descendants only get longer

        for (const NodeId y : e.neighbors(x)) {
          ++res.arcs_scanned;
          if (start[y] == kStUnset) {
            start[y] = start[x];
            queue.push_back(y);
          }
        }
      }
    }
    hi = lo;
  }
  return res;
}

}  // namespace tgr
