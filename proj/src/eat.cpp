#include "tgr/eat.hpp"

#include <algorithm>

namespace tgr {

namespace {

inline bool test_bit(const std::vector<std::uint64_t>& bits, NodeId x) {
  return (bits[x >> 6] >> (x & 63)) & 1u;
}

inline void set_bit(std::vector<std::uint64_t>& bits, NodeId x) {
  bits[x >> 6] |= std::uint64_t{1} << (x & 63);
}

}  // namespace

EatResult earliest_arrival(const Esdg& e, VertexId source, Time ready_time,
                           const EatOptions& opts,
                           std::vector<NodeId>* dequeue_trace) {
  if (source >= e.vertex_count()) {
    throw InputError("source vertex " + std::to_string(source) + " out of range");
  }
  if (ready_time < 0) throw InputError("ready time must be non-negative");

  EatResult res;
  res.source = source;
  res.ready_time = ready_time;
  res.eat.assign(e.vertex_count(), kUnreachable);
  res.eat[source] = ready_time;

  // One bit of visited state per node, cleared per query.
  std::vector<std::uint64_t> visited((e.node_count() + 63) / 64, 0);
  std::vector<NodeId> queue;

  auto src = e.source_nodes(source);
  auto first = std::partition_point(src.begin(), src.end(), [&](NodeId x) {
    return e.dep(x) < ready_time;
  });

  for (auto it = first; it != src.end(); ++it) {
    if (test_bit(visited, *it)) continue;
    set_bit(visited, *it);
    queue.clear();
    queue.push_back(*it);
    std::size_t head = 0;
    while (head < queue.size()) {
      const NodeId x = queue[head++];
      ++res.nodes_dequeued;
      if (dequeue_trace) dequeue_trace->push_back(x);

      const Time ax = e.arr(x);
      Time& slot = res.eat[e.right(x)];
      const Time before = slot;
      if (ax < slot) slot = ax;

      bool expand = true;
      if (opts.skip_no_improve && ax > before) expand = false;
      if (opts.skip_on_equal && ax >= before) expand = false;
      if (!expand) continue;

      for (const NodeId y : e.neighbors(x)) {
        ++res.arcs_scanned;
        if (!test_bit(visited, y)) {
          set_bit(visited, y);
          queue.push_back(y);
        }
      }
    }
  }
  return res;
}

}  // namespace tgr
