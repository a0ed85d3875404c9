#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tgr/types.hpp"

namespace tgr {

// One timetabled connection: departs u at time t, arrives at v at t + lambda.
struct TemporalEdge {
  VertexId u = 0;
  VertexId v = 0;
  Time t = 0;
  Time lambda = 1;

  Time arrival() const { return t + lambda; }
  bool operator==(const TemporalEdge&) const = default;
};

// Nonempty edge-id sequence. Valid when consecutive edges chain head-to-tail
// and each departure is at least the previous arrival (time-respecting).
struct TemporalPath {
  std::vector<EdgeId> edge_ids;
};

// Static vertex sequence with at least one edge between consecutive vertices.
struct Route {
  std::vector<VertexId> vertices;
};

// Immutable timetable graph: a vertex count plus an edge multiset, with two
// derived indexes built once at construction:
//   * per static pair (u, v): the edge ids on that pair, sorted by departure
//     (ties by edge id),
//   * per vertex u: the sorted list of distinct static successors.
// Parallel edges are permitted. Safe to share across concurrent readers.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  TemporalGraph(VertexId n, std::vector<TemporalEdge> edges,
                Time max_time = kDefaultMaxTime);

  VertexId vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const std::vector<TemporalEdge>& edges() const { return edges_; }
  const TemporalEdge& edge(EdgeId id) const;

  // Edge ids on the static pair (u, v), sorted by (departure, id). Empty span
  // if the pair carries no edge.
  std::span<const EdgeId> edges_on_pair(VertexId u, VertexId v) const;

  // Distinct static successors of u, sorted ascending.
  std::span<const VertexId> static_successors(VertexId u) const;

  bool operator==(const TemporalGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  VertexId n_ = 0;
  std::vector<TemporalEdge> edges_;
  // Edge ids grouped by (u, v), each group sorted by (t, id).
  std::vector<EdgeId> pair_edges_;
  // (u << 32 | v) -> (offset, count) into pair_edges_.
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>>
      pair_index_;
  std::vector<std::uint32_t> succ_offsets_;  // n + 1 entries
  std::vector<VertexId> succ_;
};

// Text edge-list format:
//   * lines starting with '#' are comments, blank lines are ignored
//   * first data line: "n m"
//   * then exactly m lines "u v t lambda", decimal integers, single spaces
// Errors carry the offending line number.
TemporalGraph parse_edge_list(std::istream& in, Time max_time = kDefaultMaxTime);
TemporalGraph parse_edge_list_file(const std::string& path,
                                   Time max_time = kDefaultMaxTime);
void write_edge_list(const TemporalGraph& g, std::ostream& out);
void write_edge_list_file(const TemporalGraph& g, const std::string& path);

// True iff the ids are valid, consecutive edges chain head-to-tail, and each
// departure is at least the previous arrival.
bool is_time_respecting(const TemporalGraph& g, std::span<const EdgeId> seq);

// arr(last edge) - dep(first edge). Throws InputError if p is empty or not
// time-respecting.
Time journey_time(const TemporalGraph& g, const TemporalPath& p);

// The vertex sequence p travels through. Validates chaining only.
Route route_of(const TemporalGraph& g, const TemporalPath& p);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// True iff no time-respecting path through r with the same departure time
// arrives strictly earlier than p. Decided by exhaustive enumeration over the
// per-pair edge lists; intended for small instances (the cap bounds the number
// of candidate edges examined, InputError beyond it).
bool is_dominating(const TemporalGraph& g, const TemporalPath& p,
                   const Route& r,
                   std::uint64_t enumeration_cap = kDefaultEnumerationCap);

// True iff every prefix of p is dominating on the corresponding route prefix.
bool is_useful_dominating(const TemporalGraph& g, const TemporalPath& p,
                          const Route& r,
                          std::uint64_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace tgr
