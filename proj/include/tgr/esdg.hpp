#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tgr/temporal_graph.hpp"
#include "tgr/types.hpp"

namespace tgr {

// Node ids coincide with the ids of the originating temporal edges.
using NodeId = EdgeId;

// Edge-scan dependency graph: each temporal edge becomes a node carrying
// (left, right, dep, arr); an arc x -> y means y is the canonical continuation
// of x towards one static successor of right(x), i.e. among the edges on the
// pair (right(x), left-successor) departing at or after arr(x), y has minimum
// arrival (ties: latest departure, then smallest id). Every path in this graph
// is therefore a time-respecting path of the original timetable, and each node
// keeps at most one arc per static successor.
//
// Stored as two CSR layouts over flat arrays: offsets/neighbors for the arcs,
// and a per-source-vertex index listing the nodes whose left endpoint is that
// vertex, sorted by departure. Immutable after build; shareable across
// concurrent query threads.
class Esdg {
 public:
  Esdg() = default;

  std::uint64_t vertex_count() const { return n_vertices_; }
  std::uint64_t node_count() const { return left_.size(); }
  std::uint64_t arc_count() const { return neighbors_.size(); }

  VertexId left(NodeId x) const { return left_[x]; }
  VertexId right(NodeId x) const { return right_[x]; }
  Time dep(NodeId x) const { return dep_[x]; }
  Time arr(NodeId x) const { return arr_[x]; }

  std::span<const NodeId> neighbors(NodeId x) const {
    return {neighbors_.data() + offsets_[x],
            static_cast<std::size_t>(offsets_[x + 1] - offsets_[x])};
  }

  // Nodes with left == u, sorted by (dep, id).
  std::span<const NodeId> source_nodes(VertexId u) const {
    return {source_nodes_.data() + source_offsets_[u],
            static_cast<std::size_t>(source_offsets_[u + 1] - source_offsets_[u])};
  }

  // Binary little-endian layout:
  //   magic "ESDG", version u32, n_vertices u64, n_nodes u64, n_arcs u64,
  //   offsets (n_nodes+1) x u64, neighbors n_arcs x u32,
  //   left/right/dep/arr each n_nodes x u32,
  //   source offsets (n_vertices+1) x u64, source node ids n_nodes x u32.
  void serialize(std::ostream& out) const;
  static Esdg deserialize(std::istream& in);

  bool operator==(const Esdg&) const = default;

  friend Esdg build_esdg(const TemporalGraph& g);

 private:
  std::uint64_t n_vertices_ = 0;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> dep_;
  std::vector<std::uint32_t> arr_;
  std::vector<std::uint64_t> offsets_{0};  // node_count + 1
  std::vector<std::uint32_t> neighbors_;
  std::vector<std::uint64_t> source_offsets_{0};  // vertex_count + 1
  std::vector<std::uint32_t> source_nodes_;
};

// Transforms a timetable graph. Per static pair the edges are scanned once in
// departure order with a suffix minimum of arrival, so each node resolves its
// continuation per successor by one binary search: O(m log m + m * max static
// out-degree) overall.
Esdg build_esdg(const TemporalGraph& g);

void save_esdg(const Esdg& e, const std::string& path);
Esdg load_esdg(const std::string& path);

struct EsdgStats {
  std::uint64_t n_vertices = 0;
  std::uint64_t n_nodes = 0;
  std::uint64_t n_arcs = 0;
  std::uint64_t max_out_degree = 0;
  std::string avg_out_degree;  // n_arcs / n_nodes, two decimals
};

EsdgStats stats(const Esdg& e);

// Full structural audit of a built graph against its source timetable:
// node/edge bijection, arc feasibility and chaining, per-successor minimality,
// out-degree bound, CSR and source-index consistency. Throws InternalError on
// the first violation.
void validate_esdg(const Esdg& e, const TemporalGraph& g);

}  // namespace tgr
