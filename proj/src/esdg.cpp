#include "tgr/esdg.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace tgr {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Canonical continuation choice: minimum arrival, then latest departure, then
// smallest id. Equal-arrival edges on one pair share their continuation set,
// so keeping a single representative preserves all journeys.
bool better_continuation(const TemporalGraph& g, EdgeId a, EdgeId b) {
  const TemporalEdge& ea = g.edge(a);
  const TemporalEdge& eb = g.edge(b);
  if (ea.arrival() != eb.arrival()) return ea.arrival() < eb.arrival();
  if (ea.t != eb.t) return ea.t > eb.t;
  return a < b;
}

}  // namespace

Esdg build_esdg(const TemporalGraph& g) {
  const std::size_t m = g.edge_count();
  Esdg out;
  out.n_vertices_ = g.vertex_count();
  out.left_.resize(m);
  out.right_.resize(m);
  out.dep_.resize(m);
  out.arr_.resize(m);
  for (EdgeId id = 0; id < m; ++id) {
    const TemporalEdge& e = g.edge(id);
    out.left_[id] = e.u;
    out.right_[id] = e.v;
    out.dep_[id] = static_cast<std::uint32_t>(e.t);
    out.arr_[id] = static_cast<std::uint32_t>(e.arrival());
  }

  // Per pair: suffix minimum of arrival over the (dep, id)-sorted edge list,
  // carrying the canonical representative.
  std::unordered_map<std::uint64_t, std::vector<EdgeId>> suffix_best;
  suffix_best.reserve(m);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.static_successors(u)) {
      auto ids = g.edges_on_pair(u, v);
      std::vector<EdgeId> best(ids.size());
      best.back() = ids.back();
      for (std::size_t i = ids.size() - 1; i-- > 0;) {
        best[i] = better_continuation(g, ids[i], best[i + 1]) ? ids[i] : best[i + 1];
      }
      suffix_best.emplace(pair_key(u, v), std::move(best));
    }
  }

  out.offsets_.assign(m + 1, 0);
  for (NodeId x = 0; x < m; ++x) {
    const VertexId v = out.right_[x];
    const Time a = out.arr_[x];
    for (VertexId w : g.static_successors(v)) {
      auto ids = g.edges_on_pair(v, w);
      auto it = std::partition_point(ids.begin(), ids.end(),
                                     [&](EdgeId id) { return g.edge(id).t < a; });
      if (it == ids.end()) continue;  // no feasible continuation towards w
      const std::size_t idx = static_cast<std::size_t>(it - ids.begin());
      out.neighbors_.push_back(suffix_best.at(pair_key(v, w))[idx]);
    }
    out.offsets_[x + 1] = out.neighbors_.size();
  }

  // Per-source index: nodes bucketed by left endpoint, each bucket sorted by
  // departure (stable, so ids stay ascending within equal departures).
  out.source_offsets_.assign(g.vertex_count() + 1, 0);
  for (NodeId x = 0; x < m; ++x) ++out.source_offsets_[out.left_[x] + 1];
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    out.source_offsets_[u + 1] += out.source_offsets_[u];
  }
  out.source_nodes_.resize(m);
  {
    std::vector<std::uint64_t> cursor(out.source_offsets_.begin(),
                                      out.source_offsets_.end() - 1);
    for (NodeId x = 0; x < m; ++x) {
      out.source_nodes_[cursor[out.left_[x]]++] = x;
    }
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto begin = out.source_nodes_.begin() +
                 static_cast<std::ptrdiff_t>(out.source_offsets_[u]);
    auto end = out.source_nodes_.begin() +
               static_cast<std::ptrdiff_t>(out.source_offsets_[u + 1]);
    std::stable_sort(begin, end, [&](NodeId a, NodeId b) {
      return out.dep_[a] < out.dep_[b];
    });
  }
  return out;
}

namespace {

constexpr char kMagic[4] = {'E', 'S', 'D', 'G'};
constexpr std::uint32_t kVersion = 1;
// Refuse absurd counts before allocating; real feeds are far below this.
constexpr std::uint64_t kMaxPlausibleCount = 1ull << 40;

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff),
               static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v & 0xffffffffu));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    throw InputError("truncated ESDG stream");
  }
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t lo = get_u32(in);
  std::uint64_t hi = get_u32(in);
  return lo | (hi << 32);
}

void read_u32_array(std::istream& in, std::vector<std::uint32_t>& out,
                    std::uint64_t count) {
  if (count > kMaxPlausibleCount) throw InputError("implausible ESDG array size");
  out.resize(count);
  for (auto& v : out) v = get_u32(in);
}

void read_u64_array(std::istream& in, std::vector<std::uint64_t>& out,
                    std::uint64_t count) {
  if (count > kMaxPlausibleCount) throw InputError("implausible ESDG array size");
  out.resize(count);
  for (auto& v : out) v = get_u64(in);
}

void check_offsets(const std::vector<std::uint64_t>& offsets,
                   std::uint64_t total, const char* what) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != total) {
    throw InputError(std::string("ESDG ") + what + " offsets are inconsistent");
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) {
    if (offsets[i] < offsets[i - 1]) {
      throw InputError(std::string("ESDG ") + what + " offsets are not monotone");
    }
  }
}

}  // namespace

void Esdg::serialize(std::ostream& out) const {
  out.write(kMagic, 4);
  put_u32(out, kVersion);
  put_u64(out, n_vertices_);
  put_u64(out, node_count());
  put_u64(out, arc_count());
  for (std::uint64_t v : offsets_) put_u64(out, v);
  for (std::uint32_t v : neighbors_) put_u32(out, v);
  for (std::uint32_t v : left_) put_u32(out, v);
  for (std::uint32_t v : right_) put_u32(out, v);
  for (std::uint32_t v : dep_) put_u32(out, v);
  for (std::uint32_t v : arr_) put_u32(out, v);
  for (std::uint64_t v : source_offsets_) put_u64(out, v);
  for (std::uint32_t v : source_nodes_) put_u32(out, v);
}

Esdg Esdg::deserialize(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4)) throw InputError("truncated ESDG stream");
  if (!std::equal(magic, magic + 4, kMagic)) {
    throw InputError("bad ESDG magic");
  }
  const std::uint32_t version = get_u32(in);
  if (version != kVersion) {
    throw InputError("unsupported ESDG version " + std::to_string(version));
  }

  Esdg e;
  e.n_vertices_ = get_u64(in);
  const std::uint64_t n_nodes = get_u64(in);
  const std::uint64_t n_arcs = get_u64(in);
  if (e.n_vertices_ > kMaxPlausibleCount || n_nodes > kMaxPlausibleCount ||
      n_arcs > kMaxPlausibleCount) {
    throw InputError("implausible ESDG header counts");
  }
  read_u64_array(in, e.offsets_, n_nodes + 1);
  read_u32_array(in, e.neighbors_, n_arcs);
  read_u32_array(in, e.left_, n_nodes);
  read_u32_array(in, e.right_, n_nodes);
  read_u32_array(in, e.dep_, n_nodes);
  read_u32_array(in, e.arr_, n_nodes);
  read_u64_array(in, e.source_offsets_, e.n_vertices_ + 1);
  read_u32_array(in, e.source_nodes_, n_nodes);
  if (in.peek() != std::istream::traits_type::eof()) {
    throw InputError("trailing bytes after ESDG payload");
  }

  check_offsets(e.offsets_, n_arcs, "arc");
  check_offsets(e.source_offsets_, n_nodes, "source-index");
  for (std::uint32_t y : e.neighbors_) {
    if (y >= n_nodes) throw InputError("ESDG neighbor id out of range");
  }
  for (std::uint32_t x : e.source_nodes_) {
    if (x >= n_nodes) throw InputError("ESDG source-index node id out of range");
  }
  for (std::uint64_t x = 0; x < n_nodes; ++x) {
    if (e.left_[x] >= e.n_vertices_ || e.right_[x] >= e.n_vertices_) {
      throw InputError("ESDG node endpoint out of range");
    }
    if (e.arr_[x] <= e.dep_[x]) {
      throw InputError("ESDG node arrival not after departure");
    }
  }
  return e;
}

void save_esdg(const Esdg& e, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + path);
  e.serialize(out);
  if (!out) throw InputError("failed writing ESDG to " + path);
}

Esdg load_esdg(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open ESDG file: " + path);
  return Esdg::deserialize(in);
}

EsdgStats stats(const Esdg& e) {
  EsdgStats s;
  s.n_vertices = e.vertex_count();
  s.n_nodes = e.node_count();
  s.n_arcs = e.arc_count();
  for (NodeId x = 0; x < s.n_nodes; ++x) {
    s.max_out_degree = std::max<std::uint64_t>(s.max_out_degree,
                                               e.neighbors(x).size());
  }
  if (s.n_nodes == 0) {
    s.avg_out_degree = "0.00";
  } else {
    // Round half up at two decimals with integer arithmetic.
    unsigned __int128 hundredths =
        (static_cast<unsigned __int128>(s.n_arcs) * 200 + s.n_nodes) /
        (static_cast<unsigned __int128>(s.n_nodes) * 2);
    std::uint64_t h = static_cast<std::uint64_t>(hundredths);
    std::string frac = std::to_string(h % 100);
    if (frac.size() < 2) frac.insert(frac.begin(), '0');
    s.avg_out_degree = std::to_string(h / 100) + "." + frac;
  }
  return s;
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw InternalError("ESDG validation failed: " + what);
}

}  // namespace

void validate_esdg(const Esdg& e, const TemporalGraph& g) {
  if (e.vertex_count() != g.vertex_count()) invalid("vertex count mismatch");
  if (e.node_count() != g.edge_count()) invalid("node/edge count mismatch");
  const std::uint64_t m = e.node_count();

  for (NodeId x = 0; x < m; ++x) {
    const TemporalEdge& ed = g.edge(x);
    if (e.left(x) != ed.u || e.right(x) != ed.v || e.dep(x) != ed.t ||
        e.arr(x) != ed.arrival()) {
      invalid("node " + std::to_string(x) + " does not mirror its edge");
    }
  }

  for (NodeId x = 0; x < m; ++x) {
    auto arcs = e.neighbors(x);
    auto succ = g.static_successors(e.right(x));
    if (arcs.size() > succ.size()) {
      invalid("node " + std::to_string(x) + " out-degree exceeds static out-degree");
    }
    std::size_t arc_idx = 0;
    for (VertexId w : succ) {
      // Recompute the feasible set on (right(x), w) and its canonical minimum.
      EdgeId expect = 0;
      bool any = false;
      for (EdgeId f : g.edges_on_pair(e.right(x), w)) {
        if (g.edge(f).t < e.arr(x)) continue;
        if (!any || better_continuation(g, f, expect)) expect = f;
        any = true;
      }
      if (!any) continue;
      if (arc_idx >= arcs.size()) {
        invalid("node " + std::to_string(x) + " missing arc towards vertex " +
                std::to_string(w));
      }
      const NodeId y = arcs[arc_idx++];
      if (y != expect) {
        invalid("node " + std::to_string(x) + " arc target " + std::to_string(y) +
                " is not the canonical continuation " + std::to_string(expect));
      }
      if (e.left(y) != e.right(x)) invalid("arc endpoints do not chain");
      if (e.dep(y) < e.arr(x)) invalid("arc target departs before source arrives");
    }
    if (arc_idx != arcs.size()) {
      invalid("node " + std::to_string(x) + " has spurious arcs");
    }
  }

  std::vector<bool> seen(m, false);
  std::uint64_t total = 0;
  for (VertexId u = 0; u < e.vertex_count(); ++u) {
    auto nodes = e.source_nodes(u);
    total += nodes.size();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const NodeId x = nodes[i];
      if (e.left(x) != u) invalid("source index lists a foreign node");
      if (seen[x]) invalid("source index repeats a node");
      seen[x] = true;
      if (i > 0) {
        const NodeId p = nodes[i - 1];
        if (e.dep(p) > e.dep(x) || (e.dep(p) == e.dep(x) && p >= x)) {
          invalid("source index not sorted by (dep, id)");
        }
      }
    }
  }
  if (total != m) invalid("source index does not cover all nodes");
}

}  // namespace tgr
