#include "tgr/temporal_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string_view>

namespace tgr {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

TemporalGraph::TemporalGraph(VertexId n, std::vector<TemporalEdge> edges,
                             Time max_time)
    : n_(n), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const TemporalEdge& e = edges_[i];
    if (e.u >= n_ || e.v >= n_) {
      throw InputError("edge " + std::to_string(i) +
                       ": endpoint out of range [0, " + std::to_string(n_) + ")");
    }
    if (e.lambda < 1) {
      throw InputError("edge " + std::to_string(i) + ": lambda must be >= 1");
    }
    if (e.t < 0) {
      throw InputError("edge " + std::to_string(i) +
                       ": departure time must be non-negative");
    }
    if (e.t > max_time || e.arrival() > max_time) {
      throw InputError("edge " + std::to_string(i) +
                       ": arrival time exceeds the maximum " +
                       std::to_string(max_time));
    }
  }

  // Group edge ids by (u, v); within a group sort by (t, id).
  pair_edges_.resize(edges_.size());
  std::iota(pair_edges_.begin(), pair_edges_.end(), EdgeId{0});
  std::sort(pair_edges_.begin(), pair_edges_.end(), [&](EdgeId a, EdgeId b) {
    const TemporalEdge& ea = edges_[a];
    const TemporalEdge& eb = edges_[b];
    if (ea.u != eb.u) return ea.u < eb.u;
    if (ea.v != eb.v) return ea.v < eb.v;
    if (ea.t != eb.t) return ea.t < eb.t;
    return a < b;
  });

  succ_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  std::size_t i = 0;
  while (i < pair_edges_.size()) {
    const TemporalEdge& e = edges_[pair_edges_[i]];
    std::size_t j = i;
    while (j < pair_edges_.size() && edges_[pair_edges_[j]].u == e.u &&
           edges_[pair_edges_[j]].v == e.v) {
      ++j;
    }
    pair_index_.emplace(pair_key(e.u, e.v),
                        std::make_pair(static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(j - i)));
    succ_.push_back(e.v);  // groups are sorted by (u, v): successors come out sorted
    ++succ_offsets_[e.u + 1];
    i = j;
  }
  for (VertexId u = 0; u < n_; ++u) succ_offsets_[u + 1] += succ_offsets_[u];
}

const TemporalEdge& TemporalGraph::edge(EdgeId id) const {
  if (id >= edges_.size()) {
    throw InputError("edge id " + std::to_string(id) + " out of range");
  }
  return edges_[id];
}

std::span<const EdgeId> TemporalGraph::edges_on_pair(VertexId u,
                                                     VertexId v) const {
  auto it = pair_index_.find(pair_key(u, v));
  if (it == pair_index_.end()) return {};
  return {pair_edges_.data() + it->second.first, it->second.second};
}

std::span<const VertexId> TemporalGraph::static_successors(VertexId u) const {
  if (u >= n_) return {};
  return {succ_.data() + succ_offsets_[u], succ_offsets_[u + 1] - succ_offsets_[u]};
}

namespace {

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

// Strict non-negative decimal with overflow check.
std::uint64_t parse_uint(std::string_view field, std::size_t line_no,
                         const char* what) {
  if (field.empty()) fail_line(line_no, std::string(what) + " is empty");
  std::uint64_t value = 0;
  for (char c : field) {
    if (c < '0' || c > '9') {
      fail_line(line_no, std::string(what) + " is not a non-negative integer: '" +
                             std::string(field) + "'");
    }
    if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
      fail_line(line_no, std::string(what) + " overflows: '" + std::string(field) + "'");
    }
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

// Fields separated by single spaces; no leading/trailing blanks.
std::vector<std::string_view> split_fields(std::string_view line,
                                           std::size_t expected,
                                           std::size_t line_no) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ' ') {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  if (fields.size() != expected) {
    fail_line(line_no, "expected " + std::to_string(expected) +
                           " space-separated fields, got " +
                           std::to_string(fields.size()));
  }
  return fields;
}

}  // namespace

TemporalGraph parse_edge_list(std::istream& in, Time max_time) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<TemporalEdge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    if (!have_header) {
      auto f = split_fields(line, 2, line_no);
      n = parse_uint(f[0], line_no, "vertex count");
      m = parse_uint(f[1], line_no, "edge count");
      if (n > std::numeric_limits<VertexId>::max()) {
        fail_line(line_no, "vertex count too large");
      }
      if (m > std::numeric_limits<EdgeId>::max()) {
        fail_line(line_no, "edge count too large");
      }
      edges.reserve(m);
      have_header = true;
      continue;
    }

    if (edges.size() == m) {
      fail_line(line_no, "more than " + std::to_string(m) + " edge lines");
    }
    auto f = split_fields(line, 4, line_no);
    std::uint64_t u = parse_uint(f[0], line_no, "tail vertex");
    std::uint64_t v = parse_uint(f[1], line_no, "head vertex");
    std::uint64_t t = parse_uint(f[2], line_no, "departure time");
    std::uint64_t lambda = parse_uint(f[3], line_no, "duration");
    if (u >= n || v >= n) {
      fail_line(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    }
    if (lambda < 1) fail_line(line_no, "lambda must be >= 1");
    if (t > static_cast<std::uint64_t>(max_time) ||
        lambda > static_cast<std::uint64_t>(max_time) ||
        t + lambda > static_cast<std::uint64_t>(max_time)) {
      fail_line(line_no, "arrival time exceeds the maximum " +
                             std::to_string(max_time));
    }
    edges.push_back(TemporalEdge{static_cast<VertexId>(u),
                                 static_cast<VertexId>(v),
                                 static_cast<Time>(t),
                                 static_cast<Time>(lambda)});
  }

  if (!have_header) throw InputError("missing 'n m' header line");
  if (edges.size() != m) {
    throw InputError("expected " + std::to_string(m) + " edge lines, got " +
                     std::to_string(edges.size()));
  }
  return TemporalGraph(static_cast<VertexId>(n), std::move(edges), max_time);
}

TemporalGraph parse_edge_list_file(const std::string& path, Time max_time) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list file: " + path);
  return parse_edge_list(in, max_time);
}

void write_edge_list(const TemporalGraph& g, std::ostream& out) {
  out << "# tgr edge-list v1\n";
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const TemporalEdge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.t << ' ' << e.lambda << '\n';
  }
}

void write_edge_list_file(const TemporalGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: keep '\n' on all platforms
  if (!out) throw InputError("cannot open output file: " + path);
  write_edge_list(g, out);
  if (!out) throw InputError("failed writing edge list to " + path);
}

bool is_time_respecting(const TemporalGraph& g, std::span<const EdgeId> seq) {
  if (seq.empty()) return false;
  for (EdgeId id : seq) (void)g.edge(id);  // id validation
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const TemporalEdge& prev = g.edge(seq[i - 1]);
    const TemporalEdge& cur = g.edge(seq[i]);
    if (prev.v != cur.u) return false;
    if (cur.t < prev.arrival()) return false;
  }
  return true;
}

Time journey_time(const TemporalGraph& g, const TemporalPath& p) {
  if (!is_time_respecting(g, p.edge_ids)) {
    throw InputError("journey_time: path is not time-respecting");
  }
  return g.edge(p.edge_ids.back()).arrival() - g.edge(p.edge_ids.front()).t;
}

Route route_of(const TemporalGraph& g, const TemporalPath& p) {
  if (p.edge_ids.empty()) throw InputError("route_of: empty path");
  Route r;
  r.vertices.push_back(g.edge(p.edge_ids.front()).u);
  for (std::size_t i = 0; i < p.edge_ids.size(); ++i) {
    const TemporalEdge& e = g.edge(p.edge_ids[i]);
    if (e.u != r.vertices.back()) {
      throw InputError("route_of: edges do not chain at position " +
                       std::to_string(i));
    }
    r.vertices.push_back(e.v);
  }
  return r;
}

namespace {

// Minimum arrival over all time-respecting paths through r that depart at
// exactly `dep`. Exhaustive DFS over the per-pair edge lists; each candidate
// edge examined consumes one unit of budget.
Time min_arrival_on_route(const TemporalGraph& g, const Route& r, Time dep,
                          std::uint64_t& budget) {
  const std::size_t hops = r.vertices.size() - 1;
  Time best = kUnreachable;

  // Recursion depth is bounded by the route length.
  auto dfs = [&](auto&& self, std::size_t hop, Time arr) -> void {
    if (hop == hops) {
      best = std::min(best, arr);
      return;
    }
    for (EdgeId id : g.edges_on_pair(r.vertices[hop], r.vertices[hop + 1])) {
      const TemporalEdge& e = g.edge(id);
      if (hop == 0 ? e.t != dep : e.t < arr) continue;
      if (budget == 0) {
        throw InputError("dominance check exceeded the enumeration cap");
      }
      --budget;
      if (e.arrival() >= best) continue;  // cannot improve the minimum
      self(self, hop + 1, e.arrival());
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

void check_goes_through(const TemporalGraph& g, const TemporalPath& p,
                        const Route& r) {
  if (p.edge_ids.empty()) throw InputError("dominance check: empty path");
  if (r.vertices.size() != p.edge_ids.size() + 1) {
    throw InputError("path does not go through the route: length mismatch");
  }
  for (std::size_t i = 0; i < p.edge_ids.size(); ++i) {
    const TemporalEdge& e = g.edge(p.edge_ids[i]);
    if (e.u != r.vertices[i] || e.v != r.vertices[i + 1]) {
      throw InputError("path does not go through the route at hop " +
                       std::to_string(i));
    }
  }
  if (!is_time_respecting(g, p.edge_ids)) {
    throw InputError("dominance check: path is not time-respecting");
  }
}

}  // namespace

bool is_dominating(const TemporalGraph& g, const TemporalPath& p,
                   const Route& r, std::uint64_t enumeration_cap) {
  check_goes_through(g, p, r);
  const Time dep = g.edge(p.edge_ids.front()).t;
  const Time arr = g.edge(p.edge_ids.back()).arrival();
  std::uint64_t budget = enumeration_cap;
  return arr <= min_arrival_on_route(g, r, dep, budget);
}

bool is_useful_dominating(const TemporalGraph& g, const TemporalPath& p,
                          const Route& r, std::uint64_t enumeration_cap) {
  check_goes_through(g, p, r);
  for (std::size_t len = 1; len <= p.edge_ids.size(); ++len) {
    TemporalPath prefix{{p.edge_ids.begin(), p.edge_ids.begin() + len}};
    Route prefix_route{{r.vertices.begin(), r.vertices.begin() + len + 1}};
    if (!is_dominating(g, prefix, prefix_route, enumeration_cap)) return false;
  }
  return true;
}

}  // namespace tgr
