#include "tgr/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tgr {

namespace {

void check_query(const TemporalGraph& g, VertexId source, Time ready_time) {
  if (source >= g.vertex_count()) {
    throw InputError("source vertex " + std::to_string(source) + " out of range");
  }
  if (ready_time < 0) throw InputError("ready time must be non-negative");
}

}  // namespace

std::vector<Time> eat_fixpoint(const TemporalGraph& g, VertexId source,
                               Time ready_time, const OracleConfig& cfg) {
  check_query(g, source, ready_time);
  const std::uint32_t max_rounds =
      cfg.max_rounds != 0 ? cfg.max_rounds : g.vertex_count() + 1;

  std::vector<Time> eat(g.vertex_count(), kUnreachable);
  eat[source] = ready_time;
  for (std::uint32_t round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (const TemporalEdge& e : g.edges()) {
      if (e.t >= eat[e.u] && e.arrival() < eat[e.v]) {
        eat[e.v] = e.arrival();
        changed = true;
      }
    }
    if (!changed) return eat;
  }
  throw InternalError("eat_fixpoint did not converge within max_rounds");
}

std::vector<Time> eat_edge_stream(const TemporalGraph& g, VertexId source,
                                  Time ready_time) {
  check_query(g, source, ready_time);
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return g.edge(a).t < g.edge(b).t;
  });

  std::vector<Time> eat(g.vertex_count(), kUnreachable);
  eat[source] = ready_time;
  for (EdgeId id : order) {
    const TemporalEdge& e = g.edge(id);
    if (e.t >= eat[e.u] && e.arrival() < eat[e.v]) eat[e.v] = e.arrival();
  }
  return eat;
}

std::vector<Time> fpd_by_repeated_eat(const TemporalGraph& g, VertexId source,
                                      const OracleConfig& cfg) {
  check_query(g, source, 0);
  std::set<Time> departures;
  for (VertexId w : g.static_successors(source)) {
    for (EdgeId id : g.edges_on_pair(source, w)) {
      departures.insert(g.edge(id).t);
    }
  }

  std::vector<Time> journey(g.vertex_count(), kUnreachable);
  journey[source] = 0;
  for (Time t : departures) {
    const std::vector<Time> eat = eat_fixpoint(g, source, t, cfg);
    for (VertexId z = 0; z < g.vertex_count(); ++z) {
      if (eat[z] != kUnreachable && eat[z] - t < journey[z]) {
        journey[z] = eat[z] - t;
      }
    }
  }
  journey[source] = 0;
  return journey;
}

std::vector<std::vector<EdgeId>> enumerate_useful_dominating(
    const TemporalGraph& g, VertexId source, std::size_t max_len,
    const OracleConfig& cfg) {
  if (source >= g.vertex_count()) {
    throw InputError("source vertex " + std::to_string(source) + " out of range");
  }

  std::vector<std::vector<EdgeId>> result;
  std::uint64_t budget = cfg.enumeration_cap;
  TemporalPath path;
  Route route;
  route.vertices.push_back(source);

  auto dfs = [&](auto&& self, VertexId at, Time arrived) -> void {
    if (path.edge_ids.size() == max_len) return;
    for (VertexId w : g.static_successors(at)) {
      for (EdgeId id : g.edges_on_pair(at, w)) {
        const TemporalEdge& e = g.edge(id);
        if (!path.edge_ids.empty() && e.t < arrived) continue;
        if (budget == 0) {
          throw InputError("useful-dominating enumeration exceeded the cap");
        }
        --budget;
        path.edge_ids.push_back(id);
        route.vertices.push_back(w);
        // All prior prefixes are already dominating, so the extension is
        // useful dominating iff the whole path is dominating.
        if (is_dominating(g, path, route, cfg.enumeration_cap)) {
          result.push_back(path.edge_ids);
          self(self, w, e.arrival());
        }
        path.edge_ids.pop_back();
        route.vertices.pop_back();
      }
    }
  };
  dfs(dfs, source, 0);
  return result;
}

}  // namespace tgr
