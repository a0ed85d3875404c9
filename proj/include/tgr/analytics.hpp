#pragma once

#include <cstdint>
#include <optional>

#include "tgr/esdg.hpp"
#include "tgr/fpd.hpp"
#include "tgr/types.hpp"

namespace tgr {

struct CoverageReport {
  VertexId source = 0;
  Time eccentricity = kUnreachable;
  std::optional<Time> k;                     // echoed when a count was requested
  std::optional<std::uint64_t> coverage_count;
  std::optional<double> percent;             // echoed when a time was requested
  std::optional<Time> coverage_time;
};

// Largest fastest-path duration over all other vertices; kUnreachable as soon
// as any vertex cannot be reached at all.
Time eccentricity(const Esdg& e, VertexId source);

// Number of vertices whose fastest-path duration is at most k, the source
// included (its journey is 0). Runs the duration-bounded traversal, which is
// count-equivalent to the full computation.
std::uint64_t coverage_count(const Esdg& e, VertexId source, Time k);

// Smallest duration d with coverage_count(source, d) >= ceil(percent * n /
// 100), i.e. the k-th smallest journey value; kUnreachable when fewer vertices
// are reachable. percent must be in (0, 100].
Time coverage_time(const Esdg& e, VertexId source, double percent);

// All of the above from a single fastest-duration run.
CoverageReport coverage_report(const Esdg& e, VertexId source,
                               std::optional<Time> k,
                               std::optional<double> percent);

}  // namespace tgr
