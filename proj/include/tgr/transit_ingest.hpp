#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tgr/temporal_graph.hpp"
#include "tgr/types.hpp"

namespace tgr {

// Minimal slice of a GTFS feed: stop ids, trip ids, and the per-trip stop
// events. Calendars, frequencies, transfers and footpaths are out of scope;
// the timetable alone defines the temporal edges.
struct GtfsStopTime {
  std::string trip_id;
  std::int64_t stop_sequence = 0;
  std::optional<Time> arrival;    // seconds since service start
  std::optional<Time> departure;
  std::string stop_id;
};

struct GtfsLiteFeed {
  std::vector<std::string> stops;  // may be empty: ids then come from stop_times
  std::vector<std::string> trips;
  std::vector<GtfsStopTime> stop_times;
};

struct ConvertStats {
  std::uint64_t edges_emitted = 0;
  std::uint64_t rows_dropped_nonpositive = 0;  // consecutive pairs with lambda <= 0
  std::uint64_t duplicate_edges = 0;           // emitted edges identical to an earlier one
};

struct ConvertResult {
  TemporalGraph graph;
  std::vector<std::string> vertex_labels;  // vertex id -> stop id
  std::unordered_map<std::string, VertexId> label_to_vertex;
  ConvertStats stats;
};

// "HH:MM:SS" to seconds; hours may exceed 24 (overnight trips keep running
// past 86400, preserving time-respecting order).
Time parse_gtfs_time(std::string_view text);

// Reads trips.txt and stop_times.txt (stops.txt optionally) from a directory.
// CSV with a header row, columns located by name, minimal quoting support.
GtfsLiteFeed read_gtfs_dir(const std::string& dir);

// One temporal edge per consecutive stop pair of every trip: departs at the
// first stop's departure time, duration is the second stop's arrival minus
// that. Pairs with non-positive duration are dropped and counted. Vertices are
// the distinct stop ids in first-appearance order (stops list first, then
// stop_times).
ConvertResult gtfs_to_temporal(const GtfsLiteFeed& feed);

void write_labels_tsv(const ConvertResult& converted, std::ostream& out);

}  // namespace tgr
