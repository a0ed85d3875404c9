#include "tgr/transit_ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace tgr {

namespace {

struct Csv {
  std::string file;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split_csv_row(const std::string& line,
                                       const std::string& file,
                                       std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {  // escaped quote
          cur.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (in_quotes) {
    throw InputError(file + " line " + std::to_string(line_no) +
                     ": unterminated quoted field");
  }
  fields.push_back(std::move(cur));
  return fields;
}

Csv read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);

  Csv csv;
  csv.file = std::filesystem::path(path).filename().string();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (csv.header.empty() && line.size() >= 3 &&
        static_cast<unsigned char>(line[0]) == 0xEF &&
        static_cast<unsigned char>(line[1]) == 0xBB &&
        static_cast<unsigned char>(line[2]) == 0xBF) {
      line.erase(0, 3);  // UTF-8 BOM
    }
    auto fields = split_csv_row(line, csv.file, line_no);
    if (csv.header.empty()) {
      csv.header = std::move(fields);
    } else {
      if (fields.size() != csv.header.size()) {
        throw InputError(csv.file + " line " + std::to_string(line_no) + ": has " +
                         std::to_string(fields.size()) + " fields, header has " +
                         std::to_string(csv.header.size()));
      }
      csv.rows.push_back(std::move(fields));
    }
  }
  if (csv.header.empty()) throw InputError(path + " is empty");
  return csv;
}

std::size_t column(const Csv& csv, const std::string& name) {
  auto it = std::find(csv.header.begin(), csv.header.end(), name);
  if (it == csv.header.end()) {
    throw InputError(csv.file + ": missing required column '" + name + "'");
  }
  return static_cast<std::size_t>(it - csv.header.begin());
}

std::int64_t parse_sequence(const std::string& text, const std::string& file,
                            std::size_t row) {
  if (text.empty()) {
    throw InputError(file + " row " + std::to_string(row) + ": empty stop_sequence");
  }
  std::int64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9' || value > (1ll << 40)) {
      throw InputError(file + " row " + std::to_string(row) +
                       ": bad stop_sequence '" + text + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Time parse_gtfs_time(std::string_view text) {
  // H+:MM:SS with minutes/seconds below 60; hours unbounded within reason.
  const auto bad = [&]() -> InputError {
    return InputError("unparseable time '" + std::string(text) + "'");
  };
  const std::size_t c1 = text.find(':');
  if (c1 == std::string_view::npos || c1 == 0) throw bad();
  const std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || c2 != c1 + 3 || text.size() != c2 + 3) {
    throw bad();
  }
  Time hours = 0;
  for (std::size_t i = 0; i < c1; ++i) {
    if (text[i] < '0' || text[i] > '9' || hours > 1000000) throw bad();
    hours = hours * 10 + (text[i] - '0');
  }
  const auto two = [&](std::size_t at) -> Time {
    if (text[at] < '0' || text[at] > '9' || text[at + 1] < '0' ||
        text[at + 1] > '9') {
      throw bad();
    }
    return (text[at] - '0') * 10 + (text[at + 1] - '0');
  };
  const Time minutes = two(c1 + 1);
  const Time seconds = two(c2 + 1);
  if (minutes > 59 || seconds > 59) throw bad();
  return hours * 3600 + minutes * 60 + seconds;
}

GtfsLiteFeed read_gtfs_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path base(dir);
  if (!fs::is_directory(base)) {
    throw InputError("GTFS directory not found: " + dir);
  }
  const auto require = [&](const char* name) {
    fs::path p = base / name;
    if (!fs::is_regular_file(p)) {
      throw InputError("missing " + std::string(name) + " in " + dir);
    }
    return p.string();
  };

  GtfsLiteFeed feed;

  const Csv trips = read_csv_file(require("trips.txt"));
  const std::size_t trip_col = column(trips, "trip_id");
  for (const auto& row : trips.rows) feed.trips.push_back(row[trip_col]);

  if (fs::is_regular_file(base / "stops.txt")) {
    const Csv stops = read_csv_file((base / "stops.txt").string());
    const std::size_t stop_col = column(stops, "stop_id");
    for (const auto& row : stops.rows) feed.stops.push_back(row[stop_col]);
  }

  const Csv st = read_csv_file(require("stop_times.txt"));
  const std::size_t c_trip = column(st, "trip_id");
  const std::size_t c_seq = column(st, "stop_sequence");
  const std::size_t c_arr = column(st, "arrival_time");
  const std::size_t c_dep = column(st, "departure_time");
  const std::size_t c_stop = column(st, "stop_id");
  feed.stop_times.reserve(st.rows.size());
  for (std::size_t i = 0; i < st.rows.size(); ++i) {
    const auto& row = st.rows[i];
    GtfsStopTime s;
    s.trip_id = row[c_trip];
    s.stop_sequence = parse_sequence(row[c_seq], st.file, i + 2);
    if (!row[c_arr].empty()) s.arrival = parse_gtfs_time(row[c_arr]);
    if (!row[c_dep].empty()) s.departure = parse_gtfs_time(row[c_dep]);
    s.stop_id = row[c_stop];
    feed.stop_times.push_back(std::move(s));
  }
  return feed;
}

ConvertResult gtfs_to_temporal(const GtfsLiteFeed& feed) {
  ConvertResult out;

  const auto vertex_of = [&](const std::string& stop_id) -> VertexId {
    auto [it, inserted] = out.label_to_vertex.try_emplace(
        stop_id, static_cast<VertexId>(out.vertex_labels.size()));
    if (inserted) out.vertex_labels.push_back(stop_id);
    return it->second;
  };
  for (const std::string& stop : feed.stops) vertex_of(stop);
  for (const GtfsStopTime& s : feed.stop_times) vertex_of(s.stop_id);

  std::unordered_map<std::string, std::size_t> trip_index;
  for (std::size_t i = 0; i < feed.trips.size(); ++i) {
    if (!trip_index.emplace(feed.trips[i], i).second) {
      throw InputError("duplicate trip_id '" + feed.trips[i] + "'");
    }
  }
  std::vector<std::vector<const GtfsStopTime*>> by_trip(feed.trips.size());
  for (const GtfsStopTime& s : feed.stop_times) {
    auto it = trip_index.find(s.trip_id);
    if (it == trip_index.end()) {
      throw InputError("stop_times references unknown trip_id '" + s.trip_id + "'");
    }
    by_trip[it->second].push_back(&s);
  }

  std::vector<TemporalEdge> edges;
  std::unordered_map<std::string, std::uint64_t> multiplicity;
  for (std::size_t ti = 0; ti < by_trip.size(); ++ti) {
    const auto& rows = by_trip[ti];
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i]->stop_sequence <= rows[i - 1]->stop_sequence) {
        throw InputError("trip '" + feed.trips[ti] +
                         "': stop_sequence is not strictly increasing");
      }
      const GtfsStopTime& a = *rows[i - 1];
      const GtfsStopTime& b = *rows[i];
      if (!a.departure) {
        throw InputError("trip '" + feed.trips[ti] +
                         "': missing departure_time at stop_sequence " +
                         std::to_string(a.stop_sequence));
      }
      if (!b.arrival) {
        throw InputError("trip '" + feed.trips[ti] +
                         "': missing arrival_time at stop_sequence " +
                         std::to_string(b.stop_sequence));
      }
      const Time lambda = *b.arrival - *a.departure;
      if (lambda <= 0) {
        ++out.stats.rows_dropped_nonpositive;
        continue;
      }
      TemporalEdge e{vertex_of(a.stop_id), vertex_of(b.stop_id), *a.departure,
                     lambda};
      std::string key = std::to_string(e.u) + "," + std::to_string(e.v) + "," +
                        std::to_string(e.t) + "," + std::to_string(e.lambda);
      if (++multiplicity[key] > 1) ++out.stats.duplicate_edges;
      edges.push_back(e);
    }
  }

  out.stats.edges_emitted = edges.size();
  out.graph = TemporalGraph(static_cast<VertexId>(out.vertex_labels.size()),
                            std::move(edges));
  return out;
}

void write_labels_tsv(const ConvertResult& converted, std::ostream& out) {
  out << "vertex\tstop_id\n";
  for (std::size_t v = 0; v < converted.vertex_labels.size(); ++v) {
    out << v << '\t' << converted.vertex_labels[v] << '\n';
  }
}

}  // namespace tgr
