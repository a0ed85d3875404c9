#include "tgr/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tgr {

namespace {

Time eccentricity_of(const std::vector<Time>& journey, VertexId source) {
  Time worst = 0;
  for (VertexId z = 0; z < journey.size(); ++z) {
    if (z == source) continue;
    if (journey[z] == kUnreachable) return kUnreachable;
    worst = std::max(worst, journey[z]);
  }
  return worst;
}

std::uint64_t count_within(const std::vector<Time>& journey, Time k) {
  std::uint64_t count = 0;
  for (Time j : journey) {
    if (j <= k) ++count;  // kUnreachable never passes
  }
  return count;
}

// ceil(percent * n / 100) with a guard against representation fuzz on exact
// multiples (e.g. 50% of 6).
std::uint64_t required_count(double percent, std::uint64_t n) {
  const double exact = percent * static_cast<double>(n) / 100.0;
  const double rounded = std::round(exact);
  double need = (std::abs(exact - rounded) < 1e-9) ? rounded : std::ceil(exact);
  if (need < 1.0) need = 1.0;
  if (need > static_cast<double>(n)) need = static_cast<double>(n);
  return static_cast<std::uint64_t>(need);
}

Time coverage_time_of(const std::vector<Time>& journey, double percent) {
  std::vector<Time> finite;
  finite.reserve(journey.size());
  for (Time j : journey) {
    if (j != kUnreachable) finite.push_back(j);
  }
  const std::uint64_t need = required_count(percent, journey.size());
  if (finite.size() < need) return kUnreachable;
  std::nth_element(finite.begin(), finite.begin() + (need - 1), finite.end());
  return finite[need - 1];
}

}  // namespace

Time eccentricity(const Esdg& e, VertexId source) {
  return eccentricity_of(fastest_duration(e, source).journey, source);
}

std::uint64_t coverage_count(const Esdg& e, VertexId source, Time k) {
  if (k < 0) throw InputError("coverage bound k must be non-negative");
  FpdOptions opts;
  opts.max_duration = k;
  return count_within(fastest_duration(e, source, opts).journey, k);
}

Time coverage_time(const Esdg& e, VertexId source, double percent) {
  if (!(percent > 0.0 && percent <= 100.0)) {
    throw InputError("percent must be in (0, 100]");
  }
  return coverage_time_of(fastest_duration(e, source).journey, percent);
}

CoverageReport coverage_report(const Esdg& e, VertexId source,
                               std::optional<Time> k,
                               std::optional<double> percent) {
  if (k && *k < 0) throw InputError("coverage bound k must be non-negative");
  if (percent && !(*percent > 0.0 && *percent <= 100.0)) {
    throw InputError("percent must be in (0, 100]");
  }

  const FpdResult full = fastest_duration(e, source);
  CoverageReport report;
  report.source = source;
  report.eccentricity = eccentricity_of(full.journey, source);
  if (k) {
    report.k = k;
    report.coverage_count = count_within(full.journey, *k);
  }
  if (percent) {
    report.percent = percent;
    report.coverage_time = coverage_time_of(full.journey, *percent);
  }
  return report;
}

}  // namespace tgr
