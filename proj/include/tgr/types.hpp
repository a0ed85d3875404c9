#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tgr {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// All times are abstract non-negative integers (seconds when the graph comes
// from a timetable feed). Kept signed and wide so intermediate arithmetic and
// sentinels never overflow the on-disk 32-bit representation.
using Time = std::int64_t;

// Sentinel for "no arrival / no journey"; strictly greater than any valid time.
// Rendered as "inf" in all text output.
inline constexpr Time kUnreachable = std::numeric_limits<Time>::max();

// Largest admissible arrival time. Keeps per-node times within 32 bits in the
// serialized graph.
inline constexpr Time kDefaultMaxTime = 2147483647;  // 2^31 - 1

inline std::string time_to_string(Time t) {
  return t == kUnreachable ? "inf" : std::to_string(t);
}

// Problem with the input: malformed file, out-of-range argument, oversized
// enumeration. Maps to exit code 2 in the CLI.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; indicates a bug rather than bad input. Maps to
// exit code 3 in the CLI.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tgr
