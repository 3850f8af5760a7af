#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace manetsim {

/// Simulation clock, in seconds.
using SimTime = double;

/// Dense node identifier in [0, node_count).
using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Hop metric sentinel for unreachable/invalidated routes.
inline constexpr std::uint32_t kInfMetric = std::numeric_limits<std::uint32_t>::max();

struct Position {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace manetsim
