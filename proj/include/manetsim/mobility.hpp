#pragma once

#include <cstdint>
#include <vector>

#include "manetsim/rng.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

enum class MobilityModel : std::uint8_t { Static, Waypoint };

struct MobilityConfig {
  MobilityModel model = MobilityModel::Waypoint;
  double speed_mps = 20.0;
  double pause_s = 2.0;
};

/// Random-waypoint motion over a rectangular field. Each node alternates
/// between travelling at constant speed toward a uniformly drawn waypoint and
/// pausing at it. Waypoint draws come from per-node seeded streams.
///
/// The owner drives the model by scheduling an event at the time returned by
/// start()/on_transition() and calling on_transition() when it fires.
class Mobility {
 public:
  Mobility(std::vector<Position> initial, double area_x, double area_y, MobilityConfig config,
           std::uint64_t run_seed);

  bool moves() const { return config_.model == MobilityModel::Waypoint; }
  std::size_t node_count() const { return segments_.size(); }

  /// Draws the first waypoint for `node` and returns its arrival time.
  SimTime start(NodeId node, SimTime now);

  /// Advances the node's phase (arrival -> pause, pause end -> new leg) and
  /// returns the next transition time.
  SimTime on_transition(NodeId node, SimTime now);

  Position position_at(NodeId node, SimTime t) const;

 private:
  struct Segment {
    Position from;
    Position target;
    SimTime depart_at = 0.0;
    SimTime arrive_at = 0.0;
    bool paused = true;
  };

  Position draw_waypoint(NodeId node);
  SimTime begin_leg(NodeId node, SimTime now);

  std::vector<Segment> segments_;
  std::vector<Rng> streams_;
  double area_x_;
  double area_y_;
  MobilityConfig config_;
};

}  // namespace manetsim
