#include "manetsim/mobility.hpp"

#include <cassert>

namespace manetsim {

Mobility::Mobility(std::vector<Position> initial, double area_x, double area_y,
                   MobilityConfig config, std::uint64_t run_seed)
    : area_x_(area_x), area_y_(area_y), config_(config) {
  segments_.reserve(initial.size());
  streams_.reserve(initial.size());
  for (std::size_t i = 0; i < initial.size(); ++i) {
    segments_.push_back(Segment{initial[i], initial[i], 0.0, 0.0, true});
    streams_.emplace_back(derive_seed(run_seed, "mobility", i));
  }
}

Position Mobility::draw_waypoint(NodeId node) {
  Rng& rng = streams_[node];
  return Position{rng.uniform(0.0, area_x_), rng.uniform(0.0, area_y_)};
}

SimTime Mobility::begin_leg(NodeId node, SimTime now) {
  Segment& seg = segments_[node];
  Position target = draw_waypoint(node);
  double dist = distance(seg.target, target);
  // A waypoint landing on the current position would make a zero-length leg;
  // redraw so arrival times stay strictly ahead of departure.
  while (dist < 1e-9) {
    target = draw_waypoint(node);
    dist = distance(seg.target, target);
  }
  seg.from = seg.target;
  seg.target = target;
  seg.depart_at = now;
  seg.arrive_at = now + dist / config_.speed_mps;
  seg.paused = false;
  return seg.arrive_at;
}

SimTime Mobility::start(NodeId node, SimTime now) {
  assert(moves());
  return begin_leg(node, now);
}

SimTime Mobility::on_transition(NodeId node, SimTime now) {
  Segment& seg = segments_[node];
  if (!seg.paused) {
    // Arrived: sit at the waypoint for the configured pause.
    seg.from = seg.target;
    seg.depart_at = now;
    seg.paused = true;
    return now + config_.pause_s;
  }
  return begin_leg(node, now);
}

Position Mobility::position_at(NodeId node, SimTime t) const {
  const Segment& seg = segments_[node];
  if (seg.paused || t <= seg.depart_at) return seg.from;
  const SimTime clamped = t < seg.arrive_at ? t : seg.arrive_at;
  const double frac = (clamped - seg.depart_at) / (seg.arrive_at - seg.depart_at);
  return Position{seg.from.x + (seg.target.x - seg.from.x) * frac,
                  seg.from.y + (seg.target.y - seg.from.y) * frac};
}

}  // namespace manetsim
