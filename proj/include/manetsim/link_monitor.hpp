#pragma once

#include <map>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

/// Interval-based neighbor sensing shared by all protocols. Any control packet
/// heard from a neighbor refreshes its link; a neighbor silent for
/// loss_threshold consecutive sensing intervals is declared broken and removed
/// until heard again.
class LinkMonitor {
 public:
  explicit LinkMonitor(int loss_threshold) : loss_threshold_(loss_threshold) {}

  /// Records a control packet heard from `neighbor`. Returns true on first
  /// contact (link-up).
  bool note_heard(NodeId neighbor, SimTime now);

  /// Called once per sensing interval. Returns the neighbors that just crossed
  /// the loss threshold, ascending; they are dropped from the up set.
  std::vector<NodeId> tick(SimTime now);

  bool is_up(NodeId neighbor) const { return links_.count(neighbor) > 0; }
  std::vector<NodeId> up_neighbors() const;
  SimTime last_heard(NodeId neighbor) const;
  int misses(NodeId neighbor) const;

 private:
  struct LinkState {
    SimTime last_heard = 0.0;
    int misses = 0;
    bool heard_since_tick = true;
  };

  std::map<NodeId, LinkState> links_;
  int loss_threshold_;
};

}  // namespace manetsim
