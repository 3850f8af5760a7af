#include "manetsim/link_monitor.hpp"

namespace manetsim {

bool LinkMonitor::note_heard(NodeId neighbor, SimTime now) {
  auto [it, inserted] = links_.try_emplace(neighbor);
  it->second.last_heard = now;
  it->second.misses = 0;
  it->second.heard_since_tick = true;
  return inserted;
}

std::vector<NodeId> LinkMonitor::tick(SimTime now) {
  (void)now;
  std::vector<NodeId> broken;
  for (auto it = links_.begin(); it != links_.end();) {
    LinkState& link = it->second;
    if (!link.heard_since_tick && ++link.misses >= loss_threshold_) {
      broken.push_back(it->first);
      it = links_.erase(it);
      continue;
    }
    link.heard_since_tick = false;
    ++it;
  }
  return broken;
}

std::vector<NodeId> LinkMonitor::up_neighbors() const {
  std::vector<NodeId> up;
  up.reserve(links_.size());
  for (const auto& [id, _] : links_) up.push_back(id);
  return up;
}

SimTime LinkMonitor::last_heard(NodeId neighbor) const {
  auto it = links_.find(neighbor);
  return it == links_.end() ? -1.0 : it->second.last_heard;
}

int LinkMonitor::misses(NodeId neighbor) const {
  auto it = links_.find(neighbor);
  return it == links_.end() ? -1 : it->second.misses;
}

}  // namespace manetsim
