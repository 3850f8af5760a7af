#include "manetsim/routing_table.hpp"

namespace manetsim {

void RoutingTable::install(NodeId dest, NodeId next_hop, std::uint32_t metric,
                           std::int64_t sequence, SimTime now) {
  RouteEntry& e = entries_[dest];
  const SimTime used = e.last_used;
  e = RouteEntry{dest, next_hop, metric, sequence, now, true, used};
}

void RoutingTable::invalidate(NodeId dest) {
  auto it = entries_.find(dest);
  if (it == entries_.end()) return;
  it->second.valid = false;
  it->second.next_hop = kNoNode;
  it->second.metric = kInfMetric;
}

std::optional<RouteEntry> RoutingTable::lookup(NodeId dest) const {
  auto it = entries_.find(dest);
  if (it == entries_.end() || !it->second.valid) return std::nullopt;
  return it->second;
}

void RoutingTable::mark_used(NodeId dest, SimTime now) {
  auto it = entries_.find(dest);
  if (it != entries_.end()) it->second.last_used = now;
}

SimTime RoutingTable::last_used(NodeId dest) const {
  auto it = entries_.find(dest);
  return it == entries_.end() ? -1.0 : it->second.last_used;
}

std::size_t RoutingTable::valid_count() const {
  std::size_t n = 0;
  for (const auto& [_, e] : entries_) n += e.valid ? 1 : 0;
  return n;
}

std::vector<RouteEntry> RoutingTable::snapshot() const {
  std::vector<RouteEntry> out;
  out.reserve(entries_.size());
  for (const auto& [_, e] : entries_) out.push_back(e);
  return out;
}

ForwardDecision decide_forward(const RoutingTable& table, const DataPacket& pkt,
                               std::uint32_t ttl_hops) {
  if (pkt.hops_traversed >= ttl_hops) return ForwardDecision{ForwardAction::DropTtl, kNoNode};
  const auto entry = table.lookup(pkt.destination);
  if (!entry) return ForwardDecision{ForwardAction::DropNoRoute, kNoNode};
  return ForwardDecision{ForwardAction::Forward, entry->next_hop};
}

}  // namespace manetsim
