#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "manetsim/packets.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

struct RouteEntry {
  NodeId destination = kNoNode;
  NodeId next_hop = kNoNode;
  std::uint32_t metric = kInfMetric;
  std::int64_t sequence = 0;  // distance-vector only; 0 elsewhere
  SimTime installed_at = 0.0;
  bool valid = false;
  SimTime last_used = -1.0;
};

/// Per-node forwarding table. Protocols install and invalidate entries; the
/// forwarding path reads them and stamps usage times.
class RoutingTable {
 public:
  void install(NodeId dest, NodeId next_hop, std::uint32_t metric, std::int64_t sequence,
               SimTime now);
  void invalidate(NodeId dest);
  void erase(NodeId dest) { entries_.erase(dest); }
  void clear() { entries_.clear(); }

  /// Valid entries only.
  std::optional<RouteEntry> lookup(NodeId dest) const;

  void mark_used(NodeId dest, SimTime now);
  SimTime last_used(NodeId dest) const;

  std::size_t valid_count() const;
  std::vector<RouteEntry> snapshot() const;

 private:
  std::map<NodeId, RouteEntry> entries_;
};

enum class ForwardAction : std::uint8_t { Forward, DropNoRoute, DropTtl };

struct ForwardDecision {
  ForwardAction action = ForwardAction::DropNoRoute;
  NodeId next_hop = kNoNode;
};

/// Hop-by-hop forwarding rule: drop once the packet has consumed its hop
/// budget, otherwise relay to the table's next hop if a valid entry exists.
ForwardDecision decide_forward(const RoutingTable& table, const DataPacket& pkt,
                               std::uint32_t ttl_hops);

}  // namespace manetsim
