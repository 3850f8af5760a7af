#pragma once

#include <functional>
#include <memory>

#include "manetsim/audit.hpp"
#include "manetsim/counters.hpp"
#include "manetsim/link_monitor.hpp"
#include "manetsim/packets.hpp"
#include "manetsim/routing_table.hpp"
#include "manetsim/scheduler.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

/// Everything a routing protocol instance may ask of its node. The simulator
/// implements this against the kernel; unit tests implement it with scripts.
class ProtocolHost {
 public:
  virtual ~ProtocolHost() = default;

  virtual NodeId self() const = 0;
  virtual SimTime now() const = 0;

  virtual void broadcast_control(Packet packet, ControlKind kind) = 0;
  virtual EventHandle schedule(SimTime at, std::function<void()> action) = 0;
  virtual void cancel(EventHandle handle) = 0;

  virtual RoutingTable& routes() = 0;
  virtual RunCounters& counters() = 0;
  virtual ProtocolStats& stats() = 0;
  virtual AuditLog& audit() = 0;
};

class RoutingProtocol {
 public:
  virtual ~RoutingProtocol() = default;

  /// Schedules the protocol's timers. Called once at t=0; no packet is sent
  /// before the first timer fires.
  virtual void start() = 0;

  virtual void handle_control(const Packet& packet, NodeId from) = 0;

  /// Brings the routing table up to date before a forwarding decision.
  /// Protocols that recompute eagerly leave this empty.
  virtual void prepare_routes() {}

  const LinkMonitor& monitor() const { return monitor_; }

 protected:
  RoutingProtocol(ProtocolHost& host, int link_loss_threshold)
      : host_(host), monitor_(link_loss_threshold) {}

  /// Feeds the link monitor; self-messages are rejected. Returns true when
  /// this was the first contact with `from`.
  bool heard(NodeId from) {
    if (from == host_.self()) return false;
    const bool up = monitor_.note_heard(from, host_.now());
    if (up) {
      host_.audit().add(AuditRecord{AuditRecord::Type::LinkUp, host_.now(), host_.self(), from,
                                    ControlKind::Data, DropCause::NoRoute, 0, 0, 0.0, 0, false});
    }
    return up;
  }

  void audit_link_down(NodeId peer) {
    ++host_.stats().link_breaks;
    host_.audit().add(AuditRecord{AuditRecord::Type::LinkDown, host_.now(), host_.self(), peer,
                                  ControlKind::Data, DropCause::NoRoute, 0, 0, 0.0, 0, false});
  }

  ProtocolHost& host_;
  LinkMonitor monitor_;
};

}  // namespace manetsim
