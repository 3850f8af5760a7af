#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <vector>

#include "manetsim/audit.hpp"
#include "manetsim/counters.hpp"
#include "manetsim/packets.hpp"
#include "manetsim/rng.hpp"
#include "manetsim/scheduler.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

struct RadioParams {
  double range_m = 250.0;
  double bandwidth_bps = 2e6;
  double processing_delay_s = 1e-3;
  double loss_probability = 0.0;
  std::size_t queue_capacity = 50;
};

struct Outbound {
  Packet payload;
  ControlKind kind = ControlKind::Data;
  NodeId unicast_to = kNoNode;  // kNoNode == broadcast
};

/// Contention-free shared medium with one serializing transmitter per node.
/// A transmission occupies its sender for size/bandwidth seconds; receivers in
/// range at transmission start get a delivery after an extra per-hop
/// processing delay. Each node's transmitter has a bounded drop-tail queue.
class Radio {
 public:
  using PositionFn = std::function<Position(NodeId, SimTime)>;
  using DeliverFn = std::function<void(NodeId to, const Packet&, NodeId from)>;

  Radio(Scheduler& scheduler, RadioParams params, std::size_t node_count, PositionFn positions,
        DeliverFn deliver, RunCounters& counters, AuditLog& audit, std::uint64_t run_seed);

  /// Queues a packet on the sender's transmitter; transmission starts as soon
  /// as the transmitter is idle. Full queue drops the packet (drop-tail).
  void send(NodeId sender, Outbound out);

  /// Data packets sitting in transmit queues or in flight toward a receiver.
  std::uint64_t data_in_flight() const { return queued_data_ + pending_data_deliveries_; }

 private:
  void start_transmission(NodeId sender, Outbound out);
  void transmitter_idle(NodeId sender);

  Scheduler& scheduler_;
  RadioParams params_;
  PositionFn positions_;
  DeliverFn deliver_;
  RunCounters& counters_;
  AuditLog& audit_;
  Rng loss_rng_;

  struct Transmitter {
    bool busy = false;
    std::deque<Outbound> queue;
  };
  std::vector<Transmitter> transmitters_;
  std::uint64_t queued_data_ = 0;
  std::uint64_t pending_data_deliveries_ = 0;
  std::uint64_t next_tx_id_ = 1;
};

}  // namespace manetsim
