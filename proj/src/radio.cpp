#include "manetsim/radio.hpp"

namespace manetsim {

Radio::Radio(Scheduler& scheduler, RadioParams params, std::size_t node_count,
             PositionFn positions, DeliverFn deliver, RunCounters& counters, AuditLog& audit,
             std::uint64_t run_seed)
    : scheduler_(scheduler),
      params_(params),
      positions_(std::move(positions)),
      deliver_(std::move(deliver)),
      counters_(counters),
      audit_(audit),
      loss_rng_(derive_seed(run_seed, "radio-loss")),
      transmitters_(node_count) {}

void Radio::send(NodeId sender, Outbound out) {
  Transmitter& tx = transmitters_[sender];
  if (!tx.busy) {
    tx.busy = true;
    start_transmission(sender, std::move(out));
    return;
  }
  if (tx.queue.size() >= params_.queue_capacity) {
    const bool data = is_data(out.payload);
    if (data) {
      ++counters_.drops_queue_data;
      audit_.add(AuditRecord{AuditRecord::Type::Drop, scheduler_.now(), sender, kNoNode,
                             ControlKind::Data, DropCause::Queue,
                             std::get<DataPacket>(out.payload).id, 0, 0.0, 0, false});
    } else {
      ++counters_.drops_queue_control;
      audit_.add(AuditRecord{AuditRecord::Type::Drop, scheduler_.now(), sender, kNoNode, out.kind,
                             DropCause::Queue, 0, 0, 0.0, 0, false});
    }
    return;
  }
  if (is_data(out.payload)) ++queued_data_;
  tx.queue.push_back(std::move(out));
}

void Radio::start_transmission(NodeId sender, Outbound out) {
  const SimTime now = scheduler_.now();
  const std::uint32_t size = packet_size_bytes(out.payload);
  const SimTime tx_delay = static_cast<double>(size) * 8.0 / params_.bandwidth_bps;
  const SimTime delivery_at = now + tx_delay + params_.processing_delay_s;
  const bool data = is_data(out.payload);
  const std::uint64_t packet_id = data ? std::get<DataPacket>(out.payload).id : next_tx_id_++;

  if (data) {
    ++counters_.data_tx;
  } else {
    ++counters_.control_tx[static_cast<std::size_t>(out.kind)];
  }
  audit_.add(AuditRecord{AuditRecord::Type::Transmit, now, sender, kNoNode, out.kind,
                         DropCause::NoRoute, packet_id, size, 0.0, 0, false});

  const Position from = positions_(sender, now);
  std::vector<NodeId> recipients;
  if (out.unicast_to == kNoNode) {
    for (NodeId n = 0; n < transmitters_.size(); ++n) {
      if (n == sender) continue;
      if (distance(from, positions_(n, now)) <= params_.range_m) recipients.push_back(n);
    }
  } else if (distance(from, positions_(out.unicast_to, now)) <= params_.range_m) {
    recipients.push_back(out.unicast_to);
  } else if (data) {
    ++counters_.drops_radio_data;
    audit_.add(AuditRecord{AuditRecord::Type::Drop, now, sender, out.unicast_to, ControlKind::Data,
                           DropCause::Radio, packet_id, 0, 0.0, 0, false});
  }

  for (NodeId to : recipients) {
    if (params_.loss_probability > 0.0 && loss_rng_.bernoulli(params_.loss_probability)) {
      if (data) {
        ++counters_.drops_radio_data;
        audit_.add(AuditRecord{AuditRecord::Type::Drop, now, to, sender, ControlKind::Data,
                               DropCause::Radio, packet_id, 0, 0.0, 0, false});
      } else {
        ++counters_.drops_radio_control;
      }
      continue;
    }
    if (data) ++pending_data_deliveries_;
    scheduler_.schedule(delivery_at, EventKind::PacketDelivery, to,
                        [this, to, sender, payload = out.payload, kind = out.kind,
                         packet_id]() {
                          if (is_data(payload)) --pending_data_deliveries_;
                          audit_.add(AuditRecord{AuditRecord::Type::Receive, scheduler_.now(), to,
                                                 sender, kind, DropCause::NoRoute, packet_id, 0,
                                                 0.0, 0, false});
                          deliver_(to, payload, sender);
                        });
  }

  scheduler_.schedule(now + tx_delay, EventKind::Timer, sender,
                      [this, sender]() { transmitter_idle(sender); });
}

void Radio::transmitter_idle(NodeId sender) {
  Transmitter& tx = transmitters_[sender];
  if (tx.queue.empty()) {
    tx.busy = false;
    return;
  }
  Outbound next = std::move(tx.queue.front());
  tx.queue.pop_front();
  if (is_data(next.payload)) --queued_data_;
  start_transmission(sender, std::move(next));
}

}  // namespace manetsim
