#include "manetsim/scheduler.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace manetsim {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::PacketDelivery: return "packet-delivery";
    case EventKind::Timer: return "timer";
    case EventKind::MobilityUpdate: return "mobility-update";
    case EventKind::TrafficGeneration: return "traffic-generation";
  }
  return "?";
}

EventHandle Scheduler::schedule(SimTime fire_at, EventKind kind, NodeId target,
                                std::function<void()> action) {
  if (!(fire_at >= now_)) {
    throw std::logic_error("scheduled event into the past: fire_at=" + std::to_string(fire_at) +
                           " now=" + std::to_string(now_));
  }
  const EventHandle handle = next_seq_++;
  heap_.push_back(Entry{fire_at, handle, kind, target, std::move(action)});
  std::push_heap(heap_.begin(), heap_.end(), After{});
  return handle;
}

void Scheduler::cancel(EventHandle handle) {
  if (handle < next_seq_) cancelled_.insert(handle);
}

std::size_t Scheduler::run_until(SimTime end) {
  std::size_t dispatched = 0;
  while (!heap_.empty() && heap_.front().at <= end) {
    std::pop_heap(heap_.begin(), heap_.end(), After{});
    Entry entry = std::move(heap_.back());
    heap_.pop_back();
    if (auto it = cancelled_.find(entry.seq); it != cancelled_.end()) {
      cancelled_.erase(it);
      continue;
    }
    now_ = entry.at;
    const DispatchRecord record{entry.at, entry.seq, entry.kind, entry.target};
    if (trace_) trace_->push_back(record);
    entry.action();
    ++dispatched;
    if (post_dispatch_) post_dispatch_(record);
  }
  if (end > now_) now_ = end;
  return dispatched;
}

}  // namespace manetsim
