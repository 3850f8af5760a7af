#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

enum class EventKind : std::uint8_t {
  PacketDelivery,
  Timer,
  MobilityUpdate,
  TrafficGeneration,
};

const char* to_string(EventKind kind);

/// Handle returned by Scheduler::schedule; also the event's tie-break sequence.
using EventHandle = std::uint64_t;

struct DispatchRecord {
  SimTime at = 0.0;
  std::uint64_t sequence = 0;
  EventKind kind = EventKind::Timer;
  NodeId target = kNoNode;
};

/// Single-run event queue and clock. Events fire in (time, insertion sequence)
/// order, which makes simultaneous events reproducible.
class Scheduler {
 public:
  /// Queues an event. fire_at must be >= now(); scheduling into the past is a
  /// programming bug and throws.
  EventHandle schedule(SimTime fire_at, EventKind kind, NodeId target,
                       std::function<void()> action);

  /// Cancels a pending event. Unknown or already-dispatched handles are ignored.
  void cancel(EventHandle handle);

  /// Dispatches every event with fire_at <= end and advances the clock to end
  /// (even when the queue drains early). Returns the dispatch count.
  std::size_t run_until(SimTime end);

  SimTime now() const { return now_; }
  bool empty() const { return heap_.size() == cancelled_.size(); }
  std::size_t pending() const { return heap_.size() - cancelled_.size(); }

  /// Optional sink receiving one record per dispatched event, in order.
  void set_trace(std::vector<DispatchRecord>* sink) { trace_ = sink; }

  /// Optional hook invoked after each event's action has run.
  void set_post_dispatch(std::function<void(const DispatchRecord&)> hook) {
    post_dispatch_ = std::move(hook);
  }

 private:
  struct Entry {
    SimTime at;
    std::uint64_t seq;
    EventKind kind;
    NodeId target;
    std::function<void()> action;
  };
  struct After {
    bool operator()(const Entry& a, const Entry& b) const {
      return a.at > b.at || (a.at == b.at && a.seq > b.seq);
    }
  };

  std::vector<Entry> heap_;
  std::set<EventHandle> cancelled_;
  SimTime now_ = 0.0;
  std::uint64_t next_seq_ = 0;
  std::vector<DispatchRecord>* trace_ = nullptr;
  std::function<void(const DispatchRecord&)> post_dispatch_;
};

}  // namespace manetsim
