#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "manetsim/packets.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

enum class DropCause : std::uint8_t { NoRoute, Ttl, Queue, Radio };

const char* to_string(DropCause cause);

/// One line of the per-run audit trail. `type` selects which fields are
/// meaningful; unused fields stay at their defaults.
struct AuditRecord {
  enum class Type : std::uint8_t {
    Transmit,       // node sent a packet (kind, size, packet_id)
    Receive,        // node received a packet from peer
    Generate,       // traffic source created a data packet (packet_id, size)
    Deliver,        // data packet reached its destination (created_at carried)
    Drop,           // packet discarded (cause)
    LinkUp,         // node first heard peer
    LinkDown,       // node declared the link to peer broken
    TcOriginate,    // node originated a topology message (trigger flag)
    SelectorCensus, // node's selector count at a topology tick (value)
  };

  Type type = Type::Transmit;
  SimTime at = 0.0;
  NodeId node = kNoNode;
  NodeId peer = kNoNode;
  ControlKind kind = ControlKind::Data;
  DropCause cause = DropCause::NoRoute;
  std::uint64_t packet_id = 0;
  std::uint32_t size_bytes = 0;
  SimTime created_at = 0.0;
  std::int64_t value = 0;  // census count, TC sequence
  bool trigger = false;
};

bool operator==(const AuditRecord& a, const AuditRecord& b);

std::string to_line(const AuditRecord& r);

/// In-memory audit trail. Disabled by default so large runs pay nothing.
class AuditLog {
 public:
  void enable() { enabled_ = true; }
  bool enabled() const { return enabled_; }
  void add(const AuditRecord& r) {
    if (enabled_) records_.push_back(r);
  }
  const std::vector<AuditRecord>& records() const { return records_; }
  void write(std::FILE* out) const;

 private:
  bool enabled_ = false;
  std::vector<AuditRecord> records_;
};

}  // namespace manetsim
