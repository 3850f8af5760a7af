#include "manetsim/audit.hpp"

#include <cinttypes>
#include <tuple>

namespace manetsim {

const char* to_string(DropCause cause) {
  switch (cause) {
    case DropCause::NoRoute: return "noroute";
    case DropCause::Ttl: return "ttl";
    case DropCause::Queue: return "queue";
    case DropCause::Radio: return "radio";
  }
  return "?";
}

bool operator==(const AuditRecord& a, const AuditRecord& b) {
  auto key = [](const AuditRecord& r) {
    return std::make_tuple(r.type, r.at, r.node, r.peer, r.kind, r.cause, r.packet_id,
                           r.size_bytes, r.created_at, r.value, r.trigger);
  };
  return key(a) == key(b);
}

std::string to_line(const AuditRecord& r) {
  char buf[192];
  int n = 0;
  switch (r.type) {
    case AuditRecord::Type::Transmit:
      n = std::snprintf(buf, sizeof buf, "tx t=%.9f node=%u kind=%s size=%u id=%" PRIu64, r.at,
                        r.node, to_string(r.kind), r.size_bytes, r.packet_id);
      break;
    case AuditRecord::Type::Receive:
      n = std::snprintf(buf, sizeof buf, "rx t=%.9f node=%u from=%u kind=%s id=%" PRIu64, r.at,
                        r.node, r.peer, to_string(r.kind), r.packet_id);
      break;
    case AuditRecord::Type::Generate:
      n = std::snprintf(buf, sizeof buf, "gen t=%.9f node=%u dest=%u size=%u id=%" PRIu64, r.at,
                        r.node, r.peer, r.size_bytes, r.packet_id);
      break;
    case AuditRecord::Type::Deliver:
      n = std::snprintf(buf, sizeof buf, "deliver t=%.9f node=%u size=%u id=%" PRIu64 " created=%.9f",
                        r.at, r.node, r.size_bytes, r.packet_id, r.created_at);
      break;
    case AuditRecord::Type::Drop:
      n = std::snprintf(buf, sizeof buf, "drop t=%.9f node=%u cause=%s kind=%s id=%" PRIu64, r.at,
                        r.node, to_string(r.cause), to_string(r.kind), r.packet_id);
      break;
    case AuditRecord::Type::LinkUp:
      n = std::snprintf(buf, sizeof buf, "link t=%.9f node=%u peer=%u state=up", r.at, r.node, r.peer);
      break;
    case AuditRecord::Type::LinkDown:
      n = std::snprintf(buf, sizeof buf, "link t=%.9f node=%u peer=%u state=down", r.at, r.node,
                        r.peer);
      break;
    case AuditRecord::Type::TcOriginate:
      n = std::snprintf(buf, sizeof buf, "tco t=%.9f node=%u mode=%s seq=%" PRId64, r.at, r.node,
                        r.trigger ? "trigger" : "periodic", r.value);
      break;
    case AuditRecord::Type::SelectorCensus:
      n = std::snprintf(buf, sizeof buf, "census t=%.9f node=%u selectors=%" PRId64, r.at, r.node,
                        r.value);
      break;
  }
  return std::string(buf, static_cast<std::size_t>(n));
}

void AuditLog::write(std::FILE* out) const {
  for (const auto& r : records_) {
    const std::string line = to_line(r);
    std::fwrite(line.data(), 1, line.size(), out);
    std::fputc('\n', out);
  }
}

}  // namespace manetsim
