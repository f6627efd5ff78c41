#pragma once

#include <stdexcept>
#include <string>

namespace permfact {

// Error taxonomy. Every throwing path uses one of these so the CLI can map
// failures to machine-readable kinds and exit codes.
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg) : std::runtime_error(msg), kind(std::move(k)) {}
};

struct AmbientMismatch : Error {
  explicit AmbientMismatch(const std::string& msg) : Error("ambient-mismatch", msg) {}
};

struct DomainViolation : Error {
  explicit DomainViolation(const std::string& msg) : Error("domain-error", msg) {}
};

struct PreconditionViolation : Error {
  explicit PreconditionViolation(const std::string& msg) : Error("precondition-error", msg) {}
};

struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& msg) : Error("resource-error", msg) {}
};

struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& msg) : Error("internal-consistency-error", msg) {}
};

struct UnsupportedFamily : Error {
  explicit UnsupportedFamily(const std::string& msg) : Error("unsupported-family", msg) {}
};

struct StructuralError : Error {
  explicit StructuralError(const std::string& msg) : Error("structural-error", msg) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("usage-error", msg) {}
};

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw InternalInconsistency(msg);
}

}  // namespace permfact
