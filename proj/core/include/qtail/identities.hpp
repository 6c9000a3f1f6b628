#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtail/series.hpp"

namespace qtail {

struct VerifyOptions {
  std::int64_t terms = 100;
  int jobs = 1;
  /// Test hook: add q^7 to the right-hand side of every comparison.
  bool perturb = false;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> u;
  std::optional<std::int64_t> n;
  /// Family for the stabilize identity: "phi" or "lk-product".
  std::string family = "lk-product";
};

struct IdentityCheck {
  std::string identity;
  std::string label;
  bool passed = false;
  /// Expected mismatch kept for the record; does not affect the verdict.
  bool informational = false;
  ComparisonReport report;
  std::string note;
};

/// Names: false-theta-chain, fock2, and1, corollary, phi-85, routes-lk,
/// stabilize, jones-match.
const std::vector<std::string>& identity_names();

/// Throws PreconditionViolated for an unknown name.
std::vector<IdentityCheck> verify_identity(std::string_view name, const VerifyOptions& opt);

bool all_passed(const std::vector<IdentityCheck>& checks);

std::string to_json(const IdentityCheck& c);
std::string to_json(const ComparisonReport& r);

/// Coefficient window used for route comparisons of rational skein values.
inline constexpr std::int64_t kRouteWindow = 40;

}  // namespace qtail
