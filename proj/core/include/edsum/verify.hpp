#pragma once

// Invariant sweep over the exact and elliptic engines, reported per identity.

#include <cstdint>
#include <string>
#include <vector>

#include "edsum/elliptic.hpp"

namespace edsum {

enum class VerifyScope { ExactOnly, Full };
std::string_view to_string(VerifyScope scope);
VerifyScope parse_scope(std::string_view name);  // "exact" | "full"

struct CheckResult {
  std::string label;
  bool asserted = true;  // reported-only checks never fail the suite
  bool passed = true;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  double worst_residual = 0.0;
  std::string detail;  // first failing case, if any
};

struct VerifyOptions {
  VerifyScope scope = VerifyScope::ExactOnly;
  std::int64_t bound = 30;
  std::vector<TauPoint> taus;  // empty: i, 2i and 0.3 + 1.5i
  double tol = 1e-6;           // cross-engine tolerance; definitional ones use 1e-8
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;
  std::int64_t elapsed_ms = 0;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

VerifyReport verify_suite(const VerifyOptions& options);

}  // namespace edsum
