#pragma once

// Range scans of the divisibility laws bQ(a;b) in 4Z (a even, b odd) and
// bQ(a;b) in 12Z (additionally b = +-1 mod 6). Scans enumerate findings; they
// never assume the law.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edsum/exact.hpp"

namespace edsum {

enum class ConjectureLaw { Mod4, Mod12 };
std::string_view to_string(ConjectureLaw law);
ConjectureLaw parse_law(std::string_view name);  // "mod4" | "mod12"

struct IntRange {
  std::int64_t min;
  std::int64_t max;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct ScanViolation {
  std::int64_t a;
  std::int64_t b;
  std::string observed;  // bQ(a;b) as "p/q"
  friend bool operator==(const ScanViolation&, const ScanViolation&) = default;
};

struct ScanOptions {
  int workers = 1;
  Route route = Route::MainResult;
};

struct ScanReport {
  IntRange a_range;
  IntRange b_range;
  ConjectureLaw law = ConjectureLaw::Mod4;
  std::int64_t checked = 0;
  std::vector<ScanViolation> violations;  // sorted by (a, b)
  std::int64_t elapsed_ms = 0;

  /// Equal findings; timing is ignored.
  bool same_findings(const ScanReport& other) const;
  std::string to_csv() const;
  std::string to_json(const ScanOptions& options) const;
};

/// Whether (a;b) is counted by the law's filter (coprime, a even, b odd, and
/// b = +-1 mod 6 for Mod12).
bool qualifies(std::int64_t a, std::int64_t b, ConjectureLaw law);

/// Throws DomainError for empty or nonpositive ranges.
ScanReport conjecture_scan(IntRange a_range, IntRange b_range, ConjectureLaw law,
                           const ScanOptions& options = {});

/// Combines reports over disjoint sub-rectangles of one law. The merged range
/// is the bounding box; violations are re-sorted.
ScanReport merge_reports(const std::vector<ScanReport>& parts);

}  // namespace edsum
