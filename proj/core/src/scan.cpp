#include "edsum/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <sstream>

#include "edsum/errors.hpp"
#include "edsum/parallel.hpp"
#include "json.hpp"

namespace edsum {

int default_worker_count() {
  if (const char* env = std::getenv("EDSUM_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

std::string_view to_string(ConjectureLaw law) { return law == ConjectureLaw::Mod4 ? "mod4" : "mod12"; }

ConjectureLaw parse_law(std::string_view name) {
  if (name == "mod4") return ConjectureLaw::Mod4;
  if (name == "mod12") return ConjectureLaw::Mod12;
  throw DomainError("unknown law '" + std::string(name) + "' (expected mod4 or mod12)");
}

bool qualifies(std::int64_t a, std::int64_t b, ConjectureLaw law) {
  if (a % 2 != 0 || b % 2 == 0 || b < 1 || a == 0) return false;
  if (gcd64(a, b) != 1) return false;
  if (law == ConjectureLaw::Mod12) {
    const auto r = floor_mod(b, 6);
    if (r != 1 && r != 5) return false;
  }
  return true;
}

bool ScanReport::same_findings(const ScanReport& other) const {
  return a_range == other.a_range && b_range == other.b_range && law == other.law &&
         checked == other.checked && violations == other.violations;
}

std::string ScanReport::to_csv() const {
  std::ostringstream out;
  out << "a,b,bQ\n";
  for (const auto& v : violations) out << v.a << ',' << v.b << ',' << v.observed << '\n';
  return out.str();
}

std::string ScanReport::to_json(const ScanOptions& options) const {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"law", std::string(edsum::to_string(law))},
                 {"a_range", {a_range.min, a_range.max}},
                 {"b_range", {b_range.min, b_range.max}},
                 {"route", std::string(edsum::to_string(options.route))},
                 {"workers", options.workers},
                 {"checked", checked},
                 {"violations", violations.size()},
                 {"elapsed_ms", elapsed_ms}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& v : violations) rows.push_back({{"a", v.a}, {"b", v.b}, {"bQ", v.observed}});
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

namespace {

void sort_violations(std::vector<ScanViolation>& v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
}

}  // namespace

ScanReport conjecture_scan(IntRange a_range, IntRange b_range, ConjectureLaw law,
                           const ScanOptions& options) {
  if (a_range.min < 1 || b_range.min < 1 || a_range.max < a_range.min || b_range.max < b_range.min)
    throw DomainError("scan ranges must be nonempty and positive");
  if (a_range.max >= kMaxPairMagnitude || b_range.max >= kMaxPairMagnitude)
    throw DomainError("scan range exceeds the supported magnitude");
  if (options.route == Route::Definition) throw DomainError("route 'definition' cannot scan Q");

  const auto start = std::chrono::steady_clock::now();
  const BigInt modulus = law == ConjectureLaw::Mod4 ? 4 : 12;

  // One work item per b, largest first so the long rows start early.
  const std::int64_t rows = b_range.max - b_range.min + 1;
  std::vector<std::vector<ScanViolation>> found(static_cast<std::size_t>(rows));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(rows), 0);
  parallel_for(rows, options.workers, [&](std::int64_t i) {
    const auto slot = static_cast<std::size_t>(i);
    const std::int64_t b = b_range.max - i;
    for (std::int64_t a = a_range.min; a <= a_range.max; ++a) {
      if (!qualifies(a, b, law)) continue;
      ++counts[slot];
      const BigRational bq = BigRational(b) * q_value(CoprimePair::make(a, b), options.route);
      const bool ok = bq.is_integer() && mpz_divisible_p(bq.numerator().get_mpz_t(),
                                                         modulus.get_mpz_t()) != 0;
      if (!ok) found[slot].push_back({a, b, bq.to_string()});
    }
  });

  ScanReport report;
  report.a_range = a_range;
  report.b_range = b_range;
  report.law = law;
  for (std::size_t i = 0; i < found.size(); ++i) {
    report.checked += counts[i];
    report.violations.insert(report.violations.end(), found[i].begin(), found[i].end());
  }
  sort_violations(report.violations);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

ScanReport merge_reports(const std::vector<ScanReport>& parts) {
  if (parts.empty()) throw DomainError("nothing to merge");
  ScanReport out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (p.law != out.law) throw DomainError("cannot merge scans of different laws");
    out.a_range.min = std::min(out.a_range.min, p.a_range.min);
    out.a_range.max = std::max(out.a_range.max, p.a_range.max);
    out.b_range.min = std::min(out.b_range.min, p.b_range.min);
    out.b_range.max = std::max(out.b_range.max, p.b_range.max);
    out.checked += p.checked;
    out.elapsed_ms += p.elapsed_ms;
    out.violations.insert(out.violations.end(), p.violations.begin(), p.violations.end());
  }
  sort_violations(out.violations);
  return out;
}

}  // namespace edsum
