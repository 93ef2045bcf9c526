#include "edsum/elliptic_sums.hpp"
#include "edsum/exact.hpp"
#include "edsum/sequences.hpp"
#include "json.hpp"

namespace edsum {

std::string to_json(const SumRecord& record) {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"a", record.pair.a()},
                 {"b", record.pair.b()},
                 {"kind", std::string(to_string(record.kind))},
                 {"route", std::string(to_string(record.route))}};
  doc["rows"] = nlohmann::ordered_json::array(
      {{{"value", record.value.to_string()}, {"approx", record.value.to_double()}}});
  return doc.dump(2) + "\n";
}

std::string to_json(const LatticeSumResult& result) {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"a", result.pair.a()},
                 {"b", result.pair.b()},
                 {"tau", {result.tau.re(), result.tau.im()}},
                 {"order", result.order},
                 {"terms", result.terms}};
  doc["rows"] = nlohmann::ordered_json::array(
      {{{"re", result.value.real()}, {"im", result.value.imag()}}});
  return doc.dump(2) + "\n";
}

std::string zero_pairs_to_json(const std::vector<ZeroPairRecord>& records) {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"count", records.size()}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : records)
    rows.push_back({{"a", r.a.get_str()}, {"b", r.b.get_str()}, {"expected", std::string(to_string(r.expected))}});
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace edsum
