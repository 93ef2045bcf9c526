#include "edsum/tables.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "edsum/errors.hpp"
#include "edsum/parallel.hpp"

namespace edsum {

namespace {

std::vector<std::int64_t> stepped(std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = from; v <= to; v += 2) out.push_back(v);
  return out;
}

bool row_parity_ok(TableKind kind, std::int64_t b) {
  return kind == TableKind::T2BqOddA ? (b % 2 == 0) : (b % 2 != 0);
}

bool col_parity_ok(TableKind kind, std::int64_t a) {
  return kind == TableKind::T2BqOddA ? (a % 2 != 0) : (a % 2 == 0);
}

}  // namespace

std::string_view to_string(TableKind kind) {
  switch (kind) {
    case TableKind::T1BqEvenA: return "t1";
    case TableKind::T2BqOddA: return "t2";
    case TableKind::T3Quarter: return "t3";
  }
  return "?";
}

TableKind parse_table_kind(std::string_view name) {
  if (name == "t1") return TableKind::T1BqEvenA;
  if (name == "t2") return TableKind::T2BqOddA;
  if (name == "t3") return TableKind::T3Quarter;
  throw DomainError("unknown table '" + std::string(name) + "' (expected t1, t2 or t3)");
}

TableSpec TableSpec::standard(TableKind which) {
  switch (which) {
    case TableKind::T1BqEvenA: return {which, stepped(1, 21), stepped(2, 22)};
    case TableKind::T2BqOddA: return {which, stepped(2, 22), stepped(1, 21)};
    case TableKind::T3Quarter: return {which, stepped(3, 33), stepped(2, 32)};
  }
  throw DomainError("unknown table kind");
}

void TableSpec::validate() const {
  for (auto b : rows) {
    if (b < 1) throw DomainError("table row b must be >= 1, got " + std::to_string(b));
    if (!row_parity_ok(which, b))
      throw DomainError("row b = " + std::to_string(b) + " has the wrong parity for " +
                        std::string(to_string(which)));
  }
  for (auto a : cols) {
    if (a < 1) throw DomainError("table column a must be >= 1, got " + std::to_string(a));
    if (!col_parity_ok(which, a))
      throw DomainError("column a = " + std::to_string(a) + " has the wrong parity for " +
                        std::string(to_string(which)));
  }
}

std::string RenderedTable::cell_text(std::size_t row, std::size_t col, bool human) const {
  const auto& cell = cells.at(row).at(col);
  switch (cell.state) {
    case CellState::Blank: return "";
    case CellState::NotCoprime: return "*";
    case CellState::Value: return human ? cell.value.to_human() : cell.value.to_string();
  }
  return "";
}

std::string RenderedTable::to_text() const {
  std::vector<std::string> header{"b\\a"};
  for (auto a : spec.cols) header.push_back(std::to_string(a));
  std::vector<std::vector<std::string>> lines{header};
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    std::vector<std::string> line{std::to_string(spec.rows[r])};
    for (std::size_t c = 0; c < spec.cols.size(); ++c) line.push_back(cell_text(r, c, true));
    lines.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : lines)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());

  std::ostringstream out;
  for (const auto& line : lines) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) text += "  ";
      text += std::string(width[i] - line[i].size(), ' ') + line[i];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
  return out.str();
}

std::string RenderedTable::to_csv() const {
  std::ostringstream out;
  out << "b\\a";
  for (auto a : spec.cols) out << ',' << a;
  out << '\n';
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    out << spec.rows[r];
    for (std::size_t c = 0; c < spec.cols.size(); ++c) out << ',' << cell_text(r, c, false);
    out << '\n';
  }
  return out.str();
}

std::string RenderedTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"table", std::string(to_string(spec.which))},
                 {"cell", spec.which == TableKind::T3Quarter ? "bQ/4" : "bQ"},
                 {"cols", spec.cols}};
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < spec.cols.size(); ++c) {
      if (cells[r][c].state == CellState::Blank)
        row.push_back(nullptr);
      else
        row.push_back(cell_text(r, c, false));
    }
    rows.push_back({{"b", spec.rows[r]}, {"cells", std::move(row)}});
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

RenderedTable render_table(const TableSpec& spec, Route route, int workers) {
  spec.validate();
  RenderedTable table{spec, {}};
  table.cells.assign(spec.rows.size(), std::vector<TableCell>(spec.cols.size()));
  const BigRational quarter(1, 4);
  parallel_for(static_cast<std::int64_t>(spec.rows.size()), workers, [&](std::int64_t r) {
    const auto b = spec.rows[static_cast<std::size_t>(r)];
    for (std::size_t c = 0; c < spec.cols.size(); ++c) {
      const auto a = spec.cols[c];
      auto& cell = table.cells[static_cast<std::size_t>(r)][c];
      if (spec.which == TableKind::T3Quarter && a >= b) {
        cell.state = CellState::Blank;
        continue;
      }
      auto pair = CoprimePair::try_make(a, b);
      if (!pair) {
        cell.state = CellState::NotCoprime;
        continue;
      }
      BigRational bq = BigRational(b) * q_value(*pair, route);
      if (spec.which == TableKind::T3Quarter) bq = bq * quarter;
      cell.state = CellState::Value;
      cell.value = std::move(bq);
    }
  });
  return table;
}

}  // namespace edsum
