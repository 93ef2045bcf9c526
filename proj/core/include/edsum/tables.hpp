#pragma once

// The bQ(a;b) grids: T1 (b odd x a even), T2 (b even x a odd) and the
// triangular T3 holding bQ(a;b)/4 (b odd rows, a even columns, a < b).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edsum/big_rational.hpp"
#include "edsum/exact.hpp"

namespace edsum {

enum class TableKind { T1BqEvenA, T2BqOddA, T3Quarter };

std::string_view to_string(TableKind kind);
TableKind parse_table_kind(std::string_view name);  // "t1" | "t2" | "t3"

struct TableSpec {
  TableKind which;
  std::vector<std::int64_t> rows;  // b values
  std::vector<std::int64_t> cols;  // a values

  /// T1: b = 1,3..21, a = 2,4..22.  T2: b = 2..22 even, a = 1..21 odd.
  /// T3: b = 3,5..33, a = 2,4..32.
  static TableSpec standard(TableKind which);
  /// Throws DomainError when a row or column has the wrong parity for the table.
  void validate() const;
};

enum class CellState { Value, NotCoprime, Blank };

struct TableCell {
  CellState state = CellState::Blank;
  BigRational value;
};

struct RenderedTable {
  TableSpec spec;
  std::vector<std::vector<TableCell>> cells;  // [row][col]

  /// "*" for non-coprime cells, "" for blanks, value otherwise.
  std::string cell_text(std::size_t row, std::size_t col, bool human) const;
  std::string to_text() const;
  std::string to_csv() const;
  std::string to_json() const;
};

RenderedTable render_table(const TableSpec& spec, Route route = Route::MainResult, int workers = 1);

}  // namespace edsum
