#pragma once

// Reproduction of the convergence tables for GL, BB1 and BB4.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agmpi {

enum class TableId { gl, gl_bounds, bb1, bb1_bounds, bb4, equiv };
enum class TableFormat { text, csv };

struct TableSpec {
  TableId id = TableId::gl;
  int rows = 0;
  long digits = 0;
  TableFormat format = TableFormat::text;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Decimal digits actually used; at least TableSpec::digits.
  long working_digits = 0;
};

std::optional<TableId> parse_table_id(std::string_view name);
std::string_view table_name(TableId id);
int default_rows(TableId id);
long default_digits(TableId id);

/// Digits needed to resolve every displayed figure of the first `rows` rows.
long required_digits(TableId id, int rows);

/// Values are rounded to the displayed figures: 25 significant digits for
/// the bounds, 3 for the bound-table errors, 10 for BB4 errors and 50 for
/// the equivalence errors; ratios carry 9 (GL) or 10 decimals.
/// Throws DomainError unless rows >= 1 and digits >= 10.
Table build_table(const TableSpec& spec);
std::string render_table(const Table& table, TableFormat format);

}  // namespace agmpi
