#include "agmpi/tables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "agmpi/piagm.hpp"

namespace agmpi {

namespace {

constexpr long kMaxDigits = 2'000'000;
constexpr long kBoundsDigits = 25;
constexpr long kBoundErrorDigits = 3;
constexpr long kBb4ErrorDigits = 10;
constexpr long kEquivDigits = 50;

// log10 of q = e^-pi
const double kLog10Q = -std::numbers::pi / std::numbers::ln10;

double log10_pi() { return std::log10(std::numbers::pi); }

// log10 of the smallest error shown in row n.
double smallest_error_log10(TableId id, int n) {
  const double two_n = std::ldexp(1.0, n);
  switch (id) {
    case TableId::gl:
    case TableId::bb1:
      return 0.0;
    case TableId::gl_bounds:
    case TableId::bb1_bounds:
      // The lower-bound error of GL and the upper of BB1 are the smaller.
      return (n + 4) * std::log10(2.0) + 2 * log10_pi() + 2 * two_n * kLog10Q;
    case TableId::bb4:
    case TableId::equiv:
      return 2 * (n + 2) * std::log10(2.0) + 2 * log10_pi() +
             2 * two_n * two_n * kLog10Q;
  }
  return 0.0;
}

long shown_figures(TableId id) {
  switch (id) {
    case TableId::gl:
    case TableId::bb1:
      return kBoundsDigits;
    case TableId::gl_bounds:
    case TableId::bb1_bounds:
      return 12;  // the ratios
    case TableId::bb4:
      return 12;
    case TableId::equiv:
      return kEquivDigits;
  }
  return 0;
}

std::string sci(const Real& x, long digits) {
  return to_scientific(x, digits, Rounding::nearest);
}

// The bounds only need a few digits beyond the ratio's, plus log10 of the
// 2^k amplification of the relative error in q^(2^k).
Precision bound_precision(int q_power_log2) {
  return Precision::from_digits(30 + q_power_log2);
}

std::string ratio(const Real& error, const Real& bound, long decimals) {
  return to_fixed(error.with_precision(bound.precision()) / bound, decimals,
                  Rounding::nearest);
}

Table gl_table(int rows, const Precision& p) {
  Table t;
  t.columns = {"n", "lower", "upper"};
  for (const PiIterate& it : gl_iterate(rows, p)) {
    t.rows.push_back({std::to_string(it.n),
                      to_decimal(*it.lower, kBoundsDigits, Rounding::nearest),
                      to_decimal(*it.upper, kBoundsDigits, Rounding::nearest)});
  }
  return t;
}

Table bb1_table(int rows, const Precision& p) {
  Table t;
  t.columns = {"n", "lower", "upper"};
  for (const PiIterate& it : bb1_iterate(rows, p)) {
    t.rows.push_back({std::to_string(it.n),
                      to_decimal(*it.lower, kBoundsDigits, Rounding::nearest),
                      to_decimal(*it.upper, kBoundsDigits, Rounding::nearest)});
  }
  return t;
}

Table gl_bounds_table(int rows, const Precision& p) {
  Table t;
  t.columns = {"n", "upper_error", "lower_error", "upper_ratio",
               "lower_ratio"};
  const Real pi = pi_constant(p);
  for (const PiIterate& it : gl_iterate(rows, p)) {
    const Real upper = *it.upper - pi;
    const Real lower = pi - *it.lower;
    const BoundPair b = gl_bounds(it.n, bound_precision(it.n + 1));
    t.rows.push_back({std::to_string(it.n), sci(upper, kBoundErrorDigits),
                      sci(lower, kBoundErrorDigits), ratio(upper, b.upper, 9),
                      ratio(lower, b.lower, 9)});
  }
  return t;
}

// The published upper-ratio column divides by (2^(n+4) pi^2 - 7 pi) q^(2^(n+1)),
// one correction term beyond the proven bound. Back-solving the printed
// ratios gives the 7 to eight figures.
Real bb1_published_upper(int n, const Precision& p) {
  const Real pi = pi_constant(p);
  const BoundPair b = bb1_bounds(n, p);
  return b.upper - b.upper / square(pi).ldexp(n + 4) * pi * 7;
}

Table bb1_bounds_table(int rows, const Precision& p) {
  Table t;
  t.columns = {"n", "upper_error", "upper_ratio", "lower_error",
               "lower_ratio"};
  const Real pi = pi_constant(p);
  const std::vector<PiIterate> its = bb1_iterate(rows + 1, p);
  for (int n = 1; n <= rows; ++n) {
    const Real upper = *its[n].upper - pi;
    const Real lower = pi - *its[n].lower;
    const Precision bp = bound_precision(n + 1);
    const BoundPair b = bb1_bounds(n, bp);
    t.rows.push_back({std::to_string(n), sci(upper, kBoundErrorDigits),
                      ratio(upper, bb1_published_upper(n, bp), 10), sci(lower, kBoundErrorDigits),
                      ratio(lower, b.lower, 10)});
  }
  return t;
}

Table bb4_table(int rows, const Precision& p) {
  Table t;
  t.columns = {"n", "error", "ratio"};
  const Real pi = pi_constant(p);
  for (const PiIterate& it : bb4_iterate(rows, p)) {
    const Real error = pi - *it.point;
    t.rows.push_back({std::to_string(it.n), sci(error, kBb4ErrorDigits),
                      ratio(error, bb4_bound(it.n, bound_precision(2 * it.n + 1)), 10)});
  }
  return t;
}

Table equiv_table(int rows, const Precision& p) {
  Table t;
  t.columns = {"n", "gl_n", "gl1_error", "bb4_error"};
  const Real pi = pi_constant(p);
  const std::vector<PiIterate> gl = gl_iterate(2 * rows - 1, p);
  const std::vector<PiIterate> bb4 = bb4_iterate(rows, p);
  for (int n = 0; n < rows; ++n) {
    t.rows.push_back({std::to_string(n), std::to_string(2 * n),
                      sci(pi - *gl[2 * n].lower, kEquivDigits),
                      sci(pi - *bb4[n].point, kEquivDigits)});
  }
  return t;
}

}  // namespace

std::optional<TableId> parse_table_id(std::string_view name) {
  for (TableId id : {TableId::gl, TableId::gl_bounds, TableId::bb1,
                     TableId::bb1_bounds, TableId::bb4, TableId::equiv}) {
    if (table_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view table_name(TableId id) {
  switch (id) {
    case TableId::gl:
      return "gl";
    case TableId::gl_bounds:
      return "gl_bounds";
    case TableId::bb1:
      return "bb1";
    case TableId::bb1_bounds:
      return "bb1_bounds";
    case TableId::bb4:
      return "bb4";
    case TableId::equiv:
      return "equiv";
  }
  return "";
}

int default_rows(TableId id) {
  switch (id) {
    case TableId::gl:
    case TableId::bb1:
    case TableId::equiv:
      return 5;
    case TableId::gl_bounds:
    case TableId::bb4:
      return 9;
    case TableId::bb1_bounds:
      return 8;
  }
  return 1;
}

long default_digits(TableId id) {
  switch (id) {
    case TableId::gl:
    case TableId::bb1:
      return 30;
    case TableId::gl_bounds:
    case TableId::bb1_bounds:
    case TableId::bb4:
      return 800;
    case TableId::equiv:
      return 1000;
  }
  return 30;
}

long required_digits(TableId id, int rows) {
  const int last = id == TableId::bb1_bounds ? rows : rows - 1;
  double smallest = 0.0;
  for (int n = 0; n <= last; ++n) {
    smallest = std::min(smallest, smallest_error_log10(id, n));
  }
  const double needed = -smallest + static_cast<double>(shown_figures(id)) + 8;
  if (needed > static_cast<double>(kMaxDigits)) {
    throw DomainError("too many rows: the table would need more than " +
                      std::to_string(kMaxDigits) + " digits");
  }
  return static_cast<long>(std::ceil(needed));
}

Table build_table(const TableSpec& spec) {
  if (spec.rows < 1) throw DomainError("rows must be at least 1");
  if (spec.digits < 10) throw DomainError("digits must be at least 10");
  const long digits = std::max(spec.digits, required_digits(spec.id, spec.rows));
  const Precision p = Precision::from_digits(digits);
  Table t;
  switch (spec.id) {
    case TableId::gl:
      t = gl_table(spec.rows, p);
      break;
    case TableId::gl_bounds:
      t = gl_bounds_table(spec.rows, p);
      break;
    case TableId::bb1:
      t = bb1_table(spec.rows, p);
      break;
    case TableId::bb1_bounds:
      t = bb1_bounds_table(spec.rows, p);
      break;
    case TableId::bb4:
      t = bb4_table(spec.rows, p);
      break;
    case TableId::equiv:
      t = equiv_table(spec.rows, p);
      break;
  }
  t.working_digits = digits;
  return t;
}

std::string render_table(const Table& table, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out << ',';
        out << cells[i];
      }
      out << '\n';
    };
    line(table.columns);
    for (const auto& row : table.rows) line(row);
    return out.str();
  }

  std::vector<size_t> width(table.columns.size());
  for (size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << "  ";
      out << cells[i];
      if (i + 1 < cells.size()) {
        out << std::string(width[i] - cells[i].size(), ' ');
      }
    }
    out << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return out.str();
}

}  // namespace agmpi
