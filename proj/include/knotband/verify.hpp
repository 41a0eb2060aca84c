#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotband/bounds.hpp"
#include "knotband/knot_table.hpp"

namespace knotband {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  /// Index range for the family suites: m for km-*, l for jl-family and omega-table.
  std::optional<std::pair<int, int>> range;
};

/// Recomputed invariants and bounds for one table row.
struct TableRowReport {
  std::string name;
  InvariantSet inv;
  BoundState derived;
  BoundState asserted;
  bool checked = false;  // row carries published bu/u2 and is not flagged
  bool ok = true;
  std::string detail;
};

/// Published (bu, u2) must satisfy the parity theorem, equal the asserted-mode
/// intervals and lie inside the derived-mode intervals. Flagged rows and rows
/// without published values are reported but not checked.
TableRowReport evaluate_table_row(const KnotRecord& record, const KnotTable& table, QCache* cache = nullptr);

/// Rows with at most max_crossings (summed over summands), in table order;
/// evaluated in parallel.
std::vector<TableRowReport> evaluate_table(const KnotTable& table, int max_crossings);

/// Crossing number from a table name ("9_16" -> 9, "3_1#6_3" -> 9).
int crossing_number_of_name(const std::string& name);

/// jones-exact, km-recurrence, km-closed-forms, omega-table, jl-family,
/// cross-invariants, band-table, named-bounds, slice, skein.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const KnotTable& table, const VerifyOptions& options = {});

/// J_l: K[12l+1] # 3_1! for l >= 0, K[12l-2] # 3_1 for l < 0.
std::string jl_expression(int l);

/// Parses "a..b" (a <= b); throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);

}  // namespace knotband
