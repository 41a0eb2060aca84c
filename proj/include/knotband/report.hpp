#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "knotband/bounds.hpp"
#include "knotband/invariants.hpp"
#include "knotband/knot_table.hpp"
#include "knotband/notation.hpp"

namespace knotband {

/// Operand built from a knot expression, with the table certificates that
/// apply to the whole expression (up to summand order and global mirror).
struct ExprFacts {
  Operand operand;
  std::vector<Certificate> certificates;
  const KnotRecord* record = nullptr;  // table row matching the whole expression
};

/// Unknotting data for an expression: a matching table row; else U -> 0,
/// K[m] -> 1, table names -> their u, and a sum of known summands -> the
/// sum of their upper bounds. Unknown otherwise.
ExprFacts expr_facts(std::string_view expr, const KnotTable& table, const InvariantOptions& options = {});

/// Table row for a whole expression: same multiset of (name, mirror) summands,
/// possibly with every mirror flag flipped. Nullptr when none.
const KnotRecord* find_record(const KnotExpr& expr, const KnotTable& table);

std::string render_gaussian(const Cyclo12& v);
std::string render_jones_t(const LaurentPoly& jones_q);

nlohmann::json to_json(const Interval& i);
nlohmann::json to_json(const Snapshot& s, bool has_d2);
nlohmann::json to_json(const TraceEntry& e, bool has_d2);
nlohmann::json trace_to_json(const std::vector<TraceEntry>& trace, bool has_d2);
nlohmann::json to_json(const InvariantSet& inv);
/// Knot problems name the intervals bu/u2, pair problems bd/d2.
nlohmann::json to_json(const BoundState& st, Mode mode, bool pair);

/// Text forms are rendered from the JSON forms only.
std::string render_invariants_text(const nlohmann::json& j);
std::string render_bounds_text(const nlohmann::json& j);

}  // namespace knotband
