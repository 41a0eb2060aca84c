#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotband/invariants.hpp"
#include "knotband/knot_table.hpp"

namespace knotband {

/// Interval of nonnegative integers; no hi means unbounded.
struct Interval {
  int lo = 0;
  std::optional<int> hi;

  bool empty() const { return hi && *hi < lo; }
  bool contains(int v) const { return v >= lo && (!hi || v <= *hi); }
  bool pinned() const { return hi && *hi == lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& i);  // "[2,3]", "[3,inf)"

/// One side of a bound problem.
struct Operand {
  std::string label;
  InvariantSet inv;
  bool unknot = false;            // diagram simplifies to the 0-crossing unknot
  std::optional<UInterval> u;     // unknotting number, when known
};

enum class Target { Db, D2 };

/// Upper bound taken on trust (band pictures, literature), never derived.
struct Certificate {
  Target target = Target::Db;
  int upper = 0;
  std::string source;
};

/// Problem data: distance between `a` and `b`. For a single knot, b is the unknot.
struct Facts {
  Operand a;
  Operand b;
  std::optional<UInterval> gordian;  // d(a, b); defaults to u(a) + u(b) when both known
  std::vector<Certificate> certificates;

  /// d2 is only defined between knots.
  bool has_d2() const { return a.inv.is_knot() && b.inv.is_knot(); }
  /// The crossing-change distance used by the upper-bound rule.
  std::optional<UInterval> gordian_bound() const;
};

Operand unknot_operand();
Facts knot_facts(Operand k);
Facts pair_facts(Operand a, Operand b);

enum class Mode { Derived, Asserted };
std::string to_string(Mode m);

struct Snapshot {
  Interval db;
  Interval d2;
  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

struct TraceEntry {
  std::string rule;
  std::string ref;
  Snapshot before;
  Snapshot after;
  bool asserted = false;
};

struct BoundState {
  Snapshot bounds;
  bool has_d2 = true;
  std::vector<TraceEntry> trace;
};

/// An interval became empty or the pair (bd, d2) left the feasible set.
class BoundContradiction : public std::runtime_error {
 public:
  BoundContradiction(const std::string& what, std::vector<TraceEntry> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<TraceEntry>& trace() const { return trace_; }

 private:
  std::vector<TraceEntry> trace_;
};

/// New bounds proposed by one rule; unset fields leave the state alone.
struct Constraint {
  std::optional<int> db_lo, db_hi, d2_lo, d2_hi;
  bool empty() const { return !db_lo && !db_hi && !d2_lo && !d2_hi; }
};

Constraint rule_e2(const Facts& f);
Constraint rule_delta(const Facts& f);
Constraint rule_lambda(const Facts& f);
Constraint rule_moebius(const Facts& f);
/// Knot vs unknot with H_1(Sigma_2) = Z/n: bu >= 2 unless the linking form is (+-1/n).
Constraint rule_linking_form(const Facts& f);
/// Whether x^2 = +-a (mod n) has a solution.
bool unit_square_up_to_sign(const BigInt& a, const BigInt& n);
Constraint rule_distance_two(const Facts& f);
Constraint rule_upper_from_u(const Facts& f);
Constraint rule_asserted_certificates(const Facts& f);
Constraint rule_signature_gap(const Facts& f, const Snapshot& s);

/// Whether some bd = b, d2 = h is allowed: b == h, or b == h - 1 with h odd and h >= 3.
bool feasible_pair(int b, int h);
/// Smallest intervals keeping every value that has a feasible partner.
Snapshot parity_closure(const Snapshot& s);
bool jointly_feasible(const Snapshot& s);

/// Rule ids in firing order.
const std::vector<std::string>& rule_order();

/// Applies every rule in rule_order() until nothing changes. The trace lists
/// only steps that changed the state. Throws BoundContradiction.
BoundState deduce(const Facts& f, Mode mode);

/// Re-applies the recorded rules to the initial state and checks every
/// before/after snapshot. Returns the final bounds; throws std::runtime_error
/// on the first mismatch.
Snapshot replay(const Facts& f, Mode mode, const std::vector<TraceEntry>& trace);

enum class SliceStatus { NotSlice, Inconclusive };
std::string to_string(SliceStatus s);
/// A slice knot has V(omega) != -1.
SliceStatus slice_obstruction(const InvariantSet& inv);

}  // namespace knotband
