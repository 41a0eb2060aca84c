#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotband/planar_diagram.hpp"

namespace knotband {

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed interval of nonnegative integers.
struct UInterval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const UInterval&, const UInterval&) = default;
};

struct KnotRecord {
  std::string name;
  PlanarDiagram pd;
  int components = 1;
  UInterval u;
  std::optional<int> u2;  // asserted
  std::optional<int> bu;  // asserted
  std::string note;

  /// Rows the strict table check must skip.
  bool ambiguous() const { return note == "paper table ambiguity"; }
};

class KnotTable {
 public:
  /// Throws TableError on a duplicate name.
  void insert(KnotRecord record);
  const KnotRecord* find(const std::string& name) const;
  const std::map<std::string, KnotRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

 private:
  std::map<std::string, KnotRecord> records_;
};

/// JSON-lines format, one record per line:
/// {"name": "3_1", "pd": [[1,4,2,5],...], "components": 1, "u": [1,1], "u2": 1, "bu": 1, "note": "..."}
/// u2, bu and note are optional. Blank lines are skipped.
KnotTable parse_knot_table(std::istream& in, const std::string& source = "<stream>");
KnotTable load_knot_table(const std::string& path);

/// KNOTBAND_DATA if set, else the bundled data file.
std::string default_table_path();

/// Table order: primes by crossing number then index ("9_1" < "10_1"), composites after primes.
bool knot_name_less(const std::string& a, const std::string& b);

}  // namespace knotband
