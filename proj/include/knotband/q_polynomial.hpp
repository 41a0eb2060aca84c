#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "knotband/laurent_poly.hpp"
#include "knotband/planar_diagram.hpp"

namespace knotband {

class QBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QOptions {
  int max_depth = 64;               // nested skein expansions
  std::size_t max_nodes = 2000000;  // evaluated subdiagrams (memo misses)
};

/// Memo of Q values keyed by canonical_code of connected, simplified
/// diagrams. Safe for concurrent use; entries are deterministic, so a stale
/// miss only costs time.
class QCache {
 public:
  std::optional<LaurentPoly> find(const std::string& key) const;
  void store(const std::string& key, const LaurentPoly& value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, LaurentPoly> map_;
};

/// 2/z - 1, the value of adding a split unknotted component.
LaurentPoly q_loop_value();

/// BLM/Ho polynomial in z by skein recursion:
///   Q(L+) + Q(L-) = z (Q(L0) + Q(Linf)),  Q(U) = 1.
/// Before expanding, each diagram is simplified (R1/R2), split into
/// components, untwisted at nugatory crossings and cut along connected sums.
/// An alternating bigon is expanded at one of its crossings (the switch then
/// cancels by R2); otherwise the first crossing that is passed under first
/// in an optimal descending traversal is expanded.
/// Throws QBudgetExceeded when depth or node limits are hit.
LaurentPoly q_polynomial(const PlanarDiagram& d, const QOptions& options = {}, QCache* cache = nullptr);

}  // namespace knotband
