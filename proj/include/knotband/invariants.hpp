#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotband/goeritz.hpp"
#include "knotband/jones.hpp"
#include "knotband/laurent_poly.hpp"
#include "knotband/planar_diagram.hpp"
#include "knotband/q_polynomial.hpp"
#include "knotband/special_rings.hpp"

namespace knotband {

/// A cross-check between independently computed invariants failed.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class QStatus { Ok, BudgetExceeded, Skipped };

struct InvariantOptions {
  bool compute_q = true;
  QOptions q_options;
  QCache* q_cache = nullptr;
};

struct InvariantSet {
  int components = 1;
  int crossings = 0;

  LaurentPoly jones;  // in q = t^{1/2}
  Cyclo12 v_omega;
  CycloClass omega_class;
  Cyclo12 v_minus1;         // Gaussian integer
  std::optional<int> v_i;   // knots only
  std::optional<int> arf;   // knots only

  int signature = 0;
  BigInt det = 0;
  DoubleCoverHomology homology;

  QStatus q_status = QStatus::Skipped;
  std::optional<LaurentPoly> q_poly;
  std::optional<GoldenValue> lambda;
  std::optional<GoldenClass> lambda_class;

  /// Names of the identities verified for this set, in check order.
  std::vector<std::string> checks;

  bool is_knot() const { return components == 1; }
  int e2() const { return homology.e2; }
  int delta() const { return omega_class.delta; }
};

/// Computes every invariant of D and verifies the identities linking them:
///   omega-delta:   V(omega) = +-i^{c-1} (i sqrt3)^delta, delta from H_1 mod 3
///   det-jones:     det = |V(-1)|
///   sign-jones:    (-1)^{sigma/2} = sign V(-1)       (knots)
///   arf-det:       Arf = 0 iff det = +-1 mod 8       (knots)
///   lambda-r:      lambda = +-sqrt5^r, r from H_1 mod 5 (when Q is computed)
/// Throws InvariantError naming the first identity that fails.
InvariantSet invariants(const PlanarDiagram& d, const Orientation& o, const InvariantOptions& options = {});
InvariantSet invariants(const PlanarDiagram& d, const InvariantOptions& options = {});

std::string to_string(QStatus s);

/// Gaussian integer a + b i held in Cyclo12 coordinates (a, 0, 0, b).
/// Throws std::logic_error when v has another shape.
std::pair<std::int64_t, std::int64_t> gaussian_parts(const Cyclo12& v);

}  // namespace knotband
