#pragma once

#include "knotband/laurent_poly.hpp"
#include "knotband/planar_diagram.hpp"
#include "knotband/special_rings.hpp"

namespace knotband {

/// Kauffman bracket <D> in A, normalized so that <one free loop> = 1 and
/// <D with k free loops> = d^{k-1}, d = -A^2 - A^{-2}.
///
/// Computed by contracting crossings one at a time while tracking how the
/// open arc ends are paired; cost grows with the frontier width, not 2^n.
LaurentPoly kauffman_bracket(const PlanarDiagram& d);

/// The same bracket by the full 2^n state sum. Exponential; refuses n > cap.
LaurentPoly kauffman_bracket_state_sum(const PlanarDiagram& d, int cap = 24);

/// d = -A^2 - A^{-2}
LaurentPoly bracket_loop_value();

/// Jones polynomial in q = t^{1/2}: (-A^3)^{-w} <D> with A^e -> q^{-e/2}.
LaurentPoly jones(const PlanarDiagram& d, const Orientation& o);
LaurentPoly jones(const PlanarDiagram& d);
/// The normalization step alone, for callers that know the writhe of an
/// orientation without building it (e.g. an oriented smoothing).
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

/// Rewrites a q-polynomial with only even exponents as a polynomial in t.
/// Throws std::invalid_argument on an odd exponent.
LaurentPoly q_to_t(const LaurentPoly& q_poly);
/// t^k -> q^{2k}
LaurentPoly t_to_q(const LaurentPoly& t_poly);

struct SpecialValues {
  Cyclo12 v_omega;              // V(L; omega), t^{1/2} = e^{i pi/6}
  Cyclo12 v_minus1;             // V(L; -1), t^{1/2} = i; a Gaussian integer
  std::optional<int> v_i;       // V(K; i) = +-1, knots only
};

/// V at t^{1/2} = e^{i pi/6}, t^{1/2} = i, and (for knots) t = i.
SpecialValues special_values(const LaurentPoly& jones_q, int components);

/// V(K; i) for a knot, +1 or -1. Throws std::invalid_argument for links or
/// when the value is not a unit (signals a wrong polynomial).
int jones_at_i(const LaurentPoly& jones_q, int components);

}  // namespace knotband
