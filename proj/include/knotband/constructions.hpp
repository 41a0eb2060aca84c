#pragma once

#include "knotband/planar_diagram.hpp"

namespace knotband {

/// Planar reflection X[a,b,c,d] -> X[a,d,c,b]: every crossing changes sign,
/// slot 0 stays the incoming under-strand. An involution.
PlanarDiagram mirror(const PlanarDiagram& d);

/// Connected sum of two knots, spliced at the lowest-numbered arc of each
/// operand with orientations matched. D2's arcs are shifted past D1's.
/// Throws DiagramError unless both operands have one component.
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2);

/// Hopf link with linking number +1 (positive) or -1.
PlanarDiagram hopf_link(bool positive = true);

/// K_m: the fixed 7-crossing template with its tangle slot filled by |m|
/// twist crossings (m = 0: the slot's A-smoothing). K_0 = 6_3, K_1 = 8_21, K_{-1} = 6_2.
PlanarDiagram km_diagram(long long m);

/// Index in km_diagram(m) of the marked template crossing whose switch gives the unknot.
int km_marked_crossing();

}  // namespace knotband
