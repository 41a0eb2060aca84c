#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotband {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One PD crossing. Arcs are listed counterclockwise starting from the
/// incoming under-strand: slots 0 and 2 carry the under strand, 1 and 3 the over strand.
struct Crossing {
  std::array<int, 4> arcs{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// (crossing index, slot)
struct Dart {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

enum class Smoothing { A, B };

/// A link diagram given by PD crossings plus a count of crossingless unknotted
/// components. Every arc label occurs exactly twice. Immutable after construction.
class PlanarDiagram {
 public:
  /// The 0-crossing unknot.
  PlanarDiagram() : free_loops_(1) {}
  /// Validates; throws DiagramError.
  PlanarDiagram(std::vector<Crossing> crossings, int free_loops = 0);

  static PlanarDiagram unknot() { return PlanarDiagram(); }
  static PlanarDiagram unlink(int components) { return PlanarDiagram({}, components); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_.at(static_cast<std::size_t>(c)); }
  int size() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }
  int max_label() const;

  /// The other occurrence of the arc sitting at dart d.
  Dart partner(Dart d) const;
  int arc_at(Dart d) const { return crossings_[static_cast<std::size_t>(d.crossing)].arcs[static_cast<std::size_t>(d.slot)]; }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  void build_index();

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  // partner_[4*c+s] = 4*c'+s'
  std::vector<int> partner_;
};

/// Closed strand cycles of the crossing part, each as its sequence of entry
/// darts in the default direction. Ordered by smallest arc label.
std::vector<std::vector<Dart>> strand_components(const PlanarDiagram& d);

/// Number of strand cycles plus free loops.
int component_count(const PlanarDiagram& d);

/// Direction flag per strand component, relative to the default direction
/// (the component enters slot 0 at its first under-crossing; a component
/// that is over everywhere enters at the lower occurrence of its smallest arc).
struct Orientation {
  std::vector<bool> reversed;
};

Orientation default_orientation(const PlanarDiagram& d);

/// Incoming slots at one crossing under an orientation.
struct CrossingFlow {
  int under_in = 0;  // 0 or 2
  int over_in = 1;   // 1 or 3
};

std::vector<CrossingFlow> crossing_flows(const PlanarDiagram& d, const Orientation& o);
int crossing_sign(CrossingFlow f);
int writhe(const PlanarDiagram& d, const Orientation& o);
int writhe(const PlanarDiagram& d);

/// Replaces crossing c by the chosen arc joining: A joins slots (0,1),(2,3);
/// B joins (0,3),(1,2). Closed crossingless pieces become free loops.
PlanarDiagram smooth(const PlanarDiagram& d, int c, Smoothing mode);

/// Flips over/under at crossing c, rotating the tuple so slot 0 stays the
/// incoming under-strand for orientation o.
PlanarDiagram switch_crossing(const PlanarDiagram& d, int c, const Orientation& o);
PlanarDiagram switch_crossing(const PlanarDiagram& d, int c);

/// Slot pairs joined when a crossing is deleted.
using SlotPairing = std::array<std::pair<int, int>, 2>;
inline constexpr SlotPairing kPairingA{{{0, 1}, {2, 3}}};
inline constexpr SlotPairing kPairingB{{{0, 3}, {1, 2}}};
inline constexpr SlotPairing kPassThrough{{{0, 2}, {1, 3}}};

/// Deletes the listed crossings, joining arcs per pairing. Surviving arcs keep
/// the smallest label of their merged class.
PlanarDiagram remove_crossings(const PlanarDiagram& d, const std::vector<std::pair<int, SlotPairing>>& removals);

/// Greedy Reidemeister I and II reductions until none applies.
PlanarDiagram simplify(const PlanarDiagram& d);
/// One R1 or R2 reduction, if any applies.
std::optional<PlanarDiagram> simplify_step(const PlanarDiagram& d);

/// Relabeling-invariant byte encoding (see README for the layout).
std::string canonical_code(const PlanarDiagram& d);

/// Face-orbit data. corner (c, s) is the region between slots s and s+1.
struct FaceData {
  std::vector<std::vector<Dart>> faces;       // corners of each face, in boundary order
  std::vector<std::array<int, 4>> corner_face;  // per crossing, face index of each corner
  std::vector<int> color;                     // 0 or 1 per face, adjacent faces differ
};

/// Faces of a connected diagram with at least one crossing; enforces the
/// Euler count F = n + 2 and a proper checkerboard coloring.
FaceData faces(const PlanarDiagram& d);

/// Crossing-connected pieces (labels kept) plus the free-loop count.
struct SplitResult {
  std::vector<PlanarDiagram> pieces;
  std::vector<std::vector<int>> crossing_indices;  // per piece, indices into the input diagram
  int free_loops = 0;
};
SplitResult split_components(const PlanarDiagram& d);
bool is_connected(const PlanarDiagram& d);

/// For a connected diagram, finds two distinct arcs bounding the same two
/// faces and cuts there, giving diagrams D_S, D_T with D = D_S # D_T.
std::optional<std::pair<PlanarDiagram, PlanarDiagram>> split_connected_sum(const PlanarDiagram& d);

/// A crossing with two opposite corners in one face, together with the
/// smoothing that untwists it (same unoriented link).
std::optional<std::pair<int, Smoothing>> find_nugatory(const PlanarDiagram& d);

/// Relabels arcs 1..2n along the orientation and rotates tuples so slot 0 is
/// the incoming under-strand.
PlanarDiagram standardize(const PlanarDiagram& d, const Orientation& o);
PlanarDiagram standardize(const PlanarDiagram& d);

/// Applies an injective map old label -> new label (indexed by old label).
PlanarDiagram relabel(const PlanarDiagram& d, const std::vector<int>& mapping);

}  // namespace knotband
