#include "knotband/constructions.hpp"

#include <cstdlib>

namespace knotband {

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs) std::swap(x.arcs[1], x.arcs[3]);
  return PlanarDiagram(std::move(xs), d.free_loops());
}

namespace {

// The occurrence of `label` at which the default orientation enters a crossing.
Dart arc_head(const PlanarDiagram& d, int label) {
  for (const auto& comp : strand_components(d))
    for (const Dart& e : comp)
      if (d.arc_at(e) == label) return e;
  throw DiagramError("arc " + std::to_string(label) + " not found");
}

int min_label(const PlanarDiagram& d) {
  int m = d.max_label();
  for (const auto& x : d.crossings())
    for (int a : x.arcs) m = std::min(m, a);
  return m;
}

}  // namespace

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2) {
  if (component_count(d1) != 1 || component_count(d2) != 1)
    throw DiagramError("connected sum needs two knots (one component each)");
  if (d1.size() == 0) return d2;
  if (d2.size() == 0) return d1;

  const int off = d1.max_label();
  std::vector<Crossing> shifted = d2.crossings();
  for (auto& x : shifted)
    for (int& a : x.arcs) a += off;
  const PlanarDiagram e2(shifted);

  const int a = min_label(d1);
  const int b = min_label(d2) + off;
  const Dart head1 = arc_head(d1, a);
  const Dart head2 = arc_head(e2, b);

  // Tail of a -> head of b keeps label a; tail of b -> head of a keeps label b.
  std::vector<Crossing> xs = d1.crossings();
  xs[static_cast<std::size_t>(head1.crossing)].arcs[static_cast<std::size_t>(head1.slot)] = b;
  shifted[static_cast<std::size_t>(head2.crossing)].arcs[static_cast<std::size_t>(head2.slot)] = a;
  xs.insert(xs.end(), shifted.begin(), shifted.end());
  return PlanarDiagram(std::move(xs));
}

PlanarDiagram hopf_link(bool positive) {
  const PlanarDiagram neg(std::vector<Crossing>{{{4, 1, 3, 2}}, {{2, 3, 1, 4}}});
  return positive ? mirror(neg) : neg;
}

namespace {

// Template: the 8_21 diagram minus its slot crossing X[5,8,6,9]; the slot's
// corners in counterclockwise order are SW=5, SE=8, NE=6, NW=9.
constexpr std::array<std::array<int, 4>, 7> kTemplate{{
    {1, 6, 2, 7}, {4, 14, 5, 13}, {7, 2, 8, 3}, {9, 12, 10, 13},
    {11, 16, 12, 1}, {14, 4, 15, 3}, {15, 10, 16, 11},
}};
constexpr std::array<int, 4> kSlot{5, 8, 6, 9};

}  // namespace

PlanarDiagram km_diagram(long long m) {
  std::vector<Crossing> xs;
  for (const auto& t : kTemplate) xs.push_back(Crossing{t});
  const long long k = std::llabs(m);
  if (k == 0) {
    xs.push_back(Crossing{kSlot});
    return standardize(smooth(PlanarDiagram(std::move(xs)), 7, Smoothing::A));
  }
  // Horizontal chain: SE_j joins SW_{j+1}, NE_j joins NW_{j+1}.
  int next = 17;
  int sw = kSlot[0];
  int nw = kSlot[3];
  for (long long j = 0; j < k; ++j) {
    const bool last = j + 1 == k;
    const int se = last ? kSlot[1] : next++;
    const int ne = last ? kSlot[2] : next++;
    xs.push_back(m > 0 ? Crossing{{sw, se, ne, nw}} : Crossing{{se, ne, nw, sw}});
    sw = se;
    nw = ne;
  }
  return standardize(PlanarDiagram(std::move(xs)));
}

int km_marked_crossing() { return 0; }

}  // namespace knotband
