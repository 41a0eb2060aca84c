#include "knotband/planar_diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

namespace knotband {

namespace {

int dart_id(Dart d) { return 4 * d.crossing + d.slot; }
Dart dart_of(int id) { return {id / 4, id % 4}; }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void put_u16(std::string& out, int v) {
  if (v < 0 || v > 0xFFFF) throw DiagramError("canonical code field out of range");
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>(v & 0xFF));
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw DiagramError("negative free-loop count");
  if (crossings_.empty() && free_loops_ == 0) throw DiagramError("diagram has no components");
  build_index();
}

void PlanarDiagram::build_index() {
  std::unordered_map<int, std::vector<int>> seen;
  for (std::size_t c = 0; c < crossings_.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      const int a = crossings_[c].arcs[static_cast<std::size_t>(s)];
      if (a <= 0) throw DiagramError("arc label " + std::to_string(a) + " is not positive");
      seen[a].push_back(4 * static_cast<int>(c) + s);
    }
  partner_.assign(4 * crossings_.size(), -1);
  for (const auto& [label, occ] : seen) {
    if (occ.size() != 2)
      throw DiagramError("arc " + std::to_string(label) + " appears " + std::to_string(occ.size()) + " times");
    partner_[static_cast<std::size_t>(occ[0])] = occ[1];
    partner_[static_cast<std::size_t>(occ[1])] = occ[0];
  }
}

int PlanarDiagram::max_label() const {
  int m = 0;
  for (const auto& x : crossings_)
    for (int a : x.arcs) m = std::max(m, a);
  return m;
}

Dart PlanarDiagram::partner(Dart d) const { return dart_of(partner_.at(static_cast<std::size_t>(dart_id(d)))); }

// ---------------------------------------------------------------------------
// Components and orientation

std::vector<std::vector<Dart>> strand_components(const PlanarDiagram& d) {
  const int n = d.size();
  std::vector<char> strand_seen(2 * static_cast<std::size_t>(n), 0);  // index 2c + (slot & 1)
  std::vector<std::pair<int, std::vector<Dart>>> comps;

  for (int c0 = 0; c0 < n; ++c0)
    for (int p = 0; p < 2; ++p) {
      if (strand_seen[static_cast<std::size_t>(2 * c0 + p)]) continue;
      std::vector<Dart> entries;
      Dart cur{c0, p};
      do {
        strand_seen[static_cast<std::size_t>(2 * cur.crossing + (cur.slot & 1))] = 1;
        entries.push_back(cur);
        cur = d.partner({cur.crossing, (cur.slot + 2) % 4});
      } while (!(cur == Dart{c0, p}));

      // Default start: slot 0 of the first crossing this component passes under.
      std::optional<std::size_t> under_k;
      for (std::size_t k = 0; k < entries.size(); ++k)
        if (entries[k].slot % 2 == 0 && (!under_k || entries[k].crossing < entries[*under_k].crossing)) under_k = k;
      int min_label = d.arc_at(entries[0]);
      std::size_t min_k = 0;
      for (std::size_t k = 0; k < entries.size(); ++k)
        if (d.arc_at(entries[k]) < min_label) {
          min_label = d.arc_at(entries[k]);
          min_k = k;
        }
      const std::size_t len = entries.size();
      std::size_t first = 0;
      bool reverse = false;
      if (under_k) {
        first = *under_k;
        reverse = entries[first].slot == 2;
      } else {
        // Over everywhere: head toward the lower occurrence of the smallest arc.
        // Reversed, that occurrence is the entry made at the crossing before min_k.
        reverse = d.partner(entries[min_k]) < entries[min_k];
        first = reverse ? (min_k + len - 1) % len : min_k;
      }
      std::vector<Dart> ordered;
      ordered.reserve(len);
      for (std::size_t k = 0; k < len; ++k) {
        if (!reverse) {
          ordered.push_back(entries[(first + k) % len]);
        } else {
          const Dart e = entries[(first + len - k) % len];
          ordered.push_back({e.crossing, (e.slot + 2) % 4});
        }
      }
      comps.emplace_back(min_label, std::move(ordered));
    }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<Dart>> out;
  out.reserve(comps.size());
  for (auto& [label, entries] : comps) out.push_back(std::move(entries));
  return out;
}

int component_count(const PlanarDiagram& d) {
  return static_cast<int>(strand_components(d).size()) + d.free_loops();
}

Orientation default_orientation(const PlanarDiagram& d) {
  Orientation o;
  o.reversed.assign(strand_components(d).size(), false);
  return o;
}

std::vector<CrossingFlow> crossing_flows(const PlanarDiagram& d, const Orientation& o) {
  const auto comps = strand_components(d);
  if (o.reversed.size() != comps.size()) throw DiagramError("orientation does not match component count");
  std::vector<CrossingFlow> flows(static_cast<std::size_t>(d.size()));
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (const Dart& e : comps[k]) {
      const int in = o.reversed[k] ? (e.slot + 2) % 4 : e.slot;
      auto& f = flows[static_cast<std::size_t>(e.crossing)];
      if (in % 2 == 0)
        f.under_in = in;
      else
        f.over_in = in;
    }
  return flows;
}

int crossing_sign(CrossingFlow f) { return ((f.under_in == 0) == (f.over_in == 3)) ? 1 : -1; }

int writhe(const PlanarDiagram& d, const Orientation& o) {
  int w = 0;
  for (const auto& f : crossing_flows(d, o)) w += crossing_sign(f);
  return w;
}

int writhe(const PlanarDiagram& d) { return writhe(d, default_orientation(d)); }

// ---------------------------------------------------------------------------
// Local rewrites

PlanarDiagram remove_crossings(const PlanarDiagram& d, const std::vector<std::pair<int, SlotPairing>>& removals) {
  const int n = d.size();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (const auto& [c, pairing] : removals) {
    if (c < 0 || c >= n) throw DiagramError("crossing index " + std::to_string(c) + " out of range");
    if (removed[static_cast<std::size_t>(c)]) throw DiagramError("crossing removed twice");
    removed[static_cast<std::size_t>(c)] = 1;
  }
  // Union-find over dart ids: the two occurrences of an arc are joined, and
  // each pairing joins darts inside a removed crossing.
  UnionFind uf(4 * static_cast<std::size_t>(n));
  for (int id = 0; id < 4 * n; ++id) uf.unite(static_cast<std::size_t>(id), static_cast<std::size_t>(dart_id(d.partner(dart_of(id)))));
  for (const auto& [c, pairing] : removals)
    for (const auto& [s, t] : pairing) uf.unite(static_cast<std::size_t>(4 * c + s), static_cast<std::size_t>(4 * c + t));

  std::unordered_map<std::size_t, int> class_label;     // root -> min label
  std::unordered_map<std::size_t, int> class_survivors;  // root -> surviving darts
  for (int id = 0; id < 4 * n; ++id) {
    const std::size_t r = uf.find(static_cast<std::size_t>(id));
    const int label = d.arc_at(dart_of(id));
    auto it = class_label.find(r);
    if (it == class_label.end())
      class_label.emplace(r, label);
    else
      it->second = std::min(it->second, label);
    if (!removed[static_cast<std::size_t>(id / 4)]) ++class_survivors[r];
  }
  int loops = d.free_loops();
  for (const auto& [r, label] : class_label)
    if (!class_survivors.count(r)) ++loops;

  std::vector<Crossing> kept;
  kept.reserve(static_cast<std::size_t>(n) - removals.size());
  for (int c = 0; c < n; ++c) {
    if (removed[static_cast<std::size_t>(c)]) continue;
    Crossing x;
    for (int s = 0; s < 4; ++s)
      x.arcs[static_cast<std::size_t>(s)] = class_label.at(uf.find(static_cast<std::size_t>(4 * c + s)));
    kept.push_back(x);
  }
  return PlanarDiagram(std::move(kept), loops);
}

PlanarDiagram smooth(const PlanarDiagram& d, int c, Smoothing mode) {
  if (c < 0 || c >= d.size()) throw DiagramError("crossing index " + std::to_string(c) + " out of range");
  return remove_crossings(d, {{c, mode == Smoothing::A ? kPairingA : kPairingB}});
}

PlanarDiagram switch_crossing(const PlanarDiagram& d, int c, const Orientation& o) {
  if (c < 0 || c >= d.size()) throw DiagramError("crossing index " + std::to_string(c) + " out of range");
  const CrossingFlow f = crossing_flows(d, o)[static_cast<std::size_t>(c)];
  const int shift = f.over_in == 1 ? 1 : 3;
  std::vector<Crossing> xs = d.crossings();
  const Crossing old = xs[static_cast<std::size_t>(c)];
  for (int k = 0; k < 4; ++k)
    xs[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(k)] = old.arcs[static_cast<std::size_t>((k + shift) % 4)];
  return PlanarDiagram(std::move(xs), d.free_loops());
}

PlanarDiagram switch_crossing(const PlanarDiagram& d, int c) { return switch_crossing(d, c, default_orientation(d)); }

// ---------------------------------------------------------------------------
// Faces

namespace {

// Orbits of the corner successor map, no planarity or connectivity checks.
std::vector<std::vector<Dart>> face_orbits(const PlanarDiagram& d, std::vector<std::array<int, 4>>* corner_face) {
  const int n = d.size();
  std::vector<int> face_of(4 * static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Dart>> orbits;
  for (int id = 0; id < 4 * n; ++id) {
    if (face_of[static_cast<std::size_t>(id)] >= 0) continue;
    const int f = static_cast<int>(orbits.size());
    orbits.emplace_back();
    int cur = id;
    while (face_of[static_cast<std::size_t>(cur)] < 0) {
      face_of[static_cast<std::size_t>(cur)] = f;
      const Dart corner = dart_of(cur);
      orbits.back().push_back(corner);
      cur = dart_id(d.partner({corner.crossing, (corner.slot + 1) % 4}));
    }
  }
  if (corner_face) {
    corner_face->assign(static_cast<std::size_t>(n), {});
    for (int id = 0; id < 4 * n; ++id)
      (*corner_face)[static_cast<std::size_t>(id / 4)][static_cast<std::size_t>(id % 4)] = face_of[static_cast<std::size_t>(id)];
  }
  return orbits;
}

}  // namespace

bool is_connected(const PlanarDiagram& d) {
  const auto split = split_components(d);
  return split.pieces.size() + static_cast<std::size_t>(split.free_loops) == 1;
}

FaceData faces(const PlanarDiagram& d) {
  if (d.size() == 0 || !is_connected(d)) throw DiagramError("faces: diagram is not a single connected piece");
  FaceData out;
  out.faces = face_orbits(d, &out.corner_face);
  const int n = d.size();
  if (static_cast<int>(out.faces.size()) != n + 2)
    throw DiagramError("faces: Euler check failed (V - E + F = " + std::to_string(n - 2 * n + static_cast<int>(out.faces.size())) +
                       "), PD code is not planar");

  out.color.assign(out.faces.size(), -1);
  std::vector<int> parity(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  parity[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int s = 0; s < 4; ++s) {
      const int f = out.corner_face[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
      const int want = parity[static_cast<std::size_t>(c)] ^ (s & 1);
      int& col = out.color[static_cast<std::size_t>(f)];
      if (col < 0) {
        col = want;
        for (const Dart& corner : out.faces[static_cast<std::size_t>(f)]) {
          int& p = parity[static_cast<std::size_t>(corner.crossing)];
          const int implied = want ^ (corner.slot & 1);
          if (p < 0) {
            p = implied;
            queue.push_back(corner.crossing);
          } else if (p != implied) {
            throw DiagramError("faces: checkerboard coloring failed");
          }
        }
      } else if (col != want) {
        throw DiagramError("faces: checkerboard coloring failed");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simplification

std::optional<PlanarDiagram> simplify_step(const PlanarDiagram& d) {
  const int n = d.size();
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      const auto& a = d.crossing(c).arcs;
      if (a[static_cast<std::size_t>(s)] == a[static_cast<std::size_t>((s + 1) % 4)])
        return remove_crossings(d, {{c, kPassThrough}});
    }
  for (const auto& face : face_orbits(d, nullptr)) {
    if (face.size() != 2) continue;
    const Dart p = face[0];
    const Dart q = face[1];
    if (p.crossing == q.crossing) continue;
    if ((p.slot & 1) == ((q.slot + 1) & 1))
      return remove_crossings(d, {{p.crossing, kPassThrough}, {q.crossing, kPassThrough}});
  }
  return std::nullopt;
}

PlanarDiagram simplify(const PlanarDiagram& d) {
  PlanarDiagram cur = d;
  while (auto next = simplify_step(cur)) cur = std::move(*next);
  return cur;
}

// ---------------------------------------------------------------------------
// Splitting

SplitResult split_components(const PlanarDiagram& d) {
  const int n = d.size();
  UnionFind uf(static_cast<std::size_t>(n));
  for (int id = 0; id < 4 * n; ++id) uf.unite(static_cast<std::size_t>(id / 4), static_cast<std::size_t>(d.partner(dart_of(id)).crossing));
  std::map<std::size_t, std::vector<int>> groups;
  for (int c = 0; c < n; ++c) groups[uf.find(static_cast<std::size_t>(c))].push_back(c);
  SplitResult out;
  out.free_loops = d.free_loops();
  for (auto& [root, idx] : groups) {
    std::vector<Crossing> xs;
    xs.reserve(idx.size());
    for (int c : idx) xs.push_back(d.crossing(c));
    out.pieces.emplace_back(std::move(xs), 0);
    out.crossing_indices.push_back(std::move(idx));
  }
  return out;
}

std::optional<std::pair<PlanarDiagram, PlanarDiagram>> split_connected_sum(const PlanarDiagram& d) {
  if (d.size() < 2 || !is_connected(d)) return std::nullopt;
  std::vector<std::array<int, 4>> corner_face;
  face_orbits(d, &corner_face);
  const int n = d.size();

  // label -> (face pair); arc at (c,s) separates corners (c,s-1) and (c,s)
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  std::map<int, Dart> first_occ;
  for (int id = 0; id < 4 * n; ++id) {
    const Dart dt = dart_of(id);
    const int label = d.arc_at(dt);
    if (first_occ.count(label)) continue;
    first_occ[label] = dt;
    int f1 = corner_face[static_cast<std::size_t>(dt.crossing)][static_cast<std::size_t>((dt.slot + 3) % 4)];
    int f2 = corner_face[static_cast<std::size_t>(dt.crossing)][static_cast<std::size_t>(dt.slot)];
    if (f1 == f2) continue;
    by_pair[{std::min(f1, f2), std::max(f1, f2)}].push_back(label);
  }
  for (const auto& [pair, labels] : by_pair) {
    if (labels.size() < 2) continue;
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        const int e1 = labels[i];
        const int e2 = labels[j];
        // Crossings reachable from one end of e1 without using e1 or e2.
        std::vector<char> side(static_cast<std::size_t>(n), 0);
        const Dart start = first_occ[e1];
        std::deque<int> queue{start.crossing};
        side[static_cast<std::size_t>(start.crossing)] = 1;
        while (!queue.empty()) {
          const int c = queue.front();
          queue.pop_front();
          for (int s = 0; s < 4; ++s) {
            const int label = d.crossing(c).arcs[static_cast<std::size_t>(s)];
            if (label == e1 || label == e2) continue;
            const int w = d.partner({c, s}).crossing;
            if (!side[static_cast<std::size_t>(w)]) {
              side[static_cast<std::size_t>(w)] = 1;
              queue.push_back(w);
            }
          }
        }
        const Dart e1_other = d.partner(start);
        if (side[static_cast<std::size_t>(e1_other.crossing)]) continue;
        const Dart e2a = first_occ[e2];
        const Dart e2b = d.partner(e2a);
        if (side[static_cast<std::size_t>(e2a.crossing)] == side[static_cast<std::size_t>(e2b.crossing)]) continue;

        std::vector<Crossing> s_part, t_part;
        for (int c = 0; c < n; ++c) {
          Crossing x = d.crossing(c);
          for (int& a : x.arcs)
            if (a == e2) a = e1;
          (side[static_cast<std::size_t>(c)] ? s_part : t_part).push_back(x);
        }
        return std::make_pair(PlanarDiagram(std::move(s_part)), PlanarDiagram(std::move(t_part)));
      }
  }
  return std::nullopt;
}

std::optional<std::pair<int, Smoothing>> find_nugatory(const PlanarDiagram& d) {
  std::vector<std::array<int, 4>> corner_face;
  face_orbits(d, &corner_face);
  for (int c = 0; c < d.size(); ++c) {
    const auto& cf = corner_face[static_cast<std::size_t>(c)];
    // Untwisting keeps both strands crossing the separating curve, so the
    // strands pair up across it: corners 0,2 shared -> (0,1)(2,3).
    if (cf[0] == cf[2]) return std::make_pair(c, Smoothing::A);
    if (cf[1] == cf[3]) return std::make_pair(c, Smoothing::B);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Canonical code

namespace {

std::vector<int> piece_serialization(const PlanarDiagram& d, int c0, int base0, const std::vector<int>* bound) {
  const int n = d.size();
  std::vector<int> entry_base(static_cast<std::size_t>(n), -1);
  std::unordered_map<int, int> label;
  std::vector<int> out;
  out.reserve(4 * static_cast<std::size_t>(n));
  std::deque<int> queue;
  entry_base[static_cast<std::size_t>(c0)] = base0;
  queue.push_back(c0);
  int next_label = 1;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    const int base = entry_base[static_cast<std::size_t>(c)];
    for (int k = 0; k < 4; ++k) {
      const int s = (base + k) % 4;
      const int a = d.crossing(c).arcs[static_cast<std::size_t>(s)];
      auto [it, fresh] = label.emplace(a, next_label);
      if (fresh) ++next_label;
      out.push_back(it->second);
      if (bound) {
        // Early exit once this candidate is already larger than the best one.
        const std::size_t i = out.size() - 1;
        if (out[i] != (*bound)[i]) {
          if (out[i] > (*bound)[i]) return {};
          bound = nullptr;
        }
      }
      const Dart p = d.partner({c, s});
      if (entry_base[static_cast<std::size_t>(p.crossing)] < 0) {
        entry_base[static_cast<std::size_t>(p.crossing)] = p.slot & ~1;
        queue.push_back(p.crossing);
      }
    }
  }
  return out;
}

std::string piece_code(const PlanarDiagram& piece) {
  std::vector<int> best;
  for (int c = 0; c < piece.size(); ++c)
    for (int base : {0, 2}) {
      auto cand = piece_serialization(piece, c, base, best.empty() ? nullptr : &best);
      if (cand.empty()) continue;
      if (best.empty() || cand < best) best = std::move(cand);
    }
  std::string out;
  put_u16(out, piece.size());
  for (int v : best) put_u16(out, v);
  return out;
}

}  // namespace

std::string canonical_code(const PlanarDiagram& d) {
  const auto split = split_components(d);
  std::vector<std::string> codes;
  codes.reserve(split.pieces.size());
  for (const auto& piece : split.pieces) codes.push_back(piece_code(piece));
  std::sort(codes.begin(), codes.end());
  std::string out;
  put_u16(out, split.free_loops);
  put_u16(out, static_cast<int>(codes.size()));
  for (const auto& c : codes) out += c;
  return out;
}

// ---------------------------------------------------------------------------
// Relabeling

PlanarDiagram standardize(const PlanarDiagram& d, const Orientation& o) {
  const auto comps = strand_components(d);
  if (o.reversed.size() != comps.size()) throw DiagramError("orientation does not match component count");
  std::vector<Crossing> xs = d.crossings();
  int base = 0;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    std::vector<Dart> entries = comps[k];
    if (o.reversed[k]) {
      std::reverse(entries.begin(), entries.end());
      for (auto& e : entries) e.slot = (e.slot + 2) % 4;
    }
    const int len = static_cast<int>(entries.size());
    for (int i = 0; i < len; ++i) {
      const Dart e = entries[static_cast<std::size_t>(i)];
      xs[static_cast<std::size_t>(e.crossing)].arcs[static_cast<std::size_t>(e.slot)] = base + 1 + i;
      xs[static_cast<std::size_t>(e.crossing)].arcs[static_cast<std::size_t>((e.slot + 2) % 4)] = base + 1 + (i + 1) % len;
    }
    base += len;
  }
  const auto flows = crossing_flows(d, o);
  for (std::size_t c = 0; c < xs.size(); ++c)
    if (flows[c].under_in == 2) std::rotate(xs[c].arcs.begin(), xs[c].arcs.begin() + 2, xs[c].arcs.end());
  return PlanarDiagram(std::move(xs), d.free_loops());
}

PlanarDiagram standardize(const PlanarDiagram& d) { return standardize(d, default_orientation(d)); }

PlanarDiagram relabel(const PlanarDiagram& d, const std::vector<int>& mapping) {
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs)
    for (int& a : x.arcs) a = mapping.at(static_cast<std::size_t>(a));
  return PlanarDiagram(std::move(xs), d.free_loops());
}

}  // namespace knotband
