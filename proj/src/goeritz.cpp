#include "knotband/goeritz.hpp"

#include <algorithm>

namespace knotband {

GoeritzForm goeritz(const PlanarDiagram& d, const std::vector<CrossingFlow>& flows, int white_color) {
  const FaceData fd = faces(d);
  const int n = d.size();
  if (static_cast<int>(flows.size()) != n) throw DiagramError("goeritz: orientation does not cover every crossing");
  GoeritzForm g;
  std::vector<int> white_index(fd.faces.size(), -1);
  for (std::size_t f = 0; f < fd.faces.size(); ++f)
    if (fd.color[f] == white_color) {
      white_index[f] = static_cast<int>(g.white_faces.size());
      g.white_faces.push_back(static_cast<int>(f));
    }
  const std::size_t w = g.white_faces.size();
  g.full.assign(w, std::vector<BigInt>(w, 0));
  g.eta.assign(static_cast<std::size_t>(n), 0);
  g.type_two.assign(static_cast<std::size_t>(n), false);

  for (int c = 0; c < n; ++c) {
    const auto& cf = fd.corner_face[static_cast<std::size_t>(c)];
    // Corners 0,2 share a color, as do 1,3.
    const bool white_odd = fd.color[static_cast<std::size_t>(cf[1])] == white_color;
    const int eta = white_odd ? -1 : 1;
    const int sign = crossing_sign(flows[static_cast<std::size_t>(c)]);
    // Oriented smoothing: A (merges 1,3) at positive crossings, B (merges 0,2) at negative ones.
    const bool oriented_merges_white = (sign > 0) == white_odd;
    const bool type_two = !oriented_merges_white;
    g.eta[static_cast<std::size_t>(c)] = eta;
    g.type_two[static_cast<std::size_t>(c)] = type_two;
    if (type_two) g.correction += eta;

    const int fa = white_index[static_cast<std::size_t>(white_odd ? cf[1] : cf[0])];
    const int fb = white_index[static_cast<std::size_t>(white_odd ? cf[3] : cf[2])];
    if (fa == fb) continue;  // nugatory crossing, no contribution
    g.full[static_cast<std::size_t>(fa)][static_cast<std::size_t>(fb)] -= eta;
    g.full[static_cast<std::size_t>(fb)][static_cast<std::size_t>(fa)] -= eta;
    g.full[static_cast<std::size_t>(fa)][static_cast<std::size_t>(fa)] += eta;
    g.full[static_cast<std::size_t>(fb)][static_cast<std::size_t>(fb)] += eta;
  }
  for (const auto& row : g.full) {
    BigInt sum = 0;
    for (const auto& x : row) sum += x;
    if (sum != 0) throw std::logic_error("goeritz: row sums do not vanish");
  }
  g.matrix.assign(w - 1, std::vector<BigInt>(w - 1, 0));
  for (std::size_t i = 0; i + 1 < w; ++i)
    for (std::size_t j = 0; j + 1 < w; ++j) g.matrix[i][j] = g.full[i][j];
  return g;
}

GoeritzForm goeritz(const PlanarDiagram& d) { return goeritz(d, crossing_flows(d, default_orientation(d))); }

namespace {

std::vector<CrossingFlow> restrict_flows(const std::vector<CrossingFlow>& all, const std::vector<int>& idx) {
  std::vector<CrossingFlow> out;
  out.reserve(idx.size());
  for (int c : idx) out.push_back(all[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace

int signature(const PlanarDiagram& d, const Orientation& o) {
  if (d.size() == 0) return 0;
  const auto flows = crossing_flows(d, o);
  const SplitResult split = split_components(d);
  int sigma = 0;
  for (std::size_t p = 0; p < split.pieces.size(); ++p) {
    const GoeritzForm g = goeritz(split.pieces[p], restrict_flows(flows, split.crossing_indices[p]));
    sigma += symmetric_signature(g.matrix) - g.correction;
  }
  return sigma;
}

int signature(const PlanarDiagram& d) { return signature(d, default_orientation(d)); }

namespace {

// lk(g, g) * n for the generator g = U^{-1} e_k of coker G, where U G V = D
// and D has its single nontrivial factor n at position k.
BigInt cyclic_linking(const IntMatrix& g_matrix, const BigInt& n) {
  const SnfResult snf = smith_normal_form(g_matrix);
  std::size_t k = 0;
  while (k < snf.factors.size() && snf.factors[k] != n) ++k;
  std::vector<BigInt> unit(g_matrix.size(), 0);
  unit[k] = 1;
  std::vector<BigInt> gen;
  for (const Rational& v : solve(snf.left, unit)) gen.push_back(numerator(v));
  const std::vector<Rational> x = solve(g_matrix, gen);
  Rational lk = 0;
  for (std::size_t i = 0; i < gen.size(); ++i) lk += Rational(gen[i]) * x[i];
  const Rational scaled = lk * Rational(n);
  if (denominator(scaled) != 1) throw std::logic_error("linking form value is not in (1/n)Z");
  BigInt a = numerator(scaled) % n;
  if (a < 0) a += n;
  return a;
}

}  // namespace

DoubleCoverHomology double_cover_homology(const PlanarDiagram& d) {
  DoubleCoverHomology h;
  const SplitResult split = split_components(d);
  const std::size_t parts = split.pieces.size() + static_cast<std::size_t>(split.free_loops);
  for (std::size_t k = 1; k < parts; ++k) h.factors.push_back(0);
  for (const auto& piece : split.pieces) {
    const GoeritzForm g = goeritz(piece);
    if (g.matrix.empty()) continue;
    for (const auto& f : smith_normal_form(g.matrix).factors)
      if (f != 1) h.factors.push_back(f);
  }
  std::sort(h.factors.begin(), h.factors.end(), [](const BigInt& a, const BigInt& b) {
    if ((a == 0) != (b == 0)) return b == 0;  // zeros last
    return a < b;
  });
  h.e2 = static_cast<int>(h.factors.size());
  if (split.pieces.size() == 1 && split.free_loops == 0 && h.e2 == 1 && h.factors[0] > 1)
    h.linking = cyclic_linking(goeritz(split.pieces[0]).matrix, h.factors[0]);
  for (const auto& f : h.factors) {
    if (f % 3 == 0) ++h.delta;
    if (f % 5 == 0) ++h.r;
  }
  return h;
}

BigInt determinant(const PlanarDiagram& d) {
  const SplitResult split = split_components(d);
  if (split.pieces.size() + static_cast<std::size_t>(split.free_loops) > 1) return 0;
  if (split.pieces.empty()) return 1;
  BigInt det = determinant(goeritz(split.pieces[0]).matrix);
  return det < 0 ? BigInt(-det) : det;
}

}  // namespace knotband
