#include "knotband/jones.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace knotband {

LaurentPoly bracket_loop_value() { return LaurentPoly::from_terms({{2, -1}, {-2, -1}}); }

namespace {

LaurentPoly divide_by_loop(const LaurentPoly& p) {
  auto q = p.divide_exact(bracket_loop_value());
  if (!q) throw std::logic_error("bracket: loop factor does not divide the state sum");
  return *q;
}

int count_loops(const PlanarDiagram& d, unsigned long long state) {
  const int n = d.size();
  std::vector<int> parent(4 * static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int c = 0; c < n; ++c) {
    const SlotPairing& pr = ((state >> c) & 1ULL) ? kPairingB : kPairingA;
    for (const auto& [s, t] : pr) unite(4 * c + s, 4 * c + t);
    for (int s = 0; s < 4; ++s) {
      const Dart p = d.partner({c, s});
      unite(4 * c + s, 4 * p.crossing + p.slot);
    }
  }
  int loops = 0;
  for (int i = 0; i < 4 * n; ++i)
    if (find(i) == i) ++loops;
  return loops;
}

// Greedy contraction order: repeatedly take the crossing with the most arcs
// into the already processed set.
std::vector<int> contraction_order(const PlanarDiagram& d) {
  const int n = d.size();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (done[static_cast<std::size_t>(c)]) continue;
      int score = 0;
      for (int s = 0; s < 4; ++s)
        if (done[static_cast<std::size_t>(d.partner({c, s}).crossing)]) ++score;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
  }
  return order;
}

}  // namespace

LaurentPoly kauffman_bracket_state_sum(const PlanarDiagram& d, int cap) {
  const int n = d.size();
  if (n > cap || n > 62) throw std::invalid_argument("state sum refused: " + std::to_string(n) + " crossings exceeds cap");
  const LaurentPoly loop = bracket_loop_value();
  std::map<int, LaurentPoly> by_loops;  // loops -> sum of A^{a-b}
  for (unsigned long long state = 0; state < (1ULL << n); ++state) {
    const int b = std::popcount(state);
    const int a = n - b;
    const int loops = count_loops(d, state) + d.free_loops();
    by_loops[loops] += LaurentPoly::monomial(1, a - b);
  }
  LaurentPoly total;
  for (const auto& [loops, p] : by_loops) total += p * loop.pow(static_cast<unsigned>(loops));
  return divide_by_loop(total);
}

LaurentPoly kauffman_bracket(const PlanarDiagram& d) {
  const int n = d.size();
  const LaurentPoly loop = bracket_loop_value();
  if (n == 0) return loop.pow(static_cast<unsigned>(d.free_loops() - 1));

  // Frontier: open darts (processed crossing, partner unprocessed), kept in a
  // vector; a state is the pairing of frontier positions by smoothed paths.
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> frontier;  // dart ids
  using Pairing = std::vector<int>;
  std::map<Pairing, LaurentPoly> states;
  states[{}] = LaurentPoly(1);

  for (int c : contraction_order(d)) {
    // Node layout: old frontier positions 0..F-1, then the 4 darts of c.
    const int f_old = static_cast<int>(frontier.size());
    std::vector<int> arc_link(static_cast<std::size_t>(f_old + 4), -1);
    for (int s = 0; s < 4; ++s) {
      const Dart p = d.partner({c, s});
      const int me = f_old + s;
      if (p.crossing == c) {
        arc_link[static_cast<std::size_t>(me)] = f_old + p.slot;
      } else if (done[static_cast<std::size_t>(p.crossing)]) {
        const int pid = 4 * p.crossing + p.slot;
        const auto it = std::find(frontier.begin(), frontier.end(), pid);
        const int pos = static_cast<int>(it - frontier.begin());
        arc_link[static_cast<std::size_t>(me)] = pos;
        arc_link[static_cast<std::size_t>(pos)] = me;
      }
    }
    // New frontier: old darts without an arc link, then new darts without one.
    std::vector<int> new_frontier;
    std::vector<int> new_pos(static_cast<std::size_t>(f_old + 4), -1);
    for (int i = 0; i < f_old + 4; ++i)
      if (arc_link[static_cast<std::size_t>(i)] < 0) {
        new_pos[static_cast<std::size_t>(i)] = static_cast<int>(new_frontier.size());
        new_frontier.push_back(i < f_old ? frontier[static_cast<std::size_t>(i)] : 4 * c + (i - f_old));
      }

    std::map<Pairing, LaurentPoly> next;
    std::vector<int> path_link(static_cast<std::size_t>(f_old + 4));
    std::vector<char> seen(static_cast<std::size_t>(f_old + 4));
    for (const auto& [pairing, poly] : states) {
      for (int mode = 0; mode < 2; ++mode) {
        for (int i = 0; i < f_old; ++i) path_link[static_cast<std::size_t>(i)] = pairing[static_cast<std::size_t>(i)];
        const SlotPairing& pr = mode == 0 ? kPairingA : kPairingB;
        for (const auto& [s, t] : pr) {
          path_link[static_cast<std::size_t>(f_old + s)] = f_old + t;
          path_link[static_cast<std::size_t>(f_old + t)] = f_old + s;
        }
        std::fill(seen.begin(), seen.end(), 0);
        Pairing out(new_frontier.size(), -1);
        for (int i = 0; i < f_old + 4; ++i) {
          if (seen[static_cast<std::size_t>(i)] || arc_link[static_cast<std::size_t>(i)] >= 0) continue;
          // Walk from an open end along path, arc, path, ... to the other open end.
          int cur = i;
          seen[static_cast<std::size_t>(cur)] = 1;
          while (true) {
            cur = path_link[static_cast<std::size_t>(cur)];
            seen[static_cast<std::size_t>(cur)] = 1;
            const int nxt = arc_link[static_cast<std::size_t>(cur)];
            if (nxt < 0) break;
            cur = nxt;
            seen[static_cast<std::size_t>(cur)] = 1;
          }
          out[static_cast<std::size_t>(new_pos[static_cast<std::size_t>(i)])] = new_pos[static_cast<std::size_t>(cur)];
          out[static_cast<std::size_t>(new_pos[static_cast<std::size_t>(cur)])] = new_pos[static_cast<std::size_t>(i)];
        }
        int loops = 0;
        for (int i = 0; i < f_old + 4; ++i) {
          if (seen[static_cast<std::size_t>(i)]) continue;
          ++loops;
          int cur = i;
          do {
            seen[static_cast<std::size_t>(cur)] = 1;
            const int p = path_link[static_cast<std::size_t>(cur)];
            seen[static_cast<std::size_t>(p)] = 1;
            cur = arc_link[static_cast<std::size_t>(p)];
          } while (!seen[static_cast<std::size_t>(cur)]);
        }
        LaurentPoly term = poly.shift(mode == 0 ? 1 : -1);
        if (loops > 0) term *= loop.pow(static_cast<unsigned>(loops));
        next[std::move(out)] += term;
      }
    }
    states.clear();
    for (auto& [k, v] : next)
      if (!v.is_zero()) states.emplace(k, std::move(v));
    done[static_cast<std::size_t>(c)] = 1;
    frontier = std::move(new_frontier);
  }
  LaurentPoly total = states.empty() ? LaurentPoly() : states.begin()->second;
  if (d.free_loops() > 0) total *= loop.pow(static_cast<unsigned>(d.free_loops()));
  return divide_by_loop(total);
}

LaurentPoly jones(const PlanarDiagram& d, const Orientation& o) {
  return jones_from_bracket(kauffman_bracket(d), writhe(d, o));
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int w) {
  LaurentPoly v = bracket.shift(-3 * w);
  if (w % 2 != 0) v = -v;
  LaurentPoly out;
  for (const auto& [e, c] : v.terms()) {
    if (e % 2 != 0) throw std::logic_error("jones: odd A-exponent after normalization");
    out += LaurentPoly::monomial(c, -e / 2);
  }
  return out;
}

LaurentPoly jones(const PlanarDiagram& d) { return jones(d, default_orientation(d)); }

LaurentPoly q_to_t(const LaurentPoly& q_poly) {
  LaurentPoly out;
  for (const auto& [e, c] : q_poly.terms()) {
    if (e % 2 != 0) throw std::invalid_argument("q_to_t: odd exponent " + std::to_string(e));
    out += LaurentPoly::monomial(c, e / 2);
  }
  return out;
}

LaurentPoly t_to_q(const LaurentPoly& t_poly) { return t_poly.substitute_power(2); }

int jones_at_i(const LaurentPoly& jones_q, int components) {
  if (components != 1) throw std::invalid_argument("V(K; i) is defined here for knots only");
  const Cyclo12 v = q_to_t(jones_q).evaluate(Cyclo12::i(), -Cyclo12::i());
  if (v == Cyclo12(1)) return 1;
  if (v == Cyclo12(-1)) return -1;
  throw std::invalid_argument("V(K; i) is not +-1: " + render_coords(v));
}

SpecialValues special_values(const LaurentPoly& jones_q, int components) {
  SpecialValues sv;
  sv.v_omega = eval_cyclo12(jones_q);
  sv.v_minus1 = jones_q.evaluate(Cyclo12::i(), -Cyclo12::i());
  if (components == 1) sv.v_i = jones_at_i(jones_q, components);
  return sv;
}

}  // namespace knotband
