#pragma once

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotband/knot_table.hpp"
#include "knotband/laurent_poly.hpp"
#include "knotband/planar_diagram.hpp"

namespace test {

inline const knotband::KnotTable& table() {
  static const knotband::KnotTable t = knotband::load_knot_table(KNOTBAND_TEST_TABLE);
  return t;
}

struct Reference {
  std::string name;
  knotband::LaurentPoly jones_t;
  int signature = 0;
  int arf = 0;
  long long det = 0;
};

/// Externally sourced invariants (KnotInfo, transported to the table's chirality).
inline const std::vector<Reference>& reference() {
  static const std::vector<Reference> refs = [] {
    std::vector<Reference> out;
    std::ifstream in(KNOTBAND_TEST_REFERENCE);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto j = nlohmann::json::parse(line);
      Reference r;
      r.name = j.at("name");
      for (const auto& term : j.at("jones_t"))
        r.jones_t += knotband::LaurentPoly::monomial(term[1].get<long long>(), term[0].get<int>());
      r.signature = j.at("signature");
      r.arf = j.at("arf");
      r.det = j.at("det");
      out.push_back(std::move(r));
    }
    return out;
  }();
  return refs;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240607);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline knotband::LaurentPoly random_poly(int terms = 5, int span = 6, int coeff = 9) {
  knotband::LaurentPoly p;
  for (int k = 0; k < terms; ++k) p += knotband::LaurentPoly::monomial(uniform(-coeff, coeff), uniform(-span, span));
  return p;
}

/// Bracket by brute-force state sum over loop counts, written independently
/// of the library: loops are counted with a union-find over crossing slots.
inline knotband::LaurentPoly state_sum_oracle(const knotband::PlanarDiagram& d) {
  using knotband::LaurentPoly;
  const int n = d.size();
  const LaurentPoly loop = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  if (n == 0) return loop.pow(static_cast<unsigned>(d.free_loops() - 1));
  std::vector<std::vector<int>> by_label(static_cast<std::size_t>(d.max_label() + 1));
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) by_label[static_cast<std::size_t>(d.crossing(c).arcs[static_cast<std::size_t>(s)])].push_back(4 * c + s);
  LaurentPoly total;
  for (unsigned long long state = 0; state < (1ULL << n); ++state) {
    std::vector<int> parent(static_cast<std::size_t>(4 * n));
    for (int i = 0; i < 4 * n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    int sets = 4 * n;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --sets;
      }
    };
    for (const auto& occ : by_label)
      if (occ.size() == 2) unite(occ[0], occ[1]);
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const bool b_mode = (state >> c) & 1ULL;
      if (b_mode) {
        unite(4 * c, 4 * c + 3);
        unite(4 * c + 1, 4 * c + 2);
      } else {
        ++a_count;
        unite(4 * c, 4 * c + 1);
        unite(4 * c + 2, 4 * c + 3);
      }
    }
    const int loops = sets + d.free_loops();
    total += LaurentPoly::monomial(1, a_count - (n - a_count)) * loop.pow(static_cast<unsigned>(loops - 1));
  }
  return total;
}

/// A uniformly random injective relabeling of the arcs of d onto 1..max+extra.
inline knotband::PlanarDiagram random_relabel(const knotband::PlanarDiagram& d, int extra = 10) {
  std::vector<int> fresh(static_cast<std::size_t>(d.max_label() + extra));
  for (std::size_t i = 0; i < fresh.size(); ++i) fresh[i] = static_cast<int>(i) + 1;
  std::shuffle(fresh.begin(), fresh.end(), rng());
  std::vector<int> mapping(static_cast<std::size_t>(d.max_label() + 1), 0);
  for (std::size_t i = 1; i < mapping.size(); ++i) mapping[i] = fresh[i - 1];
  return knotband::relabel(d, mapping);
}

/// Table knots with at most `max_crossings` crossings in the diagram, in table order.
inline std::vector<const knotband::KnotRecord*> table_knots(int max_crossings, bool primes_only = false) {
  std::vector<const knotband::KnotRecord*> out;
  for (const auto& [name, rec] : table().records())
    if (rec.pd.size() <= max_crossings && (!primes_only || name.find('#') == std::string::npos)) out.push_back(&rec);
  return out;
}

}  // namespace test
