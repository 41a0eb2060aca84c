#include "knotband/q_polynomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace knotband {

std::optional<LaurentPoly> QCache::find(const std::string& key) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void QCache::store(const std::string& key, const LaurentPoly& value) {
  std::unique_lock lock(mu_);
  map_.emplace(key, value);
}

std::size_t QCache::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

LaurentPoly q_loop_value() { return LaurentPoly::from_terms({{-1, 2}, {0, -1}}); }

namespace {

// Crossing to expand so that the recursion descends toward an unlink:
// components ordered and based so that as many crossings as possible are
// first met on the over strand; returns the first crossing met from below,
// or nullopt when the diagram is descending.
std::optional<int> first_ascending_crossing(const PlanarDiagram& d) {
  const auto comps = strand_components(d);
  const std::size_t k = comps.size();
  std::vector<int> comp_of_strand(2 * static_cast<std::size_t>(d.size()), -1);  // 2c + parity
  for (std::size_t i = 0; i < k; ++i)
    for (const Dart& e : comps[i]) comp_of_strand[static_cast<std::size_t>(2 * e.crossing + (e.slot & 1))] = static_cast<int>(i);

  // Best start and direction per component for its self-crossings.
  std::vector<std::vector<Dart>> walks(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& entries = comps[i];
    const std::size_t len = entries.size();
    int best = std::numeric_limits<int>::max();
    for (int dir = 0; dir < 2; ++dir)
      for (std::size_t start = 0; start < len; ++start) {
        std::vector<Dart> walk;
        walk.reserve(len);
        for (std::size_t t = 0; t < len; ++t) {
          if (dir == 0) {
            walk.push_back(entries[(start + t) % len]);
          } else {
            const Dart e = entries[(start + len - t) % len];
            walk.push_back({e.crossing, (e.slot + 2) % 4});
          }
        }
        std::unordered_map<int, int> first_slot;
        int bad = 0;
        for (const Dart& e : walk) {
          auto [it, fresh] = first_slot.emplace(e.crossing, e.slot);
          if (!fresh && it->second % 2 == 0) ++bad;  // self-crossing first met from below
        }
        if (bad < best) {
          best = bad;
          walks[i] = std::move(walk);
        }
      }
  }

  // Order components: a crossing between two components is fine when the
  // component passing over comes first.
  std::vector<std::vector<int>> under_before(k, std::vector<int>(k, 0));  // [u][o] crossings with u under, o over
  for (int c = 0; c < d.size(); ++c) {
    const int u = comp_of_strand[static_cast<std::size_t>(2 * c)];
    const int o = comp_of_strand[static_cast<std::size_t>(2 * c + 1)];
    if (u != o) ++under_before[static_cast<std::size_t>(u)][static_cast<std::size_t>(o)];
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto cost = [&](const std::vector<int>& ord) {
    int total = 0;
    for (std::size_t a = 0; a < ord.size(); ++a)
      for (std::size_t b = a + 1; b < ord.size(); ++b)
        total += under_before[static_cast<std::size_t>(ord[a])][static_cast<std::size_t>(ord[b])];
    return total;
  };
  if (k <= 7) {
    std::vector<int> best_order = order;
    int best = cost(order);
    while (std::next_permutation(order.begin(), order.end())) {
      const int c = cost(order);
      if (c < best) {
        best = c;
        best_order = order;
      }
    }
    order = best_order;
  }

  std::vector<char> seen(static_cast<std::size_t>(d.size()), 0);
  for (int i : order)
    for (const Dart& e : walks[static_cast<std::size_t>(i)]) {
      char& s = seen[static_cast<std::size_t>(e.crossing)];
      if (s) continue;
      s = 1;
      if (e.slot % 2 == 0) return e.crossing;
    }
  return std::nullopt;
}

std::optional<int> alternating_bigon_crossing(const PlanarDiagram& d) {
  std::vector<char> seen(4 * static_cast<std::size_t>(d.size()), 0);
  for (int id = 0; id < 4 * d.size(); ++id) {
    if (seen[static_cast<std::size_t>(id)]) continue;
    std::vector<Dart> face;
    int cur = id;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      const Dart corner{cur / 4, cur % 4};
      face.push_back(corner);
      const Dart nxt = d.partner({corner.crossing, (corner.slot + 1) % 4});
      cur = 4 * nxt.crossing + nxt.slot;
    }
    if (face.size() == 2 && face[0].crossing != face[1].crossing) return std::min(face[0].crossing, face[1].crossing);
  }
  return std::nullopt;
}

class QEngine {
 public:
  QEngine(const QOptions& opt, QCache* shared) : opt_(opt), cache_(shared ? shared : &local_) {}

  LaurentPoly eval(const PlanarDiagram& input, int depth) {
    if (depth > opt_.max_depth) throw QBudgetExceeded("Q recursion depth exceeded " + std::to_string(opt_.max_depth));
    const PlanarDiagram d = simplify(input);
    const LaurentPoly mu = q_loop_value();
    if (d.size() == 0) return mu.pow(static_cast<unsigned>(d.free_loops() - 1));

    const SplitResult split = split_components(d);
    const int parts = static_cast<int>(split.pieces.size()) + split.free_loops;
    if (parts > 1) {
      LaurentPoly acc = mu.pow(static_cast<unsigned>(parts - 1));
      for (const auto& piece : split.pieces) acc *= eval(piece, depth);
      return acc;
    }

    const std::string key = canonical_code(d);
    if (auto hit = cache_->find(key)) return *hit;
    if (++nodes_ > opt_.max_nodes) throw QBudgetExceeded("Q recursion node budget exceeded");

    LaurentPoly result;
    if (auto nug = find_nugatory(d)) {
      result = eval(smooth(d, nug->first, nug->second), depth + 1);
    } else if (auto parts2 = split_connected_sum(d)) {
      result = eval(parts2->first, depth + 1) * eval(parts2->second, depth + 1);
    } else {
      std::optional<int> c = alternating_bigon_crossing(d);
      if (!c) c = first_ascending_crossing(d);
      if (!c) {
        // Descending diagram: an unlink.
        result = mu.pow(static_cast<unsigned>(component_count(d) - 1));
      } else {
        const LaurentPoly z = LaurentPoly::monomial(1, 1);
        result = z * (eval(smooth(d, *c, Smoothing::A), depth + 1) + eval(smooth(d, *c, Smoothing::B), depth + 1)) -
                 eval(switch_crossing(d, *c), depth + 1);
      }
    }
    cache_->store(key, result);
    return result;
  }

 private:
  QOptions opt_;
  QCache local_;
  QCache* cache_;
  std::size_t nodes_ = 0;
};

}  // namespace

LaurentPoly q_polynomial(const PlanarDiagram& d, const QOptions& options, QCache* cache) {
  QEngine engine(options, cache);
  return engine.eval(d, 0);
}

}  // namespace knotband
