#include "knotband/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace knotband {

namespace {

constexpr const char* kRuleE2 = "e2";
constexpr const char* kRuleDelta = "delta";
constexpr const char* kRuleLambda = "lambda";
constexpr const char* kRuleMoebius = "moebius";
constexpr const char* kRuleLinkingForm = "linking_form";
constexpr const char* kRuleDistanceTwo = "distance_two";
constexpr const char* kRuleUpperFromU = "upper_from_u";
constexpr const char* kRuleAsserted = "asserted";
constexpr const char* kRuleSignatureGap = "signature_gap";
constexpr const char* kRuleParity = "parity_closure";

const char* rule_ref(const std::string& id) {
  if (id == kRuleE2) return "bd(L,M) >= |e2(L) - e2(M)|, e2 = generators of H1 of the double branched cover";
  if (id == kRuleDelta) return "|V(L;w)/V(M;w)| = sqrt3^n implies bd(L,M) >= |n|";
  if (id == kRuleLambda) return "lambda(L)/lambda(M) = sqrt5^n implies bd >= |n|; -sqrt5^n implies bd >= |n|+1";
  if (id == kRuleMoebius) return "a knot bounding a Moebius band has sigma - 4 Arf = 0, 2 or 6 mod 8";
  if (id == kRuleLinkingForm) return "one band move from the unknot makes Sigma_2(K) an integral surgery on a knot, so its linking form is +-1/det";
  if (id == kRuleDistanceTwo) return "V(J;w)/V(K;w) = 3 with sigma difference 0 mod 8 and Arf different, or 4 mod 8 and Arf equal, implies d2(J,K) >= 3";
  if (id == kRuleUpperFromU) return "bd(J,K) <= d(J,K) for d even, d(J,K)+1 for d odd; d2 <= d+1";
  if (id == kRuleAsserted) return "asserted band certificate";
  if (id == kRuleSignatureGap) return "d2(J,K) = 3 and bd(J,K) = 2 imply |sigma(J) - sigma(K)| <= 2";
  if (id == kRuleParity) return "bd = d2 - 1 or d2; bd = d2 when bd is odd or d2 is 1";
  return "";
}

int mod8(int v) { return ((v % 8) + 8) % 8; }

void raise_lo(std::optional<int>& slot, int v) { slot = slot ? std::max(*slot, v) : v; }
void lower_hi(std::optional<int>& slot, int v) { slot = slot ? std::min(*slot, v) : v; }

Interval meet(Interval i, std::optional<int> lo, std::optional<int> hi) {
  if (lo) i.lo = std::max(i.lo, *lo);
  if (hi) i.hi = i.hi ? std::min(*i.hi, *hi) : *hi;
  return i;
}

Snapshot apply(const Snapshot& s, const Constraint& c, bool has_d2) {
  Snapshot out = s;
  out.db = meet(s.db, c.db_lo, c.db_hi);
  if (has_d2) out.d2 = meet(s.d2, c.d2_lo, c.d2_hi);
  return out;
}

Constraint evaluate_rule(const std::string& id, const Facts& f, const Snapshot& s, Mode mode) {
  if (id == kRuleE2) return rule_e2(f);
  if (id == kRuleDelta) return rule_delta(f);
  if (id == kRuleLambda) return rule_lambda(f);
  if (id == kRuleMoebius) return rule_moebius(f);
  if (id == kRuleLinkingForm) return rule_linking_form(f);
  if (id == kRuleDistanceTwo) return rule_distance_two(f);
  if (id == kRuleUpperFromU) return rule_upper_from_u(f);
  if (id == kRuleAsserted) return mode == Mode::Asserted ? rule_asserted_certificates(f) : Constraint{};
  if (id == kRuleSignatureGap) return rule_signature_gap(f, s);
  throw std::invalid_argument("unknown rule " + id);
}

Snapshot step(const std::string& id, const Facts& f, const Snapshot& s, Mode mode) {
  if (id == kRuleParity) return f.has_d2() ? parity_closure(s) : s;
  return apply(s, evaluate_rule(id, f, s, mode), f.has_d2());
}

Snapshot initial_state() { return Snapshot{Interval{0, std::nullopt}, Interval{0, std::nullopt}}; }

const Operand* nontrivial_side_vs_unknot(const Facts& f) {
  if (f.b.unknot) return &f.a;
  if (f.a.unknot) return &f.b;
  return nullptr;
}

}  // namespace

std::string to_string(const Interval& i) {
  return "[" + std::to_string(i.lo) + "," + (i.hi ? std::to_string(*i.hi) + "]" : std::string("inf)"));
}

std::string to_string(Mode m) { return m == Mode::Derived ? "derived" : "asserted"; }

std::string to_string(SliceStatus s) { return s == SliceStatus::NotSlice ? "not-slice" : "inconclusive"; }

std::optional<UInterval> Facts::gordian_bound() const {
  if (gordian) return gordian;
  if (a.unknot && b.unknot) return UInterval{0, 0};
  if (b.unknot) return a.u;
  if (a.unknot) return b.u;
  if (a.u && b.u) return UInterval{0, a.u->hi + b.u->hi};
  return std::nullopt;
}

Operand unknot_operand() {
  Operand op;
  op.label = "U";
  op.inv = invariants(PlanarDiagram::unknot());
  op.unknot = true;
  op.u = UInterval{0, 0};
  return op;
}

Facts knot_facts(Operand k) {
  Facts f;
  f.a = std::move(k);
  f.b = unknot_operand();
  return f;
}

Facts pair_facts(Operand a, Operand b) {
  Facts f;
  f.a = std::move(a);
  f.b = std::move(b);
  return f;
}

Constraint rule_e2(const Facts& f) {
  Constraint c;
  const int n = std::abs(f.a.inv.e2() - f.b.inv.e2());
  if (n > 0) c.db_lo = n;
  return c;
}

Constraint rule_delta(const Facts& f) {
  Constraint c;
  const int n = std::abs(f.a.inv.delta() - f.b.inv.delta());
  if (n > 0) c.db_lo = n;
  return c;
}

Constraint rule_lambda(const Facts& f) {
  Constraint c;
  if (!f.a.inv.lambda_class || !f.b.inv.lambda_class) return c;
  const GoldenClass& la = *f.a.inv.lambda_class;
  const GoldenClass& lb = *f.b.inv.lambda_class;
  const int n = std::abs(la.r - lb.r) + (la.sign * lb.sign < 0 ? 1 : 0);
  if (n > 0) c.db_lo = n;
  return c;
}

Constraint rule_moebius(const Facts& f) {
  Constraint c;
  const Operand* k = nontrivial_side_vs_unknot(f);
  if (k == nullptr || !k->inv.is_knot() || k->unknot) return c;
  const int v = mod8(k->inv.signature - 4 * *k->inv.arf);
  if (v != 0 && v != 2 && v != 6) c.db_lo = 2;
  return c;
}

bool unit_square_up_to_sign(const BigInt& a, const BigInt& n) {
  if (n > BigInt(std::numeric_limits<int>::max())) throw std::range_error("linking form modulus too large");
  const std::int64_t nn = static_cast<std::int64_t>(n);
  const std::int64_t aa = static_cast<std::int64_t>(a);
  for (std::int64_t x = 1; x < nn; ++x) {
    const std::int64_t sq = x * x % nn;
    if (sq == aa || sq == (nn - aa) % nn) return true;
  }
  return nn == 1;
}

Constraint rule_linking_form(const Facts& f) {
  Constraint c;
  const Operand* k = nontrivial_side_vs_unknot(f);
  if (k == nullptr || !k->inv.is_knot() || !k->inv.homology.linking) return c;
  if (!unit_square_up_to_sign(*k->inv.homology.linking, k->inv.det)) c.db_lo = 2;
  return c;
}

Constraint rule_distance_two(const Facts& f) {
  Constraint c;
  if (!f.has_d2()) return c;
  const InvariantSet& j = f.a.inv;
  const InvariantSet& k = f.b.inv;
  const bool ratio_three = j.v_omega == Cyclo12(3) * k.v_omega || k.v_omega == Cyclo12(3) * j.v_omega;
  if (!ratio_three) return c;
  const int gap = mod8(j.signature - k.signature);
  const bool same_arf = *j.arf == *k.arf;
  if ((gap == 0 && !same_arf) || (gap == 4 && same_arf)) c.d2_lo = 3;
  return c;
}

Constraint rule_upper_from_u(const Facts& f) {
  Constraint c;
  if (!f.has_d2()) return c;
  const auto d = f.gordian_bound();
  if (!d) return c;
  const int worst = d->hi;
  c.db_hi = worst % 2 == 0 ? worst : worst + 1;
  c.d2_hi = worst + 1;
  return c;
}

Constraint rule_asserted_certificates(const Facts& f) {
  Constraint c;
  for (const auto& cert : f.certificates) {
    if (cert.target == Target::Db) lower_hi(c.db_hi, cert.upper);
    else if (f.has_d2()) lower_hi(c.d2_hi, cert.upper);
  }
  return c;
}

Constraint rule_signature_gap(const Facts& f, const Snapshot& s) {
  Constraint c;
  if (!f.has_d2() || !s.d2.pinned() || s.d2.lo != 3) return c;
  if (s.db.lo < 2 || !s.db.hi || *s.db.hi > 3) return c;
  if (std::abs(f.a.inv.signature - f.b.inv.signature) >= 4) raise_lo(c.db_lo, 3);
  return c;
}

bool feasible_pair(int b, int h) { return b == h || (b == h - 1 && h % 2 == 1 && h >= 3); }

Snapshot parity_closure(const Snapshot& s) {
  // Above `cap` every value behaves alike: feasible iff both sides are unbounded.
  int cap = std::max(s.db.lo, s.d2.lo);
  if (s.db.hi) cap = std::max(cap, *s.db.hi);
  if (s.d2.hi) cap = std::max(cap, *s.d2.hi);
  cap += 3;

  auto b_ok = [&](int b) { return s.d2.contains(b) || (s.d2.contains(b + 1) && feasible_pair(b, b + 1)); };
  auto h_ok = [&](int h) { return s.db.contains(h) || (s.db.contains(h - 1) && feasible_pair(h - 1, h)); };

  auto hull = [&](const Interval& self, std::optional<int> upper_cap, auto ok) {
    Interval out{0, 0};
    const int top = std::min(self.hi ? *self.hi : cap, upper_cap ? *upper_cap : cap);
    int lo = -1;
    for (int v = self.lo; v <= top; ++v)
      if (ok(v)) { lo = v; break; }
    if (lo < 0) return Interval{1, 0};  // empty
    out.lo = lo;
    if (!self.hi && !upper_cap) {
      out.hi = std::nullopt;
      return out;
    }
    for (int v = top; v >= lo; --v)
      if (ok(v)) { out.hi = v; break; }
    return out;
  };

  Snapshot out;
  // bd <= d2, and d2 <= bd + 1.
  out.db = hull(s.db, s.d2.hi, b_ok);
  out.d2 = hull(s.d2, s.db.hi ? std::optional<int>(*s.db.hi + 1) : std::nullopt, h_ok);
  return out;
}

bool jointly_feasible(const Snapshot& s) {
  const Snapshot c = parity_closure(s);
  return !c.db.empty() && !c.d2.empty();
}

const std::vector<std::string>& rule_order() {
  static const std::vector<std::string> order{kRuleE2,         kRuleDelta,    kRuleLambda,
                                              kRuleMoebius,    kRuleLinkingForm, kRuleDistanceTwo, kRuleUpperFromU,
                                              kRuleAsserted,   kRuleSignatureGap, kRuleParity};
  return order;
}

BoundState deduce(const Facts& f, Mode mode) {
  BoundState st;
  st.has_d2 = f.has_d2();
  st.bounds = initial_state();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& id : rule_order()) {
      const Snapshot after = step(id, f, st.bounds, mode);
      if (after == st.bounds) continue;
      st.trace.push_back(TraceEntry{id, rule_ref(id), st.bounds, after, id == kRuleAsserted});
      st.bounds = after;
      changed = true;
      const bool ok = !after.db.empty() && !after.d2.empty() && (!st.has_d2 || jointly_feasible(after));
      if (!ok)
        throw BoundContradiction("contradiction after rule " + id + ": bd " + to_string(after.db) + ", d2 " +
                                     to_string(after.d2),
                                 st.trace);
    }
  }
  return st;
}

Snapshot replay(const Facts& f, Mode mode, const std::vector<TraceEntry>& trace) {
  Snapshot s = initial_state();
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const TraceEntry& e = trace[k];
    if (!(e.before == s)) throw std::runtime_error("replay: state before step " + std::to_string(k) + " differs");
    const Snapshot after = step(e.rule, f, s, mode);
    if (!(after == e.after)) throw std::runtime_error("replay: rule " + e.rule + " at step " + std::to_string(k) + " gives a different state");
    s = after;
  }
  return s;
}

SliceStatus slice_obstruction(const InvariantSet& inv) {
  return inv.is_knot() && inv.v_omega == Cyclo12(-1) ? SliceStatus::NotSlice : SliceStatus::Inconclusive;
}

}  // namespace knotband
