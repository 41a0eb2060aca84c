// Acceptance criteria, one PASS/FAIL line each. Expectations are written out
// here rather than taken from the verification suites.

#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "knotband/bounds.hpp"
#include "knotband/constructions.hpp"
#include "knotband/invariants.hpp"
#include "knotband/jones.hpp"
#include "knotband/knot_table.hpp"
#include "knotband/notation.hpp"
#include "knotband/report.hpp"
#include "knotband/smith.hpp"
#include "knotband/verify.hpp"

using namespace knotband;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    if (ok) detail = what;
    else if (detail.size() < 400) detail += "; " + what;
    ok = false;
  }
};

LaurentPoly tpoly(std::initializer_list<std::pair<int, LaurentPoly::Coeff>> terms) {
  return LaurentPoly::from_terms(terms);
}

const KnotTable& table() {
  static const KnotTable t = load_knot_table(KNOTBAND_TEST_TABLE);
  return t;
}

InvariantSet inv_no_q(const PlanarDiagram& d) {
  InvariantOptions o;
  o.compute_q = false;
  return invariants(d, o);
}

LaurentPoly jones_t(const PlanarDiagram& d) { return q_to_t(jones(d)); }

const Cyclo12 kISqrt3 = Cyclo12::i() * Cyclo12::sqrt3();

Outcome jones_exactness() {
  Outcome out;
  const LaurentPoly v62 = tpoly({{-5, 1}, {-4, -2}, {-3, 2}, {-2, -2}, {-1, 2}, {0, -1}, {1, 1}});
  const LaurentPoly v63 = tpoly({{-3, -1}, {-2, 2}, {-1, -2}, {0, 3}, {1, -2}, {2, 2}, {3, -1}});
  if (jones_t(parse_knot_expr("6_2", table())) != v62) out.fail("V(6_2)");
  if (jones_t(parse_knot_expr("6_3", table())) != v63) out.fail("V(6_3)");
  if (jones_t(km_diagram(-1)) != v62) out.fail("V(K[-1])");
  if (jones_t(km_diagram(0)) != v63) out.fail("V(K[0])");
  return out;
}

Outcome km_recurrence() {
  Outcome out;
  const LaurentPoly even = tpoly({{0, 1}, {1, -1}, {2, 1}, {3, -1}});
  const LaurentPoly odd = tpoly({{-3, 1}, {-2, -1}, {-1, 1}, {0, -1}});
  for (long long m = -10; m <= 10; ++m) {
    const LaurentPoly lhs = jones_t(km_diagram(m - 2)).shift(-1) - jones_t(km_diagram(m)).shift(1);
    if (lhs != (m % 2 == 0 ? even : odd)) out.fail("m=" + std::to_string(m));
  }
  return out;
}

struct FamilyRow {
  int arf, sigma;
  Cyclo12 v;
};

// Closed forms for K_{2n} and K_{2n-1}.
FamilyRow closed_form(long long m) {
  const bool even = m % 2 == 0;
  const long long n = even ? m / 2 : (m + 1) / 2;
  const int arf = static_cast<int>(((n + 1) % 2 + 2) % 2);
  const int sigma = even ? (n >= -3 ? 0 : -2) : (n <= -3 ? 0 : 2);
  const int k = static_cast<int>(((n % 3) + 3) % 3);
  Cyclo12 v;
  if (even) v = k == 0 ? Cyclo12(1) : k == 1 ? Cyclo12(-1) : kISqrt3;
  else v = k == 0 ? Cyclo12(1) : k == 1 ? -kISqrt3 : Cyclo12(-1);
  return {arf, sigma, v};
}

Outcome family_closed_forms() {
  Outcome out;
  for (long long m = -12; m <= 12; ++m) {
    const InvariantSet inv = inv_no_q(km_diagram(m));
    const FamilyRow want = closed_form(m);
    if (inv.arf != want.arf) out.fail("Arf K[" + std::to_string(m) + "]");
    if (inv.signature != want.sigma) out.fail("sigma K[" + std::to_string(m) + "]");
    if (inv.v_omega != want.v) out.fail("V(omega) K[" + std::to_string(m) + "]");
  }
  return out;
}

Outcome table_one() {
  Outcome out;
  auto check = [&](const std::string& label, const InvariantSet& inv, int sigma, int arf, const Cyclo12& v) {
    if (inv.signature != sigma) out.fail(label + " sigma " + std::to_string(inv.signature) + " vs published " + std::to_string(sigma));
    if (inv.arf != arf) out.fail(label + " Arf");
    if (inv.v_omega != v) out.fail(label + " V(omega) " + render_cyclo(inv.v_omega));
  };
  check("3_1", inv_no_q(parse_knot_expr("3_1", table())), 2, 1, -kISqrt3);
  check("3_1!", inv_no_q(parse_knot_expr("3_1!", table())), -2, 1, kISqrt3);
  check("6_1", inv_no_q(parse_knot_expr("6_1", table())), 0, 0, kISqrt3);
  check("6_1!", inv_no_q(parse_knot_expr("6_1!", table())), 0, 0, -kISqrt3);
  for (long long l = -2; l <= 2; ++l) {
    auto km = [&](long long m) { return inv_no_q(km_diagram(m)); };
    auto name = [](long long m) { return "K[" + std::to_string(m) + "]"; };
    if (l >= 0) {
      check(name(12 * l + 1), km(12 * l + 1), 2, 0, -kISqrt3);
      check(name(12 * l + 4), km(12 * l + 4), 0, 1, kISqrt3);
    } else {
      check(name(12 * l + 7), km(12 * l + 7), 0, 1, -kISqrt3);
      check(name(12 * l - 2), km(12 * l - 2), -2, 0, kISqrt3);
    }
  }
  if (!out.ok) {
    const auto [re, im] = gaussian_parts(inv_no_q(km_diagram(-5)).v_minus1);
    out.detail += " (V(K[-5]; -1) = " + std::to_string(re) + (im ? "+i*" + std::to_string(im) : "") +
                  ", so sigma(K[-5])/2 is odd; the published cell conflicts with the family's signature formula)";
  }
  return out;
}

Outcome theorem_jl() {
  Outcome out;
  QCache cache;
  InvariantOptions opt;
  opt.q_cache = &cache;
  for (int l = -3; l <= 3; ++l) {
    const std::string expr = l >= 0 ? "K[" + std::to_string(12 * l + 1) + "] # 3_1!" : "K[" + std::to_string(12 * l - 2) + "] # 3_1";
    const ExprFacts ef = expr_facts(expr, table(), opt);
    if (!ef.certificates.empty()) out.fail(expr + " carries certificates");
    if (!ef.operand.u || ef.operand.u->hi != 2) out.fail(expr + " u data");
    const BoundState st = deduce(knot_facts(ef.operand), Mode::Derived);
    if (!(st.bounds.db == Interval{2, 2}) || !(st.bounds.d2 == Interval{3, 3}))
      out.fail(expr + ": bu " + to_string(st.bounds.db) + ", u2 " + to_string(st.bounds.d2));
  }
  return out;
}

Outcome cross_invariants() {
  Outcome out;
  QCache cache;
  InvariantOptions opt;
  opt.q_cache = &cache;
  int count = 0;
  for (const auto& [name, rec] : table().records()) {
    if (crossing_number_of_name(name) > 9) continue;
    InvariantSet inv;
    try {
      inv = invariants(rec.pd, opt);
    } catch (const InvariantError& e) {
      out.fail(name + ": " + e.what());
      continue;
    }
    ++count;
    int delta = 0, r = 0;
    BigInt product = 1;
    for (const auto& f : inv.homology.factors) {
      if (f % 3 == 0) ++delta;
      if (f % 5 == 0) ++r;
      product *= f;
    }
    // |V(omega)|^2 = 3^delta
    if (inv.v_omega.abs_squared() != Cyclo12(3).pow(static_cast<unsigned>(delta))) out.fail(name + " |V(omega)|");
    const auto [re, im] = gaussian_parts(inv.v_minus1);
    if (BigInt(re) * re + BigInt(im) * im != product * product) out.fail(name + " |V(-1)|");
    if (im != 0 || (re < 0) != ((inv.signature / 2) % 2 != 0)) out.fail(name + " sign V(-1)");
    if (!inv.lambda) {
      out.fail(name + " lambda missing");
      continue;
    }
    const GoldenValue s5 = GoldenValue::sqrt5().pow(static_cast<unsigned>(r));
    if (*inv.lambda != s5 && *inv.lambda != -s5) out.fail(name + " lambda");
  }
  if (count < 90) out.fail("only " + std::to_string(count) + " knots");
  out.detail = out.ok ? std::to_string(count) + " knots" : out.detail;
  return out;
}

Outcome table_two() {
  Outcome out;
  int checked = 0;
  for (const auto& row : evaluate_table(table(), 1000)) {
    const KnotRecord* rec = table().find(row.name);
    if (!rec->bu || !rec->u2) continue;
    const int bu = *rec->bu, u2 = *rec->u2;
    if (!(bu == u2 || (bu == u2 - 1 && u2 % 2 == 1))) out.fail(row.name + " violates the parity theorem");
    if (rec->ambiguous()) continue;
    ++checked;
    if (!(row.asserted.bounds.db == Interval{bu, bu}) || !(row.asserted.bounds.d2 == Interval{u2, u2}))
      out.fail(row.name + " asserted bu " + to_string(row.asserted.bounds.db) + " u2 " + to_string(row.asserted.bounds.d2));
    if (!row.derived.bounds.db.contains(bu) || !row.derived.bounds.d2.contains(u2)) out.fail(row.name + " derived");
  }
  if (out.ok) out.detail = std::to_string(checked) + " rows";
  return out;
}

bool fired(const BoundState& st, const std::string& rule) {
  for (const auto& e : st.trace)
    if (e.rule == rule) return true;
  return false;
}

Outcome named_bounds() {
  Outcome out;
  auto knot = [](const std::string& expr, Mode mode) {
    const ExprFacts ef = expr_facts(expr, table());
    Facts f = knot_facts(ef.operand);
    f.certificates = ef.certificates;
    return deduce(f, mode);
  };
  const BoundState a = knot("9_49", Mode::Derived);
  if (a.bounds.db.lo < 3 || !fired(a, "lambda")) out.fail("bu(9_49) >= 3");
  const BoundState b = knot("8_18", Mode::Derived);
  if (b.bounds.d2.lo < 3 || !fired(b, "distance_two")) out.fail("u2(8_18) >= 3");
  const BoundState c = knot("6_2 # 9_35", Mode::Asserted);
  if (!(c.bounds.db == Interval{3, 3}) || !fired(c, "signature_gap")) out.fail("bu(6_2#9_35) = 3");
  Facts p = pair_facts(expr_facts("5_1!", table()).operand, expr_facts("3_1 # 3_1", table()).operand);
  p.certificates.push_back({Target::D2, 3, "d2(5_1!, 3_1#3_1) = 3"});
  if (!(deduce(p, Mode::Asserted).bounds.db == Interval{3, 3})) out.fail("bd(5_1!, 3_1#3_1) = 3");
  Facts g = pair_facts(expr_facts("5_1", table()).operand, expr_facts("3_1 # 3_1", table()).operand);
  g.gordian = UInterval{2, 2};
  const auto hi = deduce(g, Mode::Derived).bounds.db.hi;
  if (!hi || *hi > 2) out.fail("bd(5_1, 3_1#3_1) <= 2");
  return out;
}

Outcome slice() {
  Outcome out;
  if (slice_obstruction(inv_no_q(parse_knot_expr("9_44", table()))) != SliceStatus::NotSlice) out.fail("9_44");
  if (slice_obstruction(inv_no_q(PlanarDiagram::unknot())) != SliceStatus::Inconclusive) out.fail("unknot");
  for (const auto& [name, rec] : table().records()) {
    const InvariantSet inv = inv_no_q(rec.pd);
    if (inv.v_omega != Cyclo12(-1) && slice_obstruction(inv) != SliceStatus::Inconclusive) out.fail(name);
  }
  return out;
}

Outcome properties() {
  Outcome out;
  const SuiteResult skein = run_suite("skein", table());
  for (const auto& c : skein.checks)
    if (!c.passed) out.fail(c.name + ": " + c.detail);

  std::mt19937_64 rng(7);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<const KnotRecord*> knots;
  for (const auto& [name, rec] : table().records())
    if (name.find('#') == std::string::npos && rec.pd.size() <= 8) knots.push_back(&rec);

  QCache cache;
  InvariantOptions opt;
  opt.q_cache = &cache;
  for (int trial = 0; trial < 50; ++trial) {
    const auto* a = knots[static_cast<std::size_t>(pick(0, static_cast<int>(knots.size()) - 1))];
    const auto* b = knots[static_cast<std::size_t>(pick(0, static_cast<int>(knots.size()) - 1))];
    const InvariantSet ia = invariants(a->pd, opt), ib = invariants(b->pd, opt);
    const InvariantSet s = invariants(connected_sum(a->pd, b->pd), opt);
    const InvariantSet m = invariants(mirror(a->pd), opt);
    const std::string label = a->name + " # " + b->name;
    if (s.jones != ia.jones * ib.jones) out.fail(label + " V");
    if (!s.q_poly || *s.q_poly != *ia.q_poly * *ib.q_poly) out.fail(label + " Q");
    if (s.det != ia.det * ib.det) out.fail(label + " det");
    if (s.signature != ia.signature + ib.signature) out.fail(label + " sigma");
    // e2 counts minimal generators: Z/9 + Z/5 is cyclic.
    if (s.e2() < std::max(ia.e2(), ib.e2()) || s.e2() > ia.e2() + ib.e2()) out.fail(label + " e2");
    if (*s.arf != (*ia.arf + *ib.arf) % 2) out.fail(label + " Arf");
    if (m.jones != ia.jones.invert_variable() || m.signature != -ia.signature || m.arf != ia.arf ||
        m.q_poly != ia.q_poly || m.lambda != ia.lambda)
      out.fail(a->name + " mirror");
  }

  for (int trial = 0; trial < 200; ++trial) {
    const int rows = pick(1, 5), cols = pick(1, 5);
    IntMatrix mtx(static_cast<std::size_t>(rows), std::vector<BigInt>(static_cast<std::size_t>(cols)));
    for (auto& row : mtx)
      for (auto& x : row) x = pick(-9, 9);
    const SnfResult r = smith_normal_form(mtx);
    if (matmul(matmul(r.left, mtx), r.right) != r.diagonal) out.fail("SNF product");
    if (abs(determinant(r.left)) != 1 || abs(determinant(r.right)) != 1) out.fail("SNF unimodular");
    for (std::size_t i = 0; i + 1 < r.factors.size(); ++i) {
      const BigInt& d0 = r.factors[i];
      const BigInt& d1 = r.factors[i + 1];
      if ((d0 == 0 && d1 != 0) || (d0 != 0 && d1 % d0 != 0)) out.fail("SNF chain");
    }
    if (rows == cols) {
      BigInt product = 1;
      for (const auto& f : r.factors) product *= f;
      if (product != abs(determinant(mtx))) out.fail("SNF determinant");
    }
  }

  int relabelings = 0;
  for (const auto* rec : knots) {
    const std::string code = canonical_code(rec->pd);
    const int max = rec->pd.max_label();
    for (int k = 0; k < 100; ++k) {
      std::vector<int> fresh(static_cast<std::size_t>(max + 5));
      for (std::size_t i = 0; i < fresh.size(); ++i) fresh[i] = static_cast<int>(i) + 1;
      std::shuffle(fresh.begin(), fresh.end(), rng);
      std::vector<int> mapping(static_cast<std::size_t>(max + 1), 0);
      for (int i = 1; i <= max; ++i) mapping[static_cast<std::size_t>(i)] = fresh[static_cast<std::size_t>(i - 1)];
      if (canonical_code(relabel(rec->pd, mapping)) != code) out.fail(rec->name + " canonical code");
      ++relabelings;
    }
  }
  if (out.ok) out.detail = std::to_string(relabelings) + " relabelings";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Jones exactness (6_2, 6_3)", jones_exactness},
      {"K[m] recurrence, m in [-10,10]", km_recurrence},
      {"K[m] closed forms, m in [-12,12]", family_closed_forms},
      {"Table of V(omega), sigma, Arf (l in [-2,2])", table_one},
      {"J_l bounds in derived mode, l in [-3,3]", theorem_jl},
      {"cross-invariant identities, <= 9 crossings", cross_invariants},
      {"published bu/u2 table", table_two},
      {"named bound derivations", named_bounds},
      {"slice obstruction", slice},
      {"property suites", properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [label, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::printf("%s %2d %s%s%s\n", o.ok ? "PASS" : "FAIL", index, label.c_str(), o.detail.empty() ? "" : " -- ",
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
