#include "knotband/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "knotband/constructions.hpp"
#include "knotband/jones.hpp"
#include "knotband/notation.hpp"
#include "knotband/report.hpp"

namespace knotband {

namespace {

LaurentPoly tpoly(std::initializer_list<std::pair<int, LaurentPoly::Coeff>> terms) {
  return LaurentPoly::from_terms(terms);
}

LaurentPoly jones_t(const PlanarDiagram& d) { return q_to_t(jones(d)); }

InvariantSet family_invariants(long long m) {
  InvariantOptions opt;
  opt.compute_q = false;
  return invariants(km_diagram(m), opt);
}

void add(SuiteResult& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back(CheckResult{std::move(name), ok, std::move(detail)});
}

std::string mstr(long long m) { return "K[" + std::to_string(m) + "]"; }

int floor_mod(long long v, int n) { return static_cast<int>(((v % n) + n) % n); }

std::pair<int, int> range_or(const VerifyOptions& o, int lo, int hi) { return o.range ? *o.range : std::make_pair(lo, hi); }

SuiteResult suite_jones_exact(const KnotTable& table, const VerifyOptions&) {
  SuiteResult r{"jones-exact", {}};
  const LaurentPoly v62 = tpoly({{-5, 1}, {-4, -2}, {-3, 2}, {-2, -2}, {-1, 2}, {0, -1}, {1, 1}});
  const LaurentPoly v63 = tpoly({{-3, -1}, {-2, 2}, {-1, -2}, {0, 3}, {1, -2}, {2, 2}, {3, -1}});
  for (const auto& [expr, want] : {std::pair{"6_2", v62}, std::pair{"6_3", v63}, std::pair{"K[-1]", v62}, std::pair{"K[0]", v63}}) {
    const LaurentPoly got = jones_t(parse_knot_expr(expr, table));
    add(r, std::string("V(") + expr + ")", got == want, got.to_string("t"));
  }
  return r;
}

SuiteResult suite_km_recurrence(const KnotTable&, const VerifyOptions& o) {
  SuiteResult r{"km-recurrence", {}};
  const auto [lo, hi] = range_or(o, -10, 10);
  const LaurentPoly even = tpoly({{0, 1}, {1, -1}, {2, 1}, {3, -1}});
  const LaurentPoly odd = tpoly({{-3, 1}, {-2, -1}, {-1, 1}, {0, -1}});
  std::map<long long, LaurentPoly> v;
  auto get = [&](long long m) -> const LaurentPoly& {
    auto it = v.find(m);
    if (it == v.end()) it = v.emplace(m, jones_t(km_diagram(m))).first;
    return it->second;
  };
  for (long long m = lo; m <= hi; ++m) {
    const LaurentPoly lhs = get(m - 2).shift(-1) - get(m).shift(1);
    add(r, "m=" + std::to_string(m), lhs == (m % 2 == 0 ? even : odd), lhs.to_string("t"));
  }
  return r;
}

SuiteResult suite_km_closed_forms(const KnotTable&, const VerifyOptions& o) {
  SuiteResult r{"km-closed-forms", {}};
  const auto [lo, hi] = range_or(o, -12, 12);
  const Cyclo12 isq3 = Cyclo12::i() * Cyclo12::sqrt3();
  for (long long m = lo; m <= hi; ++m) {
    const InvariantSet inv = family_invariants(m);
    const bool even = m % 2 == 0;
    const long long n = even ? m / 2 : (m + 1) / 2;
    const int arf = floor_mod(n + 1, 2);
    const int sigma = even ? (n >= -3 ? 0 : -2) : (n <= -3 ? 0 : 2);
    const int k = floor_mod(n, 3);
    const Cyclo12 omega = even ? (k == 0 ? Cyclo12(1) : k == 1 ? Cyclo12(-1) : isq3)
                               : (k == 0 ? Cyclo12(1) : k == 1 ? -isq3 : Cyclo12(-1));
    add(r, mstr(m) + " Arf", inv.arf == arf, std::to_string(inv.arf.value_or(-1)));
    add(r, mstr(m) + " sigma", inv.signature == sigma, std::to_string(inv.signature));
    add(r, mstr(m) + " V(omega)", inv.v_omega == omega, render_cyclo(inv.v_omega));
  }
  return r;
}

struct OmegaRow {
  int sigma;
  int arf;
  Cyclo12 v;
};

SuiteResult suite_omega_table(const KnotTable& table, const VerifyOptions& o) {
  SuiteResult r{"omega-table", {}};
  const Cyclo12 isq3 = Cyclo12::i() * Cyclo12::sqrt3();
  auto check = [&](const std::string& label, const InvariantSet& inv, const OmegaRow& want) {
    const bool ok = inv.signature == want.sigma && inv.arf == want.arf && inv.v_omega == want.v;
    std::string detail = "sigma " + std::to_string(inv.signature) + ", Arf " + std::to_string(inv.arf.value_or(-1)) +
                         ", V(omega) " + render_cyclo(inv.v_omega);
    if (!ok) {
      // (-1)^(sigma/2) = sign V(-1) pins sigma/2 mod 2 independently of the Goeritz form.
      const auto [re, im] = gaussian_parts(inv.v_minus1);
      detail += "; table has sigma " + std::to_string(want.sigma) + ", Arf " + std::to_string(want.arf) +
                ", V(omega) " + render_cyclo(want.v) + "; V(-1) = " + std::to_string(re) + (im == 0 ? "" : " + i*" + std::to_string(im));
    }
    add(r, label, ok, detail);
  };
  InvariantOptions no_q;
  no_q.compute_q = false;
  const std::vector<std::pair<std::string, OmegaRow>> named{
      {"3_1", {2, 1, -isq3}}, {"3_1!", {-2, 1, isq3}}, {"6_1", {0, 0, isq3}}, {"6_1!", {0, 0, -isq3}}};
  for (const auto& [expr, want] : named) check(expr, invariants(parse_knot_expr(expr, table), no_q), want);

  // Columns K[12l+1], K[12l+4] for l >= 0 and K[12l+7], K[12l-2] for l <= -1.
  const auto [lo, hi] = range_or(o, -2, 2);
  for (long long l = lo; l <= hi; ++l) {
    if (l >= 0) {
      check(mstr(12 * l + 1), family_invariants(12 * l + 1), {2, 0, -isq3});
      check(mstr(12 * l + 4), family_invariants(12 * l + 4), {0, 1, isq3});
    } else {
      check(mstr(12 * l + 7), family_invariants(12 * l + 7), {0, 1, -isq3});
      check(mstr(12 * l - 2), family_invariants(12 * l - 2), {-2, 0, isq3});
    }
  }
  return r;
}

SuiteResult suite_jl_family(const KnotTable& table, const VerifyOptions& o) {
  SuiteResult r{"jl-family", {}};
  const auto [lo, hi] = range_or(o, -3, 3);
  QCache cache;
  InvariantOptions opt;
  opt.q_cache = &cache;
  for (int l = lo; l <= hi; ++l) {
    const std::string expr = jl_expression(l);
    const ExprFacts ef = expr_facts(expr, table, opt);
    const InvariantSet& inv = ef.operand.inv;
    add(r, "J_" + std::to_string(l) + " = " + expr + " sigma/Arf/V(omega)",
        inv.signature == 0 && inv.arf == 1 && inv.v_omega == Cyclo12(3),
        "sigma " + std::to_string(inv.signature) + ", Arf " + std::to_string(inv.arf.value_or(-1)) + ", V(omega) " +
            render_cyclo(inv.v_omega));
    const BoundState st = deduce(knot_facts(ef.operand), Mode::Derived);
    add(r, "J_" + std::to_string(l) + " bounds",
        st.bounds.db == Interval{2, 2} && st.bounds.d2 == Interval{3, 3},
        "bu " + to_string(st.bounds.db) + ", u2 " + to_string(st.bounds.d2));
  }
  return r;
}

SuiteResult suite_cross_invariants(const KnotTable& table, const VerifyOptions&) {
  SuiteResult r{"cross-invariants", {}};
  QCache cache;
  InvariantOptions opt;
  opt.q_cache = &cache;
  const std::vector<std::string> expected{"omega-delta", "det-jones", "sign-jones", "arf-det", "lambda-r"};
  for (const auto& [name, rec] : table.records()) {
    if (rec.components != 1 || crossing_number_of_name(name) > 9) continue;
    try {
      const InvariantSet inv = invariants(rec.pd, opt);
      add(r, name, inv.checks == expected, to_string(inv.q_status));
    } catch (const InvariantError& e) {
      add(r, name, false, e.what());
    }
  }
  return r;
}

SuiteResult suite_band_table(const KnotTable& table, const VerifyOptions&) {
  SuiteResult r{"band-table", {}};
  for (const auto& row : evaluate_table(table, 1000)) {
    if (!row.checked) continue;
    add(r, row.name, row.ok, row.detail);
  }
  return r;
}

bool fired(const BoundState& st, const std::string& rule) {
  return std::any_of(st.trace.begin(), st.trace.end(), [&](const TraceEntry& e) { return e.rule == rule; });
}

SuiteResult suite_named_bounds(const KnotTable& table, const VerifyOptions&) {
  SuiteResult r{"named-bounds", {}};
  QCache cache;
  InvariantOptions opt;
  opt.q_cache = &cache;
  auto knot = [&](const std::string& expr, Mode mode) {
    const ExprFacts ef = expr_facts(expr, table, opt);
    Facts f = knot_facts(ef.operand);
    f.certificates = ef.certificates;
    return deduce(f, mode);
  };
  auto pair = [&](const std::string& a, const std::string& b) {
    return pair_facts(expr_facts(a, table, opt).operand, expr_facts(b, table, opt).operand);
  };

  const BoundState k949 = knot("9_49", Mode::Derived);
  add(r, "bu(9_49) >= 3 from lambda = -sqrt5^2", k949.bounds.db.lo >= 3 && fired(k949, "lambda"),
      "bu " + to_string(k949.bounds.db));

  const BoundState k818 = knot("8_18", Mode::Derived);
  add(r, "u2(8_18) >= 3 from the omega ratio", k818.bounds.d2.lo >= 3 && fired(k818, "distance_two"),
      "u2 " + to_string(k818.bounds.d2));

  const BoundState k6235 = knot("6_2#9_35", Mode::Asserted);
  add(r, "bu(6_2#9_35) = 3 from the signature gap", k6235.bounds.db == Interval{3, 3} && fired(k6235, "signature_gap"),
      "bu " + to_string(k6235.bounds.db));

  Facts f1 = pair("5_1!", "3_1#3_1");
  f1.certificates.push_back({Target::D2, 3, "d2(5_1!, 3_1#3_1) = 3, H(2) literature"});
  const BoundState p1 = deduce(f1, Mode::Asserted);
  add(r, "bd(5_1!, 3_1#3_1) = 3", p1.bounds.db == Interval{3, 3} && fired(p1, "signature_gap"),
      "bd " + to_string(p1.bounds.db));

  Facts f2 = pair("5_1", "3_1#3_1");
  f2.gordian = UInterval{2, 2};
  const BoundState p2 = deduce(f2, Mode::Derived);
  add(r, "bd(5_1, 3_1#3_1) <= 2 from d = 2", p2.bounds.db.hi && *p2.bounds.db.hi <= 2, "bd " + to_string(p2.bounds.db));
  return r;
}

SuiteResult suite_slice(const KnotTable& table, const VerifyOptions&) {
  SuiteResult r{"slice", {}};
  InvariantOptions no_q;
  no_q.compute_q = false;
  add(r, "9_44 not slice", slice_obstruction(invariants(parse_knot_expr("9_44", table), no_q)) == SliceStatus::NotSlice);
  add(r, "K[2] not slice", slice_obstruction(family_invariants(2)) == SliceStatus::NotSlice);
  add(r, "unknot inconclusive", slice_obstruction(invariants(PlanarDiagram::unknot(), no_q)) == SliceStatus::Inconclusive);
  int inconclusive = 0;
  int bad = 0;
  for (const auto& [name, rec] : table.records()) {
    if (rec.components != 1) continue;
    const InvariantSet inv = invariants(rec.pd, no_q);
    const SliceStatus s = slice_obstruction(inv);
    if (inv.v_omega == Cyclo12(-1)) continue;
    if (s == SliceStatus::Inconclusive) ++inconclusive;
    else ++bad;
  }
  add(r, "table knots with V(omega) != -1 inconclusive", bad == 0, std::to_string(inconclusive) + " knots");
  return r;
}

SuiteResult suite_skein(const KnotTable& table, const VerifyOptions&) {
  SuiteResult r{"skein", {}};
  QCache cache;
  QOptions qo;
  const LaurentPoly z = LaurentPoly::monomial(1, 1);
  const LaurentPoly q_minus = tpoly({{1, 1}, {-1, -1}});  // q - 1/q
  int jones_bad = 0, q_bad = 0, total = 0;
  for (const auto& [name, rec] : table.records()) {
    const PlanarDiagram& d = rec.pd;
    const Orientation o = default_orientation(d);
    const auto flows = crossing_flows(d, o);
    const int w = writhe(d, o);
    const LaurentPoly vd = jones(d, o);
    const LaurentPoly qd = q_polynomial(d, qo, &cache);
    for (int c = 0; c < d.size(); ++c) {
      ++total;
      const int s = crossing_sign(flows[static_cast<std::size_t>(c)]);
      const PlanarDiagram sw = switch_crossing(d, c, o);
      const LaurentPoly vs = jones(sw);
      const PlanarDiagram l0 = smooth(d, c, s > 0 ? Smoothing::A : Smoothing::B);
      const LaurentPoly v0 = jones_from_bracket(kauffman_bracket(l0), w - s);
      const LaurentPoly& vp = s > 0 ? vd : vs;
      const LaurentPoly& vm = s > 0 ? vs : vd;
      if (vp.shift(-2) - vm.shift(2) != q_minus * v0) ++jones_bad;
      const LaurentPoly lhs = qd + q_polynomial(sw, qo, &cache);
      const LaurentPoly rhs = z * (q_polynomial(smooth(d, c, Smoothing::A), qo, &cache) +
                                   q_polynomial(smooth(d, c, Smoothing::B), qo, &cache));
      if (lhs != rhs) ++q_bad;
    }
  }
  add(r, "Jones skein on every table crossing", jones_bad == 0,
      std::to_string(jones_bad) + " failures of " + std::to_string(total));
  add(r, "Q skein on every table crossing", q_bad == 0, std::to_string(q_bad) + " failures of " + std::to_string(total));
  return r;
}

using SuiteFn = std::function<SuiteResult(const KnotTable&, const VerifyOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all{
      {"jones-exact", suite_jones_exact},         {"km-recurrence", suite_km_recurrence},
      {"km-closed-forms", suite_km_closed_forms}, {"omega-table", suite_omega_table},
      {"jl-family", suite_jl_family},             {"cross-invariants", suite_cross_invariants},
      {"band-table", suite_band_table},           {"named-bounds", suite_named_bounds},
      {"slice", suite_slice},                     {"skein", suite_skein}};
  return all;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.first);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const KnotTable& table, const VerifyOptions& options) {
  for (const auto& [n, fn] : suites())
    if (n == name) return fn(table, options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string jl_expression(int l) {
  return l >= 0 ? "K[" + std::to_string(12 * l + 1) + "] # 3_1!" : "K[" + std::to_string(12 * l - 2) + "] # 3_1";
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like a..b");
  std::size_t used_a = 0, used_b = 0;
  const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(a, &used_a);
    hi = std::stoi(b, &used_b);
  } catch (const std::exception&) {
    throw std::invalid_argument("range must look like a..b");
  }
  if (used_a != a.size() || used_b != b.size() || lo > hi) throw std::invalid_argument("range must look like a..b with a <= b");
  return {lo, hi};
}

int crossing_number_of_name(const std::string& name) {
  int total = 0;
  std::size_t pos = 0;
  while (pos < name.size()) {
    std::size_t end = name.find('#', pos);
    if (end == std::string::npos) end = name.size();
    const std::string part = name.substr(pos, end - pos);
    const auto us = part.find('_');
    if (us == std::string::npos || us == 0) throw std::invalid_argument("not a table name: " + name);
    total += std::stoi(part.substr(0, us));
    pos = end + 1;
  }
  return total;
}

TableRowReport evaluate_table_row(const KnotRecord& record, const KnotTable& table, QCache* cache) {
  TableRowReport row;
  row.name = record.name;
  InvariantOptions opt;
  opt.q_cache = cache;
  const ExprFacts ef = expr_facts(record.name, table, opt);
  row.inv = ef.operand.inv;
  Facts f = knot_facts(ef.operand);
  f.certificates = ef.certificates;
  row.derived = deduce(f, Mode::Derived);
  row.asserted = deduce(f, Mode::Asserted);
  if (record.ambiguous()) {
    row.detail = "flagged: " + record.note;
    return row;
  }
  if (!record.bu || !record.u2) {
    row.detail = "no published bu/u2";
    return row;
  }
  row.checked = true;
  const int bu = *record.bu, u2 = *record.u2;
  std::vector<std::string> problems;
  if (!feasible_pair(bu, u2)) problems.push_back("published pair violates bu in {u2-1, u2}");
  if (!(row.asserted.bounds.db == Interval{bu, bu}) || !(row.asserted.bounds.d2 == Interval{u2, u2}))
    problems.push_back("asserted bu " + to_string(row.asserted.bounds.db) + " u2 " + to_string(row.asserted.bounds.d2));
  if (!row.derived.bounds.db.contains(bu) || !row.derived.bounds.d2.contains(u2))
    problems.push_back("derived bu " + to_string(row.derived.bounds.db) + " u2 " + to_string(row.derived.bounds.d2));
  row.ok = problems.empty();
  row.detail = "published bu " + std::to_string(bu) + " u2 " + std::to_string(u2);
  for (const auto& p : problems) row.detail += "; " + p;
  return row;
}

std::vector<TableRowReport> evaluate_table(const KnotTable& table, int max_crossings) {
  std::vector<const KnotRecord*> rows;
  for (const auto& [name, rec] : table.records())
    if (crossing_number_of_name(name) <= max_crossings) rows.push_back(&rec);
  std::sort(rows.begin(), rows.end(),
            [](const KnotRecord* a, const KnotRecord* b) { return knot_name_less(a->name, b->name); });

  std::vector<TableRowReport> out(rows.size());
  std::vector<std::exception_ptr> errors(rows.size());
  QCache cache;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      try {
        out[k] = evaluate_table_row(*rows[k], table, &cache);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace knotband
