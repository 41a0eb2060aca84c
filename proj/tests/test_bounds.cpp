#include "doctest.h"
#include "knotband/bounds.hpp"
#include "knotband/report.hpp"
#include "knotband/verify.hpp"
#include "support.hpp"

using namespace knotband;

namespace {

Operand op(const std::string& expr) { return expr_facts(expr, test::table()).operand; }

Facts knot(const std::string& expr) {
  const ExprFacts ef = expr_facts(expr, test::table());
  Facts f = knot_facts(ef.operand);
  f.certificates = ef.certificates;
  return f;
}

Facts pair(const std::string& a, const std::string& b) { return pair_facts(op(a), op(b)); }

Interval iv(int lo, std::optional<int> hi) { return Interval{lo, hi}; }

bool fired(const BoundState& st, const std::string& rule) {
  for (const auto& e : st.trace)
    if (e.rule == rule) return true;
  return false;
}

bool within(const Interval& inner, const Interval& outer) {
  return inner.lo >= outer.lo && (!outer.hi || (inner.hi && *inner.hi <= *outer.hi));
}

}  // namespace

TEST_SUITE("bounds-engine") {
  TEST_CASE("e2 rule") {
    CHECK(rule_e2(knot("3_1 # 3_1")).db_lo == 2);
    CHECK(rule_e2(knot("3_1 # 3_1 # 3_1")).db_lo == 3);
    CHECK(rule_e2(knot("U")).empty());
    CHECK(rule_e2(pair("3_1 # 3_1 # 3_1", "3_1")).db_lo == 2);
  }

  TEST_CASE("delta rule") {
    CHECK(rule_delta(knot("3_1")).db_lo == 1);
    CHECK(rule_delta(knot("8_21 # 3_1!")).db_lo == 2);
    CHECK(rule_delta(pair("U", "U")).empty());
  }

  TEST_CASE("lambda rule") {
    CHECK(rule_lambda(knot("9_49")).db_lo == 3);
    CHECK(rule_lambda(knot("4_1 # 5_1")).db_lo == 3);
    CHECK(rule_lambda(knot("4_1 # 5_1 # 5_1")).db_lo == 4);
    CHECK(rule_lambda(pair("5_1", "5_1!")).empty());
  }

  TEST_CASE("distance-two rule") {
    CHECK(rule_distance_two(knot("8_21 # 3_1!")).d2_lo == 3);
    CHECK(rule_distance_two(knot("8_18")).d2_lo == 3);
    Facts shifted = knot("8_18");
    shifted.a.inv.signature = 2;
    CHECK(rule_distance_two(shifted).empty());
    Facts same_arf = knot("8_21 # 3_1!");
    same_arf.a.inv.arf = 0;
    CHECK(rule_distance_two(same_arf).empty());
    same_arf.a.inv.signature = 4;
    CHECK(rule_distance_two(same_arf).d2_lo == 3);
    CHECK(rule_distance_two(pair("hopf", "U")).empty());
  }

  TEST_CASE("signature-gap rule") {
    const Snapshot pinned{iv(2, 3), iv(3, 3)};
    CHECK(rule_signature_gap(knot("6_2 # 9_35"), pinned).db_lo == 3);
    CHECK(rule_signature_gap(pair("5_1!", "3_1 # 3_1"), pinned).db_lo == 3);
    CHECK(rule_signature_gap(knot("6_2"), pinned).empty());
    CHECK(rule_signature_gap(knot("6_2 # 9_35"), Snapshot{iv(2, 3), iv(3, std::nullopt)}).empty());
  }

  TEST_CASE("Moebius rule") {
    Facts f = knot("3_1");
    CHECK(rule_moebius(f).empty());
    f.a.inv.signature = 4;
    f.a.inv.arf = 0;
    CHECK(rule_moebius(f).db_lo == 2);
    CHECK(rule_moebius(knot("U")).empty());
    CHECK(rule_moebius(knot("5_1")).empty());
    CHECK(rule_moebius(knot("3_1 # 3_1")).db_lo == 2);
  }

  TEST_CASE("linking-form rule") {
    CHECK(unit_square_up_to_sign(1, 3));
    CHECK_FALSE(unit_square_up_to_sign(2, 5));
    CHECK(unit_square_up_to_sign(2, 7));
    CHECK(unit_square_up_to_sign(0, 1));
    CHECK(rule_linking_form(knot("9_16")).db_lo == 2);
    CHECK(rule_linking_form(knot("3_1 # 6_3")).db_lo == 2);
    CHECK(rule_linking_form(knot("3_1")).empty());
    // Never fires on a knot one band move from the unknot.
    for (const auto& [name, rec] : test::table().records())
      if (rec.bu == 1 && rec.pd.size() <= 10) {
        CAPTURE(name);
        CHECK(rule_linking_form(knot(name)).empty());
      }
  }

  TEST_CASE("upper bounds from crossing changes") {
    const Constraint c = rule_upper_from_u(knot("8_18"));
    CHECK(c.db_hi == 2);
    CHECK(c.d2_hi == 3);
    CHECK(rule_upper_from_u(knot("8_21 # 3_1!")).db_hi == 2);
    CHECK(rule_upper_from_u(pair("6_1!", "7_7")).db_hi == 2);
    CHECK(rule_upper_from_u(knot("9_49")).db_hi == 4);
    Facts given = pair("5_1", "3_1 # 3_1");
    given.gordian = UInterval{2, 2};
    CHECK(rule_upper_from_u(given).db_hi == 2);
    CHECK(rule_upper_from_u(knot("U")).db_hi == 0);
    Facts unknown = knot("3_1");
    unknown.a.u.reset();
    CHECK(rule_upper_from_u(unknown).empty());
  }

  TEST_CASE("asserted certificates") {
    Facts f = knot("9_45");
    f.certificates = {{Target::D2, 1, "band picture"}};
    CHECK(rule_asserted_certificates(f).d2_hi == 1);
    CHECK(rule_asserted_certificates(knot("U")).empty());
    const BoundState t = deduce(knot("3_1"), Mode::Asserted);
    CHECK(t.bounds.d2 == iv(1, 1));
    CHECK(fired(t, "asserted"));
  }

  TEST_CASE("parity closure") {
    CHECK(parity_closure({iv(2, 2), iv(3, std::nullopt)}).d2 == iv(3, 3));
    CHECK(parity_closure({iv(3, 3), iv(0, std::nullopt)}).d2 == iv(3, 3));
    CHECK(parity_closure({iv(0, std::nullopt), iv(1, 1)}).db == iv(1, 1));
    CHECK(parity_closure({iv(2, std::nullopt), iv(0, 2)}).db == iv(2, 2));
    CHECK(parity_closure({iv(0, std::nullopt), iv(0, std::nullopt)}) == Snapshot{iv(0, std::nullopt), iv(0, std::nullopt)});
    CHECK_FALSE(jointly_feasible({iv(3, 3), iv(4, 4)}));
    CHECK(feasible_pair(2, 3));
    CHECK(feasible_pair(1, 1));
    CHECK_FALSE(feasible_pair(1, 2));
    CHECK_FALSE(feasible_pair(0, 1));
    CHECK_FALSE(feasible_pair(3, 2));
  }

  TEST_CASE("parity closure keeps exactly the feasible values") {
    for (int trial = 0; trial < 500; ++trial) {
      auto rnd = [] {
        const int lo = test::uniform(0, 5);
        return test::uniform(0, 3) == 0 ? iv(lo, std::nullopt) : iv(lo, lo + test::uniform(0, 4));
      };
      const Snapshot s{rnd(), rnd()};
      const Snapshot c = parity_closure(s);
      for (int b = 0; b <= 12; ++b) {
        bool partner = false;
        for (int h = 0; h <= 13; ++h) partner = partner || (s.d2.contains(h) && feasible_pair(b, h));
        if (s.db.contains(b) && partner) CHECK(c.db.contains(b));
        if (!s.db.contains(b)) CHECK_FALSE(c.db.contains(b));
      }
    }
  }

  TEST_CASE("deduce examples") {
    const BoundState k949 = deduce(knot("9_49"), Mode::Asserted);
    CHECK(k949.bounds.db == iv(3, 3));
    CHECK(k949.bounds.d2 == iv(3, 3));
    CHECK(fired(k949, "lambda"));

    const BoundState j0 = deduce(knot("K[1] # 3_1!"), Mode::Derived);
    CHECK(j0.bounds.db == iv(2, 2));
    CHECK(j0.bounds.d2 == iv(3, 3));

    const BoundState u = deduce(knot("U"), Mode::Derived);
    CHECK(u.bounds.db == iv(0, 0));
    CHECK(u.bounds.d2 == iv(0, 0));

    const BoundState k818 = deduce(knot("8_18"), Mode::Asserted);
    CHECK(k818.bounds.db == iv(2, 2));
    CHECK(k818.bounds.d2 == iv(3, 3));

    const BoundState gap = deduce(knot("6_2 # 9_35"), Mode::Asserted);
    CHECK(gap.bounds.db == iv(3, 3));
    CHECK(fired(gap, "signature_gap"));

    Facts pf = pair("5_1!", "3_1 # 3_1");
    pf.certificates = {{Target::D2, 3, "worked example"}};
    CHECK(deduce(pf, Mode::Asserted).bounds.db == iv(3, 3));
    CHECK(deduce(pf, Mode::Derived).bounds.db != iv(3, 3));

    Facts g = pair("5_1", "3_1 # 3_1");
    g.gordian = UInterval{2, 2};
    CHECK(deduce(g, Mode::Derived).bounds.db.hi == 2);

    const BoundState link = deduce(pair("hopf", "U"), Mode::Derived);
    CHECK_FALSE(link.has_d2);
    CHECK(link.bounds.db.lo == 1);
  }

  TEST_CASE("contradictions carry the trace") {
    Facts f = knot("3_1");
    f.certificates = {{Target::D2, 0, "bogus"}};
    try {
      deduce(f, Mode::Asserted);
      FAIL("no contradiction");
    } catch (const BoundContradiction& e) {
      CHECK_FALSE(e.trace().empty());
      CHECK(e.trace().back().rule == "asserted");
    }
    CHECK_NOTHROW(deduce(f, Mode::Derived));
  }

  TEST_CASE("trace properties: monotone, feasible, replayable, deterministic") {
    QCache cache;
    InvariantOptions opt;
    opt.q_cache = &cache;
    for (const auto& [name, rec] : test::table().records()) {
      if (crossing_number_of_name(name) > 9) continue;
      const ExprFacts ef = expr_facts(name, test::table(), opt);
      Facts f = knot_facts(ef.operand);
      f.certificates = ef.certificates;
      for (Mode mode : {Mode::Derived, Mode::Asserted}) {
        const BoundState st = deduce(f, mode);
        for (const auto& e : st.trace) {
          CHECK(within(e.after.db, e.before.db));
          CHECK(within(e.after.d2, e.before.d2));
          CHECK(jointly_feasible(e.after));
          CHECK(e.asserted == (e.rule == "asserted"));
          if (mode == Mode::Derived) CHECK_FALSE(e.asserted);
        }
        CHECK(replay(f, mode, st.trace) == st.bounds);
        const BoundState again = deduce(f, mode);
        CHECK(trace_to_json(again.trace, true).dump() == trace_to_json(st.trace, true).dump());
        if (!st.trace.empty()) {
          auto tampered = st.trace;
          tampered.front().after.db.lo += 1;
          CHECK_THROWS(replay(f, mode, tampered));
        }
      }
    }
  }

  TEST_CASE("published values: derived contains, asserted equals") {
    const auto rows = evaluate_table(test::table(), 9);
    int checked = 0;
    for (const auto& row : rows) {
      CAPTURE(row.name);
      CHECK(row.ok);
      if (row.checked) ++checked;
      const KnotRecord* rec = test::table().find(row.name);
      if (!rec || rec->ambiguous() || !rec->bu || !rec->u2) continue;
      CHECK(feasible_pair(*rec->bu, *rec->u2));
      CHECK(row.asserted.bounds.db == iv(*rec->bu, *rec->bu));
      CHECK(row.asserted.bounds.d2 == iv(*rec->u2, *rec->u2));
      CHECK(row.derived.bounds.db.contains(*rec->bu));
      CHECK(row.derived.bounds.d2.contains(*rec->u2));
    }
    CHECK(checked >= 90);
  }

  TEST_CASE("slice obstruction") {
    CHECK(slice_obstruction(op("9_44").inv) == SliceStatus::NotSlice);
    CHECK(slice_obstruction(op("U").inv) == SliceStatus::Inconclusive);
    CHECK(slice_obstruction(op("6_1").inv) == SliceStatus::Inconclusive);
    CHECK(slice_obstruction(op("K[2]").inv) == SliceStatus::NotSlice);
  }
}
