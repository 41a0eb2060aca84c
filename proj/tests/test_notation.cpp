#include <sstream>

#include "doctest.h"
#include "knotband/constructions.hpp"
#include "knotband/goeritz.hpp"
#include "knotband/jones.hpp"
#include "knotband/knot_table.hpp"
#include "knotband/notation.hpp"
#include "support.hpp"

using namespace knotband;

namespace {

struct Triple {
  LaurentPoly jones;
  int sigma;
  BigInt det;
  friend bool operator==(const Triple&, const Triple&) = default;
};

Triple triple(const PlanarDiagram& d) { return {jones(d), signature(d), determinant(d)}; }

KnotTable table_from(const std::string& text) {
  std::istringstream in(text);
  return parse_knot_table(in);
}

}  // namespace

TEST_SUITE("knot-notation") {
  TEST_CASE("parse_pd") {
    const PlanarDiagram u = parse_pd("PD[]");
    CHECK(u.size() == 0);
    CHECK(component_count(u) == 1);

    const PlanarDiagram t = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]");
    CHECK(t.size() == 3);
    CHECK(component_count(t) == 1);
    CHECK(t.crossing(1).arcs == std::array<int, 4>{3, 6, 4, 1});
    CHECK(parse_pd(" PD [ X[1,4,2,5], X(3, 6,4,1) ,X(5,2,6,3) ] ") == t);
    CHECK(parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3),O]").free_loops() == 1);
  }

  TEST_CASE("parse_pd errors") {
    // Every label twice, but the gluing is not planar.
    CHECK_THROWS_AS(parse_pd("PD[X(1,4,2,5),X(1,4,2,5)]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X(1,4,2,5)]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X(1,1,1,2),X(2,3,3,1)]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X(1,4,2)]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X(0,1,1,0)]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X(1,1,2,2)"), ParseError);
    CHECK_THROWS_AS(parse_pd("X(1,1,2,2)"), ParseError);
    try {
      parse_pd("PD[X(1,1,2,2),Y(1)]");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 14);
    }
  }

  TEST_CASE("knot expressions") {
    const KnotTable& tab = test::table();
    CHECK(parse_knot_expr("U", tab).size() == 0);
    CHECK(jones(parse_knot_expr("3_1 # 3_1!", tab)) ==
          jones(parse_knot_expr("3_1", tab)) * jones(parse_knot_expr("3_1", tab)).invert_variable());
    CHECK(triple(parse_knot_expr("K[0]", tab)) == triple(parse_knot_expr("6_3", tab)));
    CHECK(parse_knot_expr("3_1!", tab) == mirror(parse_knot_expr("3_1", tab)));
    CHECK(component_count(parse_knot_expr("hopf", tab)) == 2);
    CHECK(writhe(parse_knot_expr("hopf-", tab)) == -2);
    CHECK(jones(parse_knot_expr("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)] # U", tab)) == jones(parse_knot_expr("3_1", tab)));

    const KnotExpr ast = parse_knot_expr_ast("8_21 # 3_1! # K[-4]");
    REQUIRE(ast.summands.size() == 3);
    CHECK(ast.summands[0].kind == KnotTerm::Kind::Name);
    CHECK(ast.summands[1].mirrored);
    CHECK(ast.summands[2].kind == KnotTerm::Kind::Family);
    CHECK(ast.summands[2].family_index == -4);

    CHECK_THROWS_AS(parse_knot_expr("3_99", tab), ParseError);
    CHECK_THROWS_AS(parse_knot_expr("hopf # 3_1", tab), ParseError);
    CHECK_THROWS_AS(parse_knot_expr("K[x]", tab), ParseError);
    CHECK_THROWS_AS(parse_knot_expr("K[99999999999999999999]", tab), ParseError);
    CHECK_THROWS_AS(parse_knot_expr("3_1 #", tab), ParseError);
    CHECK_THROWS_AS(parse_knot_expr("", tab), ParseError);
  }

  TEST_CASE("knot table files") {
    const KnotTable one = table_from(
        R"({"name": "3_1", "pd": [[1,4,2,5],[3,6,4,1],[5,2,6,3]], "components": 1, "u": [1,1], "u2": 1, "bu": 1})");
    const KnotRecord* r = one.find("3_1");
    REQUIRE(r != nullptr);
    CHECK(r->u == UInterval{1, 1});
    CHECK(r->bu == 1);
    CHECK(r->u2 == 1);

    const KnotRecord* range = test::table().find("3_1!#5_1");
    REQUIRE(range != nullptr);
    CHECK(range->u == UInterval{2, 3});

    CHECK(table_from("").empty());
    CHECK(table_from("\n\n").empty());
    const std::string rec = R"({"name": "3_1", "pd": [[1,4,2,5],[3,6,4,1],[5,2,6,3]], "components": 1, "u": [1,1]})";
    CHECK_THROWS_AS(table_from(rec + "\n" + rec), TableError);
    CHECK_THROWS_AS(table_from(R"({"name": "3_1", "pd": [[1,4,2,5]], "components": 1, "u": [1,1]})"), TableError);
    CHECK_THROWS_AS(table_from(R"({"name": "3_1", "pd": [[1,4,2,5],[3,6,4,1],[5,2,6,3]], "components": 1, "u": [2,1]})"),
                    TableError);
    CHECK_THROWS_AS(table_from(R"({"name": "3_1", "pd": [[1,4,2,5],[3,6,4,1],[5,2,6,3]], "components": 2, "u": [1,1]})"),
                    TableError);
    CHECK_THROWS_AS(table_from("{not json"), TableError);
    CHECK_THROWS_AS(load_knot_table("/nonexistent/table.jsonl"), TableError);

    CHECK(test::table().find("9_23")->ambiguous());
    CHECK(test::table().find("9_24")->ambiguous());
    CHECK_FALSE(test::table().find("9_49")->ambiguous());
    CHECK(knot_name_less("9_1", "10_1"));
    CHECK(knot_name_less("9_49", "3_1#3_1"));
  }

  TEST_CASE("K[m] matches the named knots") {
    const KnotTable& tab = test::table();
    const std::vector<std::pair<long long, std::string>> names{{0, "6_3"},   {1, "8_21"},  {-1, "6_2"},
                                                               {-2, "8_20!"}, {2, "9_44"}, {-3, "9_42!"}};
    for (const auto& [m, name] : names) {
      CAPTURE(m);
      CHECK(triple(km_diagram(m)) == triple(parse_knot_expr(name, tab)));
      CHECK(km_diagram(m).size() == 7 + std::abs(m));
    }
  }

  TEST_CASE("mirror and connected sum") {
    const KnotTable& tab = test::table();
    CHECK(mirror(PlanarDiagram()) == PlanarDiagram());
    for (const auto* rec : test::table_knots(12)) CHECK(mirror(mirror(rec->pd)) == rec->pd);
    const PlanarDiagram t = parse_knot_expr("3_1", tab);
    CHECK(eval_cyclo12(jones(mirror(t))) == Cyclo12::i() * Cyclo12::sqrt3());
    CHECK(signature(mirror(t)) == -2);
    const PlanarDiagram tt = connected_sum(t, t);
    CHECK(determinant(tt) == 9);
    CHECK(signature(tt) == 4);
    CHECK(tt.size() == 6);
    CHECK(component_count(tt) == 1);
    for (const auto* rec : test::table_knots(9, true)) CHECK(triple(connected_sum(PlanarDiagram(), rec->pd)) == triple(rec->pd));
    CHECK_THROWS_AS(connected_sum(hopf_link(), t), DiagramError);
  }
}
