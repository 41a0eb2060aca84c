// knotband: invariants, band-surgery bounds, table reproduction and verification suites.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotband/bounds.hpp"
#include "knotband/knot_table.hpp"
#include "knotband/report.hpp"
#include "knotband/verify.hpp"

using namespace knotband;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitContradiction = 3;
constexpr int kExitVerify = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

UInterval parse_u_interval(const std::string& text) {
  try {
    if (text.find("..") != std::string::npos) {
      const auto [lo, hi] = parse_range(text);
      if (lo < 0) throw InputError("distance must be nonnegative");
      return {lo, hi};
    }
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size() || v < 0) throw InputError("bad distance '" + text + "'");
    return {v, v};
  } catch (const std::invalid_argument&) {
    throw InputError("bad distance '" + text + "'");
  }
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_invariants(const KnotTable& table, const std::string& expr, bool as_json, bool with_q) {
  InvariantOptions opt;
  opt.compute_q = with_q;
  const ExprFacts ef = expr_facts(expr, table, opt);
  json j = to_json(ef.operand.inv);
  j["expr"] = expr;
  j["slice"] = to_string(slice_obstruction(ef.operand.inv));
  emit(j, as_json, "expr: " + expr + "\n" + render_invariants_text(j) + "slice: " + j["slice"].get<std::string>() + "\n");
  return kExitOk;
}

struct BoundsArgs {
  std::string expr;
  std::string vs;
  std::string mode = "asserted";
  std::string gordian;
  std::optional<int> assert_bd;
  std::optional<int> assert_d2;
};

int cmd_bounds(const KnotTable& table, const BoundsArgs& a, bool as_json) {
  const Mode mode = a.mode == "derived" ? Mode::Derived : Mode::Asserted;
  const bool pair = !a.vs.empty();
  const ExprFacts fa = expr_facts(a.expr, table);
  Facts f;
  if (pair) {
    f = pair_facts(fa.operand, expr_facts(a.vs, table).operand);
  } else {
    f = knot_facts(fa.operand);
    f.certificates = fa.certificates;
  }
  if (!a.gordian.empty()) f.gordian = parse_u_interval(a.gordian);
  if (a.assert_bd) f.certificates.push_back({Target::Db, *a.assert_bd, "command line"});
  if (a.assert_d2) f.certificates.push_back({Target::D2, *a.assert_d2, "command line"});
  try {
    const BoundState st = deduce(f, mode);
    json j = to_json(st, mode, pair);
    j["expr"] = a.expr;
    if (pair) j["vs"] = a.vs;
    emit(j, as_json, render_bounds_text(j));
    return kExitOk;
  } catch (const BoundContradiction& e) {
    json j{{"error", e.what()}, {"trace", trace_to_json(e.trace(), f.has_d2())}};
    std::cerr << (as_json ? j.dump(2) : std::string(e.what())) << "\n";
    return kExitContradiction;
  }
}

int cmd_table(const KnotTable& table, int max_crossings, bool check, bool as_json) {
  const auto rows = evaluate_table(table, max_crossings);
  json out = json::array();
  int mismatches = 0;
  std::string text;
  for (const auto& row : rows) {
    const bool bad = check && row.checked && !row.ok;
    if (bad) ++mismatches;
    out.push_back({{"name", row.name},
                   {"sigma", row.inv.signature},
                   {"arf", row.inv.arf ? json(*row.inv.arf) : json(nullptr)},
                   {"v_omega", render_cyclo(row.inv.v_omega)},
                   {"lambda", row.inv.lambda_class ? json(render_golden(*row.inv.lambda_class)) : json(nullptr)},
                   {"e2", row.inv.e2()},
                   {"derived", {{"bu", to_json(row.derived.bounds.db)}, {"u2", to_json(row.derived.bounds.d2)}}},
                   {"asserted", {{"bu", to_json(row.asserted.bounds.db)}, {"u2", to_json(row.asserted.bounds.d2)}}},
                   {"checked", row.checked},
                   {"ok", !bad},
                   {"detail", row.detail}});
    text += row.name + "  derived bu " + to_string(row.derived.bounds.db) + " u2 " + to_string(row.derived.bounds.d2) +
            "  asserted bu " + to_string(row.asserted.bounds.db) + " u2 " + to_string(row.asserted.bounds.d2) +
            (check ? (!row.checked ? "  (not checked: " + row.detail + ")" : bad ? "  MISMATCH " + row.detail : "  ok")
                   : "") +
            "\n";
  }
  text += std::to_string(rows.size()) + " rows";
  if (check) text += ", " + std::to_string(mismatches) + " mismatches";
  text += "\n";
  emit(json{{"rows", out}, {"mismatches", mismatches}}, as_json, text);
  return mismatches == 0 ? kExitOk : kExitVerify;
}

int cmd_verify(const KnotTable& table, const std::string& suite, const std::string& range, bool as_json) {
  VerifyOptions opt;
  if (!range.empty()) {
    try {
      opt.range = parse_range(range);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  std::vector<std::string> names = suite.empty() ? suite_names() : std::vector<std::string>{suite};
  json out = json::array();
  std::string text;
  bool all = true;
  for (const auto& name : names) {
    SuiteResult r;
    try {
      r = run_suite(name, table, opt);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    all = all && r.passed();
    json checks = json::array();
    int passed = 0;
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      if (c.passed) ++passed;
      else text += "  FAIL " + name + ": " + c.name + " (" + c.detail + ")\n";
    }
    out.push_back({{"suite", name}, {"passed", r.passed()}, {"checks", checks}});
    text += std::string(r.passed() ? "PASS " : "FAIL ") + name + "  " + std::to_string(passed) + "/" +
            std::to_string(r.checks.size()) + "\n";
  }
  emit(json{{"suites", out}, {"passed", all}}, as_json, text);
  return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotband: knot invariants and band-surgery distance bounds"};
  app.require_subcommand(1);
  std::string data;
  bool as_json = false;
  app.add_option("--data", data, "knot table (JSON lines); default $KNOTBAND_DATA or the bundled file");
  app.add_flag("--json", as_json, "machine-readable output");

  auto* inv = app.add_subcommand("invariants", "invariants of a knot expression");
  std::string inv_expr;
  bool no_q = false;
  inv->add_option("expr", inv_expr, "e.g. \"3_1\", \"K[2]\", \"8_21 # 3_1!\", \"PD[X(1,4,2,5),...]\"")->required();
  inv->add_flag("--no-q", no_q, "skip the Q polynomial");
  inv->add_flag("--json", as_json, "machine-readable output");

  auto* bounds = app.add_subcommand("bounds", "bu/u2 of a knot, or bd/d2 of a pair");
  BoundsArgs ba;
  bounds->add_option("expr", ba.expr)->required();
  bounds->add_option("--vs", ba.vs, "second operand (pair problem)");
  bounds->add_option("--mode", ba.mode, "derived or asserted")->check(CLI::IsMember({"derived", "asserted"}));
  bounds->add_option("--gordian", ba.gordian, "crossing-change distance d(J,K): N or a..b");
  bounds->add_option("--assert-bd,--assert-bu", ba.assert_bd, "asserted upper bound on bd (bu)");
  bounds->add_option("--assert-d2,--assert-u2", ba.assert_d2, "asserted upper bound on d2 (u2)");
  bounds->add_flag("--json", as_json, "machine-readable output");

  auto* table_cmd = app.add_subcommand("table", "recompute invariants and bounds for the knot table");
  int max_crossings = 9;
  bool check = false;
  table_cmd->add_option("--max-crossings", max_crossings, "skip rows with more crossings (summed over summands)");
  table_cmd->add_flag("--check", check, "compare with the published values");
  table_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* verify = app.add_subcommand("verify-paper", "run the verification suites");
  std::string suite, range;
  verify->add_option("--suite", suite, "one suite");
  verify->add_option("--range", range, "index range a..b for the family suites");
  verify->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const KnotTable table = load_knot_table(data.empty() ? default_table_path() : data);
    if (*inv) return cmd_invariants(table, inv_expr, as_json, !no_q);
    if (*bounds) return cmd_bounds(table, ba, as_json);
    if (*table_cmd) return cmd_table(table, max_crossings, check, as_json);
    if (*verify) return cmd_verify(table, suite, range, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const TableError& e) {
    std::cerr << "table error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantError& e) {
    std::cerr << "invariant error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DiagramError& e) {
    std::cerr << "diagram error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
