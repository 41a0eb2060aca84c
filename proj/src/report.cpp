#include "knotband/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace knotband {

using nlohmann::json;

namespace {

// Sorted "name" / "name!" keys; nullopt when a summand is not a table name.
std::optional<std::vector<std::string>> summand_keys(const KnotExpr& e, bool flip) {
  std::vector<std::string> keys;
  for (const auto& t : e.summands) {
    if (t.kind == KnotTerm::Kind::Unknot) continue;
    if (t.kind != KnotTerm::Kind::Name) return std::nullopt;
    keys.push_back(t.name + ((t.mirrored != flip) ? "!" : ""));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::optional<UInterval> term_u(const KnotTerm& t, const KnotTable& table) {
  switch (t.kind) {
    case KnotTerm::Kind::Unknot: return UInterval{0, 0};
    case KnotTerm::Kind::Family: return UInterval{1, 1};
    case KnotTerm::Kind::Name:
      if (const KnotRecord* r = table.find(t.name)) return r->u;
      return std::nullopt;
    default: return std::nullopt;
  }
}

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
  return terms;
}

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string json_scalar(const json& j) {
  if (j.is_null()) return "n/a";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

const KnotRecord* find_record(const KnotExpr& expr, const KnotTable& table) {
  const auto want = summand_keys(expr, false);
  if (!want || want->empty()) return nullptr;
  const auto want_flipped = summand_keys(expr, true);
  for (const auto& [name, rec] : table.records()) {
    KnotExpr re;
    try {
      re = parse_knot_expr_ast(name);
    } catch (const ParseError&) {
      continue;
    }
    const auto have = summand_keys(re, false);
    if (have && (*have == *want || *have == *want_flipped)) return &rec;
  }
  return nullptr;
}

ExprFacts expr_facts(std::string_view text, const KnotTable& table, const InvariantOptions& options) {
  const KnotExpr expr = parse_knot_expr_ast(text);
  const PlanarDiagram d = evaluate_knot_expr(expr, table);
  ExprFacts out;
  out.operand.label = std::string(text);
  out.operand.inv = invariants(d, options);
  out.operand.unknot = simplify(d).size() == 0 && out.operand.inv.components == 1;
  if (out.operand.unknot) out.operand.u = UInterval{0, 0};

  out.record = find_record(expr, table);
  if (out.record) {
    out.operand.u = out.record->u;
    const std::string source = "table " + out.record->name + (out.record->note.empty() ? "" : " (" + out.record->note + ")");
    if (out.record->bu) out.certificates.push_back({Target::Db, *out.record->bu, source});
    if (out.record->u2) out.certificates.push_back({Target::D2, *out.record->u2, source});
  } else if (!out.operand.u) {
    std::optional<UInterval> sum = UInterval{0, 0};
    for (const auto& t : expr.summands) {
      const auto u = term_u(t, table);
      if (!u) {
        sum.reset();
        break;
      }
      sum->hi += u->hi;
      if (expr.summands.size() == 1) sum->lo = u->lo;
    }
    out.operand.u = sum;
  }
  return out;
}

std::string render_gaussian(const Cyclo12& v) {
  const auto [re, im] = gaussian_parts(v);
  if (im == 0) return std::to_string(re);
  std::string imag = (im == 1 ? "" : im == -1 ? "-" : std::to_string(im) + "*") + std::string("i");
  if (re == 0) return imag;
  return std::to_string(re) + (im > 0 ? "+" : "") + imag;
}

std::string render_jones_t(const LaurentPoly& jones_q) {
  for (const auto& [e, c] : jones_q.terms())
    if (e % 2 != 0) return jones_q.to_string("q");
  return q_to_t(jones_q).to_string("t");
}

json to_json(const Interval& i) { return json::array({i.lo, i.hi ? json(*i.hi) : json(nullptr)}); }

json to_json(const Snapshot& s, bool has_d2) {
  return json{{"bd", to_json(s.db)}, {"d2", has_d2 ? to_json(s.d2) : json(nullptr)}};
}

json to_json(const TraceEntry& e, bool has_d2) {
  return json{{"rule", e.rule},
              {"paper_ref", e.ref},
              {"before", to_json(e.before, has_d2)},
              {"after", to_json(e.after, has_d2)},
              {"asserted", e.asserted}};
}

json trace_to_json(const std::vector<TraceEntry>& trace, bool has_d2) {
  json out = json::array();
  for (const auto& e : trace) out.push_back(to_json(e, has_d2));
  return out;
}

json to_json(const InvariantSet& inv) {
  json j;
  j["components"] = inv.components;
  j["crossings"] = inv.crossings;
  j["jones"] = render_jones_t(inv.jones);
  j["jones_q_terms"] = poly_json(inv.jones);
  j["v_omega"] = render_cyclo(inv.v_omega);
  j["omega_sign"] = inv.omega_class.sign;
  j["delta"] = inv.omega_class.delta;
  j["v_minus1"] = render_gaussian(inv.v_minus1);
  j["v_i"] = inv.v_i ? json(*inv.v_i) : json(nullptr);
  j["arf"] = inv.arf ? json(*inv.arf) : json(nullptr);
  j["sigma"] = inv.signature;
  j["det"] = bigint_json(inv.det);
  json factors = json::array();
  for (const auto& f : inv.homology.factors) factors.push_back(bigint_json(f));
  j["h1_factors"] = factors;
  j["e2"] = inv.homology.e2;
  j["r"] = inv.homology.r;
  j["q_status"] = to_string(inv.q_status);
  j["q"] = inv.q_poly ? json(inv.q_poly->to_string("z")) : json(nullptr);
  j["lambda"] = inv.lambda_class ? json(render_golden(*inv.lambda_class)) : json(nullptr);
  j["checks"] = inv.checks;
  return j;
}

json to_json(const BoundState& st, Mode mode, bool pair) {
  json j;
  j["mode"] = to_string(mode);
  j["problem"] = pair ? "pair" : "knot";
  const char* b = pair ? "bd" : "bu";
  const char* h = pair ? "d2" : "u2";
  j[b] = to_json(st.bounds.db);
  j[h] = st.has_d2 ? to_json(st.bounds.d2) : json(nullptr);
  j["trace"] = trace_to_json(st.trace, st.has_d2);
  return j;
}

std::string render_invariants_text(const json& j) {
  std::ostringstream os;
  for (const char* key : {"components", "crossings", "jones", "v_omega", "delta", "v_minus1", "v_i", "arf", "sigma",
                          "det", "h1_factors", "e2", "r", "q_status", "q", "lambda"})
    os << key << ": " << json_scalar(j.at(key)) << "\n";
  os << "checks:";
  for (const auto& c : j.at("checks")) os << " " << c.get<std::string>();
  os << "\n";
  return os.str();
}

std::string render_bounds_text(const json& j) {
  auto interval = [](const json& i) {
    if (i.is_null()) return std::string("n/a");
    return "[" + i[0].dump() + "," + (i[1].is_null() ? std::string("inf)") : i[1].dump() + "]");
  };
  std::ostringstream os;
  const bool pair = j.at("problem") == "pair";
  const char* b = pair ? "bd" : "bu";
  const char* h = pair ? "d2" : "u2";
  os << "mode: " << j.at("mode").get<std::string>() << "\n";
  os << b << ": " << interval(j.at(b)) << ", " << h << ": " << interval(j.at(h)) << "\n";
  os << "trace:\n";
  for (const auto& e : j.at("trace")) {
    os << "  " << e.at("rule").get<std::string>() << (e.at("asserted").get<bool>() ? " (asserted)" : "") << ": "
       << interval(e.at("before").at("bd")) << "," << interval(e.at("before").at("d2")) << " -> "
       << interval(e.at("after").at("bd")) << "," << interval(e.at("after").at("d2")) << "\n";
  }
  return os.str();
}

}  // namespace knotband
