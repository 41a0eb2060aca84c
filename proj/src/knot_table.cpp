#include "knotband/knot_table.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <tuple>

#include "json.hpp"

#ifndef KNOTBAND_DEFAULT_DATA
#define KNOTBAND_DEFAULT_DATA "data/knot_table.jsonl"
#endif

namespace knotband {

using nlohmann::json;

void KnotTable::insert(KnotRecord record) {
  const std::string name = record.name;
  if (!records_.emplace(name, std::move(record)).second) throw TableError("duplicate knot name '" + name + "'");
}

const KnotRecord* KnotTable::find(const std::string& name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

namespace {

int nonneg_int(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1000000)
    throw TableError("field '" + field + "' must be a nonnegative integer");
  return j.get<int>();
}

KnotRecord parse_record(const json& j) {
  static const std::set<std::string> known{"name", "pd", "components", "u", "u2", "bu", "note"};
  if (!j.is_object()) throw TableError("record is not a JSON object");
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw TableError("unknown field '" + key + "'");
  for (const char* req : {"name", "pd", "components", "u"})
    if (!j.contains(req)) throw TableError(std::string("missing field '") + req + "'");

  KnotRecord r;
  if (!j["name"].is_string() || j["name"].get<std::string>().empty()) throw TableError("field 'name' must be a nonempty string");
  r.name = j["name"].get<std::string>();

  const json& pd = j["pd"];
  if (!pd.is_array()) throw TableError("field 'pd' must be a list of 4-element lists");
  std::vector<Crossing> xs;
  for (const auto& x : pd) {
    if (!x.is_array() || x.size() != 4) throw TableError("field 'pd' must be a list of 4-element lists");
    Crossing c;
    for (std::size_t s = 0; s < 4; ++s) {
      if (!x[s].is_number_integer() || x[s].get<long long>() <= 0 || x[s].get<long long>() > 1000000)
        throw TableError("field 'pd': arc labels must be positive integers");
      c.arcs[s] = x[s].get<int>();
    }
    xs.push_back(c);
  }
  try {
    r.pd = xs.empty() ? PlanarDiagram::unknot() : PlanarDiagram(std::move(xs));
  } catch (const DiagramError& e) {
    throw TableError(std::string("field 'pd': ") + e.what());
  }

  r.components = nonneg_int(j["components"], "components");
  if (r.components != component_count(r.pd))
    throw TableError("field 'components' is " + std::to_string(r.components) + " but the PD code has " +
                     std::to_string(component_count(r.pd)));

  const json& u = j["u"];
  if (!u.is_array() || u.size() != 2) throw TableError("field 'u' must be a 2-element interval [lo, hi]");
  r.u = {nonneg_int(u[0], "u"), nonneg_int(u[1], "u")};
  if (r.u.lo > r.u.hi) throw TableError("field 'u' is an empty interval");

  if (j.contains("u2")) r.u2 = nonneg_int(j["u2"], "u2");
  if (j.contains("bu")) r.bu = nonneg_int(j["bu"], "bu");
  if (j.contains("note")) {
    if (!j["note"].is_string()) throw TableError("field 'note' must be a string");
    r.note = j["note"].get<std::string>();
  }
  return r;
}

}  // namespace

KnotTable parse_knot_table(std::istream& in, const std::string& source) {
  KnotTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      table.insert(parse_record(json::parse(line)));
    } catch (const json::exception& e) {
      throw TableError(source + ":" + std::to_string(lineno) + ": invalid JSON: " + e.what());
    } catch (const TableError& e) {
      throw TableError(source + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (in.bad()) throw TableError(source + ": read error");
  return table;
}

KnotTable load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open knot table '" + path + "'");
  return parse_knot_table(in, path);
}

std::string default_table_path() {
  if (const char* env = std::getenv("KNOTBAND_DATA"); env && *env) return env;
  return KNOTBAND_DEFAULT_DATA;
}

bool knot_name_less(const std::string& a, const std::string& b) {
  auto key = [](const std::string& s) {
    int cross = 0, index = 0;
    std::size_t pos = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) cross = cross * 10 + (s[pos++] - '0');
    if (pos < s.size() && s[pos] == '_') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) index = index * 10 + (s[pos++] - '0');
    const bool composite = s.find('#') != std::string::npos;
    return std::make_tuple(composite, cross, index, s);
  };
  return key(a) < key(b);
}

}  // namespace knotband
