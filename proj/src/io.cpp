#include "io.hpp"

#include <fstream>
#include <sstream>

namespace hgc::io {

namespace {

void expect_object(const Json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
}

// Strict schema: every required key present, nothing outside required ∪ optional.
void expect_keys(const Json& j, const char* what, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  expect_object(j, what);
  for (const char* k : required) {
    if (!j.contains(k)) {
      throw ParseError(std::string(what) + ": missing key \"" + k + "\"");
    }
  }
  for (const auto& [k, v] : j.items()) {
    (void)v;
    const bool known = std::any_of(required.begin(), required.end(),
                                   [&](const char* r) { return k == r; }) ||
                       std::any_of(optional.begin(), optional.end(),
                                   [&](const char* o) { return k == o; });
    if (!known) throw ParseError(std::string(what) + ": unknown key \"" + k + "\"");
  }
}

std::string string_field(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(string_field(v, what));
  return out;
}

std::map<std::string, std::string> string_map(const Json& j, const char* what) {
  expect_object(j, what);
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = string_field(v, what);
  return out;
}

std::map<std::string, Rational> rational_map(const Json& j, const char* what) {
  expect_object(j, what);
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : j.items()) out[k] = rational_from_json(v, what);
  return out;
}

std::vector<std::array<std::string, 3>> triple_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::array<std::string, 3>> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) {
      throw ParseError(std::string(what) + " entries must be 3-element arrays");
    }
    out.push_back({string_field(t[0], what), string_field(t[1], what), string_field(t[2], what)});
  }
  return out;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << canonical_dump(j);
  if (!out) throw IoError("short write to '" + path.string() + "'");
}

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j, const char* what) {
  if (!j.is_string()) {
    throw ParseError(std::string(what) + ": rationals are \"p/q\" strings");
  }
  return parse_rational(j.get<std::string>());
}

Json scalar_to_json(const Scalar& s) {
  return Json::array({format_rational(s.re), format_rational(s.im)});
}

Scalar scalar_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(std::string(what) + ": scalars are [\"re\", \"im\"] pairs");
  }
  return {rational_from_json(j[0], what), rational_from_json(j[1], what)};
}

GroupoidData groupoid_from_json(const Json& j) {
  expect_keys(j, "groupoid", {"arrows", "units", "range", "source", "inverse", "compose"},
              {"haar"});
  GroupoidData d;
  d.arrows = string_array(j["arrows"], "groupoid.arrows");
  d.units = string_array(j["units"], "groupoid.units");
  d.range = string_map(j["range"], "groupoid.range");
  d.source = string_map(j["source"], "groupoid.source");
  d.inverse = string_map(j["inverse"], "groupoid.inverse");
  d.compose = triple_array(j["compose"], "groupoid.compose");
  if (j.contains("haar")) d.haar = rational_map(j["haar"], "groupoid.haar");
  return d;
}

Json groupoid_to_json(const GroupoidData& d) {
  Json j;
  j["arrows"] = d.arrows;
  j["units"] = d.units;
  j["range"] = d.range;
  j["source"] = d.source;
  j["inverse"] = d.inverse;
  Json compose = Json::array();
  for (const auto& t : d.compose) compose.push_back({t[0], t[1], t[2]});
  j["compose"] = compose;
  const bool counting = std::all_of(d.haar.begin(), d.haar.end(),
                                    [](const auto& kv) { return kv.second == 1; });
  if (!counting) {
    Json haar;
    for (const auto& [k, v] : d.haar) haar[k] = rational_to_json(v);
    j["haar"] = haar;
  }
  return j;
}

GroupoidPtr load_groupoid(const std::filesystem::path& path) {
  return FiniteGroupoid::make(groupoid_from_json(load_json_file(path)));
}

GSpaceData space_from_json(const Json& j) {
  expect_keys(j, "space", {"points", "anchor", "action"}, {"weights"});
  GSpaceData d;
  d.points = string_array(j["points"], "space.points");
  d.anchor = string_map(j["anchor"], "space.anchor");
  d.action = triple_array(j["action"], "space.action");
  if (j.contains("weights")) d.weights = rational_map(j["weights"], "space.weights");
  return d;
}

Json space_to_json(const GSpaceData& d) {
  Json j;
  j["points"] = d.points;
  j["anchor"] = d.anchor;
  Json action = Json::array();
  for (const auto& t : d.action) action.push_back({t[0], t[1], t[2]});
  j["action"] = action;
  const bool counting = std::all_of(d.weights.begin(), d.weights.end(),
                                    [](const auto& kv) { return kv.second == 1; });
  if (!counting) {
    Json weights;
    for (const auto& [k, v] : d.weights) weights[k] = rational_to_json(v);
    j["weights"] = weights;
  }
  return j;
}

MeasuredPtr load_space(const std::filesystem::path& path, GroupoidPtr g) {
  const GSpaceData d = space_from_json(load_json_file(path));
  return MeasuredGSpace::make(FiniteGSpace::make(std::move(g), d), d.weights);
}

namespace {

// A context member is either an inline object or a path string relative to
// the function file.
Json resolve_ref(const Json& j, const std::filesystem::path& base_dir, const char* what) {
  if (j.is_string()) return load_json_file(base_dir / j.get<std::string>());
  expect_object(j, what);
  return j;
}

}  // namespace

ArrowBundle arrow_from_json(const Json& j, const std::filesystem::path& base_dir) {
  expect_keys(j, "function", {"groupoid", "dst_space", "src_space", "values"});
  ArrowBundle b;
  b.groupoid = FiniteGroupoid::make(
      groupoid_from_json(resolve_ref(j["groupoid"], base_dir, "function.groupoid")));
  const GSpaceData dst = space_from_json(resolve_ref(j["dst_space"], base_dir, "function.dst_space"));
  const GSpaceData src = space_from_json(resolve_ref(j["src_space"], base_dir, "function.src_space"));
  b.dst = MeasuredGSpace::make(FiniteGSpace::make(b.groupoid, dst), dst.weights);
  b.src = MeasuredGSpace::make(FiniteGSpace::make(b.groupoid, src), src.weights);

  auto orbits = OrbitSpace::make(b.dst, b.src);
  expect_object(j["values"], "function.values");
  std::map<int, Scalar> values;
  for (const auto& [k, v] : j["values"].items()) {
    if (!orbits->canonical_key(k)) {
      throw ParseError("function.values: \"" + k + "\" is not a canonical orbit representative");
    }
    values[orbits->orbit_by_key(k)] = scalar_from_json(v, "function.values");
  }
  b.arrow = make_arrow(std::move(orbits), std::move(values));
  return b;
}

ArrowBundle load_arrow(const std::filesystem::path& path) {
  return arrow_from_json(load_json_file(path), path.parent_path());
}

Json arrow_to_json(const Arrow& f) {
  Json j;
  j["groupoid"] = groupoid_to_json(f.dst().groupoid().data());
  j["dst_space"] = space_to_json(f.dst().data());
  j["src_space"] = space_to_json(f.src().data());
  Json values = Json::object();
  for (const auto& [o, v] : f.values) values[f.orbits->key(o)] = scalar_to_json(v);
  j["values"] = values;
  return j;
}

Json report_to_json(const ValidationReport& report) {
  Json j;
  j["ok"] = report.ok();
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  }
  j["violations"] = violations;
  return j;
}

Json orbits_to_json(const OrbitSpace& os) {
  Json j;
  j["pair_count"] = os.pair_count();
  j["orbit_count"] = os.orbit_count();
  Json orbits = Json::array();
  for (int o = 0; o < os.orbit_count(); ++o) {
    Json members = Json::array();
    for (const auto& [x, y] : os.members(o)) {
      members.push_back(os.left().space().point_name(x) + "|" +
                        os.right().space().point_name(y));
    }
    orbits.push_back({{"key", os.key(o)}, {"members", members}});
  }
  j["orbits"] = orbits;
  return j;
}

Json table_to_json(const HypergroupoidTable& t) {
  Json j;
  Json orbits = Json::array();
  for (int o = 0; o < t.orbit_count(); ++o) orbits.push_back(t.orbits->key(o));
  j["orbits"] = orbits;
  Json star = Json::object();
  for (int o = 0; o < t.orbit_count(); ++o) star[t.orbits->key(o)] = t.orbits->key(t.star[o]);
  j["star"] = star;
  Json constants = Json::array();
  for (int o = 0; o < t.orbit_count(); ++o) {
    for (int p = 0; p < t.orbit_count(); ++p) {
      for (int q = 0; q < t.orbit_count(); ++q) {
        if (t.at(o, p, q) != 0) {
          constants.push_back({o, p, q, rational_to_json(t.at(o, p, q))});
        }
      }
    }
  }
  j["constants"] = constants;
  return j;
}

Json matrix_to_json(const WeightedMatrix& m) {
  Json j;
  j["rows"] = m.rows->space().point_names();
  j["cols"] = m.cols->space().point_names();
  Json row_weights = Json::object(), col_weights = Json::object();
  for (int i = 0; i < m.rows->space().point_count(); ++i) {
    row_weights[m.rows->space().point_name(i)] = rational_to_json(m.rows->weight(i));
  }
  for (int i = 0; i < m.cols->space().point_count(); ++i) {
    col_weights[m.cols->space().point_name(i)] = rational_to_json(m.cols->weight(i));
  }
  j["row_weights"] = row_weights;
  j["col_weights"] = col_weights;
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.entries.size(); ++r) {
    for (std::size_t c = 0; c < m.entries[r].size(); ++c) {
      const Scalar& v = m.entries[r][c];
      if (v.is_zero()) continue;
      entries.push_back({m.rows->space().point_name(static_cast<int>(r)),
                         m.cols->space().point_name(static_cast<int>(c)),
                         format_rational(v.re), format_rational(v.im)});
    }
  }
  j["entries"] = entries;
  return j;
}

}  // namespace hgc::io
