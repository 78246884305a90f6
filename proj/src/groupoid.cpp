#include "groupoid.hpp"

#include <algorithm>
#include <map>

namespace hgc {

bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  return id.find('|') == std::string_view::npos;
}

namespace {

int index_of(const std::vector<std::string>& sorted, std::string_view name) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
  if (it == sorted.end() || *it != name) return -1;
  return static_cast<int>(it - sorted.begin());
}

// Structural screening: every later check assumes these hold, so a failure
// here ends validation.
bool check_structure(const GroupoidData& d, ValidationReport& report) {
  if (d.arrows.empty()) {
    report.add("nonempty");
    return false;
  }
  bool ok = true;
  std::set<std::string> seen;
  for (const auto& a : d.arrows) {
    if (!valid_identifier(a)) {
      report.add("identifier", {a});
      ok = false;
    }
    if (!seen.insert(a).second) {
      report.add("duplicate arrow", {a});
      ok = false;
    }
  }
  if (!ok) return false;

  std::set<std::string> unit_seen;
  for (const auto& u : d.units) {
    if (!seen.count(u)) {
      report.add("unknown unit", {u});
      ok = false;
    }
    if (!unit_seen.insert(u).second) {
      report.add("duplicate unit", {u});
      ok = false;
    }
  }

  auto check_map = [&](const std::map<std::string, std::string>& m, const char* what) {
    for (const auto& a : d.arrows) {
      if (!m.count(a)) {
        report.add(std::string(what) + " total", {a});
        ok = false;
      }
    }
    for (const auto& [k, v] : m) {
      if (!seen.count(k)) {
        report.add(std::string(what) + " domain", {k});
        ok = false;
      }
      if (!seen.count(v)) {
        report.add(std::string(what) + " target", {k, v});
        ok = false;
      }
    }
  };
  check_map(d.range, "range");
  check_map(d.source, "source");
  check_map(d.inverse, "inverse");

  std::map<std::pair<std::string, std::string>, std::string> entries;
  for (const auto& t : d.compose) {
    for (const auto& name : t) {
      if (!seen.count(name)) {
        report.add("compose reference", {t[0], t[1], t[2]});
        ok = false;
      }
    }
    if (!ok) continue;
    auto [it, inserted] = entries.insert({{t[0], t[1]}, t[2]});
    if (!inserted && it->second != t[2]) {
      report.add("compose functional", {t[0], t[1], it->second, t[2]});
      ok = false;
    }
  }

  for (const auto& [k, v] : d.haar) {
    if (!seen.count(k)) {
      report.add("haar domain", {k});
      ok = false;
    }
    if (v <= 0) {
      report.add("haar positive", {k, format_rational(v)});
      ok = false;
    }
  }
  return ok;
}

}  // namespace

ValidationReport FiniteGroupoid::validate(const GroupoidData& d) {
  ValidationReport report;
  if (!check_structure(d, report)) return report;

  std::vector<std::string> names = d.arrows;
  std::sort(names.begin(), names.end());
  const int n = static_cast<int>(names.size());
  auto idx = [&](const std::string& s) { return index_of(names, s); };

  std::vector<char> is_unit(n, 0);
  for (const auto& u : d.units) is_unit[idx(u)] = 1;
  std::vector<int> range(n), source(n), inverse(n);
  for (int a = 0; a < n; ++a) {
    range[a] = idx(d.range.at(names[a]));
    source[a] = idx(d.source.at(names[a]));
    inverse[a] = idx(d.inverse.at(names[a]));
  }
  std::vector<int> compose(static_cast<std::size_t>(n) * n, -1);
  auto comp = [&](int a, int b) -> int& { return compose[a * n + b]; };

  for (const auto& t : d.compose) {
    const int a = idx(t[0]), b = idx(t[1]), c = idx(t[2]);
    if (source[a] != range[b]) {
      report.add("compose extra", {t[0], t[1]});
      continue;
    }
    comp(a, b) = c;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (source[a] == range[b] && comp(a, b) < 0) {
        report.add("compose missing", {names[a], names[b]});
      }
    }
  }

  for (int a = 0; a < n; ++a) {
    if (!is_unit[range[a]]) report.add("range unit", {names[a], names[range[a]]});
    if (!is_unit[source[a]]) report.add("source unit", {names[a], names[source[a]]});
  }
  for (const auto& u : d.units) {
    const int ui = idx(u);
    if (range[ui] != ui || source[ui] != ui) report.add("unit self", {u});
  }

  // Unit, composite range/source, associativity, inverse and Haar laws. Each
  // lookup is guarded: a missing entry was already reported above.
  for (int a = 0; a < n; ++a) {
    const int ra = range[a], sa = source[a];
    if (comp(ra, a) >= 0 && comp(ra, a) != a) report.add("unit law", {names[ra], names[a]});
    if (comp(a, sa) >= 0 && comp(a, sa) != a) report.add("unit law", {names[a], names[sa]});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = comp(a, b);
      if (ab < 0) continue;
      if (range[ab] != range[a]) report.add("compose range", {names[a], names[b]});
      if (source[ab] != source[b]) report.add("compose source", {names[a], names[b]});
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = comp(a, b);
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        if (source[b] != range[c]) continue;
        const int bc = comp(b, c);
        if (bc < 0) continue;
        const int left = comp(ab, c), right = comp(a, bc);
        if (left < 0 || right < 0) continue;
        if (left != right) report.add("associativity", {names[a], names[b], names[c]});
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    const int ia = inverse[a];
    if (inverse[ia] != a) report.add("inverse involution", {names[a]});
    if (source[a] != range[ia] || comp(a, ia) != range[a] ||
        range[a] != source[ia] || comp(ia, a) != source[a]) {
      report.add("inverse law", {names[a]});
    }
  }

  std::vector<Rational> haar(n, Rational(1));
  for (const auto& [k, v] : d.haar) haar[idx(k)] = v;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = comp(a, b);
      if (ab < 0) continue;
      if (haar[ab] != haar[b]) report.add("haar invariance", {names[a], names[b]});
    }
  }

  return report;
}

GroupoidPtr FiniteGroupoid::make(const GroupoidData& d) {
  ValidationReport report = validate(d);
  if (!report.ok()) throw ValidationError("invalid groupoid", std::move(report));

  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  g->names_ = d.arrows;
  std::sort(g->names_.begin(), g->names_.end());
  const int n = static_cast<int>(g->names_.size());
  auto idx = [&](const std::string& s) { return index_of(g->names_, s); };

  g->is_unit_.assign(n, 0);
  for (const auto& u : d.units) g->is_unit_[idx(u)] = 1;
  for (int a = 0; a < n; ++a) {
    if (g->is_unit_[a]) g->units_.push_back(a);
  }
  g->range_.resize(n);
  g->source_.resize(n);
  g->inverse_.resize(n);
  for (int a = 0; a < n; ++a) {
    g->range_[a] = idx(d.range.at(g->names_[a]));
    g->source_[a] = idx(d.source.at(g->names_[a]));
    g->inverse_[a] = idx(d.inverse.at(g->names_[a]));
  }
  g->compose_.assign(static_cast<std::size_t>(n) * n, -1);
  for (const auto& t : d.compose) {
    g->compose_[idx(t[0]) * n + idx(t[1])] = idx(t[2]);
  }
  g->haar_.assign(n, Rational(1));
  for (const auto& [k, v] : d.haar) g->haar_[idx(k)] = v;
  return g;
}

int FiniteGroupoid::arrow_index(std::string_view name) const {
  return index_of(names_, name);
}

bool FiniteGroupoid::counting_haar() const {
  return std::all_of(haar_.begin(), haar_.end(), [](const Rational& w) { return w == 1; });
}

GroupoidData FiniteGroupoid::data() const {
  GroupoidData d;
  d.arrows = names_;
  for (int u : units_) d.units.push_back(names_[u]);
  const int n = arrow_count();
  for (int a = 0; a < n; ++a) {
    d.range[names_[a]] = names_[range_[a]];
    d.source[names_[a]] = names_[source_[a]];
    d.inverse[names_[a]] = names_[inverse_[a]];
    d.haar[names_[a]] = haar_[a];
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int c = compose(a, b);
      if (c >= 0) d.compose.push_back({names_[a], names_[b], names_[c]});
    }
  }
  return d;
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& o) const {
  return names_ == o.names_ && is_unit_ == o.is_unit_ && range_ == o.range_ &&
         source_ == o.source_ && inverse_ == o.inverse_ && compose_ == o.compose_ &&
         haar_ == o.haar_;
}

// ---------------------------------------------------------------------------
// Group tables and the standard constructions
// ---------------------------------------------------------------------------

const std::string& GroupTable::prod(const std::string& a, const std::string& b) const {
  auto it = product.find({a, b});
  if (it == product.end()) {
    throw ArgumentError("group product table has no entry (" + a + ", " + b + ")");
  }
  return it->second;
}

std::string GroupTable::identity() const {
  for (const auto& e : elements) {
    bool is_id = true;
    for (const auto& x : elements) {
      if (prod(e, x) != x || prod(x, e) != x) {
        is_id = false;
        break;
      }
    }
    if (is_id) return e;
  }
  ValidationReport report;
  report.add("identity");
  throw ValidationError("not a group", std::move(report));
}

std::string GroupTable::inverse_of(const std::string& a) const {
  const std::string e = identity();
  for (const auto& b : elements) {
    if (prod(a, b) == e && prod(b, a) == e) return b;
  }
  ValidationReport report;
  report.add("inverse", {a});
  throw ValidationError("not a group", std::move(report));
}

namespace {

// Group axioms with witnesses; shared by group_as_groupoid and
// transformation_groupoid.
ValidationReport validate_group(const GroupTable& t) {
  ValidationReport report;
  if (t.elements.empty()) {
    report.add("nonempty");
    return report;
  }
  std::set<std::string> elems;
  for (const auto& x : t.elements) {
    if (!valid_identifier(x)) report.add("identifier", {x});
    if (!elems.insert(x).second) report.add("duplicate element", {x});
  }
  if (!report.ok()) return report;

  for (const auto& a : t.elements) {
    for (const auto& b : t.elements) {
      auto it = t.product.find({a, b});
      if (it == t.product.end()) {
        report.add("product total", {a, b});
      } else if (!elems.count(it->second)) {
        report.add("product closed", {a, b, it->second});
      }
    }
  }
  if (!report.ok()) return report;

  for (const auto& a : t.elements) {
    for (const auto& b : t.elements) {
      for (const auto& c : t.elements) {
        if (t.prod(t.prod(a, b), c) != t.prod(a, t.prod(b, c))) {
          report.add("associativity", {a, b, c});
        }
      }
    }
  }
  if (!report.ok()) return report;

  std::string e;
  for (const auto& cand : t.elements) {
    bool is_id = true;
    for (const auto& x : t.elements) {
      if (t.prod(cand, x) != x || t.prod(x, cand) != x) {
        is_id = false;
        break;
      }
    }
    if (is_id) {
      e = cand;
      break;
    }
  }
  if (e.empty()) {
    report.add("identity");
    return report;
  }
  for (const auto& a : t.elements) {
    bool has_inverse = false;
    for (const auto& b : t.elements) {
      if (t.prod(a, b) == e && t.prod(b, a) == e) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) report.add("inverse", {a});
  }
  return report;
}

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

void reject_duplicate_names(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw ArgumentError(std::string(what) + ": generated arrow name '" + n +
                          "' is ambiguous; rename the inputs");
    }
  }
}

}  // namespace

GroupoidPtr group_as_groupoid(const GroupTable& table) {
  ValidationReport report = validate_group(table);
  if (!report.ok()) throw ValidationError("not a group", std::move(report));

  const std::string e = table.identity();
  GroupoidData d;
  d.arrows = table.elements;
  d.units = {e};
  for (const auto& a : table.elements) {
    d.range[a] = e;
    d.source[a] = e;
    d.inverse[a] = table.inverse_of(a);
    for (const auto& b : table.elements) {
      d.compose.push_back({a, b, table.prod(a, b)});
    }
  }
  return FiniteGroupoid::make(d);
}

GroupoidPtr pair_groupoid(const std::vector<std::string>& points) {
  if (points.empty()) throw ArgumentError("pair groupoid of an empty set");
  for (const auto& p : points) {
    if (!valid_identifier(p)) throw ArgumentError("bad point identifier '" + p + "'");
  }
  std::vector<std::string> names;
  for (const auto& a : points) {
    for (const auto& b : points) names.push_back(pair_name(a, b));
  }
  reject_duplicate_names(names, "pair groupoid");

  GroupoidData d;
  d.arrows = names;
  for (const auto& a : points) {
    d.units.push_back(pair_name(a, a));
    for (const auto& b : points) {
      const std::string ab = pair_name(a, b);
      d.range[ab] = pair_name(a, a);
      d.source[ab] = pair_name(b, b);
      d.inverse[ab] = pair_name(b, a);
      for (const auto& c : points) {
        d.compose.push_back({ab, pair_name(b, c), pair_name(a, c)});
      }
    }
  }
  return FiniteGroupoid::make(d);
}

GroupoidPtr transformation_groupoid(
    const GroupTable& group, const std::vector<std::string>& space,
    const std::map<std::pair<std::string, std::string>, std::string>& action) {
  ValidationReport report = validate_group(group);
  if (!report.ok()) throw ValidationError("not a group", std::move(report));
  if (space.empty()) {
    report.add("space nonempty");
    throw ValidationError("invalid action", std::move(report));
  }
  std::set<std::string> pts;
  for (const auto& y : space) {
    if (!valid_identifier(y)) report.add("identifier", {y});
    if (!pts.insert(y).second) report.add("duplicate point", {y});
  }
  auto act = [&](const std::string& g, const std::string& y) -> const std::string* {
    auto it = action.find({g, y});
    return it == action.end() ? nullptr : &it->second;
  };
  for (const auto& g : group.elements) {
    for (const auto& y : space) {
      const std::string* gy = act(g, y);
      if (!gy) {
        report.add("action total", {g, y});
      } else if (!pts.count(*gy)) {
        report.add("action closed", {g, y, *gy});
      }
    }
  }
  if (!report.ok()) throw ValidationError("invalid action", std::move(report));

  const std::string e = group.identity();
  for (const auto& y : space) {
    if (*act(e, y) != y) report.add("action identity", {y});
  }
  for (const auto& g : group.elements) {
    for (const auto& h : group.elements) {
      for (const auto& y : space) {
        if (*act(group.prod(g, h), y) != *act(g, *act(h, y))) {
          report.add("action compatibility", {g, h, y});
        }
      }
    }
  }
  if (!report.ok()) throw ValidationError("invalid action", std::move(report));

  std::vector<std::string> names;
  for (const auto& g : group.elements) {
    for (const auto& y : space) names.push_back(pair_name(g, y));
  }
  reject_duplicate_names(names, "transformation groupoid");

  GroupoidData d;
  d.arrows = names;
  for (const auto& y : space) d.units.push_back(pair_name(e, y));
  for (const auto& g : group.elements) {
    for (const auto& y : space) {
      const std::string gy = *act(g, y);
      const std::string a = pair_name(g, y);
      d.range[a] = pair_name(e, gy);
      d.source[a] = pair_name(e, y);
      d.inverse[a] = pair_name(group.inverse_of(g), gy);
      // (g, h·y) ∘ (h, y) = (g·h, y)
      for (const auto& h : group.elements) {
        const std::string hy = *act(h, y);
        d.compose.push_back({pair_name(g, hy), pair_name(h, y), pair_name(group.prod(g, h), y)});
      }
    }
  }
  std::sort(d.compose.begin(), d.compose.end());
  d.compose.erase(std::unique(d.compose.begin(), d.compose.end()), d.compose.end());
  return FiniteGroupoid::make(d);
}

bool wide_subgroupoid_check(const FiniteGroupoid& g, const std::set<std::string>& subset) {
  std::vector<int> members;
  for (const auto& name : subset) {
    const int a = g.arrow_index(name);
    if (a < 0) return false;
    members.push_back(a);
  }
  std::set<int> in(members.begin(), members.end());
  for (int u : g.units()) {
    if (!in.count(u)) return false;
  }
  for (int a : members) {
    if (!in.count(g.inverse(a))) return false;
    for (int b : members) {
      if (g.composable(a, b) && !in.count(g.compose(a, b))) return false;
    }
  }
  return true;
}

}  // namespace hgc
