#include "gspace.hpp"

#include <algorithm>
#include <numeric>

namespace hgc {

namespace {

int index_of(const std::vector<std::string>& sorted, std::string_view name) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
  if (it == sorted.end() || *it != name) return -1;
  return static_cast<int>(it - sorted.begin());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool check_space_structure(const FiniteGroupoid& g, const GSpaceData& d,
                           ValidationReport& report) {
  if (d.points.empty()) {
    report.add("nonempty");
    return false;
  }
  bool ok = true;
  std::set<std::string> pts;
  for (const auto& p : d.points) {
    if (!valid_identifier(p)) {
      report.add("identifier", {p});
      ok = false;
    }
    if (!pts.insert(p).second) {
      report.add("duplicate point", {p});
      ok = false;
    }
  }
  if (!ok) return false;

  for (const auto& p : d.points) {
    if (!d.anchor.count(p)) {
      report.add("anchor total", {p});
      ok = false;
    }
  }
  for (const auto& [k, v] : d.anchor) {
    if (!pts.count(k)) {
      report.add("anchor domain", {k});
      ok = false;
    }
    if (g.arrow_index(v) < 0) {
      report.add("anchor target", {k, v});
      ok = false;
    }
  }

  std::map<std::pair<std::string, std::string>, std::string> entries;
  for (const auto& t : d.action) {
    if (g.arrow_index(t[0]) < 0 || !pts.count(t[1]) || !pts.count(t[2])) {
      report.add("action reference", {t[0], t[1], t[2]});
      ok = false;
      continue;
    }
    auto [it, inserted] = entries.insert({{t[0], t[1]}, t[2]});
    if (!inserted && it->second != t[2]) {
      report.add("action functional", {t[0], t[1], it->second, t[2]});
      ok = false;
    }
  }
  return ok;
}

}  // namespace

ValidationReport FiniteGSpace::validate(const FiniteGroupoid& g, const GSpaceData& d) {
  ValidationReport report;
  if (!check_space_structure(g, d, report)) return report;

  std::vector<std::string> names = d.points;
  std::sort(names.begin(), names.end());
  const int np = static_cast<int>(names.size());
  const int na = g.arrow_count();

  std::vector<int> anchor(np);
  for (int x = 0; x < np; ++x) anchor[x] = g.arrow_index(d.anchor.at(names[x]));

  std::vector<int> action(static_cast<std::size_t>(na) * np, -1);
  for (const auto& t : d.action) {
    const int a = g.arrow_index(t[0]);
    const int x = index_of(names, t[1]);
    if (g.source(a) != anchor[x]) {
      report.add("action extra", {t[0], t[1]});
      continue;
    }
    action[a * np + x] = index_of(names, t[2]);
  }

  for (int x = 0; x < np; ++x) {
    if (!g.is_unit(anchor[x])) report.add("anchor unit", {names[x], g.arrow_name(anchor[x])});
  }
  for (int u : g.units()) {
    if (std::find(anchor.begin(), anchor.end(), u) == anchor.end()) {
      report.add("anchor onto", {g.arrow_name(u)});
    }
  }
  if (!report.ok()) return report;  // remaining axioms presume anchors are units

  for (int a = 0; a < na; ++a) {
    for (int x = 0; x < np; ++x) {
      if (g.source(a) == anchor[x] && action[a * np + x] < 0) {
        report.add("action missing", {g.arrow_name(a), names[x]});
      }
    }
  }

  for (int a = 0; a < na; ++a) {
    for (int x = 0; x < np; ++x) {
      const int ax = action[a * np + x];
      if (ax < 0) continue;
      if (anchor[ax] != g.range(a)) {
        report.add("action anchor", {g.arrow_name(a), names[x]});
      }
      if (g.is_unit(a) && ax != x) {
        report.add("unit acts trivially", {g.arrow_name(a), names[x]});
      }
    }
  }

  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < na; ++b) {
      if (!g.composable(a, b)) continue;
      const int ab = g.compose(a, b);
      for (int x = 0; x < np; ++x) {
        if (g.source(b) != anchor[x]) continue;
        const int bx = action[b * np + x];
        if (bx < 0 || action[ab * np + x] < 0) continue;
        const int abx = action[a * np + bx];
        if (abx < 0) continue;
        if (action[ab * np + x] != abx) {
          report.add("action compatibility", {g.arrow_name(a), g.arrow_name(b), names[x]});
        }
      }
    }
  }

  for (int a = 0; a < na; ++a) {
    for (int x = 0; x < np; ++x) {
      const int ax = action[a * np + x];
      if (ax < 0) continue;
      for (int x2 = x + 1; x2 < np; ++x2) {
        if (action[a * np + x2] == ax) {
          report.add("action injective", {g.arrow_name(a), names[x], names[x2]});
        }
      }
    }
  }
  return report;
}

GSpacePtr FiniteGSpace::make(GroupoidPtr g, const GSpaceData& d) {
  ValidationReport report = validate(*g, d);
  if (!report.ok()) throw ValidationError("invalid G-space", std::move(report));

  auto s = std::shared_ptr<FiniteGSpace>(new FiniteGSpace());
  s->g_ = std::move(g);
  s->names_ = d.points;
  std::sort(s->names_.begin(), s->names_.end());
  const int np = s->point_count();
  s->anchor_.resize(np);
  for (int x = 0; x < np; ++x) {
    s->anchor_[x] = s->g_->arrow_index(d.anchor.at(s->names_[x]));
  }
  s->action_.assign(static_cast<std::size_t>(s->g_->arrow_count()) * np, -1);
  for (const auto& t : d.action) {
    const int a = s->g_->arrow_index(t[0]);
    s->action_[a * np + index_of(s->names_, t[1])] = index_of(s->names_, t[2]);
  }
  return s;
}

int FiniteGSpace::point_index(std::string_view name) const {
  return index_of(names_, name);
}

GSpaceData FiniteGSpace::data() const {
  GSpaceData d;
  d.points = names_;
  const int np = point_count();
  for (int x = 0; x < np; ++x) d.anchor[names_[x]] = g_->arrow_name(anchor_[x]);
  for (int a = 0; a < g_->arrow_count(); ++a) {
    for (int x = 0; x < np; ++x) {
      const int ax = act(a, x);
      if (ax >= 0) d.action.push_back({g_->arrow_name(a), names_[x], names_[ax]});
    }
  }
  return d;
}

bool FiniteGSpace::operator==(const FiniteGSpace& o) const {
  return (g_ == o.g_ || *g_ == *o.g_) && names_ == o.names_ && anchor_ == o.anchor_ &&
         action_ == o.action_;
}

ValidationReport MeasuredGSpace::validate(const FiniteGSpace& x,
                                          const std::map<std::string, Rational>& weights) {
  ValidationReport report;
  for (const auto& [k, v] : weights) {
    if (x.point_index(k) < 0) {
      report.add("weight domain", {k});
    } else if (v <= 0) {
      report.add("weight positive", {k, format_rational(v)});
    }
  }
  if (!report.ok()) return report;

  const int np = x.point_count();
  std::vector<Rational> w(np, Rational(1));
  for (const auto& [k, v] : weights) w[x.point_index(k)] = v;
  const FiniteGroupoid& g = x.groupoid();
  for (int a = 0; a < g.arrow_count(); ++a) {
    for (int p = 0; p < np; ++p) {
      const int ap = x.act(a, p);
      if (ap >= 0 && w[ap] != w[p]) {
        report.add("weight invariance", {g.arrow_name(a), x.point_name(p)});
      }
    }
  }
  return report;
}

MeasuredPtr MeasuredGSpace::make(GSpacePtr x, const std::map<std::string, Rational>& weights) {
  ValidationReport report = validate(*x, weights);
  if (!report.ok()) throw ValidationError("invalid measure", std::move(report));

  auto m = std::shared_ptr<MeasuredGSpace>(new MeasuredGSpace());
  m->weights_.assign(x->point_count(), Rational(1));
  for (const auto& [k, v] : weights) m->weights_[x->point_index(k)] = v;
  m->x_ = std::move(x);
  return m;
}

bool MeasuredGSpace::counting() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w == 1; });
}

GSpaceData MeasuredGSpace::data() const {
  GSpaceData d = x_->data();
  for (int p = 0; p < x_->point_count(); ++p) d.weights[x_->point_name(p)] = weights_[p];
  return d;
}

bool MeasuredGSpace::operator==(const MeasuredGSpace& o) const {
  return (x_ == o.x_ || *x_ == *o.x_) && weights_ == o.weights_;
}

MeasuredPtr groupoid_as_measured_space(GroupoidPtr g) {
  GSpaceData d;
  d.points = g->arrow_names();
  const int n = g->arrow_count();
  for (int a = 0; a < n; ++a) {
    d.anchor[g->arrow_name(a)] = g->arrow_name(g->range(a));
    d.weights[g->arrow_name(a)] = g->haar(a);
    for (int b = 0; b < n; ++b) {
      const int c = g->compose(a, b);
      if (c >= 0) d.action.push_back({g->arrow_name(a), g->arrow_name(b), g->arrow_name(c)});
    }
  }
  auto space = FiniteGSpace::make(g, d);
  return MeasuredGSpace::make(std::move(space), d.weights);
}

FreeResult is_free(const FiniteGSpace& x) {
  const FiniteGroupoid& g = x.groupoid();
  for (int a = 0; a < g.arrow_count(); ++a) {
    for (int b = a + 1; b < g.arrow_count(); ++b) {
      if (g.source(a) != g.source(b)) continue;
      for (int p = 0; p < x.point_count(); ++p) {
        if (g.source(a) != x.anchor(p)) continue;
        if (x.act(a, p) == x.act(b, p)) {
          return {false, a, b, p};
        }
      }
    }
  }
  return {};
}

PointOrbits point_orbits(const FiniteGSpace& x) {
  const int np = x.point_count();
  UnionFind uf(np);
  for (int a = 0; a < x.groupoid().arrow_count(); ++a) {
    for (int p = 0; p < np; ++p) {
      const int ap = x.act(a, p);
      if (ap >= 0) uf.unite(p, ap);
    }
  }
  PointOrbits out;
  out.orbit_of.assign(np, -1);
  for (int p = 0; p < np; ++p) {
    const int root = uf.find(p);
    if (out.orbit_of[root] < 0) {
      out.orbit_of[root] = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbit_of[p] = out.orbit_of[root];
    out.orbits[out.orbit_of[p]].push_back(p);
  }
  return out;
}

OrbitPtr OrbitSpace::make(MeasuredPtr left, MeasuredPtr right) {
  if (!(left->groupoid() == right->groupoid())) {
    throw ArgumentError("orbit space requires both spaces over the same groupoid");
  }
  auto os = std::shared_ptr<OrbitSpace>(new OrbitSpace());
  const FiniteGSpace& X = left->space();
  const FiniteGSpace& Y = right->space();
  const int nx = X.point_count(), ny = Y.point_count();
  os->ny_ = ny;
  os->orbit_.assign(static_cast<std::size_t>(nx) * ny, -1);

  UnionFind uf(nx * ny);
  const FiniteGroupoid& g = X.groupoid();
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      if (X.anchor(x) != Y.anchor(y)) continue;
      ++os->pair_count_;
      for (int a = 0; a < g.arrow_count(); ++a) {
        if (g.source(a) != X.anchor(x)) continue;
        uf.unite(x * ny + y, X.act(a, x) * ny + Y.act(a, y));
      }
    }
  }

  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      if (X.anchor(x) != Y.anchor(y)) continue;
      const int root = uf.find(x * ny + y);
      int& id = os->orbit_[root];
      if (x * ny + y == root) {
        id = static_cast<int>(os->reps_.size());
        os->reps_.emplace_back(x, y);
        os->members_.emplace_back();
      }
      os->orbit_[x * ny + y] = id;
      os->members_[id].emplace_back(x, y);
    }
  }
  os->left_ = std::move(left);
  os->right_ = std::move(right);
  return os;
}

std::string OrbitSpace::key(int o) const {
  const auto& [x, y] = reps_[o];
  return left_->space().point_name(x) + "|" + right_->space().point_name(y);
}

int OrbitSpace::orbit_by_key(std::string_view key) const {
  const auto bar = key.find('|');
  if (bar == std::string_view::npos) return -1;
  const int x = left_->space().point_index(key.substr(0, bar));
  const int y = right_->space().point_index(key.substr(bar + 1));
  if (x < 0 || y < 0) return -1;
  return orbit_of(x, y);
}

bool OrbitSpace::canonical_key(std::string_view k) const {
  const int o = orbit_by_key(k);
  return o >= 0 && key(o) == k;
}

bool OrbitSpace::same_context(const OrbitSpace& o) const {
  const bool left_same = left_ == o.left_ || *left_ == *o.left_;
  const bool right_same = right_ == o.right_ || *right_ == *o.right_;
  return left_same && right_same;
}

SelfIdentification self_identification(const MeasuredPtr& x) {
  SelfIdentification out;
  auto g_space = groupoid_as_measured_space(x->space().groupoid_ptr());
  out.orbits = OrbitSpace::make(g_space, x);

  const FiniteGroupoid& g = x->groupoid();
  const FiniteGSpace& X = x->space();
  out.to_point.assign(out.orbits->orbit_count(), -1);
  out.to_orbit.assign(X.point_count(), -1);
  for (int o = 0; o < out.orbits->orbit_count(); ++o) {
    const auto& [gp, xp] = out.orbits->representative(o);
    const int arrow = g.arrow_index(g_space->space().point_name(gp));
    out.to_point[o] = X.act(g.inverse(arrow), xp);
  }
  for (int p = 0; p < X.point_count(); ++p) {
    const int unit_point = g_space->space().point_index(g.arrow_name(X.anchor(p)));
    out.to_orbit[p] = out.orbits->orbit_of(unit_point, p);
  }
  for (int p = 0; p < X.point_count(); ++p) {
    if (out.to_orbit[p] < 0 || out.to_point[out.to_orbit[p]] != p) {
      throw ArgumentError("self identification is not bijective; the G-space is invalid");
    }
  }
  if (out.orbits->orbit_count() != X.point_count()) {
    throw ArgumentError("self identification is not bijective; the G-space is invalid");
  }
  return out;
}

}  // namespace hgc
