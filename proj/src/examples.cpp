#include "examples.hpp"

#include <algorithm>
#include <array>

#include "error.hpp"
#include "hypergroupoid.hpp"

namespace hgc {

GroupTable cyclic_group(int n) {
  if (n < 1 || n > 10) throw ArgumentError("cyclic group order out of range");
  GroupTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t.product[{t.elements[i], t.elements[j]}] = t.elements[(i + j) % n];
    }
  }
  return t;
}

GroupTable z2_table() {
  GroupTable t;
  t.elements = {"e", "s"};
  t.product[{"e", "e"}] = "e";
  t.product[{"e", "s"}] = "s";
  t.product[{"s", "e"}] = "s";
  t.product[{"s", "s"}] = "e";
  return t;
}

GroupTable symmetric3() {
  // Permutations of {1,2,3} in one-line notation; product g·h applies h first.
  const std::vector<std::pair<std::string, std::array<int, 3>>> perms = {
      {"e", {1, 2, 3}},    {"(12)", {2, 1, 3}},  {"(13)", {3, 2, 1}},
      {"(23)", {1, 3, 2}}, {"(123)", {2, 3, 1}}, {"(132)", {3, 1, 2}},
  };
  auto name_of = [&](const std::array<int, 3>& p) -> const std::string& {
    for (const auto& [name, q] : perms) {
      if (q == p) return name;
    }
    throw ArgumentError("not a permutation");
  };
  GroupTable t;
  for (const auto& [name, p] : perms) {
    t.elements.push_back(name);
    (void)p;
  }
  for (const auto& [gn, g] : perms) {
    for (const auto& [hn, h] : perms) {
      std::array<int, 3> gh;
      for (int i = 0; i < 3; ++i) gh[i] = g[h[i] - 1];
      t.product[{gn, hn}] = name_of(gh);
    }
  }
  return t;
}

namespace {

void require_subgroup(const GroupTable& g, const std::set<std::string>& k) {
  ValidationReport report;
  if (k.empty()) report.add("subgroup nonempty");
  std::set<std::string> elems(g.elements.begin(), g.elements.end());
  for (const auto& a : k) {
    if (!elems.count(a)) report.add("subgroup member", {a});
  }
  if (!report.ok()) throw ValidationError("not a subgroup", std::move(report));
  for (const auto& a : k) {
    for (const auto& b : k) {
      if (!k.count(g.prod(a, b))) report.add("subgroup closed", {a, b});
    }
  }
  if (!report.ok()) throw ValidationError("not a subgroup", std::move(report));
}

void check_fixture(const NamedExample& ex) {
  if (ex.expected.empty()) return;
  const HypergroupoidTable t = build_hypergroupoid(ex.space);
  std::vector<TensorEntry> live;
  for (int o = 0; o < t.orbit_count(); ++o) {
    for (int p = 0; p < t.orbit_count(); ++p) {
      for (int q = 0; q < t.orbit_count(); ++q) {
        if (t.at(o, p, q) != 0) live.push_back({o, p, q, t.at(o, p, q)});
      }
    }
  }
  auto key = [](const TensorEntry& e) { return std::array<int, 3>{e.o, e.p, e.q}; };
  std::vector<TensorEntry> want = ex.expected;
  std::sort(want.begin(), want.end(),
            [&](const TensorEntry& a, const TensorEntry& b) { return key(a) < key(b); });
  const bool match =
      live.size() == want.size() &&
      std::equal(live.begin(), live.end(), want.begin(), [&](const auto& a, const auto& b) {
        return key(a) == key(b) && a.value == b.value;
      });
  if (!match) {
    throw ArgumentError("example '" + ex.name + "': pinned fixture disagrees with recomputation");
  }
}

}  // namespace

NamedExample double_coset_space(const GroupTable& g, const std::set<std::string>& k,
                                std::string name) {
  require_subgroup(g, k);
  NamedExample ex;
  ex.name = std::move(name);
  ex.groupoid = group_as_groupoid(g);

  // Coset gK, labeled by its least member.
  auto coset_label = [&](const std::string& a) {
    std::string least = g.prod(a, *k.begin());
    for (const auto& kk : k) least = std::min(least, g.prod(a, kk));
    return least;
  };
  std::set<std::string> labels;
  for (const auto& a : g.elements) labels.insert(coset_label(a));

  const std::string e = g.identity();
  GSpaceData d;
  d.points.assign(labels.begin(), labels.end());
  for (const auto& c : d.points) {
    d.anchor[c] = e;
    for (const auto& a : g.elements) {
      d.action.push_back({a, c, coset_label(g.prod(a, c))});
    }
  }
  ex.space = MeasuredGSpace::make(FiniteGSpace::make(ex.groupoid, d), {});
  return ex;
}

NamedExample hecke_pair(const GroupTable& g, const std::set<std::string>& k, std::string name) {
  return double_coset_space(g, k, std::move(name));
}

NamedExample subgroupoid_quotient(GroupoidPtr g, const std::set<std::string>& k,
                                  std::string name) {
  if (!wide_subgroupoid_check(*g, k)) {
    ValidationReport report;
    report.add("wide subgroupoid");
    throw ValidationError("not a wide subgroupoid", std::move(report));
  }
  NamedExample ex;
  ex.name = std::move(name);
  ex.groupoid = g;

  // Class γK = {γ∘κ : κ ∈ K composable}, labeled by its least member.
  std::vector<int> ks;
  for (const auto& kn : k) ks.push_back(g->arrow_index(kn));
  auto class_label = [&](int a) {
    int least = a;
    for (int kk : ks) {
      if (g->composable(a, kk)) least = std::min(least, g->compose(a, kk));
    }
    return g->arrow_name(least);
  };
  std::set<std::string> labels;
  for (int a = 0; a < g->arrow_count(); ++a) labels.insert(class_label(a));

  GSpaceData d;
  d.points.assign(labels.begin(), labels.end());
  for (const auto& c : d.points) {
    const int ci = g->arrow_index(c);
    d.anchor[c] = g->arrow_name(g->range(ci));
    for (int a = 0; a < g->arrow_count(); ++a) {
      if (!g->composable(a, ci)) continue;
      d.action.push_back({g->arrow_name(a), c, class_label(g->compose(a, ci))});
    }
  }
  ex.space = MeasuredGSpace::make(FiniteGSpace::make(ex.groupoid, d), {});
  return ex;
}

const std::vector<std::string>& shipped_example_names() {
  static const std::vector<std::string> names = {"point", "z2-free", "z2-swap", "s3-dcoset",
                                                 "z4-normal"};
  return names;
}

NamedExample shipped_example(const std::string& name) {
  NamedExample ex;
  if (name == "point") {
    ex = double_coset_space(cyclic_group(1), {"0"}, name);
    ex.expected = {{0, 0, 0, Rational(1)}};
  } else if (name == "z2-free") {
    ex = double_coset_space(z2_table(), {"e"}, name);
    // Orbits 0 = [e,e], 1 = [e,s]: the Z/2 group algebra.
    ex.expected = {{0, 0, 0, Rational(1)},
                   {0, 1, 1, Rational(1)},
                   {1, 0, 1, Rational(1)},
                   {1, 1, 0, Rational(1)}};
  } else if (name == "z2-swap") {
    std::map<std::pair<std::string, std::string>, std::string> swap = {
        {{"e", "a"}, "a"}, {{"e", "b"}, "b"}, {{"s", "a"}, "b"}, {{"s", "b"}, "a"}};
    GroupoidPtr g = transformation_groupoid(z2_table(), {"a", "b"}, swap);
    std::set<std::string> units;
    for (int u : g->units()) units.insert(g->arrow_name(u));
    ex = subgroupoid_quotient(g, units, name);
    // X = G is free; orbits 0=[(e,a),(e,a)], 1=[(e,a),(s,b)], 2=[(e,b),(e,b)],
    // 3=[(e,b),(s,a)] correspond to the arrows (e,a),(s,b),(e,b),(s,a) and the
    // tensor is the composition table.
    ex.expected = {{0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 2, 1, Rational(1)},
                   {1, 3, 0, Rational(1)}, {2, 2, 2, Rational(1)}, {2, 3, 3, Rational(1)},
                   {3, 0, 3, Rational(1)}, {3, 1, 2, Rational(1)}};
  } else if (name == "s3-dcoset") {
    ex = double_coset_space(symmetric3(), {"e", "(12)"}, name);
    // Orbits 0 = diagonal O_e, 1 = off-diagonal O_a; the degree-2 Hecke
    // relation δ_a ∗ δ_a = 2·δ_e + δ_a.
    ex.expected = {{0, 0, 0, Rational(1)},
                   {0, 1, 1, Rational(1)},
                   {1, 0, 1, Rational(1)},
                   {1, 1, 0, Rational(2)},
                   {1, 1, 1, Rational(1)}};
  } else if (name == "z4-normal") {
    ex = hecke_pair(cyclic_group(4), {"0", "2"}, name);
    // Normal subgroup: the quotient group algebra of Z/2.
    ex.expected = {{0, 0, 0, Rational(1)},
                   {0, 1, 1, Rational(1)},
                   {1, 0, 1, Rational(1)},
                   {1, 1, 0, Rational(1)}};
  } else {
    throw ArgumentError("unknown example '" + name + "'");
  }
  check_fixture(ex);
  return ex;
}

}  // namespace hgc
