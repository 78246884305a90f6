#include "randgen.hpp"

#include "error.hpp"
#include "examples.hpp"

namespace hgc {

int Rng::below(int n) {
  if (n <= 0) throw ArgumentError("empty draw");
  return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
}

bool Rng::chance(int percent) { return below(100) < percent; }

Rational Rng::rational() {
  const int num = below(11) - 5;
  const int den = 1 + below(4);
  return Rational(num, den);
}

Rational Rng::positive_rational() {
  const int num = 1 + below(5);
  const int den = 1 + below(4);
  return Rational(num, den);
}

Scalar Rng::scalar(bool allow_complex) {
  Scalar s{rational(), Rational(0)};
  if (allow_complex && chance(40)) s.im = rational();
  return s;
}

const MeasuredPtr& RandomContext::space(Rng& rng) const {
  return spaces[rng.below(static_cast<int>(spaces.size()))];
}

namespace {

// Rebuilds the groupoid with Haar weights drawn per unit (left invariance
// forces haar(γ) = haar(source γ)).
GroupoidPtr with_random_haar(Rng& rng, const GroupoidPtr& g) {
  GroupoidData d = g->data();
  std::map<std::string, Rational> unit_weight;
  for (int u : g->units()) unit_weight[g->arrow_name(u)] = rng.positive_rational();
  for (int a = 0; a < g->arrow_count(); ++a) {
    d.haar[g->arrow_name(a)] = unit_weight.at(g->arrow_name(g->source(a)));
  }
  return FiniteGroupoid::make(d);
}

const std::vector<std::set<std::string>>& subgroups_of(const GroupTable& t) {
  static const std::vector<std::set<std::string>> z2 = {{"e"}, {"e", "s"}};
  static const std::vector<std::set<std::string>> s3 = {
      {"e"},
      {"e", "(12)"},
      {"e", "(13)"},
      {"e", "(23)"},
      {"e", "(123)", "(132)"},
      {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}};
  static std::map<int, std::vector<std::set<std::string>>> cyclic;

  if (t.elements.front() == "e") {
    return t.elements.size() == 2 ? z2 : s3;
  }
  const int n = static_cast<int>(t.elements.size());
  auto [it, fresh] = cyclic.try_emplace(n);
  if (fresh) {
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      std::set<std::string> k;
      for (int i = 0; i < n; i += d) k.insert(std::to_string(i));
      it->second.push_back(std::move(k));
    }
  }
  return it->second;
}

GroupTable catalog_group(Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return cyclic_group(1 + rng.below(6));
    case 1:
      return z2_table();
    case 2:
      return symmetric3();
    default:
      return cyclic_group(1 + rng.below(4));
  }
}

GroupoidPtr catalog_groupoid(Rng& rng) {
  switch (rng.below(3)) {
    case 0: {
      const int n = 2 + rng.below(2);
      std::vector<std::string> pts;
      for (int i = 0; i < n; ++i) pts.push_back(std::string(1, static_cast<char>('p' + i)));
      return pair_groupoid(pts);
    }
    case 1: {
      // Z/2 swapping {a,b}, with optional fixed point c.
      std::vector<std::string> pts = {"a", "b"};
      std::map<std::pair<std::string, std::string>, std::string> act = {
          {{"e", "a"}, "a"}, {{"e", "b"}, "b"}, {{"s", "a"}, "b"}, {{"s", "b"}, "a"}};
      if (rng.chance(50)) {
        pts.push_back("c");
        act[{"e", "c"}] = "c";
        act[{"s", "c"}] = "c";
      }
      return transformation_groupoid(z2_table(), pts, act);
    }
    default: {
      // Cyclic rotation of its own element set.
      const int n = 2 + rng.below(3);
      const GroupTable t = cyclic_group(n);
      std::map<std::pair<std::string, std::string>, std::string> act;
      for (int g = 0; g < n; ++g) {
        for (int y = 0; y < n; ++y) {
          act[{t.elements[g], t.elements[y]}] = t.elements[(g + y) % n];
        }
      }
      return transformation_groupoid(t, t.elements, act);
    }
  }
}

}  // namespace

MeasuredPtr reweight_randomly(Rng& rng, const MeasuredPtr& space) {
  const PointOrbits orbits = point_orbits(space->space());
  std::map<std::string, Rational> weights;
  for (const auto& orbit : orbits.orbits) {
    const Rational w = rng.positive_rational();
    for (int p : orbit) weights[space->space().point_name(p)] = w;
  }
  return MeasuredGSpace::make(space->space_ptr(), weights);
}

RandomContext random_context(Rng& rng) {
  RandomContext ctx;
  std::vector<MeasuredPtr> base;
  if (rng.chance(60)) {
    const GroupTable t = catalog_group(rng);
    const auto& subs = subgroups_of(t);
    ctx.groupoid = group_as_groupoid(t);
    if (rng.chance(50)) ctx.groupoid = with_random_haar(rng, ctx.groupoid);
    // Quotients live over the reweighted groupoid via rebuilt examples.
    for (int i = 0; i < 3; ++i) {
      const auto& k = subs[rng.below(static_cast<int>(subs.size()))];
      NamedExample ex = double_coset_space(t, k);
      // Rebuild the space over the (possibly reweighted) shared groupoid.
      const GSpaceData d = ex.space->space().data();
      base.push_back(
          MeasuredGSpace::make(FiniteGSpace::make(ctx.groupoid, d), {}));
    }
  } else {
    ctx.groupoid = catalog_groupoid(rng);
    if (rng.chance(50)) ctx.groupoid = with_random_haar(rng, ctx.groupoid);
    std::set<std::string> units;
    for (int u : ctx.groupoid->units()) units.insert(ctx.groupoid->arrow_name(u));
    std::set<std::string> all(ctx.groupoid->arrow_names().begin(),
                              ctx.groupoid->arrow_names().end());
    for (int i = 0; i < 3; ++i) {
      const auto& k = rng.chance(50) ? units : all;
      NamedExample ex = subgroupoid_quotient(ctx.groupoid, k);
      base.push_back(ex.space);
    }
  }
  for (auto& s : base) {
    ctx.spaces.push_back(rng.chance(60) ? reweight_randomly(rng, s) : s);
  }
  return ctx;
}

Arrow random_arrow(Rng& rng, OrbitPtr orbits, bool allow_complex) {
  std::map<int, Scalar> values;
  for (int o = 0; o < orbits->orbit_count(); ++o) {
    if (rng.chance(55)) values[o] = rng.scalar(allow_complex);
  }
  return make_arrow(std::move(orbits), std::move(values));
}

SectionVector random_section(Rng& rng, MeasuredPtr space, bool allow_complex) {
  std::vector<Scalar> entries(space->space().point_count());
  for (auto& v : entries) v = rng.scalar(allow_complex);
  return make_section(std::move(space), std::move(entries));
}

GroupoidFunction random_function(Rng& rng, GroupoidPtr g, bool allow_complex) {
  std::vector<Scalar> entries(g->arrow_count());
  for (auto& v : entries) v = rng.scalar(allow_complex);
  return make_groupoid_function(std::move(g), std::move(entries));
}

}  // namespace hgc
