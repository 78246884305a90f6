#include "hypergroupoid.hpp"

#include "error.hpp"

namespace hgc {

HypergroupoidTable build_hypergroupoid(const MeasuredPtr& alpha) {
  HypergroupoidTable t;
  t.base = alpha;
  t.orbits = OrbitSpace::make(alpha, alpha);
  const int n = t.orbits->orbit_count();

  t.constants.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (int o = 0; o < n; ++o) {
    for (int p = 0; p < n; ++p) {
      const Arrow prod = convolve_into(t.orbits, delta(t.orbits, o), delta(t.orbits, p));
      for (const auto& [q, v] : prod.values) {
        if (!v.is_real() || v.re < 0) {
          throw ArgumentError("structure constant is not a nonnegative rational");
        }
        t.constants[o][p][q] = v.re;
      }
    }
  }

  t.star.resize(n);
  for (int o = 0; o < n; ++o) {
    const auto& [x, y] = t.orbits->representative(o);
    t.star[o] = t.orbits->orbit_of(y, x);
  }
  return t;
}

Arrow expand_through_table(const HypergroupoidTable& t, const Arrow& f, const Arrow& g) {
  if (!f.orbits->same_context(*t.orbits) || !g.orbits->same_context(*t.orbits)) {
    throw ArgumentError("arrows do not live on the table's orbit space");
  }
  std::map<int, Scalar> values;
  for (const auto& [o, a] : f.values) {
    for (const auto& [p, b] : g.values) {
      const Scalar ab = a * b;
      for (int q = 0; q < t.orbit_count(); ++q) {
        const Rational& c = t.at(o, p, q);
        if (c == 0) continue;
        auto [it, fresh] = values.emplace(q, Scalar::zero());
        it->second += ab * Scalar{c, Rational(0)};
        (void)fresh;
      }
    }
  }
  return make_arrow(t.orbits, std::move(values));
}

GroupoidLikeResult is_groupoid_like(const HypergroupoidTable& t) {
  for (int o = 0; o < t.orbit_count(); ++o) {
    for (int p = 0; p < t.orbit_count(); ++p) {
      int support = 0;
      for (int q = 0; q < t.orbit_count(); ++q) {
        if (t.at(o, p, q) != 0) ++support;
      }
      if (support > 1) return {false, o, p};
    }
  }
  return {};
}

bool detect_hypergroup(const HypergroupoidTable& t) {
  return point_orbits(t.base->space()).orbits.size() == 1;
}

}  // namespace hgc
