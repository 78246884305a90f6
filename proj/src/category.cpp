#include "category.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace hgc {

Arrow make_arrow(OrbitPtr orbits, std::map<int, Scalar> values) {
  for (auto it = values.begin(); it != values.end();) {
    if (it->first < 0 || it->first >= orbits->orbit_count()) {
      throw ArgumentError("orbit index out of range");
    }
    it = it->second.is_zero() ? values.erase(it) : std::next(it);
  }
  return {std::move(orbits), std::move(values)};
}

Arrow delta(OrbitPtr orbits, int orbit) {
  return make_arrow(std::move(orbits), {{orbit, Scalar::one()}});
}

Arrow zero_arrow(OrbitPtr orbits) { return {std::move(orbits), {}}; }

bool arrow_equal(const Arrow& f, const Arrow& g) {
  return f.orbits->same_context(*g.orbits) && f.values == g.values;
}

namespace {

Scalar value_at(const Arrow& f, int x, int y) {
  const int o = f.orbits->orbit_of(x, y);
  if (o < 0) return Scalar::zero();
  const auto it = f.values.find(o);
  return it == f.values.end() ? Scalar::zero() : it->second;
}

void require_middle_match(const Arrow& f, const Arrow& g) {
  if (!(f.src() == g.dst())) {
    throw ArgumentError("non-composable arrows: middle objects differ");
  }
}

}  // namespace

Scalar convolve_at_pair(const Arrow& f, const Arrow& g, int x, int z) {
  require_middle_match(f, g);
  const MeasuredGSpace& mid = f.src();
  const FiniteGSpace& Y = mid.space();
  const int fiber = f.dst().space().anchor(x);
  Scalar sum = Scalar::zero();
  for (int y = 0; y < Y.point_count(); ++y) {
    if (Y.anchor(y) != fiber) continue;
    Scalar term = value_at(f, x, y);
    if (term.is_zero()) continue;
    term *= value_at(g, y, z);
    if (term.is_zero()) continue;
    term *= Scalar{mid.weight(y), Rational(0)};
    sum += term;
  }
  return sum;
}

Arrow convolve_into(OrbitPtr out, const Arrow& f, const Arrow& g) {
  require_middle_match(f, g);
  if (!(out->left() == f.dst()) || !(out->right() == g.src())) {
    throw ArgumentError("output orbit space does not match the outer objects");
  }
  std::map<int, Scalar> values;
  for (int o = 0; o < out->orbit_count(); ++o) {
    const auto& [x, z] = out->representative(o);
    Scalar v = convolve_at_pair(f, g, x, z);
    if (!v.is_zero()) values.emplace(o, std::move(v));
  }
  return {std::move(out), std::move(values)};
}

Arrow convolve(const Arrow& f, const Arrow& g) {
  return convolve_into(OrbitSpace::make(f.orbits->left_ptr(), g.orbits->right_ptr()), f, g);
}

Arrow involute(const Arrow& f) {
  auto out = OrbitSpace::make(f.orbits->right_ptr(), f.orbits->left_ptr());
  std::map<int, Scalar> values;
  for (const auto& [o, v] : f.values) {
    const auto& [x, y] = f.orbits->representative(o);
    values.emplace(out->orbit_of(y, x), v.conj());
  }
  return {std::move(out), std::move(values)};
}

Arrow linear_combine(const Scalar& c1, const Arrow& f1, const Scalar& c2, const Arrow& f2) {
  if (!f1.orbits->same_context(*f2.orbits)) {
    throw ArgumentError("arrows live in different hom spaces");
  }
  std::map<int, Scalar> values;
  for (const auto& [o, v] : f1.values) values[o] = c1 * v;
  for (const auto& [o, v] : f2.values) {
    auto [it, fresh] = values.emplace(o, Scalar::zero());
    it->second += c2 * v;
    (void)fresh;
  }
  for (auto it = values.begin(); it != values.end();) {
    it = it->second.is_zero() ? values.erase(it) : std::next(it);
  }
  return {f1.orbits, std::move(values)};
}

Arrow scale_arrow(const Scalar& c, const Arrow& f) {
  return linear_combine(c, f, Scalar::zero(), zero_arrow(f.orbits));
}

Scalar fiber_sum(const Arrow& f, int x) {
  const FiniteGSpace& X = f.dst().space();
  if (x < 0 || x >= X.point_count()) throw ArgumentError("unknown point");
  const MeasuredGSpace& beta = f.src();
  const int fiber = X.anchor(x);
  Scalar sum = Scalar::zero();
  for (int y = 0; y < beta.space().point_count(); ++y) {
    if (beta.space().anchor(y) != fiber) continue;
    Scalar term = value_at(f, x, y);
    term *= Scalar{beta.weight(y), Rational(0)};
    sum += term;
  }
  return sum;
}

double i_norm(const Arrow& f) {
  const FiniteGSpace& X = f.dst().space();
  const FiniteGSpace& Y = f.src().space();
  const bool all_real = std::all_of(f.values.begin(), f.values.end(),
                                    [](const auto& kv) { return kv.second.is_real(); });

  if (all_real) {
    Rational best(0);
    for (int x = 0; x < X.point_count(); ++x) {
      Rational row(0);
      for (int y = 0; y < Y.point_count(); ++y) {
        const Scalar v = value_at(f, x, y);
        row += boost::multiprecision::abs(v.re) * f.src().weight(y);
      }
      best = std::max(best, row);
    }
    for (int y = 0; y < Y.point_count(); ++y) {
      Rational col(0);
      for (int x = 0; x < X.point_count(); ++x) {
        const Scalar v = value_at(f, x, y);
        col += boost::multiprecision::abs(v.re) * f.dst().weight(x);
      }
      best = std::max(best, col);
    }
    return to_double(best);
  }

  double best = 0;
  for (int x = 0; x < X.point_count(); ++x) {
    double row = 0;
    for (int y = 0; y < Y.point_count(); ++y) {
      row += value_at(f, x, y).abs() * to_double(f.src().weight(y));
    }
    best = std::max(best, row);
  }
  for (int y = 0; y < Y.point_count(); ++y) {
    double col = 0;
    for (int x = 0; x < X.point_count(); ++x) {
      col += value_at(f, x, y).abs() * to_double(f.dst().weight(x));
    }
    best = std::max(best, col);
  }
  return best;
}

std::optional<Arrow> find_unit(const MeasuredPtr& alpha) {
  auto orbits = OrbitSpace::make(alpha, alpha);
  const int n = orbits->orbit_count();

  // products[p][o] = δ_p ∗ δ_o expanded over the orbit basis
  std::vector<std::vector<Arrow>> products(n);
  for (int p = 0; p < n; ++p) {
    for (int o = 0; o < n; ++o) {
      products[p].push_back(convolve_into(orbits, delta(orbits, p), delta(orbits, o)));
    }
  }

  // Left-unit equations: Σ_p e_p · (δ_p ∗ δ_o)[q] = [o == q]
  std::vector<ScalarRow> a;
  ScalarRow b;
  for (int o = 0; o < n; ++o) {
    for (int q = 0; q < n; ++q) {
      ScalarRow row(n, Scalar::zero());
      for (int p = 0; p < n; ++p) {
        const auto it = products[p][o].values.find(q);
        if (it != products[p][o].values.end()) row[p] = it->second;
      }
      a.push_back(std::move(row));
      b.push_back(o == q ? Scalar::one() : Scalar::zero());
    }
  }
  const SolveResult sol = solve_linear(std::move(a), std::move(b));
  if (!sol.consistent) return std::nullopt;

  std::map<int, Scalar> values;
  for (int p = 0; p < n; ++p) {
    if (!sol.solution[p].is_zero()) values.emplace(p, sol.solution[p]);
  }
  Arrow e{orbits, std::move(values)};

  // The system enforced e as a left unit; keep it only if also a right unit.
  for (int o = 0; o < n; ++o) {
    const Arrow d = delta(orbits, o);
    if (!arrow_equal(convolve_into(orbits, d, e), d)) return std::nullopt;
    if (!arrow_equal(convolve_into(orbits, e, d), d)) return std::nullopt;
  }
  return e;
}

}  // namespace hgc
