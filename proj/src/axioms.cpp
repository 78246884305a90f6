#include "axioms.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "category.hpp"
#include "error.hpp"
#include "hypergroupoid.hpp"
#include "randgen.hpp"
#include "representations.hpp"

namespace hgc {

namespace {

// Everything a trial's properties look at; all randomness happens here so the
// draw order is independent of which properties run.
struct TrialData {
  RandomContext ctx;
  MeasuredPtr a, b, c;
  OrbitPtr os_ab, os_bc, os_ca, os_aa;
  Arrow f, g, h;  // (a,b), (b,c), (c,a)
  Arrow p, q;     // both on (a,a)
  SectionVector xi, eta, zeta_c, eta_b;
  GroupoidFunction h1, h2;
  std::optional<HypergroupoidTable> tensor;      // built when ≤ 12 orbits
  std::optional<Arrow> unit;                     // searched when ≤ 9 orbits
  bool unit_searched = false;
};

TrialData make_trial(Rng& rng) {
  TrialData t;
  t.ctx = random_context(rng);
  t.a = t.ctx.spaces[0];
  t.b = t.ctx.spaces[1];
  t.c = t.ctx.spaces[2];
  t.os_ab = OrbitSpace::make(t.a, t.b);
  t.os_bc = OrbitSpace::make(t.b, t.c);
  t.os_ca = OrbitSpace::make(t.c, t.a);
  t.os_aa = OrbitSpace::make(t.a, t.a);
  t.f = random_arrow(rng, t.os_ab);
  t.g = random_arrow(rng, t.os_bc);
  t.h = random_arrow(rng, t.os_ca);
  t.p = random_arrow(rng, t.os_aa);
  t.q = random_arrow(rng, t.os_aa);
  t.xi = random_section(rng, t.a);
  t.eta = random_section(rng, t.a);
  t.zeta_c = random_section(rng, t.c);
  t.eta_b = random_section(rng, t.b);
  t.h1 = random_function(rng, t.ctx.groupoid);
  t.h2 = random_function(rng, t.ctx.groupoid);
  if (t.os_aa->orbit_count() <= 12) t.tensor = build_hypergroupoid(t.a);
  if (t.os_aa->orbit_count() <= 9) {
    t.unit = find_unit(t.a);
    t.unit_searched = true;
  }
  return t;
}

using Check = std::function<std::optional<std::string>(const TrialData&)>;

struct Property {
  std::string name;
  Check check;  // nullopt = pass; a message = failure; "SKIP" sentinel unused
  // Applicability gate; property counts a run only when this returns true.
  std::function<bool(const TrialData&)> applies = [](const TrialData&) { return true; };
};

std::string describe_pair(const OrbitSpace& os, int x, int y) {
  return os.left().space().point_name(x) + "|" + os.right().space().point_name(y);
}

std::optional<std::string> check_close(double got, double want, double tol,
                                       const char* label) {
  if (std::abs(got - want) <= tol) return std::nullopt;
  std::ostringstream os;
  os << label << ": " << got << " vs " << want;
  return os.str();
}

std::vector<Property> property_list() {
  std::vector<Property> props;
  auto add = [&](std::string name, Check check,
                 std::function<bool(const TrialData&)> applies = nullptr) {
    Property p;
    p.name = std::move(name);
    p.check = std::move(check);
    if (applies) p.applies = std::move(applies);
    props.push_back(std::move(p));
  };

  add("convolve-associative", [](const TrialData& t) -> std::optional<std::string> {
    const Arrow lhs = convolve(convolve(t.f, t.g), t.h);
    const Arrow rhs = convolve(t.f, convolve(t.g, t.h));
    if (!arrow_equal(lhs, rhs)) return "(f*g)*h != f*(g*h)";
    return std::nullopt;
  });

  add("involution-anti-multiplicative", [](const TrialData& t) -> std::optional<std::string> {
    const Arrow lhs = involute(convolve(t.f, t.g));
    const Arrow rhs = convolve(involute(t.g), involute(t.f));
    if (!arrow_equal(lhs, rhs)) return "(f*g)^* != g^* * f^*";
    return std::nullopt;
  });

  add("involution-involutive", [](const TrialData& t) -> std::optional<std::string> {
    if (!arrow_equal(involute(involute(t.f)), t.f)) return "f^** != f";
    return std::nullopt;
  });

  add("convolve-representative-independence",
      [](const TrialData& t) -> std::optional<std::string> {
        const Arrow prod = convolve(t.f, t.g);
        for (int o = 0; o < prod.orbits->orbit_count(); ++o) {
          const auto it = prod.values.find(o);
          const Scalar want = it == prod.values.end() ? Scalar::zero() : it->second;
          for (const auto& [x, z] : prod.orbits->members(o)) {
            if (convolve_at_pair(t.f, t.g, x, z) != want) {
              return "value differs at member " + describe_pair(*prod.orbits, x, z);
            }
          }
        }
        return std::nullopt;
      });

  add("inner-space-representative-independence",
      [](const TrialData& t) -> std::optional<std::string> {
        const Arrow ip = inner_space(t.xi, t.eta);
        const FiniteGroupoid& g = t.a->groupoid();
        const FiniteGSpace& X = t.a->space();
        for (int o = 0; o < ip.orbits->orbit_count(); ++o) {
          const auto it = ip.values.find(o);
          const Scalar want = it == ip.values.end() ? Scalar::zero() : it->second;
          for (const auto& [x, y] : ip.orbits->members(o)) {
            Scalar sum = Scalar::zero();
            for (int gamma = 0; gamma < g.arrow_count(); ++gamma) {
              if (g.range(gamma) != X.anchor(x)) continue;
              const int inv = g.inverse(gamma);
              sum += t.xi.entries[X.act(inv, x)].conj() * t.eta.entries[X.act(inv, y)] *
                     Scalar{g.haar(gamma), Rational(0)};
            }
            if (sum != want) {
              return "inner product differs at member " + describe_pair(*ip.orbits, x, y);
            }
          }
        }
        return std::nullopt;
      });

  add("i-norm-star", [](const TrialData& t) -> std::optional<std::string> {
    return check_close(i_norm(involute(t.f)), i_norm(t.f), 1e-9, "i_norm(f^*) vs i_norm(f)");
  });

  add("i-norm-submultiplicative", [](const TrialData& t) -> std::optional<std::string> {
    const double prod = i_norm(convolve(t.f, t.g));
    const double bound = i_norm(t.f) * i_norm(t.g) + 1e-9;
    if (prod > bound) {
      std::ostringstream os;
      os << "i_norm(f*g) = " << prod << " exceeds " << bound;
      return os.str();
    }
    return std::nullopt;
  });

  add("fiber-sum-invariance", [](const TrialData& t) -> std::optional<std::string> {
    const FiniteGroupoid& g = t.a->groupoid();
    const FiniteGSpace& X = t.a->space();
    for (int x = 0; x < X.point_count(); ++x) {
      const Scalar base = fiber_sum(t.f, x);
      for (int gamma = 0; gamma < g.arrow_count(); ++gamma) {
        const int gx = X.act(gamma, x);
        if (gx < 0) continue;
        if (fiber_sum(t.f, gx) != base) {
          return "fiber sum moved at " + X.point_name(x) + " under " + g.arrow_name(gamma);
        }
      }
    }
    return std::nullopt;
  });

  add("module-identity", [](const TrialData& t) -> std::optional<std::string> {
    const Arrow lhs = inner_space(t.xi, right_action(t.eta, t.f));
    const Arrow rhs = convolve(inner_space(t.xi, t.eta), t.f);
    if (!arrow_equal(lhs, rhs)) return "<xi, eta.f> != <xi,eta> * f";
    return std::nullopt;
  });

  add("linking-identity", [](const TrialData& t) -> std::optional<std::string> {
    const SectionVector lhs = left_action(inner_groupoid(t.xi, t.eta), t.zeta_c);
    const SectionVector rhs = right_action(t.xi, inner_space(t.eta, t.zeta_c));
    if (!section_equal(lhs, rhs)) return "<<xi,eta>>.zeta != xi.<eta,zeta>";
    return std::nullopt;
  });

  add("adjoint-identity", [](const TrialData& t) -> std::optional<std::string> {
    const Scalar lhs = weighted_dot(right_action(t.xi, t.f), t.eta_b);
    const Scalar rhs = weighted_dot(t.xi, right_action(t.eta_b, involute(t.f)));
    if (lhs != rhs) return "(xi.f, eta)_beta != (xi, eta.f^*)_alpha";
    return std::nullopt;
  });

  add("rep-functorial", [](const TrialData& t) -> std::optional<std::string> {
    const WeightedMatrix lhs = rep_matrix(convolve(t.f, t.g));
    const WeightedMatrix rhs = multiply(rep_matrix(t.g), rep_matrix(t.f));
    if (!matrix_equal(lhs, rhs)) return "rep(f*g) != rep(g)·rep(f)";
    return std::nullopt;
  });

  add("rep-faithful", [](const TrialData& t) -> std::optional<std::string> {
    for (int o = 0; o < t.os_ab->orbit_count(); ++o) {
      if (matrix_is_zero(rep_matrix(delta(t.os_ab, o)))) {
        return "rep kills the basis arrow at orbit " + t.os_ab->key(o);
      }
    }
    return std::nullopt;
  });

  add("norm-bound", [](const TrialData& t) -> std::optional<std::string> {
    const double rn = reduced_norm(t.f);
    const double in = i_norm(t.f) + 1e-9;
    if (rn > in) {
      std::ostringstream os;
      os << "reduced_norm " << rn << " exceeds i_norm " << in;
      return os.str();
    }
    return std::nullopt;
  });

  add("cstar-identity", [](const TrialData& t) -> std::optional<std::string> {
    const double rn = reduced_norm(t.f);
    const double prod = reduced_norm(convolve(involute(t.f), t.f));
    const double tol = 1e-6 * std::max(1.0, rn * rn);
    return check_close(prod, rn * rn, tol, "||f^* f|| vs ||f||^2");
  });

  add("involution-isometry", [](const TrialData& t) -> std::optional<std::string> {
    return check_close(reduced_norm(involute(t.f)), reduced_norm(t.f), 1e-9,
                       "||f^*|| vs ||f||");
  });

  add("left-module", [](const TrialData& t) -> std::optional<std::string> {
    const SectionVector lhs = left_action(t.h1, left_action(t.h2, t.xi));
    const SectionVector rhs = left_action(groupoid_convolve(t.h1, t.h2), t.xi);
    if (!section_equal(lhs, rhs)) return "h1(h2 xi) != (h1*h2) xi";
    return std::nullopt;
  });

  add("gram-positive", [](const TrialData& t) -> std::optional<std::string> {
    if (!is_positive(inner_space(t.xi, t.xi))) return "<xi,xi> not positive";
    return std::nullopt;
  });

  add("tensor-expand",
      [](const TrialData& t) -> std::optional<std::string> {
        const Arrow lhs = expand_through_table(*t.tensor, t.p, t.q);
        const Arrow rhs = convolve_into(t.os_aa, t.p, t.q);
        if (!arrow_equal(lhs, rhs)) return "tensor expansion differs from convolution";
        return std::nullopt;
      },
      [](const TrialData& t) { return t.tensor.has_value(); });

  add("tensor-nonnegative",
      [](const TrialData& t) -> std::optional<std::string> {
        const auto& tab = *t.tensor;
        for (int o = 0; o < tab.orbit_count(); ++o) {
          for (int p = 0; p < tab.orbit_count(); ++p) {
            for (int q = 0; q < tab.orbit_count(); ++q) {
              if (tab.at(o, p, q) < 0) return "negative structure constant";
            }
          }
        }
        return std::nullopt;
      },
      [](const TrialData& t) { return t.tensor.has_value(); });

  add("tensor-star",
      [](const TrialData& t) -> std::optional<std::string> {
        const auto& tab = *t.tensor;
        for (int o = 0; o < tab.orbit_count(); ++o) {
          for (int p = 0; p < tab.orbit_count(); ++p) {
            for (int q = 0; q < tab.orbit_count(); ++q) {
              if (tab.at(tab.star[p], tab.star[o], tab.star[q]) != tab.at(o, p, q)) {
                return "tensor does not respect the involution";
              }
            }
          }
        }
        return std::nullopt;
      },
      [](const TrialData& t) { return t.tensor.has_value(); });

  add("tensor-associative",
      [](const TrialData& t) -> std::optional<std::string> {
        const auto& tab = *t.tensor;
        const int n = tab.orbit_count();
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
              for (int d = 0; d < n; ++d) {
                Rational lhs(0), rhs(0);
                for (int e = 0; e < n; ++e) {
                  lhs += tab.at(a, b, e) * tab.at(e, c, d);
                  rhs += tab.at(b, c, e) * tab.at(a, e, d);
                }
                if (lhs != rhs) return "tensor associativity broke";
              }
            }
          }
        }
        return std::nullopt;
      },
      [](const TrialData& t) { return t.tensor && t.tensor->orbit_count() <= 9; });

  add("free-groupoid-like",
      [](const TrialData& t) -> std::optional<std::string> {
        const GroupoidLikeResult r = is_groupoid_like(*t.tensor);
        if (!r.groupoid_like) {
          return "free action but product of orbits " + std::to_string(r.o) + "," +
                 std::to_string(r.p) + " has several targets";
        }
        return std::nullopt;
      },
      [](const TrialData& t) { return t.tensor && is_free(t.a->space()).free; });

  add("unit-laws",
      [](const TrialData& t) -> std::optional<std::string> {
        const Arrow& e = *t.unit;
        if (!arrow_equal(involute(e), e)) return "unit is not self-adjoint";
        if (!arrow_equal(convolve_into(t.os_aa, e, t.p), t.p)) return "e*p != p";
        if (!arrow_equal(convolve_into(t.os_aa, t.p, e), t.p)) return "p*e != p";
        if (is_positive(scale_arrow(Scalar(-1), e))) return "-e should not be positive";
        return std::nullopt;
      },
      [](const TrialData& t) { return t.unit.has_value(); });

  add("measure-descent", [](const TrialData& t) -> std::optional<std::string> {
    const PointOrbits po = point_orbits(t.a->space());
    for (const auto& orbit : po.orbits) {
      for (int p : orbit) {
        if (t.a->weight(p) != t.a->weight(orbit.front())) {
          return "weights not constant on the orbit of " + t.a->space().point_name(orbit.front());
        }
      }
    }
    return std::nullopt;
  });

  add("validators-roundtrip", [](const TrialData& t) -> std::optional<std::string> {
    if (!FiniteGroupoid::validate(t.ctx.groupoid->data()).ok()) {
      return "groupoid snapshot fails validation";
    }
    const GSpaceData d = t.a->data();
    if (!FiniteGSpace::validate(*t.ctx.groupoid, d).ok()) {
      return "space snapshot fails validation";
    }
    if (!MeasuredGSpace::validate(t.a->space(), d.weights).ok()) {
      return "weights snapshot fails validation";
    }
    return std::nullopt;
  });

  add("translation-bijective", [](const TrialData& t) -> std::optional<std::string> {
    const FiniteGroupoid& g = t.a->groupoid();
    const FiniteGSpace& X = t.a->space();
    for (int gamma = 0; gamma < g.arrow_count(); ++gamma) {
      std::set<int> image;
      int domain = 0;
      for (int x = 0; x < X.point_count(); ++x) {
        const int gx = X.act(gamma, x);
        if (gx < 0) continue;
        ++domain;
        if (!image.insert(gx).second) return "translation not injective at " + g.arrow_name(gamma);
        if (X.anchor(gx) != g.range(gamma)) return "image leaves the range fiber";
      }
      (void)domain;
    }
    return std::nullopt;
  });

  add("orbit-partition", [](const TrialData& t) -> std::optional<std::string> {
    int counted = 0;
    for (int o = 0; o < t.os_ab->orbit_count(); ++o) {
      for (const auto& [x, y] : t.os_ab->members(o)) {
        if (t.os_ab->orbit_of(x, y) != o) return "member maps to a different orbit";
        ++counted;
      }
    }
    if (counted != t.os_ab->pair_count()) return "orbits do not partition the fibered pairs";
    return std::nullopt;
  });

  add("self-identification", [](const TrialData& t) -> std::optional<std::string> {
    const SelfIdentification si = self_identification(t.a);
    for (std::size_t o = 0; o < si.to_point.size(); ++o) {
      if (si.to_orbit[si.to_point[o]] != static_cast<int>(o)) {
        return "orbit-to-point map is not a bijection";
      }
    }
    return std::nullopt;
  });

  return props;
}

}  // namespace

bool AxiomsRun::ok() const {
  for (const auto& p : properties) {
    if (p.failed > 0) return false;
  }
  return true;
}

std::string AxiomsRun::transcript() const {
  std::ostringstream os;
  os << "seed " << seed << "\n";
  os << "trials " << trials << "\n";
  for (const auto& p : properties) {
    os << "prop " << p.name << ": ran " << p.ran << ", failed " << p.failed;
    if (!p.first_failure.empty()) os << "  [" << p.first_failure << "]";
    os << "\n";
  }
  os << "result " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

AxiomsRun run_axioms(std::uint64_t seed, int trials) {
  if (trials < 0) throw ArgumentError("trials must be nonnegative");
  AxiomsRun run;
  run.seed = seed;
  run.trials = trials;

  const std::vector<Property> props = property_list();
  run.properties.resize(props.size());
  for (std::size_t i = 0; i < props.size(); ++i) run.properties[i].name = props[i].name;

  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const TrialData t = make_trial(rng);
    for (std::size_t i = 0; i < props.size(); ++i) {
      if (!props[i].applies(t)) continue;
      PropertyResult& r = run.properties[i];
      ++r.ran;
      std::optional<std::string> failure;
      try {
        failure = props[i].check(t);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        ++r.failed;
        if (r.first_failure.empty()) {
          r.first_failure = "trial " + std::to_string(trial) + ": " + *failure;
        }
      }
    }
  }
  return run;
}

}  // namespace hgc
