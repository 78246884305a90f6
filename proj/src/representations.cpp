#include "representations.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "linalg.hpp"

namespace hgc {

namespace {

Scalar weight_scalar(const Rational& w) { return Scalar{w, Rational(0)}; }

void require_same_space(const MeasuredGSpace& a, const MeasuredGSpace& b, const char* who) {
  if (!(a == b)) throw ArgumentError(std::string(who) + ": measured spaces differ");
}

void require_same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b, const char* who) {
  if (!(a == b)) throw ArgumentError(std::string(who) + ": groupoids differ");
}

}  // namespace

bool SectionVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Scalar& v) { return v.is_zero(); });
}

SectionVector make_section(MeasuredPtr space, std::vector<Scalar> entries) {
  if (static_cast<int>(entries.size()) != space->space().point_count()) {
    throw ArgumentError("section length does not match the point count");
  }
  return {std::move(space), std::move(entries)};
}

SectionVector delta_section(MeasuredPtr space, int point) {
  std::vector<Scalar> entries(space->space().point_count(), Scalar::zero());
  if (point < 0 || point >= static_cast<int>(entries.size())) {
    throw ArgumentError("unknown point");
  }
  entries[point] = Scalar::one();
  return {std::move(space), std::move(entries)};
}

bool section_equal(const SectionVector& a, const SectionVector& b) {
  return *a.space == *b.space && a.entries == b.entries;
}

Scalar weighted_dot(const SectionVector& a, const SectionVector& b) {
  require_same_space(*a.space, *b.space, "weighted_dot");
  Scalar sum = Scalar::zero();
  for (std::size_t x = 0; x < a.entries.size(); ++x) {
    sum += a.entries[x].conj() * b.entries[x] *
           weight_scalar(a.space->weight(static_cast<int>(x)));
  }
  return sum;
}

bool GroupoidFunction::is_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Scalar& v) { return v.is_zero(); });
}

GroupoidFunction make_groupoid_function(GroupoidPtr g, std::vector<Scalar> entries) {
  if (static_cast<int>(entries.size()) != g->arrow_count()) {
    throw ArgumentError("function length does not match the arrow count");
  }
  return {std::move(g), std::move(entries)};
}

GroupoidFunction delta_function(GroupoidPtr g, int arrow) {
  std::vector<Scalar> entries(g->arrow_count(), Scalar::zero());
  if (arrow < 0 || arrow >= static_cast<int>(entries.size())) {
    throw ArgumentError("unknown arrow");
  }
  entries[arrow] = Scalar::one();
  return {std::move(g), std::move(entries)};
}

bool function_equal(const GroupoidFunction& a, const GroupoidFunction& b) {
  return *a.groupoid == *b.groupoid && a.entries == b.entries;
}

GroupoidFunction groupoid_convolve(const GroupoidFunction& h1, const GroupoidFunction& h2) {
  require_same_groupoid(*h1.groupoid, *h2.groupoid, "groupoid_convolve");
  const FiniteGroupoid& g = *h1.groupoid;
  const int n = g.arrow_count();
  std::vector<Scalar> out(n, Scalar::zero());
  for (int gamma = 0; gamma < n; ++gamma) {
    for (int prime = 0; prime < n; ++prime) {
      if (g.range(prime) != g.range(gamma)) continue;
      const int rest = g.compose(g.inverse(prime), gamma);
      Scalar term = h1.entries[prime] * h2.entries[rest];
      if (term.is_zero()) continue;
      out[gamma] += term * weight_scalar(g.haar(prime));
    }
  }
  return {h1.groupoid, std::move(out)};
}

SectionVector right_action(const SectionVector& xi, const Arrow& f) {
  require_same_space(*xi.space, f.dst(), "right_action");
  const FiniteGSpace& X = f.dst().space();
  const FiniteGSpace& Y = f.src().space();
  std::vector<Scalar> out(Y.point_count(), Scalar::zero());
  for (int y = 0; y < Y.point_count(); ++y) {
    for (int x = 0; x < X.point_count(); ++x) {
      const int o = f.orbits->orbit_of(x, y);
      if (o < 0) continue;
      const auto it = f.values.find(o);
      if (it == f.values.end()) continue;
      out[y] += xi.entries[x] * it->second * weight_scalar(f.dst().weight(x));
    }
  }
  return {f.orbits->right_ptr(), std::move(out)};
}

SectionVector left_action(const GroupoidFunction& h, const SectionVector& xi) {
  require_same_groupoid(*h.groupoid, xi.space->groupoid(), "left_action");
  const FiniteGroupoid& g = *h.groupoid;
  const FiniteGSpace& X = xi.space->space();
  std::vector<Scalar> out(X.point_count(), Scalar::zero());
  for (int x = 0; x < X.point_count(); ++x) {
    for (int gamma = 0; gamma < g.arrow_count(); ++gamma) {
      if (g.range(gamma) != X.anchor(x)) continue;
      const Scalar& hv = h.entries[gamma];
      if (hv.is_zero()) continue;
      const int pulled = X.act(g.inverse(gamma), x);
      out[x] += hv * xi.entries[pulled] * weight_scalar(g.haar(gamma));
    }
  }
  return {xi.space, std::move(out)};
}

Arrow inner_space(const SectionVector& xi, const SectionVector& eta) {
  require_same_groupoid(xi.space->groupoid(), eta.space->groupoid(), "inner_space");
  auto orbits = OrbitSpace::make(xi.space, eta.space);
  const FiniteGroupoid& g = xi.space->groupoid();
  const FiniteGSpace& X = xi.space->space();
  const FiniteGSpace& Y = eta.space->space();
  std::map<int, Scalar> values;
  for (int o = 0; o < orbits->orbit_count(); ++o) {
    const auto& [x, y] = orbits->representative(o);
    Scalar sum = Scalar::zero();
    for (int gamma = 0; gamma < g.arrow_count(); ++gamma) {
      if (g.range(gamma) != X.anchor(x)) continue;
      const int inv = g.inverse(gamma);
      Scalar term = xi.entries[X.act(inv, x)].conj() * eta.entries[Y.act(inv, y)];
      if (term.is_zero()) continue;
      sum += term * weight_scalar(g.haar(gamma));
    }
    if (!sum.is_zero()) values.emplace(o, std::move(sum));
  }
  return {std::move(orbits), std::move(values)};
}

GroupoidFunction inner_groupoid(const SectionVector& xi, const SectionVector& eta) {
  require_same_space(*xi.space, *eta.space, "inner_groupoid");
  const FiniteGroupoid& g = xi.space->groupoid();
  const FiniteGSpace& X = xi.space->space();
  std::vector<Scalar> out(g.arrow_count(), Scalar::zero());
  for (int gamma = 0; gamma < g.arrow_count(); ++gamma) {
    const int inv = g.inverse(gamma);
    for (int x = 0; x < X.point_count(); ++x) {
      if (X.anchor(x) != g.range(gamma)) continue;
      Scalar term = xi.entries[x] * eta.entries[X.act(inv, x)].conj();
      if (term.is_zero()) continue;
      out[gamma] += term * weight_scalar(xi.space->weight(x));
    }
  }
  return {xi.space->space().groupoid_ptr(), std::move(out)};
}

WeightedMatrix rep_matrix(const Arrow& f) {
  const FiniteGSpace& X = f.dst().space();
  const FiniteGSpace& Y = f.src().space();
  WeightedMatrix m;
  m.rows = f.orbits->right_ptr();
  m.cols = f.orbits->left_ptr();
  m.entries.assign(Y.point_count(), std::vector<Scalar>(X.point_count(), Scalar::zero()));
  for (const auto& [o, v] : f.values) {
    for (const auto& [x, y] : f.orbits->members(o)) {
      m.entries[y][x] = v * weight_scalar(f.dst().weight(x));
    }
  }
  return m;
}

WeightedMatrix multiply(const WeightedMatrix& a, const WeightedMatrix& b) {
  require_same_space(*a.cols, *b.rows, "matrix product");
  WeightedMatrix m;
  m.rows = a.rows;
  m.cols = b.cols;
  const std::size_t inner = a.entries.empty() ? 0 : a.entries.front().size();
  m.entries.assign(a.entries.size(),
                   std::vector<Scalar>(b.entries.empty() ? 0 : b.entries.front().size(),
                                       Scalar::zero()));
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a.entries[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m.entries[i].size(); ++j) {
        m.entries[i][j] += a.entries[i][k] * b.entries[k][j];
      }
    }
  }
  return m;
}

bool matrix_equal(const WeightedMatrix& a, const WeightedMatrix& b) {
  return *a.rows == *b.rows && *a.cols == *b.cols && a.entries == b.entries;
}

bool matrix_is_zero(const WeightedMatrix& a) {
  for (const auto& row : a.entries) {
    for (const auto& v : row) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

namespace {

// D_rows^{1/2} · M · D_cols^{-1/2}, the matrix of the operator between the
// weighted ℓ² spaces written in orthonormal bases.
Eigen::MatrixXcd normalized_matrix(const WeightedMatrix& m) {
  const int rows = static_cast<int>(m.entries.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m.entries.front().size());
  Eigen::MatrixXcd a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const double ri = std::sqrt(to_double(m.rows->weight(i)));
    for (int j = 0; j < cols; ++j) {
      const double cj = std::sqrt(to_double(m.cols->weight(j)));
      a(i, j) = m.entries[i][j].to_complex() * (ri / cj);
    }
  }
  return a;
}

}  // namespace

double reduced_norm(const Arrow& f) {
  if (f.is_zero()) return 0.0;
  const Eigen::MatrixXcd a = normalized_matrix(rep_matrix(f));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

bool is_positive(const Arrow& f) {
  if (!(f.dst() == f.src())) return false;
  if (!arrow_equal(involute(f), f)) return false;
  const Eigen::MatrixXcd a = normalized_matrix(rep_matrix(f));
  const Eigen::MatrixXcd h = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) return false;
  return eig.eigenvalues().minCoeff() >= -1e-9;
}

namespace {

ScalarRow arrow_coordinates(const Arrow& f, int width) {
  ScalarRow row(width, Scalar::zero());
  for (const auto& [o, v] : f.values) row[o] = v;
  return row;
}

ScalarRow function_coordinates(const GroupoidFunction& h) {
  return h.entries;
}

}  // namespace

std::pair<int, int> fullness_rank(const MeasuredPtr& alpha) {
  auto orbits = OrbitSpace::make(alpha, alpha);
  const int n = orbits->orbit_count();
  RowSpace span(n);
  const int np = alpha->space().point_count();
  for (int x = 0; x < np; ++x) {
    for (int y = 0; y < np; ++y) {
      if (alpha->space().anchor(x) != alpha->space().anchor(y)) continue;
      span.add(arrow_coordinates(inner_space(delta_section(alpha, x), delta_section(alpha, y)), n));
    }
  }
  return {span.rank(), n};
}

bool ideal_check(const MeasuredPtr& alpha) {
  const GroupoidPtr g = alpha->space().groupoid_ptr();
  const int na = g->arrow_count();
  const int np = alpha->space().point_count();

  RowSpace span(na);
  std::vector<GroupoidFunction> generators;
  for (int x = 0; x < np; ++x) {
    for (int y = 0; y < np; ++y) {
      GroupoidFunction v = inner_groupoid(delta_section(alpha, x), delta_section(alpha, y));
      if (span.add(function_coordinates(v))) generators.push_back(std::move(v));
    }
  }

  for (const auto& v : generators) {
    for (int a = 0; a < na; ++a) {
      const GroupoidFunction basis = delta_function(g, a);
      if (!span.contains(function_coordinates(groupoid_convolve(basis, v)))) return false;
      if (!span.contains(function_coordinates(groupoid_convolve(v, basis)))) return false;
    }
  }
  return true;
}

}  // namespace hgc
