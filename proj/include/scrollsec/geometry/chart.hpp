#pragma once

// Local charts of the secant variety in the Grassmannian.
//
// Chart around a ruling line of S_{a,b}: lines spanned by the rows
//   (1, xi_1, ..., xi_b, 0, xi_{b+2}, ..., xi_{r+1})
//   (0, eta_1, ..., eta_b, 1, eta_{b+2}, ..., eta_{r+1})
// On the secant variety every xi_i, eta_i is a polynomial in the four
// coordinates xi_1, eta_1, xi_{b+2}, eta_{b+2}, via
//   xi_{i+1}  = xi_1 xi_i + eta_i xi_{b+2}
//   eta_{i+1} = xi_i eta_1 + eta_i eta_{b+2}.
//
// Chart around the directrix of S_{1,r-1}: the tangent cone is cut by the
// 2x2 minors of the 3 x (r-1) matrix with columns
//   (xi_i, eta_i - xi_{i-1}, eta_{i-1}),  i = 1..r-1.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "scrollsec/geometry/plucker.hpp"

namespace scrollsec {

inline std::string xi_name(int i) { return "xi" + std::to_string(i); }
inline std::string eta_name(int i) { return "eta" + std::to_string(i); }

// Chart indices 1..r+1 without b+1.
inline std::vector<int> chart_indices(const ScrollSpec& spec) {
  std::vector<int> idx;
  for (int i = 1; i <= spec.r() + 1; ++i)
    if (i != spec.b + 1) idx.push_back(i);
  return idx;
}

// Indices i whose coordinates are determined by the four free ones.
inline std::vector<int> dependent_chart_indices(const ScrollSpec& spec) {
  std::vector<int> idx;
  for (int i : chart_indices(spec))
    if (i != 1 && i != spec.b + 2) idx.push_back(i);
  return idx;
}

inline void check_chart_spec(const ScrollSpec& spec) {
  spec.validate();
  if (spec.r() < 3) throw std::invalid_argument("chart needs r >= 3 (got " + std::to_string(spec.r()) + ")");
}

template <FieldContext Ctx>
RingPtr<Ctx> chart_ring(const ScrollSpec& spec, Ctx ctx = {}, const std::vector<std::string>& leading = {},
                        MonomialOrder order = MonomialOrder::grevlex()) {
  std::vector<std::string> names = leading;
  for (int i : chart_indices(spec)) names.push_back(xi_name(i));
  for (int i : chart_indices(spec)) names.push_back(eta_name(i));
  return make_ring<Ctx>(names, ctx, order);
}

// Recursion relations xi_{i+1} - xi_1 xi_i - eta_i xi_{b+2} (and the eta
// analogue) for every dependent index.
template <FieldContext Ctx>
std::vector<Polynomial<Ctx>> chart_recursion_relations(const ScrollSpec& spec, const RingPtr<Ctx>& ring) {
  check_chart_spec(spec);
  auto xi = [&](int i) { return Polynomial<Ctx>::variable(ring, xi_name(i)); };
  auto eta = [&](int i) { return Polynomial<Ctx>::variable(ring, eta_name(i)); };
  const int c = spec.b + 2;
  std::vector<Polynomial<Ctx>> out;
  for (int k : dependent_chart_indices(spec)) {
    int i = k - 1;
    out.push_back(xi(k) - xi(1) * xi(i) - eta(i) * xi(c));
    out.push_back(eta(k) - xi(i) * eta(1) - eta(i) * eta(c));
  }
  return out;
}

// Closed forms of xi_i, eta_i in the free coordinates, keyed by chart index.
template <FieldContext Ctx>
std::pair<std::map<int, Polynomial<Ctx>>, std::map<int, Polynomial<Ctx>>> chart_closed_forms(
    const ScrollSpec& spec, const RingPtr<Ctx>& ring) {
  const int c = spec.b + 2;
  std::map<int, Polynomial<Ctx>> X, E;
  X.emplace(1, Polynomial<Ctx>::variable(ring, xi_name(1)));
  E.emplace(1, Polynomial<Ctx>::variable(ring, eta_name(1)));
  X.emplace(c, Polynomial<Ctx>::variable(ring, xi_name(c)));
  E.emplace(c, Polynomial<Ctx>::variable(ring, eta_name(c)));
  for (int k : dependent_chart_indices(spec)) {
    int i = k - 1;
    X.emplace(k, X.at(1) * X.at(i) + E.at(i) * X.at(c));
    E.emplace(k, X.at(i) * E.at(1) + E.at(i) * E.at(c));
  }
  return {X, E};
}

// Graph-form generators xi_i - (polynomial in xi_1, eta_1, xi_{b+2},
// eta_{b+2}); they cut out a copy of affine 4-space.
template <FieldContext Ctx>
Ideal<Ctx> chart_ideal(const ScrollSpec& spec, Ctx ctx = {}) {
  check_chart_spec(spec);
  auto ring = chart_ring(spec, ctx);
  auto [X, E] = chart_closed_forms(spec, ring);
  std::vector<Polynomial<Ctx>> gens;
  for (int k : dependent_chart_indices(spec)) {
    gens.push_back(Polynomial<Ctx>::variable(ring, xi_name(k)) - X.at(k));
    gens.push_back(Polynomial<Ctx>::variable(ring, eta_name(k)) - E.at(k));
  }
  return Ideal<Ctx>(ring, gens);
}

// Chart coordinates of the line through P and Q as fractions with the common
// denominator p_{0,b+1}: xi_i = p_{i,b+1} / p_{0,b+1}, eta_i = p_{0,i} / p_{0,b+1}.
template <FieldContext Ctx>
struct ChartCoordinates {
  Polynomial<Ctx> denominator;
  std::map<std::string, Polynomial<Ctx>> numerators;
};

template <FieldContext Ctx>
ChartCoordinates<Ctx> chart_coordinates(const ScrollSpec& spec, const PluckerVector<Ctx>& p) {
  const std::size_t col = static_cast<std::size_t>(spec.b + 1);
  ChartCoordinates<Ctx> out{p.signed_at(0, col), {}};
  for (int i : chart_indices(spec)) {
    out.numerators.emplace(xi_name(i), p.signed_at(static_cast<std::size_t>(i), col));
    out.numerators.emplace(eta_name(i), p.signed_at(0, static_cast<std::size_t>(i)));
  }
  return out;
}

// g(N / D) * D^deg(g), a polynomial in the numerators' ring.
template <FieldContext Ctx>
Polynomial<Ctx> clear_denominators(const Polynomial<Ctx>& g, const ChartCoordinates<Ctx>& cc) {
  const auto& target = cc.denominator.ring();
  const int D = std::max(0, g.total_degree());
  std::vector<Polynomial<Ctx>> dpow{Polynomial<Ctx>::constant(target, 1)};
  for (int k = 1; k <= D; ++k) dpow.push_back(dpow.back() * cc.denominator);
  std::vector<Polynomial<Ctx>> images;
  for (const auto& name : g.ring()->names) images.push_back(cc.numerators.at(name));
  auto acc = Polynomial<Ctx>::zero(target);
  for (const auto& t : g.terms()) {
    auto term = Polynomial<Ctx>::monomial(g.ring(), t.coeff, t.mono);
    acc += substitute(term, images, target) * dpow[static_cast<std::size_t>(D - static_cast<int>(t.mono.degree()))];
  }
  return acc;
}

// Tangent cone at the distinguished point of X_{1,r-1}.
inline void check_tangent_cone_r(int r) {
  if (r < 3) throw std::invalid_argument("tangent cone needs r >= 3 (got " + std::to_string(r) + ")");
}

template <FieldContext Ctx>
RingPtr<Ctx> tangent_cone_ring(int r, Ctx ctx = {}) {
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i) names.push_back(xi_name(i));
  for (int i = 0; i < r; ++i) names.push_back(eta_name(i));
  return make_ring<Ctx>(names, ctx);
}

template <FieldContext Ctx>
Ideal<Ctx> tangent_cone_ideal(int r, Ctx ctx = {}) {
  check_tangent_cone_r(r);
  auto ring = tangent_cone_ring(r, ctx);
  auto xi = [&](int i) { return Polynomial<Ctx>::variable(ring, static_cast<std::size_t>(i)); };
  auto eta = [&](int i) { return Polynomial<Ctx>::variable(ring, static_cast<std::size_t>(r + i)); };
  std::vector<std::vector<Polynomial<Ctx>>> cols;
  for (int i = 1; i <= r - 1; ++i) cols.push_back({xi(i), eta(i) - xi(i - 1), eta(i - 1)});
  return Ideal<Ctx>(ring, two_by_two_minors(cols));
}

// Random point of the tangent cone: the matrix is c * w^T with c in k^3 and
// w satisfying c2 w_{i+1} = c1 w_i + c0 w_{i-1}; coordinates (xi_0..xi_{r-1},
// eta_0..eta_{r-1}).
template <FieldContext Ctx, class Rng>
std::vector<typename Ctx::value_type> tangent_cone_sample_point(int r, const Ctx& ctx, Rng& rng) {
  check_tangent_cone_r(r);
  using F = typename Ctx::value_type;
  auto rnd_nonzero = [&] {
    for (;;) {
      F v = ctx.from_random(rng());
      if (!v.is_zero()) return v;
    }
  };
  F c0 = ctx.from_random(rng()), c1 = ctx.from_random(rng()), c2 = rnd_nonzero();
  std::vector<F> w(static_cast<std::size_t>(r), ctx.from_int(0));  // w[1..r-1]
  w[1] = rnd_nonzero();
  w[2] = ctx.from_random(rng());
  for (int i = 2; i <= r - 2; ++i) w[static_cast<std::size_t>(i + 1)] = (c1 * w[static_cast<std::size_t>(i)] + c0 * w[static_cast<std::size_t>(i - 1)]) / c2;
  std::vector<F> xi(static_cast<std::size_t>(r), ctx.from_int(0)), eta(static_cast<std::size_t>(r), ctx.from_int(0));
  for (int i = 1; i <= r - 1; ++i) {
    xi[static_cast<std::size_t>(i)] = c0 * w[static_cast<std::size_t>(i)];
    eta[static_cast<std::size_t>(i - 1)] = c2 * w[static_cast<std::size_t>(i)];
  }
  eta[static_cast<std::size_t>(r - 1)] = xi[static_cast<std::size_t>(r - 2)] + c1 * w[static_cast<std::size_t>(r - 1)];
  xi[0] = eta[1] - c1 * w[1];
  std::vector<F> point = xi;
  point.insert(point.end(), eta.begin(), eta.end());
  return point;
}

}  // namespace scrollsec
