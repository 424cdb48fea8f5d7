#pragma once

// Lines through pairs of points, their Pluecker coordinates, and incidence
// conditions with linear subspaces.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "scrollsec/algebra/linalg.hpp"
#include "scrollsec/geometry/scroll.hpp"

namespace scrollsec {

// p_ij = P_i Q_j - P_j Q_i for i < j, indexed lexicographically.
template <FieldContext Ctx>
struct PluckerVector {
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  std::vector<Polynomial<Ctx>> entries;

  std::size_t size() const { return entries.size(); }

  const Polynomial<Ctx>& at(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == std::make_pair(i, j)) return entries[k];
    throw std::out_of_range("no Pluecker coordinate p" + std::to_string(i) + "_" + std::to_string(j));
  }

  // p_ij with the antisymmetric sign convention for i > j (zero for i == j).
  Polynomial<Ctx> signed_at(std::size_t i, std::size_t j) const {
    if (i == j) return Polynomial<Ctx>::zero(entries.front().ring());
    return i < j ? at(i, j) : -at(j, i);
  }
};

inline std::string plucker_label(std::size_t i, std::size_t j) {
  return "p" + std::to_string(i) + "_" + std::to_string(j);
}

template <FieldContext Ctx>
PluckerVector<Ctx> plucker_from_points(const std::vector<Polynomial<Ctx>>& P, const std::vector<Polynomial<Ctx>>& Q) {
  if (P.size() != Q.size())
    throw std::invalid_argument("points have different lengths (" + std::to_string(P.size()) + " vs " +
                                std::to_string(Q.size()) + ")");
  PluckerVector<Ctx> out;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      out.labels.emplace_back(i, j);
      out.entries.push_back(P[i] * Q[j] - P[j] * Q[i]);
    }
  return out;
}

// Grassmann-Pluecker relations p_ij p_kl - p_ik p_jl + p_il p_jk for all
// i < j < k < l, evaluated on the vector.
template <FieldContext Ctx>
std::vector<Polynomial<Ctx>> plucker_relations(const PluckerVector<Ctx>& p, std::size_t npoints) {
  std::vector<Polynomial<Ctx>> out;
  for (std::size_t i = 0; i < npoints; ++i)
    for (std::size_t j = i + 1; j < npoints; ++j)
      for (std::size_t k = j + 1; k < npoints; ++k)
        for (std::size_t l = k + 1; l < npoints; ++l)
          out.push_back(p.at(i, j) * p.at(k, l) - p.at(i, k) * p.at(j, l) + p.at(i, l) * p.at(j, k));
  return out;
}

// The two chart points of a secant line of S_{a,b} and their Pluecker vector.
template <FieldContext Ctx>
struct SecantLine {
  std::vector<Polynomial<Ctx>> P, Q;
  PluckerVector<Ctx> plucker;
};

// Line through the scroll points with chart parameters (t1, v1), (t2, v2).
// The ring defaults to exactly those four variables; callers may pass a
// larger ring containing them.
template <FieldContext Ctx>
SecantLine<Ctx> secant_line(const ScrollSpec& spec, const RingPtr<Ctx>& ring) {
  spec.validate();
  auto P = scroll_chart_point(spec, ring, "t1", "v1");
  auto Q = scroll_chart_point(spec, ring, "t2", "v2");
  auto pl = plucker_from_points(P, Q);
  return {std::move(P), std::move(Q), std::move(pl)};
}

template <FieldContext Ctx>
RingPtr<Ctx> secant_parameter_ring(Ctx ctx = {}) {
  return make_ring<Ctx>({"t1", "v1", "t2", "v2"}, ctx);
}

// Secant map as a polynomial map from (t1, v1, t2, v2) to the Pluecker
// coordinates of P^{r(r+3)/2}.
template <FieldContext Ctx>
PolynomialMap<Ctx> secant_family(const ScrollSpec& spec, Ctx ctx = {}) {
  auto ring = secant_parameter_ring(ctx);
  auto line = secant_line(spec, ring);
  PolynomialMap<Ctx> map{ring, line.plucker.entries, {}};
  for (auto [i, j] : line.plucker.labels) map.target_labels.push_back(plucker_label(i, j));
  return map;
}

// Linear subspace of P^n cut out by independent linear forms, stored as the
// coefficient rows of those forms.
template <FieldContext Ctx>
struct LinearSubspace {
  using F = typename Ctx::value_type;
  std::vector<std::vector<F>> forms;

  std::size_t codim() const { return forms.size(); }

  template <class Rng>
  static LinearSubspace random(Ctx ctx, std::size_t ncoords, std::size_t codim, Rng& rng) {
    for (;;) {
      LinearSubspace W;
      for (std::size_t k = 0; k < codim; ++k) {
        std::vector<F> row;
        for (std::size_t i = 0; i < ncoords; ++i) row.push_back(ctx.from_random(rng()));
        W.forms.push_back(std::move(row));
      }
      if (W.has_full_rank(ctx)) return W;
    }
  }

  bool has_full_rank(const Ctx& ctx) const {
    if (forms.empty()) return true;
    Matrix<Ctx> m(ctx, 0, forms.front().size());
    for (const auto& f : forms) m.append_row(f);
    return m.rank() == forms.size();
  }

  // The subspace cut by the first `k` forms (contains this one).
  LinearSubspace prefix(std::size_t k) const { return {{forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(k)}}; }

  // Value of form k on a point given by polynomial coordinates.
  Polynomial<Ctx> apply(std::size_t k, const std::vector<Polynomial<Ctx>>& point) const {
    if (point.size() != forms[k].size()) throw std::invalid_argument("point dimension does not match subspace");
    auto acc = Polynomial<Ctx>::zero(point.front().ring());
    for (std::size_t i = 0; i < point.size(); ++i)
      if (!forms[k][i].is_zero()) acc += point[i].scaled(forms[k][i]);
    return acc;
  }
};

enum class Incidence { Meets, ContainedIn };

// Conditions for the line through P and Q to meet W (all 2x2 minors of the
// codim x 2 matrix of form values) or to lie inside W (all form values).
template <FieldContext Ctx>
std::vector<Polynomial<Ctx>> incidence_equations(const std::vector<Polynomial<Ctx>>& P,
                                                 const std::vector<Polynomial<Ctx>>& Q, const LinearSubspace<Ctx>& W,
                                                 Incidence mode) {
  if (W.codim() == 0) throw std::invalid_argument("subspace must have codimension at least 1");
  std::vector<Polynomial<Ctx>> LP, LQ;
  for (std::size_t k = 0; k < W.codim(); ++k) {
    LP.push_back(W.apply(k, P));
    LQ.push_back(W.apply(k, Q));
  }
  std::vector<Polynomial<Ctx>> out;
  if (mode == Incidence::ContainedIn) {
    for (std::size_t k = 0; k < W.codim(); ++k) {
      out.push_back(LP[k]);
      out.push_back(LQ[k]);
    }
    return out;
  }
  for (std::size_t i = 0; i < W.codim(); ++i)
    for (std::size_t j = i + 1; j < W.codim(); ++j) out.push_back(LP[i] * LQ[j] - LP[j] * LQ[i]);
  return out;
}

// Ruling lines of S_{1,3} in the coordinates (x0, x1, y0..y3): the line
// through (s, t, 0, 0, 0, 0) and (0, 0, s^3, s^2 t, s t^2, t^3).
template <FieldContext Ctx>
struct GammaFamily {
  RingPtr<Ctx> ring;  // (s, t)
  PluckerVector<Ctx> plucker;
  std::vector<std::string> coordinate_names;  // x0, x1, y0..y3
};

template <FieldContext Ctx>
GammaFamily<Ctx> gamma_family(Ctx ctx = {}) {
  auto ring = make_ring<Ctx>({"s", "t"}, ctx);
  auto s = Polynomial<Ctx>::variable(ring, 0), t = Polynomial<Ctx>::variable(ring, 1);
  auto zero = Polynomial<Ctx>::zero(ring);
  std::vector<Polynomial<Ctx>> P{s, t, zero, zero, zero, zero};
  std::vector<Polynomial<Ctx>> Q{zero, zero, s.pow(3), s.pow(2) * t, s * t.pow(2), t.pow(3)};
  return {ring, plucker_from_points(P, Q), {"x0", "x1", "y0", "y1", "y2", "y3"}};
}

}  // namespace scrollsec
