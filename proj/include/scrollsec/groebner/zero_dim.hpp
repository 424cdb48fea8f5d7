#pragma once

#include <random>
#include <unordered_map>

#include "scrollsec/algebra/linalg.hpp"
#include "scrollsec/algebra/univariate.hpp"
#include "scrollsec/groebner/hilbert.hpp"

namespace scrollsec {

template <FieldContext Ctx>
struct ZeroDimCount {
  std::size_t count = 0;
  // minimal polynomial of a random linear form has degree `count` and is
  // squarefree: the solutions are distinct, reduced points
  bool certified_reduced = false;
  Univariate<Ctx> eliminant;
};

// Rank of the Jacobian matrix of `gens` at `point`, by exact elimination.
template <FieldContext Ctx>
std::size_t jacobian_rank_at(const std::vector<Polynomial<Ctx>>& gens,
                             const std::vector<typename Ctx::value_type>& point) {
  if (gens.empty()) return 0;
  const auto& ring = gens.front().ring();
  Matrix<Ctx> J(ring->ctx, gens.size(), ring->nvars());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < ring->nvars(); ++j) J(i, j) = eval(partial_derivative(gens[i], j), point);
  return J.rank();
}

// Count and reducedness certificate for a zero-dimensional ideal given by a
// Groebner basis. The eliminant is the minimal polynomial of multiplication
// by a random linear form u on the quotient, computed by linear algebra on
// normal forms of 1, u, u^2, ...
template <FieldContext Ctx>
ZeroDimCount<Ctx> certified_zero_dim_count(const GroebnerBasis<Ctx>& G, std::uint64_t seed) {
  using F = typename Ctx::value_type;
  const auto& ring = G.ring();
  auto basis = standard_monomials(G);
  if (!basis) throw NotZeroDimensional("quotient ring is infinite dimensional");
  ZeroDimCount<Ctx> out;
  out.count = basis->size();
  if (out.count == 0) {
    out.certified_reduced = true;
    out.eliminant = Univariate<Ctx>(ring->ctx, {ring->ctx.from_int(1)});
    return out;
  }
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < basis->size(); ++k) index.emplace((*basis)[k], k);

  std::mt19937_64 rng(seed);
  std::vector<Term<Ctx>> lin;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    lin.push_back({ring->ctx.from_random(rng()), Monomial::variable(ring->nvars(), v)});
  auto u = Polynomial<Ctx>::from_terms(ring, std::move(lin));

  auto to_vector = [&](const Polynomial<Ctx>& p) {
    std::vector<F> v(out.count, ring->ctx.from_int(0));
    for (const auto& t : p.terms()) v[index.at(t.mono)] = t.coeff;
    return v;
  };

  IncrementalEchelon<Ctx> ech(ring->ctx, out.count);
  auto power = Polynomial<Ctx>::constant(ring, 1);
  for (std::size_t k = 0; k <= out.count; ++k) {
    if (auto dep = ech.insert(to_vector(power))) {
      // u^k = sum dep[j] u^j
      std::vector<F> m(k + 1, ring->ctx.from_int(0));
      for (std::size_t j = 0; j < k; ++j) m[j] = -(*dep)[j];
      m[k] = ring->ctx.from_int(1);
      out.eliminant = Univariate<Ctx>(ring->ctx, std::move(m));
      break;
    }
    power = normal_form(u * power, G);
  }
  out.certified_reduced =
      out.eliminant.degree() == static_cast<int>(out.count) && is_squarefree(out.eliminant);
  return out;
}

template <FieldContext Ctx>
ZeroDimCount<Ctx> certified_zero_dim_count(const Ideal<Ctx>& I, std::uint64_t seed, BuchbergerOptions opt = {}) {
  return certified_zero_dim_count(buchberger(I, opt), seed);
}

}  // namespace scrollsec
