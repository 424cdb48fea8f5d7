#pragma once

#include "scrollsec/groebner/buchberger.hpp"

namespace scrollsec {

template <FieldContext Ctx>
struct EliminationResult {
  // Generators of I ∩ k[x_k, ..., x_{n-1}], expressed in the smaller ring.
  Ideal<Ctx> ideal;
  // The same generators in the original ring with the block order; useful
  // for containment checks against the full basis.
  std::vector<Polynomial<Ctx>> in_block_ring;
  GroebnerBasis<Ctx> block_basis;
};

// Eliminate the first k variables of I's ring using a Block(k) basis.
template <FieldContext Ctx>
EliminationResult<Ctx> elimination_ideal(const Ideal<Ctx>& I, std::size_t k, BuchbergerOptions opt = {}) {
  const auto& ring = I.ring();
  if (k >= ring->nvars()) throw std::invalid_argument("cannot eliminate every variable");
  auto block_ring = with_order(ring, MonomialOrder::block_order(k));
  std::vector<Polynomial<Ctx>> gens;
  for (const auto& g : I.generators()) gens.push_back(change_ring(g, block_ring));
  auto G = buchberger(Ideal<Ctx>(block_ring, gens), opt);

  std::vector<std::string> rest(ring->names.begin() + static_cast<std::ptrdiff_t>(k), ring->names.end());
  auto sub_ring = make_ring<Ctx>(rest, ring->ctx, MonomialOrder::grevlex(), ring->exponent_cap);
  std::vector<Polynomial<Ctx>> kept, in_block;
  for (const auto& g : G.polynomials()) {
    bool free_of_eliminated = true;
    for (std::size_t v = 0; v < k && free_of_eliminated; ++v)
      if (g.leading_monomial()[v] != 0) free_of_eliminated = false;
    if (!free_of_eliminated) continue;
    in_block.push_back(g);
    kept.push_back(change_ring(g, sub_ring));
  }
  if (kept.empty()) throw std::invalid_argument("elimination ideal is zero");
  return {Ideal<Ctx>(sub_ring, kept), std::move(in_block), std::move(G)};
}

}  // namespace scrollsec
