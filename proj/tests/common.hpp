#pragma once

#include <random>
#include <string>
#include <vector>

#include "scrollsec/algebra/polynomial.hpp"

namespace testing_util {

using namespace scrollsec;

template <FieldContext Ctx>
Polynomial<Ctx> random_poly(const RingPtr<Ctx>& ring, std::mt19937_64& rng, std::size_t terms = 5, unsigned maxdeg = 3) {
  std::vector<Term<Ctx>> ts;
  std::uniform_int_distribution<unsigned> e(0, maxdeg);
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m.set(i, e(rng));
    ts.push_back({ring->ctx.from_random(rng()), m});
  }
  return Polynomial<Ctx>::from_terms(ring, std::move(ts));
}

template <FieldContext Ctx>
std::vector<typename Ctx::value_type> random_point(const Ctx& ctx, std::size_t n, std::mt19937_64& rng) {
  std::vector<typename Ctx::value_type> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(ctx.from_random(rng()));
  return p;
}

}  // namespace testing_util
