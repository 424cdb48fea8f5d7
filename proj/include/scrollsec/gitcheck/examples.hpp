#pragma once

// Worked certificate examples and the reparametrization check, packaged as
// a verification report.

#include <random>

#include "scrollsec/algebra/linalg.hpp"
#include "scrollsec/gitcheck/gitcheck.hpp"
#include "scrollsec/invariants/report.hpp"

namespace scrollsec {

inline constexpr std::size_t kMobiusTrials = 100;

// 5 x 15 matrix of quartic coefficients of the Gamma Pluecker entries.
template <FieldContext Ctx>
Matrix<Ctx> gamma_coefficient_matrix(const GammaFamily<Ctx>& g) {
  const auto& ctx = g.ring->ctx;
  Matrix<Ctx> M(ctx, 5, kGammaCoords);
  for (std::size_t k = 0; k < kGammaCoords; ++k) {
    auto f = BinaryForm<Ctx>::from_polynomial(g.plucker.entries[k], 4);
    for (std::size_t i = 0; i < 5; ++i) M(i, k) = f.coeffs[i];
  }
  return M;
}

// A hyperplane restricting to the given quartic, using the coordinates
// p0_2, p0_3, p0_4, p0_5, p1_5 whose entries are s^4, s^3 t, s^2 t^2, s t^3, t^4.
template <FieldContext Ctx>
HyperplaneClass<Ctx> hyperplane_with_restriction(const BinaryForm<Ctx>& f) {
  std::vector<typename Ctx::value_type> c(kGammaCoords, f.ctx.from_int(0));
  const std::size_t slots[5][2] = {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 5}};
  for (std::size_t k = 0; k < 5; ++k)
    c[HyperplaneClass<Ctx>::label_index(slots[k][0], slots[k][1])] = f.coeffs[k];
  return HyperplaneClass<Ctx>(std::move(c));
}

// Product of random linear forms l_i^{e_i}.
template <FieldContext Ctx, class Rng>
BinaryForm<Ctx> random_factored_quartic(const Ctx& ctx, const std::vector<unsigned>& exps, Rng& rng) {
  auto st = make_ring<Ctx>({"s", "t"}, ctx);
  auto s = Polynomial<Ctx>::variable(st, 0), t = Polynomial<Ctx>::variable(st, 1);
  auto f = Polynomial<Ctx>::constant(st, 1);
  for (unsigned e : exps) {
    auto l = s.scaled(ctx.from_random(rng())) + t.scaled(ctx.from_random(rng()));
    f = f * l.pow(e);
  }
  return BinaryForm<Ctx>::from_polynomial(f, 4);
}

inline std::int64_t verdict_code(Verdict v) { return static_cast<std::int64_t>(v); }

inline VerificationReport gitcheck_examples(std::uint64_t seed, std::uint32_t prime) {
  using Ctx = ModContext;
  Stopwatch sw;
  Ctx ctx{checked_prime(prime)};
  std::mt19937_64 rng(seed);
  auto one = ctx.from_int(1);

  std::vector<ModInt> c1(kGammaCoords, ctx.from_int(0));
  c1[HyperplaneClass<Ctx>::label_index(0, 4)] = one;
  c1[HyperplaneClass<Ctx>::label_index(0, 2)] = -one;
  auto certified = semistability_certificate(HyperplaneClass<Ctx>(c1), ctx).verdict;
  auto inconclusive = semistability_certificate(HyperplaneClass<Ctx>::dual_to(ctx, 0, 3), ctx).verdict;

  auto kernel = gamma_coefficient_matrix(gamma_family(ctx)).kernel();
  std::vector<ModInt> c3(kGammaCoords, ctx.from_int(0));
  for (const auto& v : kernel) {
    auto w = ctx.from_random(rng());
    for (std::size_t k = 0; k < kGammaCoords; ++k) c3[k] = c3[k] + w * v[k];
  }
  auto contains = semistability_certificate(HyperplaneClass<Ctx>(c3), ctx).verdict;

  const std::vector<std::vector<unsigned>> shapes{{1, 1, 1, 1}, {3, 1}, {2, 1, 1}, {2, 2}, {4}};
  std::size_t invariant = 0;
  for (std::size_t k = 0; k < kMobiusTrials; ++k) {
    auto H = hyperplane_with_restriction(random_factored_quartic(ctx, shapes[k % shapes.size()], rng));
    std::array<ModInt, 4> m;
    do {
      for (auto& x : m) x = ctx.from_random(rng());
    } while ((m[0] * m[3] - m[1] * m[2]).is_zero());
    auto a = semistability_certificate(H, ctx);
    auto b = semistability_certificate(hyperplane_with_restriction(substitute_binary(a.restriction, m)), ctx);
    if (a.verdict == b.verdict && a.max_multiplicity == b.max_multiplicity) ++invariant;
  }

  VerificationReport rep{"gitcheck_examples", {{"mobius_trials", kMobiusTrials}, {"kernel_dimension", kernel.size()}}};
  rep.computed = {verdict_code(certified), verdict_code(inconclusive), verdict_code(contains),
                  static_cast<std::int64_t>(invariant)};
  rep.expected = {verdict_code(Verdict::Certified), verdict_code(Verdict::Inconclusive),
                  verdict_code(Verdict::ContainsGamma), static_cast<std::int64_t>(kMobiusTrials)};
  rep.seed = seed;
  rep.field = FieldChoice::modulo(prime);
  rep.settle();
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace scrollsec
