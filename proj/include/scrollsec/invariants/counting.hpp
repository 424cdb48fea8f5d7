#pragma once

// Degrees by counting secant lines in random linear sections. Every system
// lives on ordered pairs of points (two chart parameters per point) plus a
// variable z with z (t1 - t2) = 1 that removes the diagonal; each unordered
// secant line is seen twice.

#include <random>
#include <string>
#include <vector>

#include "scrollsec/geometry/plucker.hpp"
#include "scrollsec/groebner/zero_dim.hpp"
#include "scrollsec/invariants/report.hpp"

namespace scrollsec {

struct CountingOptions {
  BuchbergerOptions groebner;
  int attempts = 5;
};

struct SliceCount {
  std::size_t raw = 0;
  std::uint64_t sub_seed = 0;
  int attempts = 0;
};

using ModPoly = Polynomial<ModContext>;
using ModSubspace = LinearSubspace<ModContext>;

// Retries with fresh sub-seeds until the slice is zero-dimensional, reduced
// and of even length.
template <class Builder>
SliceCount count_secant_slices(const std::vector<std::string>& params, ModContext ctx, std::uint64_t seed,
                               Builder&& build, const CountingOptions& opt = {}) {
  std::mt19937_64 master(seed);
  std::vector<std::string> names = params;
  names.push_back("z");
  auto ring = make_ring<ModContext>(names, ctx);
  auto z = ModPoly::variable(ring, "z");
  auto diag = z * (ModPoly::variable(ring, "t1") - ModPoly::variable(ring, "t2")) - ModPoly::constant(ring, 1);
  std::string last;
  for (int k = 0; k < opt.attempts; ++k) {
    const std::uint64_t sub = master();
    std::mt19937_64 rng(sub);
    std::vector<ModPoly> eqs = build(ring, rng);
    eqs.push_back(diag);
    auto G = buchberger(Ideal<ModContext>(ring, eqs), opt.groebner);
    try {
      auto c = certified_zero_dim_count(G, rng());
      if (!c.certified_reduced) {
        last = "slice not reduced";
        continue;
      }
      if (c.count % 2 != 0) {
        last = "odd ordered count " + std::to_string(c.count);
        continue;
      }
      return {c.count, sub, k + 1};
    } catch (const NotZeroDimensional&) {
      last = "slice not zero-dimensional";
    }
  }
  throw NonGenericSlice("no generic slice after " + std::to_string(opt.attempts) + " attempts (" + last + ")");
}

namespace detail {

inline std::vector<ModPoly> schubert_conditions(const std::vector<ModPoly>& P, const std::vector<ModPoly>& Q,
                                                std::size_t how_many, const ModContext& ctx, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  for (std::size_t k = 0; k < how_many; ++k) {
    auto W = ModSubspace::random(ctx, P.size(), 2, rng);
    for (auto& e : incidence_equations(P, Q, W, Incidence::Meets)) out.push_back(std::move(e));
  }
  return out;
}

inline const std::vector<std::string>& scroll_pair_params() {
  static const std::vector<std::string> names{"t1", "v1", "t2", "v2"};
  return names;
}

inline std::string spec_suffix(const ScrollSpec& s) {
  return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
}

inline nlohmann::ordered_json spec_params(const ScrollSpec& s) {
  return {{"a", s.a}, {"b", s.b}, {"r", s.r()}};
}

inline void add_slice_info(VerificationReport& rep, const SliceCount& c) {
  rep.params["raw_ordered_count"] = c.raw;
  if (c.attempts > 1) rep.params["reseeds"] = c.attempts - 1;
}

}  // namespace detail

// Four general Schubert hyperplane conditions.
inline VerificationReport degree_secant_fourfold(const ScrollSpec& spec, std::uint64_t seed, std::uint32_t prime,
                                                 const CountingOptions& opt = {}) {
  spec.validate();
  Stopwatch sw;
  ModContext ctx{checked_prime(prime)};
  auto c = count_secant_slices(detail::scroll_pair_params(), ctx, seed, [&](const auto& ring, std::mt19937_64& rng) {
    auto L = secant_line(spec, ring);
    return detail::schubert_conditions(L.P, L.Q, 4, ctx, rng);
  }, opt);
  VerificationReport rep{"degree_secant_fourfold" + detail::spec_suffix(spec), detail::spec_params(spec)};
  detail::add_slice_info(rep, c);
  if (spec.r() < 4) rep.params["note"] = "closed form evaluated below r = 4";
  rep.computed = {static_cast<std::int64_t>(c.raw / 2)};
  rep.expected = {secant_degree_formula(spec.r())};
  rep.seed = seed;
  rep.field = FieldChoice::modulo(prime);
  rep.settle();
  rep.elapsed_ms = sw.ms();
  return rep;
}

// Secant lines of the degree-d rational normal curve meeting two general
// codimension-2 subspaces.
inline VerificationReport degree_veronese(int d, std::uint64_t seed, std::uint32_t prime,
                                          const CountingOptions& opt = {}) {
  check_rnc_degree(d);
  Stopwatch sw;
  ModContext ctx{checked_prime(prime)};
  auto c = count_secant_slices({"t1", "t2"}, ctx, seed, [&](const auto& ring, std::mt19937_64& rng) {
    auto P = rnc_chart_point(d, ring, "t1");
    auto Q = rnc_chart_point(d, ring, "t2");
    return detail::schubert_conditions(P, Q, 2, ctx, rng);
  }, opt);
  VerificationReport rep{"degree_veronese(" + std::to_string(d) + ")", {{"d", d}}};
  detail::add_slice_info(rep, c);
  rep.computed = {static_cast<std::int64_t>(c.raw / 2)};
  rep.expected = {static_cast<std::int64_t>(d - 1) * (d - 1)};
  rep.seed = seed;
  rep.field = FieldChoice::modulo(prime);
  rep.settle();
  rep.elapsed_ms = sw.ms();
  return rep;
}

inline void check_r_at_least_4(const ScrollSpec& spec, const std::string& what) {
  spec.validate();
  if (spec.r() < 4) throw std::invalid_argument(what);
}

// Secant lines meeting a general codimension-5 subspace.
inline VerificationReport apparent_double_points(const ScrollSpec& spec, std::uint64_t seed, std::uint32_t prime,
                                                 const CountingOptions& opt = {}) {
  check_r_at_least_4(spec, "apparent double points need r >= 4 (got r=" + std::to_string(spec.r()) + ")");
  Stopwatch sw;
  ModContext ctx{checked_prime(prime)};
  auto c = count_secant_slices(detail::scroll_pair_params(), ctx, seed, [&](const auto& ring, std::mt19937_64& rng) {
    auto L = secant_line(spec, ring);
    auto W = ModSubspace::random(ctx, spec.ambient_coords(), 5, rng);
    return incidence_equations(L.P, L.Q, W, Incidence::Meets);
  }, opt);
  VerificationReport rep{"apparent_double_points" + detail::spec_suffix(spec), detail::spec_params(spec)};
  detail::add_slice_info(rep, c);
  if (spec.r() == 4) rep.params["note"] = "codim-5 subspace of P^5 is a point: secant lines through a general point";
  rep.computed = {static_cast<std::int64_t>(c.raw / 2)};
  rep.expected = {binomial(spec.r() - 2, 2)};
  rep.seed = seed;
  rep.field = FieldChoice::modulo(prime);
  rep.settle();
  rep.elapsed_ms = sw.ms();
  return rep;
}

// Degrees of the pieces X^sigma, X^{sigma,pi}, X^alpha of a degeneration of
// a general Schubert hyperplane section, followed by their sum.
inline VerificationReport component_degrees(const ScrollSpec& spec, std::uint64_t seed, std::uint32_t prime,
                                            const CountingOptions& opt = {}) {
  check_r_at_least_4(spec, "use degree_secant_fourfold; decomposition proof starts at r >= 4");
  Stopwatch sw;
  ModContext ctx{checked_prime(prime)};
  const std::size_t n = spec.ambient_coords();
  std::mt19937_64 seeds(seed);

  auto in_sigma = count_secant_slices(detail::scroll_pair_params(), ctx, seeds(), [&](const auto& ring, std::mt19937_64& rng) {
    auto L = secant_line(spec, ring);
    auto eqs = incidence_equations(L.P, L.Q, ModSubspace::random(ctx, n, 1, rng), Incidence::ContainedIn);
    for (auto& e : detail::schubert_conditions(L.P, L.Q, 2, ctx, rng)) eqs.push_back(std::move(e));
    return eqs;
  }, opt);

  auto sigma_pi = count_secant_slices(detail::scroll_pair_params(), ctx, seeds(), [&](const auto& ring, std::mt19937_64& rng) {
    auto L = secant_line(spec, ring);
    auto pi = ModSubspace::random(ctx, n, 3, rng);  // sigma is its first form
    auto eqs = incidence_equations(L.P, L.Q, pi.prefix(1), Incidence::ContainedIn);
    for (auto& e : incidence_equations(L.P, L.Q, pi, Incidence::Meets)) eqs.push_back(std::move(e));
    for (auto& e : detail::schubert_conditions(L.P, L.Q, 1, ctx, rng)) eqs.push_back(std::move(e));
    return eqs;
  }, opt);

  auto alpha = count_secant_slices(detail::scroll_pair_params(), ctx, seeds(), [&](const auto& ring, std::mt19937_64& rng) {
    auto L = secant_line(spec, ring);
    auto eqs = incidence_equations(L.P, L.Q, ModSubspace::random(ctx, n, 4, rng), Incidence::Meets);
    for (auto& e : detail::schubert_conditions(L.P, L.Q, 1, ctx, rng)) eqs.push_back(std::move(e));
    return eqs;
  }, opt);

  const std::int64_t r = spec.r();
  VerificationReport rep{"component_degrees" + detail::spec_suffix(spec), detail::spec_params(spec)};
  rep.params["raw_ordered_counts"] = {in_sigma.raw, sigma_pi.raw, alpha.raw};
  std::int64_t s = static_cast<std::int64_t>(in_sigma.raw / 2), sp = static_cast<std::int64_t>(sigma_pi.raw / 2),
               al = static_cast<std::int64_t>(alpha.raw / 2);
  rep.computed = {s, sp, al, s + sp + al};
  rep.expected = {(r - 1) * (r - 1), (r - 1) * (r - 1), (r - 2) * (r - 2), secant_degree_formula(r)};
  rep.seed = seed;
  rep.field = FieldChoice::modulo(prime);
  rep.settle();
  rep.elapsed_ms = sw.ms();
  return rep;
}

// Projective dimension of the linear span of the secant variety, from the
// rank of its values at random parameter points.
inline VerificationReport span_dimension(const ScrollSpec& spec, std::uint64_t seed, std::uint32_t prime) {
  spec.validate();
  Stopwatch sw;
  ModContext ctx{checked_prime(prime)};
  auto fam = secant_family(spec, ctx);
  const std::int64_t r = spec.r();
  const std::size_t N = static_cast<std::size_t>(r * (r + 3) / 2 + 10);
  std::mt19937_64 master(seed);
  std::size_t best = 0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::mt19937_64 rng(master());
    Matrix<ModContext> M(ctx, 0, fam.size());
    for (std::size_t k = 0; k < N; ++k) {
      std::vector<ModInt> params;
      for (std::size_t v = 0; v < 4; ++v) params.push_back(ctx.from_random(rng()));
      M.append_row(fam.at(params));
    }
    best = std::max(best, M.rank());
    if (best == fam.size()) break;
  }
  VerificationReport rep{"span_dimension" + detail::spec_suffix(spec), detail::spec_params(spec)};
  rep.params["sample_points"] = N;
  rep.computed = {static_cast<std::int64_t>(best) - 1};
  rep.expected = {r * (r + 3) / 2};
  rep.seed = seed;
  rep.field = FieldChoice::modulo(prime);
  rep.settle();
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace scrollsec
